#pragma once

// Brute-force reference computations used only by the tests. They avoid the
// canonical-form code, except group_radical_size which leans on mat_rank
// (covered separately in test_subspace).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "galg/groupoid.hpp"
#include "galg/matrix.hpp"
#include "galg/ring.hpp"
#include "galg/subspace.hpp"

namespace oracle {

using galg::Matrix;
using galg::Ring;
using galg::Scalar;
using galg::Vec;

/// Every vector of R^n (finite R).
inline std::vector<Vec> all_vectors(const Ring& R, std::size_t n) {
  std::vector<Vec> out;
  Vec v(n, R.zero());
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    for (; i < n; ++i) {
      auto x = v[i].residue() + 1;
      if (x < R.modulus()) {
        v[i] = Scalar(x);
        break;
      }
      v[i] = R.zero();
    }
    if (i == n) break;
  }
  return out;
}

/// All R-linear combinations of gens, by enumerating coefficient tuples.
inline std::set<Vec> brute_span(const Ring& R, std::size_t n, const std::vector<Vec>& gens) {
  std::set<Vec> out;
  for (const auto& c : all_vectors(R, gens.size())) {
    Vec v(n, R.zero());
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t k = 0; k < n; ++k) v[k] = R.add(v[k], R.mul(c[i], gens[i][k]));
    out.insert(v);
  }
  return out;
}

inline Matrix random_matrix(const Ring& R, std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                            int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m = Matrix::zero(R, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = R.from_int(d(rng));
  return m;
}

/// Group tables as plain vectors: table[a*n+b] = a*b.
using Table = std::vector<std::size_t>;

/// Exhaustive search for a bijection phi with phi(ab) = phi(a)phi(b).
inline bool tables_isomorphic(const Table& a, const Table& b) {
  auto n2 = a.size();
  if (n2 != b.size()) return false;
  std::size_t n = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(n2))));
  std::vector<std::size_t> phi(n);
  std::iota(phi.begin(), phi.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) ok = phi[a[x * n + y]] == b[phi[x] * n + phi[y]];
    if (ok) return true;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return false;
}

/// Exhaustive search for an arrow bijection preserving d, r (through some
/// object bijection) and the composition table. Intended for <= 8 arrows.
inline bool groupoids_isomorphic(const galg::FiniteGroupoid& a, const galg::FiniteGroupoid& b) {
  if (a.n_arrows() != b.n_arrows() || a.n_objects() != b.n_objects() || a.comp().size() != b.comp().size())
    return false;
  const std::size_t n = a.n_arrows();
  std::vector<int> phi(n);
  std::iota(phi.begin(), phi.end(), 0);
  do {
    std::vector<int> obj(a.n_objects(), -1);
    bool ok = true;
    auto map_obj = [&](int u, int v) {
      if (obj[u] == -1) obj[u] = v;
      return obj[u] == v;
    };
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = map_obj(a.arrows()[x].d, b.arrows()[phi[x]].d) && map_obj(a.arrows()[x].r, b.arrows()[phi[x]].r);
    if (!ok) continue;
    std::set<int> image(obj.begin(), obj.end());
    if (image.size() != a.n_objects() || image.count(-1)) continue;
    std::set<galg::CompEntry> target(b.comp().begin(), b.comp().end());
    for (const auto& [x, y, z] : a.comp())
      if (!target.count({phi[x], phi[y], phi[z]})) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return false;
}

/// Every subspace (submodule) of R^n for finite R, each as its element set.
/// Breadth-first: add one vector at a time and take the brute-force span.
inline std::vector<std::set<Vec>> all_subspaces(const Ring& R, std::size_t n) {
  auto vectors = all_vectors(R, n);
  std::set<std::set<Vec>> seen;
  std::vector<std::pair<std::set<Vec>, std::vector<Vec>>> work;
  std::set<Vec> zero{Vec(n, R.zero())};
  seen.insert(zero);
  work.push_back({zero, {}});
  while (!work.empty()) {
    auto [elems, gens] = work.back();
    work.pop_back();
    for (const auto& v : vectors) {
      if (elems.count(v)) continue;
      auto g = gens;
      g.push_back(v);
      auto span = brute_span(R, n, g);
      if (seen.insert(span).second) work.push_back({span, g});
    }
  }
  return {seen.begin(), seen.end()};
}

inline bool invariant_under(const Ring& R, const std::set<Vec>& s, const std::vector<Matrix>& ops) {
  for (const auto& v : s)
    for (const auto& a : ops)
      if (!s.count(galg::apply(R, a, v))) return false;
  return true;
}

/// Size of J(F_q G) from the characterisation x ∈ J iff 1 - yx is a
/// unit for every y, with units detected by left multiplication being a
/// bijection on F_q G.
inline std::size_t group_radical_size(const Ring& R, const std::vector<std::size_t>& table, std::size_t n,
                                      std::size_t identity) {
  auto conv = [&](const Vec& a, const Vec& b) {
    Vec c(n, R.zero());
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) c[table[x * n + y]] = R.add(c[table[x * n + y]], R.mul(a[x], b[y]));
    return c;
  };
  auto elems = all_vectors(R, n);
  auto is_unit = [&](const Vec& a) {
    // a is a unit iff b ↦ a*b is injective
    Matrix left = Matrix::zero(R, n, n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) left(table[x * n + y], y) = R.add(left(table[x * n + y], y), a[x]);
    return galg::mat_rank(left, R) == n;
  };
  std::size_t count = 0;
  for (const auto& x : elems) {
    bool in_j = true;
    for (const auto& y : elems) {
      auto yx = conv(y, x);
      Vec u(n, R.zero());
      u[identity] = R.one();
      for (std::size_t k = 0; k < n; ++k) u[k] = R.sub(u[k], yx[k]);
      if (!is_unit(u)) {
        in_j = false;
        break;
      }
    }
    count += in_j;
  }
  return count;
}

}  // namespace oracle
