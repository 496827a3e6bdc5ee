#include "galg/subspace.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace galg {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 mulmod(i64 a, i64 b, i64 n) {
  i128 p = static_cast<i128>(a) * b % n;
  return static_cast<i64>(p < 0 ? p + n : p);
}

// Integer extended gcd: s*a + t*b = g, g >= 0.
i64 xgcd(i64 a, i64 b, i64& s, i64& t) {
  i64 r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    i64 q = r0 / r1;
    i64 r2 = r0 - q * r1, s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = r1, r1 = r2, s0 = s1, s1 = s2, t0 = t1, t1 = t2;
  }
  if (r0 < 0) r0 = -r0, s0 = -s0, t0 = -t0;
  s = s0;
  t = t0;
  return r0;
}

std::size_t leading(const std::vector<i64>& r) {
  for (std::size_t j = 0; j < r.size(); ++j)
    if (r[j] != 0) return j;
  return r.size();
}

// A unit u with u*a = gcd(a, n) mod n.
i64 normalizing_unit(i64 a, i64 n) {
  i64 g = std::gcd(a, n);
  i64 m = n / g;
  i64 s = 0, t = 0;
  xgcd(a / g, m, s, t);
  i64 u = m == 1 ? 1 : mod_normalize(s, m);
  while (std::gcd(u, n) != 1) u += m;
  return u;
}

std::vector<std::vector<i64>> howell(std::size_t cols, std::vector<std::vector<i64>> work, i64 n) {
  std::vector<std::vector<i64>> h;
  auto combine = [n](const std::vector<i64>& x, i64 cx, const std::vector<i64>& y, i64 cy) {
    std::vector<i64> out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k)
      out[k] = mod_normalize(mulmod(mod_normalize(cx, n), x[k], n) + mulmod(mod_normalize(cy, n), y[k], n), n);
    return out;
  };
  auto nonzero = [](const std::vector<i64>& r) {
    for (auto x : r)
      if (x) return true;
    return false;
  };

  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<std::vector<i64>> here;
    std::vector<std::vector<i64>> rest;
    for (auto& r : work) (leading(r) == j ? here : rest).push_back(std::move(r));
    work = std::move(rest);
    if (here.empty()) continue;

    std::vector<i64> piv = std::move(here[0]);
    for (std::size_t k = 1; k < here.size(); ++k) {
      const auto& r = here[k];
      i64 a = piv[j], b = r[j], s = 0, t = 0;
      i64 g = xgcd(a, b, s, t);
      auto reduced = combine(piv, b / g, r, -(a / g));
      piv = combine(piv, s, r, t);
      if (nonzero(reduced)) work.push_back(std::move(reduced));
    }
    i64 u = normalizing_unit(piv[j], n);
    for (auto& x : piv) x = mulmod(u, x, n);
    i64 g = piv[j];
    std::vector<i64> ann(piv.size());
    for (std::size_t k = 0; k < piv.size(); ++k) ann[k] = mulmod(n / g, piv[k], n);
    if (nonzero(ann)) work.push_back(std::move(ann));
    h.push_back(std::move(piv));
  }

  for (std::size_t k = 0; k < h.size(); ++k) {
    std::size_t jk = leading(h[k]);
    i64 gk = h[k][jk];
    for (std::size_t i = 0; i < k; ++i) {
      i64 q = h[i][jk] / gk;
      if (q == 0) continue;
      for (std::size_t c = jk; c < cols; ++c) h[i][c] = mod_normalize(h[i][c] - mulmod(q, h[k][c], n), n);
    }
  }
  return h;
}

std::vector<Vec> rref_rational(std::size_t cols, std::vector<Vec> rows) {
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows.size(); ++j) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][j].rational()) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    mpq_class inv = 1 / rows[r][j].rational();
    for (std::size_t c = j; c < cols; ++c) rows[r][c] = Scalar(mpq_class(rows[r][c].rational() * inv));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][j].rational()) == 0) continue;
      mpq_class f = rows[i][j].rational();
      for (std::size_t c = j; c < cols; ++c)
        rows[i][c] = Scalar(mpq_class(rows[i][c].rational() - f * rows[r][c].rational()));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

void check_ambient(const Subspace& a, const Subspace& b, const char* what) {
  if (a.ambient_dim() != b.ambient_dim() || !(a.ring() == b.ring()))
    throw DimensionMismatch(std::string(what) + ": subspaces live in different ambient spaces");
}

}  // namespace

std::vector<Vec> canonical_basis(const Ring& R, std::size_t cols, std::vector<Vec> rows) {
  for (const auto& r : rows)
    if (r.size() != cols) throw DimensionMismatch("generator length does not match ambient dimension");
  if (R.kind() == RingKind::rationals) return rref_rational(cols, std::move(rows));

  std::vector<std::vector<i64>> work;
  work.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<i64> w(cols);
    bool nz = false;
    for (std::size_t j = 0; j < cols; ++j) nz |= (w[j] = r[j].residue()) != 0;
    if (nz) work.push_back(std::move(w));
  }
  auto h = howell(cols, std::move(work), R.modulus());
  std::vector<Vec> out;
  out.reserve(h.size());
  for (auto& r : h) {
    Vec v(cols);
    for (std::size_t j = 0; j < cols; ++j) v[j] = Scalar(r[j]);
    out.push_back(std::move(v));
  }
  return out;
}

Subspace Subspace::span(const Ring& R, std::size_t ambient, std::vector<Vec> gens) {
  Subspace s(R, ambient);
  s.basis_ = canonical_basis(R, ambient, std::move(gens));
  return s;
}

Subspace Subspace::full(const Ring& R, std::size_t ambient) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < ambient; ++i) gens.push_back(unit_vec(R, ambient, i));
  return span(R, ambient, std::move(gens));
}

bool Subspace::is_full() const {
  if (basis_.size() != ambient_) return false;
  for (std::size_t i = 0; i < ambient_; ++i)
    if (basis_[i][i] != ring_.one()) return false;
  return true;
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> p;
  for (const auto& b : basis_) {
    std::size_t j = 0;
    while (ring_.is_zero(b[j])) ++j;
    p.push_back(j);
  }
  return p;
}

std::optional<Vec> Subspace::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length does not match ambient dimension");
  Vec w(v.begin(), v.end());
  Vec coeffs;
  coeffs.reserve(basis_.size());
  std::size_t col = 0;
  for (const auto& b : basis_) {
    std::size_t j = col;
    while (ring_.is_zero(b[j])) ++j;
    for (; col < j; ++col)
      if (!ring_.is_zero(w[col])) return std::nullopt;
    Scalar c;
    if (ring_.kind() == RingKind::rationals) {
      c = Scalar(mpq_class(w[j].rational() / b[j].rational()));
    } else {
      if (w[j].residue() % b[j].residue() != 0) return std::nullopt;
      c = Scalar(w[j].residue() / b[j].residue());
    }
    for (std::size_t k = j; k < ambient_; ++k) w[k] = ring_.sub(w[k], ring_.mul(c, b[k]));
    coeffs.push_back(c);
    col = j + 1;
  }
  for (; col < ambient_; ++col)
    if (!ring_.is_zero(w[col])) return std::nullopt;
  return coeffs;
}

bool Subspace::contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }

Matrix Subspace::basis_columns() const { return transpose(Matrix::from_rows(ambient_, basis_)); }

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  if (!(a.ring_ == b.ring_)) return a.ring_.spec() <=> b.ring_.spec();
  return a.basis_ <=> b.basis_;
}

Subspace mat_kernel(const Matrix& A, const Ring& R) {
  const std::size_t m = A.rows(), c = A.cols();
  if (R.is_field()) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < m; ++i) rows.emplace_back(A.row(i).begin(), A.row(i).end());
    auto e = canonical_basis(R, c, std::move(rows));
    std::vector<std::size_t> piv;
    std::vector<bool> is_piv(c, false);
    for (const auto& r : e) {
      std::size_t j = 0;
      while (R.is_zero(r[j])) ++j;
      piv.push_back(j);
      is_piv[j] = true;
    }
    std::vector<Vec> gens;
    for (std::size_t f = 0; f < c; ++f) {
      if (is_piv[f]) continue;
      Vec x = unit_vec(R, c, f);
      for (std::size_t i = 0; i < e.size(); ++i) x[piv[i]] = R.neg(e[i][f]);
      gens.push_back(std::move(x));
    }
    return Subspace::span(R, c, std::move(gens));
  }
  // Howell form of [A^T | I]: rows with zero A-part span the kernel.
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < c; ++i) {
    Vec r = zero_vec(R, m + c);
    for (std::size_t k = 0; k < m; ++k) r[k] = A(k, i);
    r[m + i] = R.one();
    rows.push_back(std::move(r));
  }
  auto h = canonical_basis(R, m + c, std::move(rows));
  std::vector<Vec> gens;
  for (const auto& r : h) {
    bool tail = true;
    for (std::size_t k = 0; k < m && tail; ++k) tail = R.is_zero(r[k]);
    if (tail) gens.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(m), r.end());
  }
  return Subspace::span(R, c, std::move(gens));
}

std::size_t mat_rank(const Matrix& A, const Ring& R) {
  if (!R.is_field()) throw Unsupported("rank is only defined here over fields");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < A.rows(); ++i) rows.emplace_back(A.row(i).begin(), A.row(i).end());
  return canonical_basis(R, A.cols(), std::move(rows)).size();
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  check_ambient(a, b, "subspace_sum");
  std::vector<Vec> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ring(), a.ambient_dim(), std::move(gens));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  check_ambient(a, b, "subspace_intersect");
  if (a.is_zero() || b.is_zero()) return Subspace(a.ring(), a.ambient_dim());
  Matrix ba = a.basis_columns();
  return image(ba, preimage(ba, b));
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
  check_ambient(a, b, "subspace_equal");
  return a == b;
}

bool subspace_contains(const Subspace& s, std::span<const Scalar> v) { return s.contains(v); }

bool is_subset(const Subspace& a, const Subspace& b) {
  check_ambient(a, b, "is_subset");
  for (const auto& v : a.basis())
    if (!b.contains(v)) return false;
  return true;
}

Matrix check_matrix(const Subspace& s) {
  const Ring& R = s.ring();
  const std::size_t n = s.ambient_dim();
  Matrix b = Matrix::zero(R, s.rank(), n);
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = s.basis()[i][j];
  const auto perp = mat_kernel(b, R).basis();
  Matrix c = Matrix::zero(R, perp.size(), n);
  for (std::size_t i = 0; i < perp.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = perp[i][j];
  return c;
}

Subspace preimage(const Matrix& L, const Subspace& target) {
  const Ring& R = target.ring();
  if (L.rows() != target.ambient_dim()) throw DimensionMismatch("preimage: map codomain mismatch");
  if (target.rank() == 0) return mat_kernel(L, R);
  if (target.is_full()) return Subspace::full(R, L.cols());
  return mat_kernel(mul(R, check_matrix(target), L), R);
}

Subspace image(const Matrix& A, const Subspace& s) {
  if (A.cols() != s.ambient_dim()) throw DimensionMismatch("image: map domain mismatch");
  std::vector<Vec> gens;
  for (const auto& b : s.basis()) gens.push_back(apply(s.ring(), A, b));
  return Subspace::span(s.ring(), A.rows(), std::move(gens));
}

Subspace direct_power(const Subspace& s, std::size_t copies) {
  const std::size_t m = s.ambient_dim();
  std::vector<Vec> gens;
  for (std::size_t b = 0; b < copies; ++b)
    for (const auto& v : s.basis()) {
      Vec w = zero_vec(s.ring(), m * copies);
      std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(b * m));
      gens.push_back(std::move(w));
    }
  return Subspace::span(s.ring(), m * copies, std::move(gens));
}

Subspace project_prefix(const Subspace& s, std::size_t k) {
  if (k > s.ambient_dim()) throw DimensionMismatch("project_prefix beyond ambient dimension");
  std::vector<Vec> gens;
  for (const auto& b : s.basis()) gens.emplace_back(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(k));
  return Subspace::span(s.ring(), k, std::move(gens));
}

std::optional<std::uint64_t> element_count(const Subspace& s, std::uint64_t cap) {
  const Ring& R = s.ring();
  if (!R.is_finite()) return std::nullopt;
  std::uint64_t total = 1;
  for (const auto& b : s.basis()) {
    std::size_t j = 0;
    while (R.is_zero(b[j])) ++j;
    auto order = static_cast<std::uint64_t>(R.modulus() / b[j].residue());
    if (total > cap / order) return std::nullopt;
    total *= order;
  }
  return total;
}

double log_size(const Subspace& s) {
  const Ring& R = s.ring();
  if (!R.is_finite()) return static_cast<double>(s.rank());
  double acc = 0;
  for (const auto& b : s.basis()) {
    std::size_t j = 0;
    while (R.is_zero(b[j])) ++j;
    acc += std::log(static_cast<double>(R.modulus() / b[j].residue()));
  }
  return acc;
}

void for_each_element(const Subspace& s, const Limits& limits, const std::function<void(const Vec&)>& fn) {
  const Ring& R = s.ring();
  if (!R.is_finite()) throw BoundExceeded("cannot enumerate a subspace over Q");
  if (!element_count(s, limits.bound)) throw BoundExceeded("subspace has more elements than the enumeration bound");
  std::vector<i64> radix;
  for (const auto& b : s.basis()) {
    std::size_t j = 0;
    while (R.is_zero(b[j])) ++j;
    radix.push_back(R.modulus() / b[j].residue());
  }
  std::vector<i64> c(radix.size(), 0);
  std::uint64_t tick = 0;
  while (true) {
    if ((++tick & 0xfff) == 0) limits.poll();
    Vec v = zero_vec(R, s.ambient_dim());
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i])
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = R.add(v[k], R.mul(Scalar(c[i]), s.basis()[i][k]));
    fn(v);
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == radix[i]) c[i++] = 0;
    if (i == c.size()) break;
  }
}

void for_each_vector(const Ring& R, std::size_t n, const Limits& limits, const std::function<void(const Vec&)>& fn) {
  if (!R.is_finite()) throw BoundExceeded("cannot enumerate vectors over Q");
  limits.require_power(R.modulus(), n, "vector enumeration");
  Vec v = zero_vec(R, n);
  std::uint64_t tick = 0;
  while (true) {
    if ((++tick & 0xfff) == 0) limits.poll();
    fn(v);
    std::size_t i = 0;
    while (i < n) {
      i64 x = v[i].residue() + 1;
      if (x < R.modulus()) {
        v[i] = Scalar(x);
        break;
      }
      v[i++] = Scalar(i64{0});
    }
    if (i == n) break;
  }
}

Vec reduce_mod(const Subspace& s, std::span<const Scalar> v) {
  const Ring& R = s.ring();
  Vec w(v.begin(), v.end());
  for (const auto& b : s.basis()) {
    std::size_t j = 0;
    while (R.is_zero(b[j])) ++j;
    Scalar c = R.kind() == RingKind::rationals ? Scalar(mpq_class(w[j].rational() / b[j].rational()))
                                               : Scalar(w[j].residue() / b[j].residue());
    for (std::size_t k = j; k < w.size(); ++k) w[k] = R.sub(w[k], R.mul(c, b[k]));
  }
  return w;
}

ComplementMaps field_complement(const Subspace& s) {
  const Ring& R = s.ring();
  if (!R.is_field()) throw Unsupported("field_complement needs a field");
  const std::size_t n = s.ambient_dim();
  auto piv = s.pivots();
  std::vector<bool> is_piv(n, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_piv[j]) free.push_back(j);
  ComplementMaps m{Matrix::zero(R, free.size(), n), Matrix::zero(R, n, free.size())};
  for (std::size_t f = 0; f < free.size(); ++f) {
    m.project(f, free[f]) = R.one();
    for (std::size_t i = 0; i < piv.size(); ++i) m.project(f, piv[i]) = R.neg(s.basis()[i][free[f]]);
    m.lift(free[f], f) = R.one();
  }
  return m;
}

}  // namespace galg
