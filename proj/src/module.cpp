#include "galg/module.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace galg {

namespace {

using i64 = std::int64_t;

void require_operators(const Ring& R, std::size_t n, const std::vector<Matrix>& ops) {
  for (const auto& a : ops)
    if (a.rows() != n || a.cols() != n) throw DimensionMismatch("module operator has the wrong shape");
  (void)R;
}

// Row-by-row semi-echelon basis over a field; rows are normalised to a
// leading 1 and have zeros in the pivot columns of earlier rows.
class FieldEchelon {
 public:
  explicit FieldEchelon(const Ring& R) : R_(R) {}

  /// Adds v if it is independent; returns the stored row in that case.
  const Vec* insert(Vec v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& c = v[pivots_[i]];
      if (R_.is_zero(c)) continue;
      Scalar f = c;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!R_.is_zero(rows_[i][k])) v[k] = R_.sub(v[k], R_.mul(f, rows_[i][k]));
    }
    std::size_t p = 0;
    while (p < v.size() && R_.is_zero(v[p])) ++p;
    if (p == v.size()) return nullptr;
    Scalar inv = R_.inv(v[p]);
    for (auto& x : v) x = R_.mul(inv, x);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return &rows_.back();
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }

 private:
  const Ring& R_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// Spinning over a prime field with native residues; the exhaustive
// searches below call it once per line of M, so the generic Scalar path
// dominates otherwise. Results are reduced echelon rows, usable as set keys.
class PackedSpinner {
 public:
  using Row = std::vector<std::uint64_t>;

  static bool applies(const ModuleAction& m) {
    return m.ring.kind() == RingKind::prime_field && m.ring.modulus() < (i64{1} << 31);
  }

  explicit PackedSpinner(const ModuleAction& m) : p_(static_cast<std::uint64_t>(m.ring.modulus())), n_(m.gens) {
    for (const auto& a : m.ops) {
      std::vector<Entry> nz;
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
          if (auto x = a(i, j).residue()) nz.push_back({i, j, static_cast<std::uint64_t>(x)});
      ops_.push_back(std::move(nz));
    }
    for (const auto& b : m.relations.basis()) relations_.push_back(pack(b));
  }

  Row pack(std::span<const Scalar> v) const {
    Row out(n_);
    for (std::size_t k = 0; k < n_; ++k) out[k] = static_cast<std::uint64_t>(v[k].residue());
    return out;
  }

  /// Reduced echelon rows of the submodule generated by v and the relations.
  std::vector<Row> spin(const Row& v) const {
    Echelon e{*this, {}, {}};
    std::vector<std::size_t> work;
    for (const auto& r : relations_)
      if (e.insert(r)) work.push_back(e.rows.size() - 1);
    if (e.insert(v)) work.push_back(e.rows.size() - 1);
    Row w(n_);
    while (!work.empty() && e.rows.size() < n_) {
      Row src = e.rows[work.back()];
      work.pop_back();
      for (const auto& nz : ops_) {
        std::fill(w.begin(), w.end(), 0);
        for (const auto& [i, j, x] : nz) w[i] = (w[i] + x * src[j]) % p_;
        if (e.insert(w)) work.push_back(e.rows.size() - 1);
      }
    }
    return e.reduced();
  }

  std::size_t dim() const { return n_; }

  Subspace unpack(const Ring& R, const std::vector<Row>& rows) const {
    std::vector<Vec> gens;
    for (const auto& r : rows) {
      Vec v;
      for (auto x : r) v.push_back(Scalar(static_cast<i64>(x)));
      gens.push_back(std::move(v));
    }
    return Subspace::span(R, n_, std::move(gens));
  }

 private:
  struct Entry {
    std::size_t i, j;
    std::uint64_t x;
  };

  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t r = 1, e = p_ - 2;
    while (e) {
      if (e & 1) r = r * a % p_;
      a = a * a % p_;
      e >>= 1;
    }
    return r;
  }

  struct Echelon {
    const PackedSpinner& s;
    std::vector<Row> rows;
    std::vector<std::size_t> pivots;

    bool insert(Row v) {
      for (std::size_t r = 0; r < rows.size(); ++r) {
        auto c = v[pivots[r]];
        if (!c) continue;
        auto f = s.p_ - c;
        for (std::size_t k = 0; k < v.size(); ++k)
          if (rows[r][k]) v[k] = (v[k] + f * rows[r][k]) % s.p_;
      }
      std::size_t piv = 0;
      while (piv < v.size() && !v[piv]) ++piv;
      if (piv == v.size()) return false;
      auto iv = s.inv(v[piv]);
      for (auto& x : v) x = x * iv % s.p_;
      rows.push_back(std::move(v));
      pivots.push_back(piv);
      return true;
    }

    std::vector<Row> reduced() {
      std::vector<std::size_t> order(rows.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots[a] < pivots[b]; });
      std::vector<Row> out;
      for (auto i : order) out.push_back(rows[i]);
      for (std::size_t a = out.size(); a-- > 0;) {
        auto pa = pivots[order[a]];
        for (std::size_t b = 0; b < a; ++b) {
          auto c = out[b][pa];
          if (!c) continue;
          auto f = s.p_ - c;
          for (std::size_t k = pa; k < out[b].size(); ++k)
            if (out[a][k]) out[b][k] = (out[b][k] + f * out[a][k]) % s.p_;
        }
      }
      return out;
    }
  };

  std::uint64_t p_;
  std::size_t n_;
  std::vector<std::vector<Entry>> ops_;
  std::vector<Row> relations_;
};

// Visits one representative of every nonzero element of M (finite rings).
// Over a field only vectors whose leading nonzero entry is 1 are visited,
// i.e. one per line. Stops early when fn returns false.
void for_each_nonzero_rep(const ModuleAction& m, const Limits& limits, const std::function<bool(const Vec&)>& fn) {
  const Ring& R = m.ring;
  if (!R.is_finite()) throw Unsupported("enumeration over Q");
  auto count = m.size(limits.bound);
  if (!count)
    throw BoundExceeded("module has more than " + std::to_string(limits.bound) + " elements");
  const std::size_t n = m.gens;
  // canonical representatives: coordinate j ranges below the pivot of the
  // relations at column j (Howell form), freely elsewhere
  std::vector<i64> radix(n, R.modulus());
  auto piv = m.relations.pivots();
  for (std::size_t i = 0; i < piv.size(); ++i) radix[piv[i]] = m.relations.basis()[i][piv[i]].residue();

  std::uint64_t tick = 0;
  if (R.is_field()) {
    for (std::size_t lead = 0; lead < n; ++lead) {
      if (radix[lead] == 1) continue;  // pivot column of the relations
      Vec v = zero_vec(R, n);
      v[lead] = R.one();
      std::vector<i64> c(n, 0);
      while (true) {
        if ((++tick & 0xff) == 0) limits.poll();
        for (std::size_t j = lead + 1; j < n; ++j) v[j] = Scalar(c[j]);
        if (!fn(v)) return;
        std::size_t j = lead + 1;
        while (j < n && ++c[j] == radix[j]) c[j++] = 0;
        if (j >= n) break;
      }
    }
    return;
  }
  std::vector<i64> c(n, 0);
  while (true) {
    std::size_t j = 0;
    while (j < n && ++c[j] == radix[j]) c[j++] = 0;
    if (j == n) break;
    if ((++tick & 0xff) == 0) limits.poll();
    Vec v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = Scalar(c[k]);
    if (!fn(v)) return;
  }
}

// Elements of a subspace over a finite ring, with early exit.
void for_each_in_span(const Subspace& s, const Limits& limits, const std::function<bool(const Vec&)>& fn) {
  const Ring& R = s.ring();
  std::vector<i64> radix;
  for (const auto& b : s.basis()) {
    std::size_t j = 0;
    while (R.is_zero(b[j])) ++j;
    radix.push_back(R.modulus() / b[j].residue());
  }
  std::vector<i64> c(radix.size(), 0);
  std::uint64_t tick = 0;
  while (true) {
    if ((++tick & 0xff) == 0) limits.poll();
    Vec v = zero_vec(R, s.ambient_dim());
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i])
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = R.add(v[k], R.mul(Scalar(c[i]), s.basis()[i][k]));
    if (!fn(v)) return;
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == radix[i]) c[i++] = 0;
    if (i == c.size()) return;
  }
}

std::uint64_t subspace_size(const Subspace& s) {
  if (s.ring().is_field()) return s.rank();  // comparison key only
  return element_count(s, UINT64_MAX).value_or(UINT64_MAX);
}

// {x : each length-n block of sys x lies in target_block}, with the
// membership test applied block by block.
Subspace solve_into(const Matrix& sys, const Subspace& target_block, std::size_t blocks) {
  const Ring& R = target_block.ring();
  if (target_block.is_zero()) return mat_kernel(sys, R);
  if (target_block.is_full()) return Subspace::full(R, sys.cols());
  const Matrix c = check_matrix(target_block);
  const std::size_t n = target_block.ambient_dim(), k = c.rows();
  Matrix out = Matrix::zero(R, blocks * k, sys.cols());
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t r = 0; r < n; ++r) {
        const Scalar& x = c(i, r);
        if (R.is_zero(x)) continue;
        for (std::size_t j = 0; j < sys.cols(); ++j)
          out(b * k + i, j) = R.add(out(b * k + i, j), R.mul(x, sys(b * n + r, j)));
      }
  return mat_kernel(out, R);
}

bool columns_in(const Ring& R, const Matrix& a, const Subspace& k) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Vec c = a.column(j);
    if (!is_zero(R, c) && !k.contains(c)) return false;
  }
  return true;
}

bool is_bijective(const ModuleAction& a, const ModuleAction& b, const Matrix& t) {
  if (!(preimage(t, b.relations) == a.relations)) return false;
  return subspace_sum(image(t, Subspace::full(a.ring, a.gens)), b.relations).is_full();
}

}  // namespace

ModuleAction::ModuleAction(Ring R, std::size_t n, std::vector<Matrix> operators)
    : ring(R), gens(n), relations(R, n), ops(std::move(operators)) {
  require_operators(ring, gens, ops);
}

ModuleAction::ModuleAction(Ring R, std::size_t n, Subspace rel, std::vector<Matrix> operators)
    : ring(R), gens(n), relations(std::move(rel)), ops(std::move(operators)) {
  if (relations.ambient_dim() != n || !(relations.ring() == ring))
    throw DimensionMismatch("module relations live in the wrong space");
  require_operators(ring, gens, ops);
}

std::optional<std::uint64_t> ModuleAction::size(std::uint64_t cap) const {
  if (!ring.is_finite()) return std::nullopt;
  // n^(free columns) times the product of the Howell pivots
  std::uint64_t total = 1;
  auto mulcap = [&](std::uint64_t f) {
    if (f != 0 && total > cap / f) return false;
    total *= f;
    return true;
  };
  auto piv = relations.pivots();
  for (std::size_t i = 0; i < piv.size(); ++i)
    if (!mulcap(static_cast<std::uint64_t>(relations.basis()[i][piv[i]].residue()))) return std::nullopt;
  for (std::size_t j = 0; j < gens - piv.size(); ++j)
    if (!mulcap(static_cast<std::uint64_t>(ring.modulus()))) return std::nullopt;
  return total;
}

ModuleAction normalized(const ModuleAction& m) {
  if (!m.ring.is_field() || m.relations.is_zero()) return m;
  return quotient_module(m, m.relations);
}

Subspace spin(const ModuleAction& m, const std::vector<Vec>& seeds) {
  const Ring& R = m.ring;
  for (const auto& s : seeds)
    if (s.size() != m.gens) throw DimensionMismatch("spin: seed has the wrong length");
  if (R.is_field()) {
    FieldEchelon e(R);
    std::vector<Vec> work;
    for (const auto& b : m.relations.basis())
      if (auto r = e.insert(b)) work.push_back(*r);
    for (const auto& s : seeds)
      if (auto r = e.insert(s)) work.push_back(*r);
    while (!work.empty() && e.rank() < m.gens) {
      Vec w = std::move(work.back());
      work.pop_back();
      for (const auto& a : m.ops)
        if (auto r = e.insert(apply(R, a, w))) work.push_back(*r);
    }
    return Subspace::span(R, m.gens, e.rows());
  }
  std::vector<Vec> gens = m.relations.basis();
  gens.insert(gens.end(), seeds.begin(), seeds.end());
  Subspace s = Subspace::span(R, m.gens, std::move(gens));
  while (true) {
    std::vector<Vec> next = s.basis();
    for (const auto& a : m.ops)
      for (const auto& b : s.basis()) next.push_back(apply(R, a, b));
    Subspace t = Subspace::span(R, m.gens, std::move(next));
    if (t == s) return s;
    s = std::move(t);
  }
}

bool is_invariant(const ModuleAction& m, const Subspace& s) {
  for (const auto& a : m.ops)
    for (const auto& b : s.basis())
      if (!s.contains(apply(m.ring, a, b))) return false;
  return true;
}

Subspace annihilator_space(const ModuleAction& m) {
  const Ring& R = m.ring;
  const std::size_t n = m.gens, k = m.ops.size();
  // column i of the system is ops_i flattened column by column
  Matrix sys = Matrix::zero(R, n * n, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) sys(j * n + r, i) = m.ops[i](r, j);
  return solve_into(sys, m.relations, n);
}

ModuleAction quotient_module(const ModuleAction& m, const Subspace& s) {
  if (s.ambient_dim() != m.gens) throw DimensionMismatch("quotient_module: subspace in the wrong space");
  if (!is_subset(m.relations, s)) throw std::invalid_argument("quotient_module: subspace misses the relations");
  if (!is_invariant(m, s)) throw std::invalid_argument("quotient_module: subspace is not a submodule");
  const Ring& R = m.ring;
  if (!R.is_field()) return {R, m.gens, s, m.ops};
  auto cm = field_complement(s);
  std::vector<Matrix> ops;
  for (const auto& a : m.ops) ops.push_back(mul(R, cm.project, mul(R, a, cm.lift)));
  return {R, cm.project.rows(), std::move(ops)};
}

ModuleAction submodule(const ModuleAction& m, const Subspace& s) {
  const Ring& R = m.ring;
  if (!R.is_field() || !m.relations.is_zero()) throw Unsupported("submodule: needs a field and no relations");
  if (!is_invariant(m, s)) throw std::invalid_argument("submodule: subspace is not invariant");
  const std::size_t r = s.rank();
  std::vector<Matrix> ops;
  for (const auto& a : m.ops) {
    Matrix o = Matrix::zero(R, r, r);
    for (std::size_t i = 0; i < r; ++i) {
      auto c = s.coordinates(apply(R, a, s.basis()[i]));
      for (std::size_t k = 0; k < r; ++k) o(k, i) = (*c)[k];
    }
    ops.push_back(std::move(o));
  }
  return {R, r, std::move(ops)};
}

Matrix combine_ops(const ModuleAction& m, std::span<const Scalar> coeffs) {
  if (coeffs.size() != m.ops.size()) throw DimensionMismatch("combine_ops: coefficient count");
  Matrix out = Matrix::zero(m.ring, m.gens, m.gens);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!m.ring.is_zero(coeffs[i])) out = add(m.ring, out, scale(m.ring, coeffs[i], m.ops[i]));
  return out;
}

bool is_simple(const ModuleAction& m, const Limits& limits) {
  if (m.is_zero_module()) return false;
  const Ring& R = m.ring;
  // S·M ≠ 0
  bool acts = false;
  for (const auto& a : m.ops) acts = acts || !columns_in(R, a, m.relations);
  if (!acts) return false;
  const Subspace full = Subspace::full(R, m.gens);

  if (R.is_finite()) {
    bool simple = true;
    if (PackedSpinner::applies(m)) {
      PackedSpinner ps(m);
      for_each_nonzero_rep(m, limits, [&](const Vec& v) {
        simple = ps.spin(ps.pack(v)).size() == ps.dim();
        return simple;
      });
      return simple;
    }
    for_each_nonzero_rep(m, limits, [&](const Vec& v) {
      simple = spin(m, {v}) == full;
      return simple;
    });
    return simple;
  }

  const ModuleAction n = normalized(m);
  const std::size_t d = n.gens;
  for (std::size_t i = 0; i < d; ++i) {
    limits.poll();
    if (!(spin(n, {unit_vec(R, d, i)}) == full)) return false;
    for (std::size_t j = i + 1; j < d; ++j)
      if (!(spin(n, {add(R, unit_vec(R, d, i), unit_vec(R, d, j))}) == full)) return false;
  }
  // a nonzero singular endomorphism rules out simplicity (Schur)
  auto H = hom_space(n, n);
  std::vector<Matrix> cands;
  for (std::size_t i = 0; i < H.rank(); ++i) {
    Matrix x = unflatten(R, H.basis()[i], d, d);
    for (int lambda = -3; lambda <= 3; ++lambda)
      cands.push_back(sub(R, x, scale(R, R.from_int(lambda), Matrix::identity(R, d))));
    for (std::size_t j = i + 1; j < H.rank(); ++j)
      cands.push_back(add(R, x, unflatten(R, H.basis()[j], d, d)));
  }
  for (const auto& x : cands)
    if (!is_zero(R, x) && mat_rank(x, R) < d) return false;
  return true;
}

Matrix unflatten(const Ring& R, std::span<const Scalar> v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw DimensionMismatch("unflatten: length mismatch");
  Matrix t = Matrix::zero(R, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t(i, j) = v[i * cols + j];
  return t;
}

Subspace hom_space(const ModuleAction& a, const ModuleAction& b) {
  if (!(a.ring == b.ring)) throw std::invalid_argument("hom_space: modules over different rings");
  if (a.ops.size() != b.ops.size()) throw DimensionMismatch("hom_space: modules over different algebras");
  const Ring& R = a.ring;
  const std::size_t m1 = a.gens, m2 = b.gens, k = a.ops.size();
  const std::size_t blocks = a.relations.rank() + k * m1;
  Matrix sys = Matrix::zero(R, blocks * m2, m2 * m1);
  std::size_t blk = 0;
  // T maps the relations of M1 into those of M2
  for (const auto& rel : a.relations.basis()) {
    for (std::size_t i = 0; i < m2; ++i)
      for (std::size_t j = 0; j < m1; ++j) sys(blk * m2 + i, i * m1 + j) = rel[j];
    ++blk;
  }
  // (T A_γ - B_γ T) e_j lies in the relations of M2
  for (std::size_t g = 0; g < k; ++g)
    for (std::size_t j = 0; j < m1; ++j, ++blk)
      for (std::size_t i = 0; i < m2; ++i) {
        const std::size_t row = blk * m2 + i;
        for (std::size_t l = 0; l < m1; ++l) sys(row, i * m1 + l) = R.add(sys(row, i * m1 + l), a.ops[g](l, j));
        for (std::size_t l = 0; l < m2; ++l) sys(row, l * m1 + j) = R.sub(sys(row, l * m1 + j), b.ops[g](i, l));
      }
  return solve_into(sys, b.relations, blocks);
}

bool is_homomorphism(const ModuleAction& a, const ModuleAction& b, const Matrix& t) {
  const Ring& R = a.ring;
  if (t.rows() != b.gens || t.cols() != a.gens || a.ops.size() != b.ops.size()) return false;
  for (const auto& rel : a.relations.basis())
    if (!b.relations.contains(apply(R, t, rel)) && !is_zero(R, apply(R, t, rel))) return false;
  for (std::size_t g = 0; g < a.ops.size(); ++g)
    if (!columns_in(R, sub(R, mul(R, t, a.ops[g]), mul(R, b.ops[g], t)), b.relations)) return false;
  return true;
}

bool is_isomorphism(const ModuleAction& a, const ModuleAction& b, const Matrix& t) {
  return is_homomorphism(a, b, t) && is_bijective(a, b, t);
}

std::optional<Matrix> find_isomorphism(const ModuleAction& a, const ModuleAction& b, const Limits& limits,
                                       std::uint64_t seed) {
  if (!(a.ring == b.ring)) throw std::invalid_argument("find_isomorphism: modules over different rings");
  if (a.ops.size() != b.ops.size()) throw DimensionMismatch("find_isomorphism: modules over different algebras");
  const Ring& R = a.ring;
  if (R.is_finite()) {
    auto sa = a.size(), sb = b.size();
    if (sa && sb && *sa != *sb) return std::nullopt;
  } else if (a.gens - a.relations.rank() != b.gens - b.relations.rank()) {
    return std::nullopt;
  }
  if (a.is_zero_module() && b.is_zero_module()) return Matrix::zero(R, b.gens, a.gens);

  const Subspace H = hom_space(a, b);
  const std::size_t m1 = a.gens, m2 = b.gens;
  std::optional<Matrix> found;
  auto test = [&](const Vec& v) {
    Matrix t = unflatten(R, v, m2, m1);
    if (is_bijective(a, b, t)) found = std::move(t);
    return !found;
  };

  std::mt19937_64 rng(seed);
  if (R.is_finite()) {
    if (element_count(H, limits.bound)) {
      for_each_in_span(H, limits, test);
      return found;
    }
    std::uniform_int_distribution<i64> coef(0, R.modulus() - 1);
    for (int trial = 0; trial < 256 && !found; ++trial) {
      limits.poll();
      Vec v = zero_vec(R, H.ambient_dim());
      for (const auto& h : H.basis()) v = add(R, v, scale(R, Scalar(coef(rng)), h));
      test(v);
    }
    if (!found) throw BoundExceeded("find_isomorphism: Hom space exceeds the enumeration bound");
    return found;
  }

  for (const auto& h : H.basis())
    if (!test(h)) return found;
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 64 && !found; ++trial) {
    limits.poll();
    Vec v = zero_vec(R, H.ambient_dim());
    for (const auto& h : H.basis()) v = add(R, v, scale(R, R.from_int(coef(rng)), h));
    test(v);
  }
  return found;
}

bool is_isomorphic(const ModuleAction& a, const ModuleAction& b, const Limits& limits, std::uint64_t seed) {
  return find_isomorphism(a, b, limits, seed).has_value();
}

std::vector<Subspace> all_submodules(const ModuleAction& m, const Limits& limits) {
  if (!m.ring.is_finite()) throw Unsupported("all_submodules: infinitely many submodules over Q");
  std::set<Subspace> cyclic{spin(m, {})};
  if (PackedSpinner::applies(m)) {
    PackedSpinner ps(m);
    std::set<std::vector<PackedSpinner::Row>> keys;
    for_each_nonzero_rep(m, limits, [&](const Vec& v) {
      keys.insert(ps.spin(ps.pack(v)));
      return true;
    });
    for (const auto& k : keys) cyclic.insert(ps.unpack(m.ring, k));
  } else {
    for_each_nonzero_rep(m, limits, [&](const Vec& v) {
      cyclic.insert(spin(m, {v}));
      return true;
    });
  }
  // every submodule is a sum of cyclic ones
  std::set<Subspace> found = cyclic;
  std::vector<Subspace> work(found.begin(), found.end());
  while (!work.empty()) {
    limits.poll();
    Subspace s = std::move(work.back());
    work.pop_back();
    for (const auto& c : cyclic) {
      if (is_subset(c, s)) continue;
      auto u = subspace_sum(s, c);
      if (found.insert(u).second) work.push_back(std::move(u));
    }
  }
  return {found.begin(), found.end()};
}

Subspace maximal_submodule(const ModuleAction& m, const Limits& limits) {
  if (m.is_zero_module()) throw std::invalid_argument("maximal_submodule: zero module");
  if (!m.ring.is_finite()) throw Unsupported("maximal_submodule: submodule search needs a finite ring");
  const Subspace full = Subspace::full(m.ring, m.gens);
  std::optional<Subspace> best;
  std::uint64_t best_size = 0;
  for (auto& s : all_submodules(m, limits)) {
    if (s == full) continue;
    auto sz = subspace_size(s);
    // all_submodules is ascending, so the first of each size is the least
    if (!best || sz > best_size) best = std::move(s), best_size = sz;
  }
  return *best;
}

Subspace minimal_submodule(const ModuleAction& m, const Limits& limits) {
  if (m.is_zero_module()) throw std::invalid_argument("minimal_submodule: zero module");
  std::optional<Subspace> best;
  std::uint64_t best_size = 0;
  for_each_nonzero_rep(m, limits, [&](const Vec& v) {
    auto s = spin(m, {v});
    auto sz = subspace_size(s);
    if (!best || sz < best_size || (sz == best_size && s < *best)) best = std::move(s), best_size = sz;
    return true;
  });
  return *best;
}

}  // namespace galg
