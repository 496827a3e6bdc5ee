#include "galg/rep.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "galg/algebra.hpp"

namespace galg {

namespace {

bool columns_in(const Ring& R, const Matrix& a, const Subspace& k) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Vec c = a.column(j);
    if (!is_zero(R, c) && !k.contains(c)) return false;
  }
  return true;
}

std::string arrow_pair(ArrowId a, ArrowId b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

// R𝒢 acting on itself from both sides; its submodules are the ideals.
ModuleAction bimodule(const FiniteGroupoid& g, const Ring& R) {
  std::vector<Matrix> ops;
  for (ArrowId a = 0; a < static_cast<ArrowId>(g.n_arrows()); ++a) {
    ops.push_back(left_mult_matrix(g, R, a));
    ops.push_back(right_mult_matrix(g, R, a));
  }
  return {R, g.n_arrows(), std::move(ops)};
}

bool ops_less(const ModuleAction& a, const ModuleAction& b) {
  if (a.gens != b.gens) return a.gens < b.gens;
  for (std::size_t i = 0; i < a.ops.size() && i < b.ops.size(); ++i) {
    const auto &x = a.ops[i].entries(), &y = b.ops[i].entries();
    if (x != y) return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }
  return a.relations < b.relations;
}

std::vector<std::size_t> subgroup_closure(const GroupTable& G, std::vector<std::size_t> gens) {
  std::set<std::size_t> h{G.identity()};
  h.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::size_t> cur(h.begin(), h.end());
    for (auto x : cur)
      for (auto y : cur)
        if (h.insert(G.mul(x, y)).second) grew = true;
  }
  return {h.begin(), h.end()};
}

Matrix companion(const Ring& R, const std::vector<std::int64_t>& poly) {
  const std::size_t m = poly.size() - 1;  // monic of degree m
  Matrix c = Matrix::zero(R, m, m);
  for (std::size_t i = 1; i < m; ++i) c(i, i - 1) = R.one();
  for (std::size_t i = 0; i < m; ++i) c(i, m - 1) = R.from_int(-poly[i]);
  return c;
}

std::vector<IsotropyModule> sorted_unique(std::vector<IsotropyModule> mods, const Limits& limits) {
  std::vector<IsotropyModule> out;
  for (auto& n : mods) {
    bool seen = false;
    for (const auto& o : out) seen = seen || is_isomorphic(n.module, o.module, limits);
    if (!seen) out.push_back(std::move(n));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const IsotropyModule& a, const IsotropyModule& b) { return ops_less(a.module, b.module); });
  return out;
}

std::vector<IsotropyModule> simples_over_field(const IsotropyGroup& G, const Ring& R, const Limits& limits) {
  if (G.order() > 12) throw Unsupported("simple_modules_group: |G| > 12 over a finite field");
  // composition factors of the regular module, bottom-up
  std::vector<IsotropyModule> factors;
  ModuleAction m = regular_module(G, R).module;
  while (m.gens > 0) {
    auto s = minimal_submodule(m, limits);
    factors.push_back({G, submodule(m, s)});
    m = quotient_module(m, s);
  }
  return sorted_unique(std::move(factors), limits);
}

std::vector<IsotropyModule> simples_over_rationals(const IsotropyGroup& G, const Ring& R) {
  const GroupTable& T = G.table;
  if (!T.is_abelian()) throw Unsupported("simple_modules_group: non-abelian group over Q");
  const std::size_t n = T.order();
  std::set<std::vector<std::size_t>> subgroups;
  std::vector<std::vector<std::size_t>> work{subgroup_closure(T, {})};
  subgroups.insert(work[0]);
  while (!work.empty()) {
    auto h = work.back();
    work.pop_back();
    for (std::size_t x = 0; x < n; ++x) {
      auto gens = h;
      gens.push_back(x);
      auto k = subgroup_closure(T, gens);
      if (subgroups.insert(k).second) work.push_back(k);
    }
  }
  std::vector<IsotropyModule> out;
  for (const auto& h : subgroups) {
    const std::size_t d = n / h.size();
    std::vector<bool> in_h(n, false);
    for (auto x : h) in_h[x] = true;
    // a generator of G/H, if the quotient is cyclic
    std::optional<std::size_t> gen;
    for (std::size_t x = 0; x < n && !gen; ++x) {
      auto gens = h;
      gens.push_back(x);
      if (subgroup_closure(T, gens).size() == n) gen = x;
    }
    if (!gen) continue;
    Matrix c = companion(R, cyclotomic_polynomial(d));
    const std::size_t m = c.rows();
    std::vector<Matrix> ops(n);
    std::size_t power = T.identity();
    Matrix cp = Matrix::identity(R, m);
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t x = 0; x < n; ++x)
        if (in_h[T.mul(T.inverse(power), x)]) ops[x] = cp;
      power = T.mul(power, *gen);
      cp = mul(R, cp, c);
    }
    out.push_back({G, ModuleAction(R, m, std::move(ops))});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const IsotropyModule& a, const IsotropyModule& b) { return ops_less(a.module, b.module); });
  return out;
}

}  // namespace

Rep make_rep(GroupoidPtr g, ModuleAction m) {
  if (!g) throw std::invalid_argument("make_rep: null groupoid");
  if (m.ops.size() != g->n_arrows()) throw DimensionMismatch("make_rep: need one matrix per arrow");
  return {std::move(g), normalized(m)};
}

Rep make_rep(GroupoidPtr g, const Ring& R, std::size_t dim, std::vector<Matrix> ops) {
  return make_rep(std::move(g), ModuleAction(R, dim, std::move(ops)));
}

std::vector<Violation> rep_validate(const Rep& rho) {
  std::vector<Violation> out;
  const auto& g = *rho.groupoid;
  const auto& m = rho.module;
  const Ring& R = m.ring;
  if (m.ops.size() != g.n_arrows()) return {{"shape", "expected one matrix per arrow"}};
  for (const auto& a : m.ops)
    if (a.rows() != m.gens || a.cols() != m.gens) return {{"shape", "matrix of the wrong size"}};

  for (ArrowId a = 0; a < static_cast<ArrowId>(g.n_arrows()); ++a)
    for (const auto& k : m.relations.basis())
      if (!m.relations.contains(apply(R, m.ops[a], k))) {
        out.push_back({"relations", "arrow " + std::to_string(a) + " does not preserve the relations"});
        break;
      }

  for (ArrowId a = 0; a < static_cast<ArrowId>(g.n_arrows()); ++a)
    for (ArrowId b = 0; b < static_cast<ArrowId>(g.n_arrows()); ++b) {
      Matrix prod = mul(R, m.ops[a], m.ops[b]);
      auto ab = g.compose(a, b);
      Matrix expect = ab ? m.ops[*ab] : Matrix::zero(R, m.gens, m.gens);
      if (!columns_in(R, sub(R, prod, expect), m.relations))
        out.push_back({"composability", ab ? "rho" + arrow_pair(a, b) + " != rho(product)"
                                           : "rho" + arrow_pair(a, b) + " != 0 for a non-composable pair"});
    }

  Matrix total = Matrix::zero(R, m.gens, m.gens);
  for (ObjectId u = 0; u < static_cast<ObjectId>(g.n_objects()); ++u) {
    const Matrix& e = m.ops[g.unit_of(u)];
    total = add(R, total, e);
    if (!columns_in(R, sub(R, mul(R, e, e), e), m.relations))
      out.push_back({"idempotent", "unit at object " + std::to_string(u) + " does not act idempotently"});
  }
  if (!columns_in(R, sub(R, total, Matrix::identity(R, m.gens)), m.relations))
    out.push_back({"unitarity", "the units do not sum to the identity"});
  return out;
}

Rep regular_rep(GroupoidPtr g, const Ring& R) {
  std::vector<Matrix> ops;
  for (ArrowId a = 0; a < static_cast<ArrowId>(g->n_arrows()); ++a) ops.push_back(left_mult_matrix(*g, R, a));
  auto n = g->n_arrows();
  return make_rep(std::move(g), R, n, std::move(ops));
}

Rep zero_rep(GroupoidPtr g, const Ring& R) {
  std::vector<Matrix> ops(g->n_arrows(), Matrix::zero(R, 0, 0));
  return make_rep(std::move(g), R, 0, std::move(ops));
}

Matrix rep_action(const Rep& rho, std::span<const Scalar> f) { return combine_ops(rho.module, f); }

bool is_two_sided(const FiniteGroupoid& g, const Subspace& s) {
  if (s.ambient_dim() != g.n_arrows()) throw DimensionMismatch("ideal lives in the wrong space");
  return is_invariant(bimodule(g, s.ring()), s);
}

Ideal make_ideal(GroupoidPtr g, Subspace s) {
  if (!is_two_sided(*g, s)) throw std::invalid_argument("subspace is not a two-sided ideal");
  return {std::move(g), std::move(s)};
}

Ideal zero_ideal(GroupoidPtr g, const Ring& R) {
  auto n = g->n_arrows();
  return {std::move(g), Subspace(R, n)};
}

Ideal whole_ideal(GroupoidPtr g, const Ring& R) {
  auto n = g->n_arrows();
  return {std::move(g), Subspace::full(R, n)};
}

Ideal ideal_from_generators(GroupoidPtr g, const Ring& R, const std::vector<Vec>& gens) {
  auto s = spin(bimodule(*g, R), gens);
  return {std::move(g), std::move(s)};
}

bool ideal_equal(const Ideal& a, const Ideal& b) { return subspace_equal(a.space, b.space); }

Ideal ideal_intersect(const Ideal& a, const Ideal& b) { return {a.groupoid, subspace_intersect(a.space, b.space)}; }

std::vector<Ideal> enumerate_all_ideals(GroupoidPtr g, const Ring& R, const Limits& limits) {
  std::vector<Ideal> out;
  for (auto& s : all_submodules(bimodule(*g, R), limits)) out.push_back({g, std::move(s)});
  return out;
}

Rep quotient_algebra_rep(const Ideal& I) {
  if (!is_two_sided(*I.groupoid, I.space)) throw std::invalid_argument("quotient_algebra_rep: not an ideal");
  auto reg = regular_rep(I.groupoid, I.ring());
  return make_rep(I.groupoid, quotient_module(reg.module, I.space));
}

Ideal annihilator(const Rep& rho) {
  auto s = annihilator_space(rho.module);
  if (!is_two_sided(*rho.groupoid, s)) throw std::logic_error("annihilator is not two-sided; invalid Rep?");
  return {rho.groupoid, std::move(s)};
}

Subspace spin(const Rep& rho, const std::vector<Vec>& seeds) { return spin(rho.module, seeds); }
bool is_simple(const Rep& rho, const Limits& limits) { return is_simple(rho.module, limits); }
Subspace hom_space(const Rep& a, const Rep& b) { return hom_space(a.module, b.module); }
bool is_isomorphic(const Rep& a, const Rep& b, const Limits& limits, std::uint64_t seed) {
  return is_isomorphic(a.module, b.module, limits, seed);
}
Subspace maximal_submodule(const Rep& rho, const Limits& limits) { return maximal_submodule(rho.module, limits); }

Rep IsotropyModule::as_rep() const {
  return {std::make_shared<const FiniteGroupoid>(group_groupoid(group.table)), module};
}

std::vector<Violation> module_validate(const IsotropyModule& n) {
  std::vector<Violation> out;
  const auto& m = n.module;
  const Ring& R = m.ring;
  const auto& T = n.group.table;
  if (m.ops.size() != T.order()) return {{"shape", "expected one matrix per group element"}};
  if (!columns_in(R, sub(R, m.ops[T.identity()], Matrix::identity(R, m.gens)), m.relations))
    out.push_back({"identity", "the identity does not act as 1"});
  for (std::size_t a = 0; a < T.order(); ++a)
    for (std::size_t b = 0; b < T.order(); ++b)
      if (!columns_in(R, sub(R, mul(R, m.ops[a], m.ops[b]), m.ops[T.mul(a, b)]), m.relations))
        out.push_back({"multiplicativity", "N(x)N(y) != N(xy) at (" + std::to_string(a) + ", " +
                                               std::to_string(b) + ")"});
  return out;
}

IsotropyModule trivial_module(const IsotropyGroup& G, const Ring& R) {
  return {G, ModuleAction(R, 1, std::vector<Matrix>(G.order(), Matrix::identity(R, 1)))};
}

IsotropyModule sign_module(const IsotropyGroup& G, const Ring& R) {
  const auto& T = G.table;
  std::vector<std::size_t> squares;
  for (std::size_t x = 0; x < T.order(); ++x) squares.push_back(T.mul(x, x));
  auto h = subgroup_closure(T, squares);
  if (2 * h.size() != T.order()) throw std::invalid_argument("sign_module: squares do not have index 2");
  std::vector<Matrix> ops;
  for (std::size_t x = 0; x < T.order(); ++x) {
    bool even = std::binary_search(h.begin(), h.end(), x);
    ops.push_back(Matrix(1, 1, even ? R.one() : R.neg(R.one())));
  }
  return {G, ModuleAction(R, 1, std::move(ops))};
}

IsotropyModule regular_module(const IsotropyGroup& G, const Ring& R) {
  const auto& T = G.table;
  const std::size_t n = T.order();
  std::vector<Matrix> ops;
  for (std::size_t x = 0; x < n; ++x) {
    Matrix p = Matrix::zero(R, n, n);
    for (std::size_t y = 0; y < n; ++y) p(T.mul(x, y), y) = R.one();
    ops.push_back(std::move(p));
  }
  return {G, ModuleAction(R, n, std::move(ops))};
}

Subspace group_annihilator(const IsotropyModule& n) { return annihilator_space(n.module); }
bool is_simple(const IsotropyModule& n, const Limits& limits) { return is_simple(n.module, limits); }
bool is_isomorphic(const IsotropyModule& a, const IsotropyModule& b, const Limits& limits, std::uint64_t seed) {
  return is_isomorphic(a.module, b.module, limits, seed);
}
Subspace maximal_submodule(const IsotropyModule& n, const Limits& limits) {
  return maximal_submodule(n.module, limits);
}

std::vector<IsotropyModule> simple_modules_group(const IsotropyGroup& G, const Ring& R, const Limits& limits) {
  if (R.kind() == RingKind::rationals) return simples_over_rationals(G, R);
  if (R.is_field()) return simples_over_field(G, R, limits);
  // Z/n: J(Z/n) is nilpotent, so a simple module is killed by some p | n
  // and is a simple F_p G-module.
  std::vector<IsotropyModule> out;
  for (auto p : R.prime_factors()) {
    for (const auto& s : simples_over_field(G, Ring::prime_field(p), limits)) {
      const std::size_t d = s.dim();
      std::vector<Vec> rel;
      for (std::size_t i = 0; i < d; ++i) rel.push_back(scale(R, R.from_int(p), unit_vec(R, d, i)));
      std::vector<Matrix> ops;
      for (const auto& a : s.module.ops) {
        Matrix b = Matrix::zero(R, d, d);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) b(i, j) = R.from_int(a(i, j).residue());
        ops.push_back(std::move(b));
      }
      out.push_back({G, ModuleAction(R, d, Subspace::span(R, d, std::move(rel)), std::move(ops))});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const IsotropyModule& a, const IsotropyModule& b) { return ops_less(a.module, b.module); });
  return out;
}

std::vector<std::int64_t> cyclotomic_polynomial(std::size_t d) {
  if (d == 0) throw std::invalid_argument("cyclotomic_polynomial(0)");
  // x^d - 1 divided by Φ_e for every proper divisor e of d
  std::vector<std::int64_t> num(d + 1, 0);
  num[0] = -1;
  num[d] = 1;
  for (std::size_t e = 1; e < d; ++e) {
    if (d % e) continue;
    auto den = cyclotomic_polynomial(e);
    const std::size_t dn = den.size() - 1;
    std::vector<std::int64_t> q(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
      std::int64_t c = num[k];  // den is monic
      q[k - dn] = c;
      for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
    }
    num = std::move(q);
  }
  return num;
}

}  // namespace galg
