#include "galg/induction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace galg {

namespace {

void require_module_at(const FiniteGroupoid& g, const IsotropyModule& n, const Transversal& t) {
  if (n.group.base != t.base)
    throw std::invalid_argument("module lives at object " + std::to_string(n.group.base) +
                                " but the transversal is based at " + std::to_string(t.base));
  if (n.group.elements != isotropy(g, t.base).elements)
    throw std::invalid_argument("module is not over the isotropy group of this groupoid");
  if (n.module.ops.size() != n.group.order()) throw DimensionMismatch("module needs one matrix per group element");
}

// γ_w⁻¹ γ γ_v as an index into the isotropy group at the base.
std::size_t isotropy_index(const FiniteGroupoid& g, const IsotropyGroup& G, const Transversal& t, ArrowId gamma) {
  ArrowId gv = t.to(g.d(gamma)), gw = t.to(g.r(gamma));
  return G.index_of(*g.compose(g.inv(gw), *g.compose(gamma, gv)));
}

}  // namespace

std::size_t Transversal::position(ObjectId v) const {
  auto it = std::lower_bound(orbit.begin(), orbit.end(), v);
  if (it == orbit.end() || *it != v)
    throw std::invalid_argument("object " + std::to_string(v) + " is not in the orbit of " + std::to_string(base));
  return static_cast<std::size_t>(it - orbit.begin());
}

Transversal transversal(const FiniteGroupoid& g, ObjectId u) {
  if (u < 0 || static_cast<std::size_t>(u) >= g.n_objects())
    throw std::out_of_range("object " + std::to_string(u) + " out of range");
  Transversal t;
  t.base = u;
  t.orbit = orbits(g).orbit(u);
  t.arrows.assign(t.orbit.size(), -1);
  for (ArrowId a = 0; a < static_cast<ArrowId>(g.n_arrows()); ++a) {
    if (g.d(a) != u) continue;
    auto& slot = t.arrows[t.position(g.r(a))];
    if (slot == -1) slot = a;
  }
  t.arrows[t.position(u)] = g.unit_of(u);
  return t;
}

Transversal make_transversal(const FiniteGroupoid& g, ObjectId u, std::vector<ArrowId> arrows) {
  Transversal t = transversal(g, u);
  if (arrows.size() != t.orbit.size()) throw std::invalid_argument("transversal needs one arrow per orbit point");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    auto a = arrows[i];
    if (a < 0 || static_cast<std::size_t>(a) >= g.n_arrows() || g.d(a) != u || g.r(a) != t.orbit[i])
      throw std::invalid_argument("transversal arrow " + std::to_string(a) + " does not go from " +
                                  std::to_string(u) + " to " + std::to_string(t.orbit[i]));
  }
  if (arrows[t.position(u)] != g.unit_of(u)) throw std::invalid_argument("transversal must use the unit at its base");
  t.arrows = std::move(arrows);
  return t;
}

InducedRep induce(GroupoidPtr g, const IsotropyModule& n, const Transversal& t) {
  require_module_at(*g, n, t);
  const Ring& R = n.ring();
  const std::size_t k = n.dim(), orbit = t.orbit.size(), dim = k * orbit;
  std::vector<Matrix> ops;
  for (ArrowId a = 0; a < static_cast<ArrowId>(g->n_arrows()); ++a) {
    Matrix m = Matrix::zero(R, dim, dim);
    if (std::binary_search(t.orbit.begin(), t.orbit.end(), g->d(a))) {
      const Matrix& blk = n.module.ops[isotropy_index(*g, n.group, t, a)];
      const std::size_t row0 = t.position(g->r(a)) * k, col0 = t.position(g->d(a)) * k;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(row0 + i, col0 + j) = blk(i, j);
    }
    ops.push_back(std::move(m));
  }
  ModuleAction mod(R, dim, direct_power(n.module.relations, orbit), std::move(ops));
  return {make_rep(std::move(g), std::move(mod)), t, k};
}

InducedRep induce(GroupoidPtr g, const IsotropyModule& n) {
  auto t = transversal(*g, n.group.base);
  return induce(std::move(g), n, t);
}

Ideal induced_annihilator_direct(GroupoidPtr g, const IsotropyModule& n, const Transversal& t) {
  require_module_at(*g, n, t);
  const Ring& R = n.ring();
  const Subspace ann = group_annihilator(n);
  const std::size_t order = n.group.order(), orbit = t.orbit.size();
  // one block of |G_u| rows per ordered pair (v, w) of orbit points
  Matrix sys = Matrix::zero(R, orbit * orbit * order, g->n_arrows());
  for (ArrowId a = 0; a < static_cast<ArrowId>(g->n_arrows()); ++a) {
    if (!std::binary_search(t.orbit.begin(), t.orbit.end(), g->d(a))) continue;
    const std::size_t pair = t.position(g->d(a)) * orbit + t.position(g->r(a));
    sys(pair * order + isotropy_index(*g, n.group, t, a), a) = R.one();
  }
  Subspace s = ann.is_zero() ? mat_kernel(sys, R) : preimage(sys, direct_power(ann, orbit * orbit));
  return {std::move(g), std::move(s)};
}

Ideal induced_annihilator_direct(GroupoidPtr g, const IsotropyModule& n) {
  auto t = transversal(*g, n.group.base);
  return induced_annihilator_direct(std::move(g), n, t);
}

}  // namespace galg
