#pragma once

#include <vector>

#include "galg/rep.hpp"

namespace galg {

/// For each v in the orbit of `base`, an arrow γ_v : base → v, with
/// γ_base the unit.
struct Transversal {
  ObjectId base = 0;
  std::vector<ObjectId> orbit;  // ascending
  std::vector<ArrowId> arrows;  // arrows[i] : base -> orbit[i]

  /// Index of v in `orbit`; throws if v is outside the orbit.
  std::size_t position(ObjectId v) const;
  ArrowId to(ObjectId v) const { return arrows[position(v)]; }
};

/// Smallest-id arrow u → v for each v ≠ u in the orbit; the unit at u.
Transversal transversal(const FiniteGroupoid& g, ObjectId u);
/// Checks that `arrows` is a transversal at u (one arrow u → v per orbit
/// point in ascending order of v, the unit at u).
Transversal make_transversal(const FiniteGroupoid& g, ObjectId u, std::vector<ArrowId> arrows);

/// Ind_u(N) with basis γ_v ⊗ m_i at index position(v) * dim N + i.
struct InducedRep {
  Rep rep;
  Transversal transversal;
  std::size_t block = 0;  // dim N
};

/// Block (w, v) of e_γ, for γ : v → w inside the orbit, is N(γ_w⁻¹ γ γ_v);
/// everything else is zero. N must be a module over the isotropy group at
/// the transversal's base.
InducedRep induce(GroupoidPtr g, const IsotropyModule& n, const Transversal& t);
InducedRep induce(GroupoidPtr g, const IsotropyModule& n);

/// Ann(Ind_u N) straight from the coefficient conditions: f is in it iff
/// Σ_{γ : v → w} f(γ) (γ_w⁻¹ γ γ_v) lies in Ann(N) for every v, w in O_u.
Ideal induced_annihilator_direct(GroupoidPtr g, const IsotropyModule& n, const Transversal& t);
Ideal induced_annihilator_direct(GroupoidPtr g, const IsotropyModule& n);

}  // namespace galg
