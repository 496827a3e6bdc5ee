#pragma once

#include <vector>

#include "galg/rep.hpp"

namespace galg {

/// The sheaf of a module at discrete scale: one stalk E_u = 1_u·M per
/// object and one stalk map E_{d(γ)} → E_{r(γ)} per arrow.
///
/// Stalk u is presented as R^gens[u] / relations[u]. Over a field the
/// relations are zero and the basis is the reduced echelon basis of the
/// column space of ρ(1_u), coordinates being read off at its pivots. Over
/// Z/n (where 1_u·M need not be free) the stalk is M / (1 - 1_u)M on the
/// generators of M, which is the same module.
struct SheafData {
  GroupoidPtr groupoid;
  Ring ring;
  std::vector<std::size_t> gens;
  std::vector<Subspace> relations;
  std::vector<Matrix> arrows;       // gens[r(γ)] x gens[d(γ)]
  std::vector<Matrix> restriction;  // M → E_u, gens[u] x gens(M)

  bool stalk_is_zero(ObjectId u) const { return relations[u].is_full(); }
  /// Objects with a nonzero stalk.
  std::vector<ObjectId> support() const;
};

/// Empty iff units act as identity, stalk maps compose, relations are
/// preserved and every stalk map is invertible (all modulo the relations).
std::vector<Violation> sheaf_validate(const SheafData& s);

SheafData sheaf_of(const Rep& rho);

/// E_u with the loops at u acting.
IsotropyModule stalk_isotropy_module(const SheafData& s, ObjectId u);

/// The module of sections ⊕_u E_u: e_γ moves the d(γ) block to the r(γ)
/// block by its stalk map.
Rep gamma_c(const SheafData& s);

/// The map m ↦ (1_u·m)_u from ρ to gamma_c(sheaf_of(ρ)), checked to be a
/// module isomorphism (std::logic_error otherwise).
Matrix disintegration_iso(const Rep& rho);

}  // namespace galg
