#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "galg/limits.hpp"
#include "galg/matrix.hpp"
#include "galg/subspace.hpp"

namespace galg {

/// A finitely presented module M = R^gens / relations together with one
/// operator per basis element of the acting algebra (arrows for an R𝒢-module,
/// group elements for an RG_u-module). Each operator must map `relations`
/// into itself.
///
/// Over a field the relations are always eliminated (see `normalized`), so
/// gens is the dimension. Over Z/n they are kept: this is what lets a simple
/// Z/4-module such as (Z/4)/(2) be written down at all.
struct ModuleAction {
  Ring ring;
  std::size_t gens = 0;
  Subspace relations;
  std::vector<Matrix> ops;

  ModuleAction() = default;
  ModuleAction(Ring R, std::size_t n, std::vector<Matrix> operators);
  ModuleAction(Ring R, std::size_t n, Subspace rel, std::vector<Matrix> operators);

  bool is_zero_module() const { return relations.is_full(); }
  /// |M| over a finite ring, nullopt past `cap` or over Q.
  std::optional<std::uint64_t> size(std::uint64_t cap = UINT64_MAX) const;

  friend bool operator==(const ModuleAction&, const ModuleAction&) = default;
};

/// Same module with the relations eliminated when R is a field.
ModuleAction normalized(const ModuleAction& m);

/// Smallest invariant submodule of R^gens containing the relations and the
/// seeds. (The relations are the zero submodule of M.)
Subspace spin(const ModuleAction& m, const std::vector<Vec>& seeds);
bool is_invariant(const ModuleAction& m, const Subspace& s);

/// Coefficient vectors c with Σ c_i ops_i acting as zero on M.
Subspace annihilator_space(const ModuleAction& m);

/// M / S for an invariant S containing the relations.
ModuleAction quotient_module(const ModuleAction& m, const Subspace& s);
/// The invariant subspace S as a module in its own right (fields only).
ModuleAction submodule(const ModuleAction& m, const Subspace& s);

/// Sum of c_i ops_i.
Matrix combine_ops(const ModuleAction& m, std::span<const Scalar> coeffs);

/// M ≠ 0, the algebra acts nontrivially, and no proper nonzero submodule.
///
/// Over a finite ring this is decided exactly by spinning one vector from
/// each cyclic line (BoundExceeded when q^gens > bound). Over Q it is a
/// one-sided test: the module is declared simple unless a basis vector or a
/// sum of two basis vectors spins to a proper submodule, or an obvious
/// endomorphism (basis element, sum of two, or shift by a small integer) is
/// nonzero and singular.
bool is_simple(const ModuleAction& m, const Limits& limits = {});

/// Intertwiners T : M1 -> M2 as vectors of R^{gens2 * gens1} (row-major).
/// Maps into the relations of M2 are included, so this is a presentation
/// of Hom, not Hom itself, when M2 has relations.
Subspace hom_space(const ModuleAction& a, const ModuleAction& b);
Matrix unflatten(const Ring& R, std::span<const Scalar> v, std::size_t rows, std::size_t cols);

bool is_homomorphism(const ModuleAction& a, const ModuleAction& b, const Matrix& t);
bool is_isomorphism(const ModuleAction& a, const ModuleAction& b, const Matrix& t);

/// An isomorphism M1 -> M2 or nullopt. Exhaustive over Hom for finite rings
/// when |Hom| <= bound; past the bound, seeded random combinations are
/// tried and BoundExceeded is thrown if none works. Over Q: the Hom basis,
/// then 64 seeded random integer combinations.
std::optional<Matrix> find_isomorphism(const ModuleAction& a, const ModuleAction& b, const Limits& limits = {},
                                       std::uint64_t seed = 0);
bool is_isomorphic(const ModuleAction& a, const ModuleAction& b, const Limits& limits = {}, std::uint64_t seed = 0);

/// Every submodule of M (finite rings only), as invariant subspaces of
/// R^gens containing the relations, in ascending canonical order. Built as
/// the sum-closure of all cyclic submodules.
std::vector<Subspace> all_submodules(const ModuleAction& m, const Limits& limits = {});

/// A maximal proper submodule: largest proper submodule, ties broken by the
/// least canonical basis. Throws std::invalid_argument on the zero module
/// and Unsupported over Q.
Subspace maximal_submodule(const ModuleAction& m, const Limits& limits = {});

/// A simple submodule: a nonzero cyclic submodule of least size (finite
/// rings only).
Subspace minimal_submodule(const ModuleAction& m, const Limits& limits = {});

}  // namespace galg
