#pragma once

#include <cstdint>
#include <vector>

#include "galg/groupoid.hpp"
#include "galg/module.hpp"

namespace galg {

/// A unitary R𝒢-module: module.ops[γ] is the action of e_γ.
struct Rep {
  GroupoidPtr groupoid;
  ModuleAction module;

  const Ring& ring() const { return module.ring; }
  /// Number of generators; the dimension over a field.
  std::size_t dim() const { return module.gens; }
  const Matrix& op(ArrowId a) const { return module.ops[a]; }
};

/// Checks shapes and normalises over fields. Does not validate the axioms.
Rep make_rep(GroupoidPtr g, ModuleAction m);
Rep make_rep(GroupoidPtr g, const Ring& R, std::size_t dim, std::vector<Matrix> ops);

/// Empty iff ρ(e_γ)ρ(e_η) = ρ(e_{γη}) (or 0), Σ_u ρ(1_u) = 1, each ρ(1_u)
/// idempotent, and the relations are invariant; all modulo the relations.
std::vector<Violation> rep_validate(const Rep& rho);

Rep regular_rep(GroupoidPtr g, const Ring& R);
Rep zero_rep(GroupoidPtr g, const Ring& R);
/// ρ(f) = Σ f(γ) ρ(e_γ).
Matrix rep_action(const Rep& rho, std::span<const Scalar> f);

/// A two-sided ideal of R𝒢 as a submodule of R^{arrows}.
struct Ideal {
  GroupoidPtr groupoid;
  Subspace space;

  const Ring& ring() const { return space.ring(); }
  friend bool operator==(const Ideal& a, const Ideal& b) { return a.space == b.space; }
};

bool is_two_sided(const FiniteGroupoid& g, const Subspace& s);
/// Throws std::invalid_argument unless s is a two-sided ideal.
Ideal make_ideal(GroupoidPtr g, Subspace s);
Ideal zero_ideal(GroupoidPtr g, const Ring& R);
Ideal whole_ideal(GroupoidPtr g, const Ring& R);
/// Smallest two-sided ideal containing the generators.
Ideal ideal_from_generators(GroupoidPtr g, const Ring& R, const std::vector<Vec>& gens);
bool ideal_equal(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
/// Every two-sided ideal, in ascending canonical order (finite rings,
/// q^{#arrows} within the bound).
std::vector<Ideal> enumerate_all_ideals(GroupoidPtr g, const Ring& R, const Limits& limits = {});

/// Left action of R𝒢 on R𝒢/I.
Rep quotient_algebra_rep(const Ideal& I);
Ideal annihilator(const Rep& rho);

Subspace spin(const Rep& rho, const std::vector<Vec>& seeds);
bool is_simple(const Rep& rho, const Limits& limits = {});
Subspace hom_space(const Rep& a, const Rep& b);
bool is_isomorphic(const Rep& a, const Rep& b, const Limits& limits = {}, std::uint64_t seed = 0);
Subspace maximal_submodule(const Rep& rho, const Limits& limits = {});

/// A module over the isotropy group algebra R G_u: module.ops[i] is the
/// action of group.elements[i].
struct IsotropyModule {
  IsotropyGroup group;
  ModuleAction module;

  const Ring& ring() const { return module.ring; }
  std::size_t dim() const { return module.gens; }
  /// The same module over the one-object groupoid of the group table.
  Rep as_rep() const;
};

/// Empty iff identity ↦ 1 and the action is multiplicative (mod relations).
std::vector<Violation> module_validate(const IsotropyModule& n);

IsotropyModule trivial_module(const IsotropyGroup& G, const Ring& R);
/// x ↦ -1 off the subgroup of squares; requires that subgroup to have
/// index 2 (true for cyclic groups of even order and for S3).
IsotropyModule sign_module(const IsotropyGroup& G, const Ring& R);
IsotropyModule regular_module(const IsotropyGroup& G, const Ring& R);

/// Annihilator inside R G_u (coefficients indexed like group.elements).
Subspace group_annihilator(const IsotropyModule& n);
bool is_simple(const IsotropyModule& n, const Limits& limits = {});
bool is_isomorphic(const IsotropyModule& a, const IsotropyModule& b, const Limits& limits = {},
                   std::uint64_t seed = 0);
Subspace maximal_submodule(const IsotropyModule& n, const Limits& limits = {});

/// Pairwise non-isomorphic simple R G-modules covering every isomorphism
/// class, sorted by (dimension, matrices).
///
/// F_p: composition factors of the regular module (|G| <= 12 and
/// p^|G| within the bound). Q: abelian G only, one module per subgroup H
/// with G/H cyclic of order d, realised by the companion matrix of the d-th
/// cyclotomic polynomial. Z/n: the F_p simples for each prime p | n, lifted
/// as (Z/n)^d / p(Z/n)^d. Throws Unsupported otherwise.
std::vector<IsotropyModule> simple_modules_group(const IsotropyGroup& G, const Ring& R, const Limits& limits = {});

/// Integer coefficients of the d-th cyclotomic polynomial, constant term
/// first.
std::vector<std::int64_t> cyclotomic_polynomial(std::size_t d);

}  // namespace galg
