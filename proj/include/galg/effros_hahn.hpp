#pragma once

#include <string>
#include <vector>

#include "galg/disintegration.hpp"
#include "galg/induction.hpp"
#include "galg/serialize.hpp"

namespace galg {

enum class Verdict { verified, refuted, skipped };
std::string to_string(Verdict v);

/// Outcome of one check on one instance. "refuted" always carries the two
/// sides that disagree in `witnesses`; "skipped" carries the reason.
struct VerificationReport {
  std::string theorem;
  json instance = json::object();
  Verdict verdict = Verdict::skipped;
  std::string reason;
  json witnesses = json::object();
  double wall_seconds = 0;
};

/// Everything except the wall time, so that reruns are byte-identical.
json to_json(const VerificationReport& r);

// Canonical check names.
inline constexpr const char* kInducedAnnihilator = "induced-annihilator";
inline constexpr const char* kInducedSimple = "induced-simple";
inline constexpr const char* kDisintegration = "disintegration";
inline constexpr const char* kIdealIntersection = "ideal-intersection";
inline constexpr const char* kPrimitiveInducer = "primitive-inducer";
inline constexpr const char* kPrimitiveIdeals = "primitive-ideals";
inline constexpr const char* kInducedFromSimples = "induced-from-simples";

/// induced_annihilator_direct(N) = annihilator(induce(N)).
VerificationReport verify_induced_annihilator(GroupoidPtr g, const IsotropyModule& n);
/// N simple ⇒ induce(N) simple. Skipped when N is not simple.
VerificationReport verify_induced_simple(GroupoidPtr g, const IsotropyModule& n, const Limits& limits = {});
/// Valid sheaf, equal annihilators for ρ and gamma_c(sheaf_of(ρ)), and an
/// explicit isomorphism between them.
VerificationReport verify_disintegration(const Rep& rho);

/// I = ∩ Ann(Ind_u(E_u)) over orbit representatives u, where E_u are the
/// stalks of R𝒢/I. The intersection over all objects is recorded as well.
VerificationReport verify_ideal_is_intersection(const Ideal& I, const Limits& limits = {});
/// For simple ρ and the first object u with E_u ≠ 0: Ann(ρ) = Ann(Ind_u(E_u)).
/// Whether E_u is itself simple is recorded, not asserted.
VerificationReport verify_primitive_single_inducer(const Rep& rho, const Limits& limits = {});

/// A primitive ideal with one inducing pair (object, simple isotropy module).
struct PrimitiveInducer {
  Ideal ideal;
  ObjectId object = 0;
  IsotropyModule module;
};

/// induced_annihilator_direct over orbit representatives and the simple
/// modules of their isotropy groups, deduplicated (first inducer kept) and
/// sorted by canonical basis. Throws Unsupported where simple modules are
/// not available.
std::vector<PrimitiveInducer> primitive_inducers(GroupoidPtr g, const Ring& R, const Limits& limits = {});
std::vector<Ideal> enumerate_primitive_ideals(GroupoidPtr g, const Ring& R, const Limits& limits = {});

/// R𝒢/M for every maximal submodule M of the regular representation
/// (finite rings; q^{#arrows} within the bound).
std::vector<Rep> simple_quotients_of_regular(GroupoidPtr g, const Ring& R, const Limits& limits = {});
/// Annihilators of simple_quotients_of_regular, deduplicated and sorted.
std::vector<Ideal> primitive_ideal_oracle(GroupoidPtr g, const Ring& R, const Limits& limits = {});

/// enumerate_primitive_ideals = primitive_ideal_oracle (finite rings).
VerificationReport verify_primitive_ideals(GroupoidPtr g, const Ring& R, const Limits& limits = {});
/// Every primitive inducer is simple, induces a simple module with the
/// listed annihilator and (over Z/n) is killed by the Jacobson radical;
/// over finite rings the set also matches the oracle.
VerificationReport verify_induced_from_simples(GroupoidPtr g, const Ring& R, const Limits& limits = {});

}  // namespace galg
