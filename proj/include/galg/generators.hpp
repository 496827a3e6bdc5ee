#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "galg/rep.hpp"

namespace galg {

/// Builds a groupoid from a kind and its parameters:
///   pair N
///   group NAME                 (z<n>, d<n>, v4, s3, AxB)
///   action GROUP ACTION        (ACTION: swap01fix2, s3-triangle, z4-on-two,
///                               regular, or one permutation per group
///                               element, "0 1 2;1 0 2")
///   union SPEC SPEC...         (each SPEC as accepted by parse_generator)
/// Throws std::invalid_argument on malformed parameters.
FiniteGroupoid generate(std::string_view kind, const std::vector<std::string>& params);

/// The colon form of the above: "pair:3", "group:z4",
/// "action:z2:swap01fix2", "union:pair:2+group:z2".
FiniteGroupoid parse_generator(std::string_view spec);

/// An isotropy module at u by name: "trivial", "sign", "regular" or
/// "simple:<i>" (the i-th entry of simple_modules_group). Throws
/// std::invalid_argument for unknown names or indices.
IsotropyModule isotropy_module_named(const FiniteGroupoid& g, ObjectId u, std::string_view name, const Ring& R,
                                     const Limits& limits = {});

}  // namespace galg
