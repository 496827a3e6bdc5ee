#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "galg/algebra.hpp"
#include "galg/disintegration.hpp"
#include "galg/groupoid.hpp"
#include "galg/rep.hpp"

namespace galg {

using json = nlohmann::json;

/// Malformed interchange input.
class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// {"objects": k, "arrows": [{"d", "r"}], "units": [...], "comp": [[a, b, ab]], "inv": [...]}
json to_json(const FiniteGroupoid& g);
/// Structural parse only (types and shapes); axioms are left to `validate`.
/// Throws ParseError.
FiniteGroupoid groupoid_from_json(const json& j);
FiniteGroupoid groupoid_from_text(const std::string& text);

/// Scalars are written as strings ("3", "-1/2") so rationals survive.
json to_json(const Ring& R, const Scalar& x);
json to_json(const Ring& R, std::span<const Scalar> v);
json to_json(const Ring& R, const Matrix& m);
/// Accepts integers or strings. Throws ParseError.
Vec vec_from_json(const Ring& R, const json& j);

json to_json(const Subspace& s);
json to_json(const AlgebraElement& f);
json to_json(const Ideal& I);
json to_json(const Rep& rho);
json to_json(const IsotropyModule& n);
json to_json(const SheafData& s);
json to_json(const std::vector<Violation>& v);

}  // namespace galg
