#pragma once

#include <span>
#include <vector>

#include "galg/groupoid.hpp"
#include "galg/matrix.hpp"
#include "galg/ring.hpp"

namespace galg {

/// A function on the arrows of g with coefficients in R, i.e. an element of
/// the convolution algebra R𝒢. coeffs[γ] is the value at arrow γ.
struct AlgebraElement {
  GroupoidPtr groupoid;
  Ring ring;
  Vec coeffs;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.ring == b.ring && a.coeffs == b.coeffs;
  }
};

AlgebraElement algebra_zero(GroupoidPtr g, const Ring& R);
/// 1_U. Throws std::out_of_range on a bad arrow id.
AlgebraElement indicator(GroupoidPtr g, std::span<const ArrowId> arrows, const Ring& R);
AlgebraElement basis_element(GroupoidPtr g, ArrowId a, const Ring& R);
/// 1 = indicator of the unit space.
AlgebraElement algebra_one(GroupoidPtr g, const Ring& R);

/// (f*h)(γ) = Σ_{αβ=γ} f(α)h(β). Throws std::invalid_argument when the
/// operands live over different groupoids or rings.
AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& h);
/// f*(γ) = f(γ⁻¹).
AlgebraElement involution(const AlgebraElement& f);
AlgebraElement algebra_add(const AlgebraElement& f, const AlgebraElement& h);
AlgebraElement algebra_scale(const Scalar& c, const AlgebraElement& f);

// Coefficient-vector versions; the Rep and Ideal code works on these.
Vec convolve(const FiniteGroupoid& g, const Ring& R, std::span<const Scalar> f, std::span<const Scalar> h);
Vec involution(const FiniteGroupoid& g, std::span<const Scalar> f);

/// table[α * n + β] = αβ, or -1 when the product e_α e_β is zero.
std::vector<ArrowId> algebra_structure_constants(const FiniteGroupoid& g);
/// Matrix of f ↦ e_γ * f on the arrow basis.
Matrix left_mult_matrix(const FiniteGroupoid& g, const Ring& R, ArrowId gamma);
/// Matrix of f ↦ f * e_γ.
Matrix right_mult_matrix(const FiniteGroupoid& g, const Ring& R, ArrowId gamma);

}  // namespace galg
