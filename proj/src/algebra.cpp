#include "galg/algebra.hpp"

#include <stdexcept>
#include <string>

namespace galg {

namespace {

void require_compatible(const AlgebraElement& f, const AlgebraElement& h) {
  if (!f.groupoid || !h.groupoid) throw std::invalid_argument("algebra element without a groupoid");
  if (f.ring != h.ring) throw std::invalid_argument("algebra elements over different rings");
  if (f.groupoid != h.groupoid && !(*f.groupoid == *h.groupoid))
    throw std::invalid_argument("algebra elements over different groupoids");
}

}  // namespace

AlgebraElement algebra_zero(GroupoidPtr g, const Ring& R) {
  Vec c = zero_vec(R, g->n_arrows());
  return {std::move(g), R, std::move(c)};
}

AlgebraElement indicator(GroupoidPtr g, std::span<const ArrowId> arrows, const Ring& R) {
  auto f = algebra_zero(std::move(g), R);
  for (auto a : arrows) {
    if (a < 0 || static_cast<std::size_t>(a) >= f.coeffs.size())
      throw std::out_of_range("indicator: arrow " + std::to_string(a) + " out of range");
    f.coeffs[a] = R.one();
  }
  return f;
}

AlgebraElement basis_element(GroupoidPtr g, ArrowId a, const Ring& R) {
  ArrowId one[] = {a};
  return indicator(std::move(g), one, R);
}

AlgebraElement algebra_one(GroupoidPtr g, const Ring& R) {
  auto units = g->units();
  return indicator(std::move(g), units, R);
}

Vec convolve(const FiniteGroupoid& g, const Ring& R, std::span<const Scalar> f, std::span<const Scalar> h) {
  if (f.size() != g.n_arrows() || h.size() != g.n_arrows()) throw DimensionMismatch("convolve: coefficient length");
  Vec out = zero_vec(R, g.n_arrows());
  for (const auto& [a, b, c] : g.comp()) {
    if (R.is_zero(f[a]) || R.is_zero(h[b])) continue;
    out[c] = R.add(out[c], R.mul(f[a], h[b]));
  }
  return out;
}

Vec involution(const FiniteGroupoid& g, std::span<const Scalar> f) {
  if (f.size() != g.n_arrows()) throw DimensionMismatch("involution: coefficient length");
  Vec out(f.size());
  for (std::size_t a = 0; a < f.size(); ++a) out[a] = f[g.inv(static_cast<ArrowId>(a))];
  return out;
}

AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& h) {
  require_compatible(f, h);
  return {f.groupoid, f.ring, convolve(*f.groupoid, f.ring, f.coeffs, h.coeffs)};
}

AlgebraElement involution(const AlgebraElement& f) { return {f.groupoid, f.ring, involution(*f.groupoid, f.coeffs)}; }

AlgebraElement algebra_add(const AlgebraElement& f, const AlgebraElement& h) {
  require_compatible(f, h);
  return {f.groupoid, f.ring, add(f.ring, f.coeffs, h.coeffs)};
}

AlgebraElement algebra_scale(const Scalar& c, const AlgebraElement& f) {
  return {f.groupoid, f.ring, scale(f.ring, c, f.coeffs)};
}

std::vector<ArrowId> algebra_structure_constants(const FiniteGroupoid& g) {
  const std::size_t n = g.n_arrows();
  std::vector<ArrowId> t(n * n, -1);
  for (const auto& [a, b, c] : g.comp()) t[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = c;
  return t;
}

Matrix left_mult_matrix(const FiniteGroupoid& g, const Ring& R, ArrowId gamma) {
  const std::size_t n = g.n_arrows();
  Matrix m = Matrix::zero(R, n, n);
  for (std::size_t b = 0; b < n; ++b)
    if (auto c = g.compose(gamma, static_cast<ArrowId>(b))) m(*c, b) = R.one();
  return m;
}

Matrix right_mult_matrix(const FiniteGroupoid& g, const Ring& R, ArrowId gamma) {
  const std::size_t n = g.n_arrows();
  Matrix m = Matrix::zero(R, n, n);
  for (std::size_t a = 0; a < n; ++a)
    if (auto c = g.compose(static_cast<ArrowId>(a), gamma)) m(*c, a) = R.one();
  return m;
}

}  // namespace galg
