#include "galg/ring.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <tuple>

namespace galg {

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.is_rational() != b.is_rational())
    return a.is_rational() ? std::strong_ordering::greater : std::strong_ordering::less;
  if (!a.is_rational()) return a.residue() <=> b.residue();
  int c = cmp(a.rational(), b.rational());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod_normalize(std::int64_t v, std::int64_t n) {
  v %= n;
  return v < 0 ? v + n : v;
}

namespace {

// Keeps products of two residues inside __int128 without trouble and leaves
// headroom for the Howell-form arithmetic.
constexpr std::int64_t kMaxModulus = std::int64_t{1} << 40;

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

Ring Ring::rationals() { return Ring(RingKind::rationals, 0); }

Ring Ring::prime_field(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("fp modulus must be prime, got " + std::to_string(p));
  if (p > kMaxModulus) throw std::invalid_argument("modulus too large");
  return Ring(RingKind::prime_field, p);
}

Ring Ring::modular(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("zn modulus must be >= 2 (the zero ring is rejected)");
  if (n > kMaxModulus) throw std::invalid_argument("modulus too large");
  return Ring(RingKind::modular, n);
}

Ring Ring::parse(std::string_view spec) {
  if (spec == "q") return rationals();
  if (spec.starts_with("fp:")) return prime_field(parse_int(spec.substr(3)));
  if (spec.starts_with("zn:")) return modular(parse_int(spec.substr(3)));
  throw std::invalid_argument("bad ring spec '" + std::string(spec) + "' (expected q, fp:<p>, zn:<n>)");
}

bool Ring::is_field() const {
  switch (kind_) {
    case RingKind::rationals:
    case RingKind::prime_field:
      return true;
    case RingKind::modular:
      return is_prime(modulus_);
  }
  return false;
}

std::string Ring::spec() const {
  switch (kind_) {
    case RingKind::rationals:
      return "q";
    case RingKind::prime_field:
      return "fp:" + std::to_string(modulus_);
    case RingKind::modular:
      return "zn:" + std::to_string(modulus_);
  }
  return {};
}

std::vector<std::int64_t> Ring::prime_factors() const {
  std::vector<std::int64_t> out;
  std::int64_t n = modulus_;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<Scalar> Ring::jacobson_radical_gens() const {
  if (kind_ == RingKind::rationals) return {};
  std::int64_t rad = 1;
  for (auto p : prime_factors()) rad *= p;
  if (rad == modulus_) return {};
  return {from_int(rad)};
}

Scalar Ring::zero() const { return from_int(0); }
Scalar Ring::one() const { return from_int(1); }

Scalar Ring::from_int(std::int64_t v) const {
  if (kind_ == RingKind::rationals) return Scalar(mpq_class(v));
  return Scalar(mod_normalize(v, modulus_));
}

Scalar Ring::from_rational(const mpq_class& q) const {
  if (kind_ == RingKind::rationals) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(std::move(c));
  }
  mpz_class num = q.get_num() % modulus_;
  mpz_class den = q.get_den() % modulus_;
  Scalar d(mod_normalize(den.get_si(), modulus_));
  return mul(Scalar(mod_normalize(num.get_si(), modulus_)), inv(d));
}

Scalar Ring::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == RingKind::rationals) return Scalar(mpq_class(a.rational() + b.rational()));
  std::int64_t s = a.residue() + b.residue();
  return Scalar(s >= modulus_ ? s - modulus_ : s);
}

Scalar Ring::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == RingKind::rationals) return Scalar(mpq_class(a.rational() - b.rational()));
  std::int64_t s = a.residue() - b.residue();
  return Scalar(s < 0 ? s + modulus_ : s);
}

Scalar Ring::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == RingKind::rationals) return Scalar(mpq_class(a.rational() * b.rational()));
  auto p = static_cast<__int128>(a.residue()) * b.residue();
  return Scalar(static_cast<std::int64_t>(p % modulus_));
}

Scalar Ring::neg(const Scalar& a) const {
  if (kind_ == RingKind::rationals) return Scalar(mpq_class(-a.rational()));
  return Scalar(a.residue() == 0 ? 0 : modulus_ - a.residue());
}

bool Ring::is_zero(const Scalar& a) const {
  if (kind_ == RingKind::rationals) return sgn(a.rational()) == 0;
  return a.residue() == 0;
}

bool Ring::is_unit(const Scalar& a) const {
  if (kind_ == RingKind::rationals) return sgn(a.rational()) != 0;
  return std::gcd(a.residue(), modulus_) == 1;
}

Scalar Ring::inv(const Scalar& a) const {
  if (!is_unit(a)) throw std::domain_error("inverse of a non-unit " + format(a) + " in " + spec());
  if (kind_ == RingKind::rationals) return Scalar(mpq_class(1 / a.rational()));
  // extended Euclid
  std::int64_t r0 = modulus_, r1 = a.residue(), t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  return Scalar(mod_normalize(t0, modulus_));
}

std::string Ring::format(const Scalar& a) const {
  if (kind_ == RingKind::rationals) return a.rational().get_str();
  return std::to_string(a.residue());
}

Scalar Ring::parse_scalar(std::string_view text) const {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0 || sgn(q.get_den()) == 0)
    throw std::invalid_argument("bad scalar '" + std::string(text) + "'");
  q.canonicalize();
  return from_rational(q);
}

}  // namespace galg
