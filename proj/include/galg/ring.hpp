#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace galg {

/// Thrown when an operation is asked for an unsupported (ring, input) combination.
class Unsupported : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when an exhaustive enumeration would exceed the configured bound.
class BoundExceeded : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a cooperative cancellation flag is observed.
class Cancelled : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown on mismatched ambient dimensions, groupoids or rings.
class DimensionMismatch : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A ring element. Residues of finite rings are stored as int64 in [0, n);
/// rationals as GMP fractions. Which alternative is live is decided by the
/// owning Ring, never mixed inside one matrix.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(std::int64_t residue) : v_(residue) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}

  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  std::int64_t residue() const { return std::get<std::int64_t>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  std::variant<std::int64_t, mpq_class> v_{std::int64_t{0}};
};

enum class RingKind { rationals, prime_field, modular };

/// One of the admissible coefficient rings: Q, F_p, or Z/n.
class Ring {
 public:
  Ring() = default;  // Q
  static Ring rationals();
  static Ring prime_field(std::int64_t p);
  static Ring modular(std::int64_t n);

  /// Parses "q", "fp:<p>" or "zn:<n>".
  static Ring parse(std::string_view spec);

  RingKind kind() const { return kind_; }
  /// 0 for Q.
  std::int64_t modulus() const { return modulus_; }
  bool is_field() const;
  bool is_finite() const { return kind_ != RingKind::rationals; }
  std::string spec() const;

  /// Distinct primes dividing the modulus (empty for Q).
  std::vector<std::int64_t> prime_factors() const;
  /// Generators of the Jacobson radical: empty for Q, F_p and squarefree n;
  /// {rad(n)} otherwise.
  std::vector<Scalar> jacobson_radical_gens() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_rational(const mpq_class& q) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  bool is_zero(const Scalar& a) const;
  bool is_unit(const Scalar& a) const;
  /// Multiplicative inverse; throws std::domain_error on non-units.
  Scalar inv(const Scalar& a) const;

  std::string format(const Scalar& a) const;
  Scalar parse_scalar(std::string_view text) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(RingKind k, std::int64_t m) : kind_(k), modulus_(m) {}
  RingKind kind_ = RingKind::rationals;
  std::int64_t modulus_ = 0;
};

bool is_prime(std::int64_t n);
std::int64_t mod_normalize(std::int64_t v, std::int64_t n);

}  // namespace galg
