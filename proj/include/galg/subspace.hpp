#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "galg/limits.hpp"
#include "galg/matrix.hpp"
#include "galg/ring.hpp"

namespace galg {

/// Canonical row basis of the span of `rows` (each of length `cols`):
/// reduced row-echelon form over Q, Howell form over Z/n (which is RREF
/// when n is prime). Zero rows are dropped.
std::vector<Vec> canonical_basis(const Ring& R, std::size_t cols, std::vector<Vec> rows);

/// A submodule of R^n held in canonical form, so equality of submodules is
/// equality of bases.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of R^ambient.
  Subspace(Ring R, std::size_t ambient) : ring_(R), ambient_(ambient) {}

  static Subspace span(const Ring& R, std::size_t ambient, std::vector<Vec> gens);
  static Subspace full(const Ring& R, std::size_t ambient);

  const Ring& ring() const { return ring_; }
  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<Vec>& basis() const { return basis_; }
  /// Number of canonical basis rows (the dimension over a field).
  std::size_t rank() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const;

  /// Column index of the leading entry of each basis row.
  std::vector<std::size_t> pivots() const;

  bool contains(std::span<const Scalar> v) const;
  /// Coefficients c with v = sum c_i basis_i, or nullopt if v is outside.
  std::optional<Vec> coordinates(std::span<const Scalar> v) const;

  /// Basis rows as the columns of an ambient x rank matrix.
  Matrix basis_columns() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ring_ == b.ring_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  /// Lexicographic order on (ambient, basis); used for deterministic sorting.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  Ring ring_;
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
};

/// {x : A x = 0}.
Subspace mat_kernel(const Matrix& A, const Ring& R);
/// Rank of A over a field.
std::size_t mat_rank(const Matrix& A, const Ring& R);

Subspace subspace_intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
bool subspace_equal(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& s, std::span<const Scalar> v);
bool is_subset(const Subspace& a, const Subspace& b);

/// Rows spanning {y : y·x = 0 for all x in s}. Q, F_p and Z/n all have
/// the double-annihilator property, so the kernel of this matrix is s.
Matrix check_matrix(const Subspace& s);
/// {x in R^cols(L) : L x in target}.
Subspace preimage(const Matrix& L, const Subspace& target);
/// A(S) for a subspace S of R^cols(A).
Subspace image(const Matrix& A, const Subspace& s);
/// S ⊕ ... ⊕ S (copies times) inside R^{n·copies}.
Subspace direct_power(const Subspace& s, std::size_t copies);
/// Image of S under the projection onto its first k coordinates.
Subspace project_prefix(const Subspace& s, std::size_t k);

/// Number of elements of a submodule over a finite ring, or nullopt if it
/// exceeds `cap`.
std::optional<std::uint64_t> element_count(const Subspace& s, std::uint64_t cap);
/// log_p-style size measure: sum over basis rows of log(n / pivot). Over a
/// field this is the dimension times log q; exact comparisons use
/// element_count or rank.
double log_size(const Subspace& s);

/// Calls fn on each element of s exactly once (finite rings only).
void for_each_element(const Subspace& s, const Limits& limits, const std::function<void(const Vec&)>& fn);
/// Calls fn on every vector of R^n (finite rings only).
void for_each_vector(const Ring& R, std::size_t n, const Limits& limits, const std::function<void(const Vec&)>& fn);

/// Canonical remainder of v modulo s.
Vec reduce_mod(const Subspace& s, std::span<const Scalar> v);

/// Over a field: coordinates on the complement of s picked out by its
/// non-pivot columns. `project` is (n-r) x n, `lift` is n x (n-r) and
/// project * lift = I.
struct ComplementMaps {
  Matrix project;
  Matrix lift;
};
ComplementMaps field_complement(const Subspace& s);

}  // namespace galg
