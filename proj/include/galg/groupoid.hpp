#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galg/group.hpp"

namespace galg {

using ArrowId = int;
using ObjectId = int;

struct Arrow {
  ObjectId d = 0;  // source
  ObjectId r = 0;  // range
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// (alpha, beta, alpha*beta); alpha*beta is defined when d(alpha) = r(beta).
using CompEntry = std::array<ArrowId, 3>;

/// A named failed axiom together with the offending indices.
struct Violation {
  std::string axiom;
  std::string detail;
};

/// A finite groupoid given by explicit tables. Objects are 0..n_objects-1.
///
/// The constructor stores its input verbatim so that `validate` can report
/// broken axioms or out-of-range indices; every other query assumes a
/// validated groupoid.
class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;
  FiniteGroupoid(std::size_t n_objects, std::vector<Arrow> arrows, std::vector<ArrowId> units,
                 std::vector<CompEntry> comp, std::vector<ArrowId> inv);

  std::size_t n_objects() const { return n_objects_; }
  std::size_t n_arrows() const { return arrows_.size(); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  ObjectId d(ArrowId a) const { return arrows_[a].d; }
  ObjectId r(ArrowId a) const { return arrows_[a].r; }
  ArrowId unit_of(ObjectId u) const { return units_[u]; }
  const std::vector<ArrowId>& units() const { return units_; }
  ArrowId inv(ArrowId a) const { return inv_[a]; }
  const std::vector<ArrowId>& inverses() const { return inv_; }
  /// Composition entries in ascending (alpha, beta) order.
  const std::vector<CompEntry>& comp() const { return comp_; }

  /// alpha*beta (alpha after beta) when the table defines it.
  std::optional<ArrowId> compose(ArrowId alpha, ArrowId beta) const;

  friend bool operator==(const FiniteGroupoid& a, const FiniteGroupoid& b) {
    return a.n_objects_ == b.n_objects_ && a.arrows_ == b.arrows_ && a.units_ == b.units_ && a.comp_ == b.comp_ &&
           a.inv_ == b.inv_;
  }

 private:
  std::size_t n_objects_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<ArrowId> units_;
  std::vector<CompEntry> comp_;
  std::vector<ArrowId> inv_;
  std::vector<ArrowId> lookup_;  // n_arrows^2, -1 where undefined
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

/// Empty iff all groupoid axioms hold.
std::vector<Violation> validate(const FiniteGroupoid& g);

FiniteGroupoid pair_groupoid(std::size_t n);
FiniteGroupoid group_groupoid(const GroupTable& group);
/// Throws std::invalid_argument if `act` is not a left action.
FiniteGroupoid action_groupoid(const GroupTable& group, std::size_t points,
                               const std::function<std::size_t(std::size_t, std::size_t)>& act);
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);
/// Arrow (i, j) : j -> i of the pair groupoid on n objects.
inline ArrowId pair_arrow(std::size_t n, std::size_t i, std::size_t j) { return static_cast<ArrowId>(i * n + j); }

struct OrbitPartition {
  /// orbit id of each object; orbit ids number classes by smallest member.
  std::vector<std::size_t> orbit_of;
  /// classes in ascending order of representative, members ascending.
  std::vector<std::vector<ObjectId>> classes;

  ObjectId representative(ObjectId u) const { return classes[orbit_of[u]].front(); }
  const std::vector<ObjectId>& orbit(ObjectId u) const { return classes[orbit_of[u]]; }
};

OrbitPartition orbits(const FiniteGroupoid& g);

/// The loops at an object, with their group structure.
struct IsotropyGroup {
  ObjectId base = 0;
  std::vector<ArrowId> elements;  // ascending arrow ids
  GroupTable table;               // over indices into `elements`

  std::size_t identity() const { return table.identity(); }
  std::size_t order() const { return elements.size(); }
  /// Index of a loop at `base` inside `elements`; throws if absent.
  std::size_t index_of(ArrowId a) const;
};

IsotropyGroup isotropy(const FiniteGroupoid& g, ObjectId u);

/// Sorted arrow-id set on which d and r are injective.
struct LocalBisection {
  std::vector<ArrowId> arrows;
  friend bool operator==(const LocalBisection&, const LocalBisection&) = default;
};

bool is_bisection(const FiniteGroupoid& g, const std::vector<ArrowId>& arrows);
LocalBisection bisection_mul(const FiniteGroupoid& g, const LocalBisection& u, const LocalBisection& v);
LocalBisection bisection_inv(const FiniteGroupoid& g, const LocalBisection& u);
/// All local bisections (subsets with injective d and r), in ascending bitmask
/// order. Throws BoundExceeded for more than 20 arrows.
std::vector<LocalBisection> all_bisections(const FiniteGroupoid& g);

}  // namespace galg
