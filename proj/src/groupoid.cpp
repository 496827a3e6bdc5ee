#include "galg/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "galg/ring.hpp"

namespace galg {

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

std::string arrow_str(ArrowId a) { return "#" + std::to_string(a); }

}  // namespace

FiniteGroupoid::FiniteGroupoid(std::size_t n_objects, std::vector<Arrow> arrows, std::vector<ArrowId> units,
                               std::vector<CompEntry> comp, std::vector<ArrowId> inv)
    : n_objects_(n_objects),
      arrows_(std::move(arrows)),
      units_(std::move(units)),
      comp_(std::move(comp)),
      inv_(std::move(inv)) {
  std::sort(comp_.begin(), comp_.end());
  const auto n = static_cast<ArrowId>(arrows_.size());
  lookup_.assign(arrows_.size() * arrows_.size(), -1);
  for (const auto& [a, b, c] : comp_) {
    if (a < 0 || b < 0 || a >= n || b >= n) continue;
    auto& slot = lookup_[static_cast<std::size_t>(a) * arrows_.size() + static_cast<std::size_t>(b)];
    if (slot == -1) slot = c;
  }
}

std::optional<ArrowId> FiniteGroupoid::compose(ArrowId alpha, ArrowId beta) const {
  const auto n = arrows_.size();
  if (alpha < 0 || beta < 0 || static_cast<std::size_t>(alpha) >= n || static_cast<std::size_t>(beta) >= n)
    return std::nullopt;
  ArrowId c = lookup_[static_cast<std::size_t>(alpha) * n + static_cast<std::size_t>(beta)];
  if (c < 0) return std::nullopt;
  return c;
}

std::vector<Violation> validate(const FiniteGroupoid& g) {
  std::vector<Violation> out;
  const auto A = static_cast<ArrowId>(g.n_arrows());
  const auto O = static_cast<ObjectId>(g.n_objects());
  auto arrow_ok = [A](ArrowId a) { return a >= 0 && a < A; };
  auto object_ok = [O](ObjectId u) { return u >= 0 && u < O; };

  // index ranges first; the structural checks below index freely
  for (ArrowId a = 0; a < A; ++a)
    if (!object_ok(g.d(a)) || !object_ok(g.r(a)))
      out.push_back({"range", "arrow " + arrow_str(a) + " has an endpoint outside 0.." + std::to_string(O - 1)});
  if (g.units().size() != g.n_objects())
    out.push_back({"range", "units table has " + std::to_string(g.units().size()) + " entries for " +
                                std::to_string(O) + " objects"});
  for (auto u : g.units())
    if (!arrow_ok(u)) out.push_back({"range", "unit arrow " + arrow_str(u) + " out of range"});
  if (g.inverses().size() != g.n_arrows())
    out.push_back({"range", "inverse table has " + std::to_string(g.inverses().size()) + " entries for " +
                                std::to_string(A) + " arrows"});
  for (auto i : g.inverses())
    if (!arrow_ok(i)) out.push_back({"range", "inverse " + arrow_str(i) + " out of range"});
  for (const auto& [a, b, c] : g.comp())
    if (!arrow_ok(a) || !arrow_ok(b) || !arrow_ok(c))
      out.push_back({"range", "composition entry (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                                  std::to_string(c) + ") out of range"});
  if (!out.empty()) return out;

  for (std::size_t k = 1; k < g.comp().size(); ++k) {
    const auto& p = g.comp()[k - 1];
    const auto& q = g.comp()[k];
    if (p[0] == q[0] && p[1] == q[1])
      out.push_back({"composition", "pair (" + arrow_str(p[0]) + ", " + arrow_str(p[1]) + ") has two products"});
  }

  for (const auto& [a, b, c] : g.comp()) {
    if (g.d(a) != g.r(b)) {
      out.push_back({"composability", "product " + arrow_str(a) + "*" + arrow_str(b) + " defined but d(" +
                                          arrow_str(a) + ") != r(" + arrow_str(b) + ")"});
      continue;
    }
    if (g.d(c) != g.d(b) || g.r(c) != g.r(a))
      out.push_back({"endpoints", "product " + arrow_str(a) + "*" + arrow_str(b) + " = " + arrow_str(c) +
                                      " has the wrong source or range"});
  }
  for (ArrowId a = 0; a < A; ++a)
    for (ArrowId b = 0; b < A; ++b)
      if (g.d(a) == g.r(b) && !g.compose(a, b))
        out.push_back({"composability", "composable pair " + arrow_str(a) + "*" + arrow_str(b) + " has no product"});

  for (ArrowId a = 0; a < A; ++a)
    for (ArrowId b = 0; b < A; ++b) {
      if (g.d(a) != g.r(b)) continue;
      auto ab = g.compose(a, b);
      if (!ab) continue;
      for (ArrowId c = 0; c < A; ++c) {
        if (g.d(b) != g.r(c)) continue;
        auto bc = g.compose(b, c);
        if (!bc) continue;
        auto l = g.compose(*ab, c), r = g.compose(a, *bc);
        if (l && r && *l != *r)
          out.push_back({"associativity", "(" + arrow_str(a) + arrow_str(b) + ")" + arrow_str(c) + " != " +
                                              arrow_str(a) + "(" + arrow_str(b) + arrow_str(c) + ")"});
      }
    }

  for (ObjectId u = 0; u < O; ++u) {
    ArrowId e = g.unit_of(u);
    if (g.d(e) != u || g.r(e) != u) out.push_back({"unit", "unit of object " + std::to_string(u) + " is not a loop"});
  }
  for (ArrowId a = 0; a < A; ++a) {
    auto left = g.compose(g.unit_of(g.r(a)), a);
    auto right = g.compose(a, g.unit_of(g.d(a)));
    if (!left || *left != a || !right || *right != a)
      out.push_back({"unit", "unit laws fail at arrow " + arrow_str(a)});
  }

  for (ArrowId a = 0; a < A; ++a) {
    ArrowId i = g.inv(a);
    auto ai = g.compose(a, i);
    auto ia = g.compose(i, a);
    bool ok = g.d(i) == g.r(a) && g.r(i) == g.d(a) && ai && *ai == g.unit_of(g.r(a)) && ia &&
              *ia == g.unit_of(g.d(a));
    if (!ok) out.push_back({"inverse", "inverse laws fail at arrow " + arrow_str(a) + " (inv = " + arrow_str(i) + ")"});
  }
  return out;
}

FiniteGroupoid pair_groupoid(std::size_t n) {
  if (n == 0) throw std::invalid_argument("pair_groupoid needs n >= 1");
  std::vector<Arrow> arrows;
  std::vector<ArrowId> units, inv;
  std::vector<CompEntry> comp;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      arrows.push_back({static_cast<ObjectId>(j), static_cast<ObjectId>(i)});
      inv.push_back(pair_arrow(n, j, i));
      for (std::size_t k = 0; k < n; ++k) comp.push_back({pair_arrow(n, i, j), pair_arrow(n, j, k), pair_arrow(n, i, k)});
    }
  for (std::size_t i = 0; i < n; ++i) units.push_back(pair_arrow(n, i, i));
  return {n, std::move(arrows), std::move(units), std::move(comp), std::move(inv)};
}

FiniteGroupoid group_groupoid(const GroupTable& G) {
  const std::size_t n = G.order();
  std::vector<Arrow> arrows(n, Arrow{0, 0});
  std::vector<ArrowId> inv;
  std::vector<CompEntry> comp;
  for (std::size_t a = 0; a < n; ++a) {
    inv.push_back(static_cast<ArrowId>(G.inverse(a)));
    for (std::size_t b = 0; b < n; ++b)
      comp.push_back({static_cast<ArrowId>(a), static_cast<ArrowId>(b), static_cast<ArrowId>(G.mul(a, b))});
  }
  return {1, std::move(arrows), {static_cast<ArrowId>(G.identity())}, std::move(comp), std::move(inv)};
}

FiniteGroupoid action_groupoid(const GroupTable& G, std::size_t X,
                               const std::function<std::size_t(std::size_t, std::size_t)>& act) {
  if (X == 0) throw std::invalid_argument("action_groupoid needs a nonempty set");
  const std::size_t n = G.order();
  std::vector<std::size_t> t(n * X);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t x = 0; x < X; ++x) {
      t[g * X + x] = act(g, x);
      if (t[g * X + x] >= X) throw std::invalid_argument("action maps outside the set");
    }
  for (std::size_t x = 0; x < X; ++x)
    if (t[G.identity() * X + x] != x) throw std::invalid_argument("identity does not act trivially");
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t x = 0; x < X; ++x)
        if (t[G.mul(g, h) * X + x] != t[g * X + t[h * X + x]])
          throw std::invalid_argument("act(gh, x) != act(g, act(h, x))");

  auto id = [X](std::size_t g, std::size_t x) { return static_cast<ArrowId>(g * X + x); };
  std::vector<Arrow> arrows;
  std::vector<ArrowId> units, inv;
  std::vector<CompEntry> comp;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t x = 0; x < X; ++x) {
      arrows.push_back({static_cast<ObjectId>(x), static_cast<ObjectId>(t[g * X + x])});
      inv.push_back(id(G.inverse(g), t[g * X + x]));
      // (g, act(h,x)) * (h, x) = (gh, x)
      for (std::size_t h = 0; h < n; ++h) comp.push_back({id(g, t[h * X + x]), id(h, x), id(G.mul(g, h), x)});
    }
  for (std::size_t x = 0; x < X; ++x) units.push_back(id(G.identity(), x));
  return {X, std::move(arrows), std::move(units), std::move(comp), std::move(inv)};
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const auto oa = static_cast<ObjectId>(a.n_objects());
  const auto na = static_cast<ArrowId>(a.n_arrows());
  std::vector<Arrow> arrows = a.arrows();
  for (const auto& x : b.arrows()) arrows.push_back({x.d + oa, x.r + oa});
  std::vector<ArrowId> units = a.units();
  for (auto u : b.units()) units.push_back(u + na);
  std::vector<CompEntry> comp = a.comp();
  for (const auto& [x, y, z] : b.comp()) comp.push_back({x + na, y + na, z + na});
  std::vector<ArrowId> inv = a.inverses();
  for (auto i : b.inverses()) inv.push_back(i + na);
  return {a.n_objects() + b.n_objects(), std::move(arrows), std::move(units), std::move(comp), std::move(inv)};
}

OrbitPartition orbits(const FiniteGroupoid& g) {
  DisjointSet ds(g.n_objects());
  for (const auto& a : g.arrows()) ds.unite(static_cast<std::size_t>(a.d), static_cast<std::size_t>(a.r));
  OrbitPartition p;
  p.orbit_of.assign(g.n_objects(), 0);
  std::vector<std::ptrdiff_t> class_of_root(g.n_objects(), -1);
  for (std::size_t u = 0; u < g.n_objects(); ++u) {
    auto root = ds.find(u);
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<std::ptrdiff_t>(p.classes.size());
      p.classes.emplace_back();
    }
    p.orbit_of[u] = static_cast<std::size_t>(class_of_root[root]);
    p.classes[p.orbit_of[u]].push_back(static_cast<ObjectId>(u));
  }
  return p;
}

std::size_t IsotropyGroup::index_of(ArrowId a) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), a);
  if (it == elements.end() || *it != a)
    throw std::invalid_argument("arrow " + arrow_str(a) + " is not in the isotropy group at " + std::to_string(base));
  return static_cast<std::size_t>(it - elements.begin());
}

IsotropyGroup isotropy(const FiniteGroupoid& g, ObjectId u) {
  if (u < 0 || static_cast<std::size_t>(u) >= g.n_objects())
    throw std::out_of_range("object " + std::to_string(u) + " out of range");
  IsotropyGroup G;
  G.base = u;
  for (ArrowId a = 0; a < static_cast<ArrowId>(g.n_arrows()); ++a)
    if (g.d(a) == u && g.r(a) == u) G.elements.push_back(a);
  const std::size_t n = G.elements.size();
  std::vector<std::size_t> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = G.index_of(*g.compose(G.elements[i], G.elements[j]));
  G.table = GroupTable(n, std::move(t));
  return G;
}

bool is_bisection(const FiniteGroupoid& g, const std::vector<ArrowId>& arrows) {
  std::vector<bool> seen_d(g.n_objects(), false), seen_r(g.n_objects(), false);
  std::vector<bool> seen(g.n_arrows(), false);
  for (auto a : arrows) {
    if (a < 0 || static_cast<std::size_t>(a) >= g.n_arrows())
      throw std::out_of_range("arrow " + arrow_str(a) + " out of range");
    if (seen[a]) continue;
    seen[a] = true;
    if (seen_d[g.d(a)] || seen_r[g.r(a)]) return false;
    seen_d[g.d(a)] = seen_r[g.r(a)] = true;
  }
  return true;
}

LocalBisection bisection_mul(const FiniteGroupoid& g, const LocalBisection& u, const LocalBisection& v) {
  if (!is_bisection(g, u.arrows) || !is_bisection(g, v.arrows))
    throw std::invalid_argument("bisection_mul: input is not a local bisection");
  std::vector<ArrowId> out;
  for (auto a : u.arrows)
    for (auto b : v.arrows)
      if (g.d(a) == g.r(b)) out.push_back(*g.compose(a, b));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return {out};
}

LocalBisection bisection_inv(const FiniteGroupoid& g, const LocalBisection& u) {
  if (!is_bisection(g, u.arrows)) throw std::invalid_argument("bisection_inv: input is not a local bisection");
  std::vector<ArrowId> out;
  for (auto a : u.arrows) out.push_back(g.inv(a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return {out};
}

std::vector<LocalBisection> all_bisections(const FiniteGroupoid& g) {
  const std::size_t n = g.n_arrows();
  if (n > 20) throw BoundExceeded("all_bisections: more than 20 arrows");
  std::vector<LocalBisection> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<ArrowId> s;
    for (std::size_t a = 0; a < n; ++a)
      if (mask >> a & 1u) s.push_back(static_cast<ArrowId>(a));
    if (is_bisection(g, s)) out.push_back({std::move(s)});
  }
  return out;
}

}  // namespace galg
