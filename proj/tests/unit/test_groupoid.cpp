#include "doctest.h"

#include <algorithm>
#include <random>

#include "galg/groupoid.hpp"
#include "galg/ring.hpp"
#include "oracles.hpp"

using namespace galg;

namespace {

FiniteGroupoid swap01fix2() {
  return action_groupoid(GroupTable::cyclic(2), 3, [](std::size_t g, std::size_t x) {
    return g == 1 && x < 2 ? 1 - x : x;
  });
}

std::vector<FiniteGroupoid> samples() {
  return {pair_groupoid(1),
          pair_groupoid(2),
          pair_groupoid(3),
          group_groupoid(GroupTable::cyclic(2)),
          group_groupoid(GroupTable::cyclic(4)),
          group_groupoid(GroupTable::klein()),
          group_groupoid(GroupTable::symmetric3()),
          swap01fix2(),
          disjoint_union(pair_groupoid(2), group_groupoid(GroupTable::cyclic(2))),
          disjoint_union(group_groupoid(GroupTable::cyclic(3)), pair_groupoid(1))};
}

// Same groupoid with arrows renamed by perm (new id = perm[old id]).
FiniteGroupoid relabel(const FiniteGroupoid& g, const std::vector<int>& perm) {
  std::vector<Arrow> arrows(g.n_arrows());
  std::vector<ArrowId> inv(g.n_arrows()), units;
  std::vector<CompEntry> comp;
  for (std::size_t a = 0; a < g.n_arrows(); ++a) {
    arrows[perm[a]] = g.arrows()[a];
    inv[perm[a]] = perm[g.inv(static_cast<ArrowId>(a))];
  }
  for (auto u : g.units()) units.push_back(perm[u]);
  for (const auto& [x, y, z] : g.comp()) comp.push_back({perm[x], perm[y], perm[z]});
  return {g.n_objects(), arrows, units, comp, inv};
}

}  // namespace

TEST_CASE("validate accepts constructors and reports planted defects") {
  for (const auto& g : samples()) CHECK(validate(g).empty());

  auto p = pair_groupoid(2);
  auto inv = p.inverses();
  inv[pair_arrow(2, 0, 1)] = pair_arrow(2, 0, 1);
  auto bad_inv = FiniteGroupoid(2, p.arrows(), p.units(), p.comp(), inv);
  auto v = validate(bad_inv);
  REQUIRE(v.size() == 1);
  CHECK(v[0].axiom == "inverse");

  auto comp = p.comp();
  // (0,0) after (0,1) is fine; (0,0) after (1,0) is not composable
  comp.push_back({pair_arrow(2, 0, 0), pair_arrow(2, 1, 0), pair_arrow(2, 1, 0)});
  v = validate(FiniteGroupoid(2, p.arrows(), p.units(), comp, p.inverses()));
  REQUIRE(v.size() == 1);
  CHECK(v[0].axiom == "composability");
}

TEST_CASE("validate reports out-of-range indices instead of throwing") {
  auto v = validate(FiniteGroupoid(1, {{0, 3}}, {0}, {{0, 0, 0}}, {0}));
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].axiom == "range");
  CHECK_FALSE(validate(FiniteGroupoid(1, {{0, 0}}, {7}, {{0, 0, 9}}, {})).empty());
}

TEST_CASE("validate catches broken associativity and units") {
  // Z/3 table with one product altered: 1*1 = 0 breaks associativity
  auto g = group_groupoid(GroupTable::cyclic(3));
  auto comp = g.comp();
  for (auto& e : comp)
    if (e[0] == 1 && e[1] == 1) e[2] = 0;
  auto v = validate(FiniteGroupoid(1, g.arrows(), g.units(), comp, g.inverses()));
  CHECK(std::any_of(v.begin(), v.end(), [](const Violation& x) { return x.axiom == "associativity"; }));

  auto w = validate(FiniteGroupoid(1, g.arrows(), {1}, g.comp(), g.inverses()));
  CHECK(std::any_of(w.begin(), w.end(), [](const Violation& x) { return x.axiom == "unit"; }));
}

TEST_CASE("pair groupoid") {
  CHECK_THROWS_AS(pair_groupoid(0), std::invalid_argument);
  CHECK(pair_groupoid(1).n_arrows() == 1);
  auto p2 = pair_groupoid(2);
  CHECK(p2.n_arrows() == 4);
  for (ObjectId u = 0; u < 2; ++u) CHECK(isotropy(p2, u).order() == 1);
  auto p3 = pair_groupoid(3);
  auto o = orbits(p3);
  REQUIRE(o.classes.size() == 1);
  CHECK(o.classes[0] == std::vector<ObjectId>{0, 1, 2});
  for (ObjectId u = 0; u < 3; ++u) CHECK(isotropy(p3, u).order() == 1);
  // (i,j)(j,k) = (i,k), and (i,j) : j -> i
  CHECK(p3.compose(pair_arrow(3, 0, 1), pair_arrow(3, 1, 2)) == pair_arrow(3, 0, 2));
  CHECK_FALSE(p3.compose(pair_arrow(3, 0, 1), pair_arrow(3, 0, 2)).has_value());
  CHECK(p3.d(pair_arrow(3, 0, 1)) == 1);
  CHECK(p3.r(pair_arrow(3, 0, 1)) == 0);
}

TEST_CASE("action groupoids") {
  auto g = swap01fix2();
  auto o = orbits(g);
  REQUIRE(o.classes.size() == 2);
  CHECK(o.classes[0] == std::vector<ObjectId>{0, 1});
  CHECK(o.classes[1] == std::vector<ObjectId>{2});
  CHECK(o.representative(1) == 0);
  CHECK(isotropy(g, 2).order() == 2);
  CHECK(oracle::tables_isomorphic(isotropy(g, 2).table.table(), GroupTable::cyclic(2).table()));
  CHECK(isotropy(g, 0).order() == 1);

  auto swap = action_groupoid(GroupTable::cyclic(2), 2, [](std::size_t h, std::size_t x) { return h ? 1 - x : x; });
  CHECK(oracle::groupoids_isomorphic(swap, pair_groupoid(2)));
  CHECK_FALSE(oracle::groupoids_isomorphic(group_groupoid(GroupTable::cyclic(4)),
                                           group_groupoid(GroupTable::klein())));

  CHECK_THROWS_AS(action_groupoid(GroupTable::cyclic(2), 2, [](std::size_t, std::size_t) { return 0; }),
                  std::invalid_argument);
  CHECK_THROWS_AS(action_groupoid(GroupTable::cyclic(2), 2, [](std::size_t, std::size_t x) { return x + 1; }),
                  std::invalid_argument);
  // a non-action: Z/3 generator acting as an involution
  CHECK_THROWS_AS(action_groupoid(GroupTable::cyclic(3), 2,
                                  [](std::size_t h, std::size_t x) { return h ? 1 - x : x; }),
                  std::invalid_argument);
}

TEST_CASE("group groupoids and disjoint unions") {
  auto z4 = group_groupoid(GroupTable::cyclic(4));
  CHECK(z4.n_objects() == 1);
  CHECK(isotropy(z4, 0).table == GroupTable::cyclic(4));

  auto u = disjoint_union(group_groupoid(GroupTable::cyclic(2)), pair_groupoid(1));
  CHECK(u.n_arrows() == 3);
  CHECK(u.n_objects() == 2);
  CHECK(orbits(u).classes.size() == 2);
  CHECK(orbits(disjoint_union(pair_groupoid(2), group_groupoid(GroupTable::cyclic(2)))).classes.size() == 2);

  CHECK_THROWS_AS(isotropy(u, 2), std::out_of_range);
  CHECK_THROWS_AS(isotropy(u, -1), std::out_of_range);
}

TEST_CASE("bisection examples") {
  auto p = pair_groupoid(2);
  CHECK_FALSE(is_bisection(p, {0, 1, 2, 3}));
  LocalBisection swap{{pair_arrow(2, 0, 1), pair_arrow(2, 1, 0)}};
  CHECK(is_bisection(p, swap.arrows));
  auto sq = bisection_mul(p, swap, swap);
  std::vector<ArrowId> units = p.units();
  std::sort(units.begin(), units.end());
  CHECK(sq.arrows == units);
  CHECK_THROWS_AS(bisection_mul(p, LocalBisection{{0, 1, 2, 3}}, swap), std::invalid_argument);
  CHECK_THROWS_AS(bisection_inv(p, LocalBisection{{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(is_bisection(p, {4}), std::out_of_range);

  for (const auto& g : samples()) {
    std::vector<ArrowId> us = g.units();
    std::sort(us.begin(), us.end());
    LocalBisection V{us};
    for (const auto& U : all_bisections(g)) {
      CHECK(bisection_mul(g, V, U) == U);
      CHECK(bisection_mul(g, U, V) == U);
    }
  }
}

TEST_CASE("bisections form an inverse monoid") {
  for (const auto& g : samples()) {
    auto bis = all_bisections(g);
    if (g.n_arrows() > 6) {
      // sampled triples
      std::mt19937_64 rng(g.n_arrows());
      std::uniform_int_distribution<std::size_t> pick(0, bis.size() - 1);
      for (int t = 0; t < 400; ++t) {
        const auto &U = bis[pick(rng)], &V = bis[pick(rng)], &W = bis[pick(rng)];
        CHECK(bisection_mul(g, U, bisection_mul(g, V, W)) == bisection_mul(g, bisection_mul(g, U, V), W));
      }
      continue;
    }
    for (const auto& U : bis) {
      auto Ui = bisection_inv(g, U);
      CHECK(is_bisection(g, Ui.arrows));
      CHECK(bisection_mul(g, bisection_mul(g, U, Ui), U) == U);
      CHECK(bisection_mul(g, bisection_mul(g, Ui, U), Ui) == Ui);
      for (const auto& V : bis) {
        auto UV = bisection_mul(g, U, V);
        CHECK(is_bisection(g, UV.arrows));
        for (const auto& W : bis)
          CHECK(bisection_mul(g, U, bisection_mul(g, V, W)) == bisection_mul(g, UV, W));
      }
    }
  }
  CHECK_THROWS_AS(all_bisections(pair_groupoid(5)), BoundExceeded);
}

TEST_CASE("isotropy groups along an orbit are isomorphic") {
  auto gs = samples();
  // Z/2 acting on 4 points by (01)(23), crossed with a trivial Z/2 factor
  gs.push_back(action_groupoid(GroupTable::klein(), 4, [](std::size_t h, std::size_t x) {
    return (h / 2) ? (x ^ 1u) : x;
  }));
  for (const auto& g : gs) {
    auto o = orbits(g);
    for (ObjectId u = 0; u < static_cast<ObjectId>(g.n_objects()); ++u) {
      auto Gu = isotropy(g, u);
      CHECK(std::find(Gu.elements.begin(), Gu.elements.end(), g.unit_of(u)) != Gu.elements.end());
      CHECK(Gu.elements[Gu.identity()] == g.unit_of(u));
      auto Gr = isotropy(g, o.representative(u));
      REQUIRE(Gu.order() <= 8);
      CHECK(oracle::tables_isomorphic(Gu.table.table(), Gr.table.table()));
    }
  }
}

TEST_CASE("orbits are invariant under arrow relabelling") {
  std::mt19937_64 rng(7);
  for (const auto& g : samples()) {
    auto base = orbits(g);
    for (int t = 0; t < 5; ++t) {
      std::vector<int> perm(g.n_arrows());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      auto h = relabel(g, perm);
      CHECK(validate(h).empty());
      auto o = orbits(h);
      // objects are untouched, so the partitions must coincide exactly
      CHECK(o.classes == base.classes);
      CHECK(o.orbit_of == base.orbit_of);
    }
  }
}
