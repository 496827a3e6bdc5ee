#include "doctest.h"

#include <functional>

#include "corpus.hpp"
#include "galg/induction.hpp"

using namespace galg;
using namespace corpus;

namespace {

Vec V(const Ring& R, std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.push_back(R.from_int(x));
  return v;
}

// Every transversal at u: all choices of an arrow u → v per orbit point.
std::vector<Transversal> all_transversals(const FiniteGroupoid& g, ObjectId u) {
  auto base = transversal(g, u);
  std::vector<std::vector<ArrowId>> choices(base.orbit.size());
  for (std::size_t i = 0; i < base.orbit.size(); ++i) {
    if (base.orbit[i] == u) {
      choices[i] = {g.unit_of(u)};
      continue;
    }
    for (ArrowId a = 0; a < static_cast<ArrowId>(g.n_arrows()); ++a)
      if (g.d(a) == u && g.r(a) == base.orbit[i]) choices[i].push_back(a);
  }
  std::vector<Transversal> out;
  std::vector<ArrowId> pick(choices.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == choices.size()) {
      out.push_back(make_transversal(g, u, pick));
      return;
    }
    for (auto a : choices[i]) {
      pick[i] = a;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("transversal examples") {
  auto p = pair(2);
  auto t = transversal(*p, 0);
  CHECK(t.orbit == std::vector<ObjectId>{0, 1});
  CHECK(t.to(0) == p->unit_of(0));
  CHECK(t.to(1) == pair_arrow(2, 1, 0));

  auto z3 = group("z3");
  CHECK(transversal(*z3, 0).arrows == std::vector<ArrowId>{z3->unit_of(0)});

  auto u = share(disjoint_union(pair_groupoid(2), group_groupoid(GroupTable::cyclic(2))));
  auto tu = transversal(*u, 1);
  CHECK(tu.orbit == std::vector<ObjectId>{0, 1});
  CHECK(transversal(*u, 2).orbit == std::vector<ObjectId>{2});
  CHECK_THROWS_AS(tu.position(2), std::invalid_argument);

  auto s = swap01fix2();
  for (ObjectId x = 0; x < 3; ++x) {
    auto tx = transversal(*s, x);
    for (std::size_t i = 0; i < tx.orbit.size(); ++i) {
      CHECK(s->d(tx.arrows[i]) == x);
      CHECK(s->r(tx.arrows[i]) == tx.orbit[i]);
    }
  }
  CHECK_THROWS_AS(make_transversal(*p, 0, {p->unit_of(0), pair_arrow(2, 0, 1)}), std::invalid_argument);
}

TEST_CASE("induce examples") {
  for (std::size_t n = 1; n <= 3; ++n) {
    Ring Q = Ring::rationals();
    auto p = pair(n);
    auto ind = induce(p, trivial_module(isotropy(*p, 0), Q));
    REQUIRE(ind.rep.dim() == n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Matrix e = Matrix::zero(Q, n, n);
        e(i, j) = Q.one();
        CHECK(ind.rep.op(pair_arrow(n, i, j)) == e);
      }
  }

  Ring F3 = Ring::prime_field(3);
  auto s3 = group("s3");
  auto reg = regular_module(isotropy(*s3, 0), F3);
  CHECK(induce(s3, reg).rep.module == reg.module);

  Ring Q = Ring::rationals();
  auto s = swap01fix2();
  auto ind = induce(s, sign_module(isotropy(*s, 2), Q));
  REQUIRE(ind.rep.dim() == 1);
  const ArrowId loop = 1 * 3 + 2, unit = s->unit_of(2);
  CHECK(ind.rep.op(loop) == Matrix(1, 1, Q.from_int(-1)));
  CHECK(ind.rep.op(unit) == Matrix::identity(Q, 1));
  for (ArrowId a = 0; a < 6; ++a)
    if (a != loop && a != unit) CHECK(is_zero(Q, ind.rep.op(a)));
  CHECK(rep_validate(ind.rep).empty());

  CHECK_THROWS_AS(induce(s, sign_module(isotropy(*s, 2), Q), transversal(*s, 0)), std::invalid_argument);
  CHECK_THROWS_AS(induce(pair(3), sign_module(isotropy(*s, 2), Q)), std::invalid_argument);
  CHECK_THROWS_AS(induce(pair(2), sign_module(isotropy(*s, 2), Q)), std::out_of_range);
}

TEST_CASE("induced_annihilator_direct examples") {
  Ring Q = Ring::rationals();
  auto u = two_orbit_union();
  auto ann = induced_annihilator_direct(u, sign_module(isotropy(*u, 0), Q));
  CHECK(ann.space == Subspace::span(Q, 3, {V(Q, {1, 1, 0}), V(Q, {0, 0, 1})}));

  for (std::size_t n = 1; n <= 3; ++n) {
    auto p = pair(n);
    CHECK(induced_annihilator_direct(p, trivial_module(isotropy(*p, 0), Q)).space.is_zero());
  }

  // the zero module has the whole group algebra as annihilator
  auto z2 = group("z2");
  auto G = isotropy(*z2, 0);
  IsotropyModule zero{G, ModuleAction(Q, 0, std::vector<Matrix>(2, Matrix::zero(Q, 0, 0)))};
  CHECK(induced_annihilator_direct(z2, zero).space.is_full());
}

TEST_CASE("direct formula equals the kernel of the induced action") {
  std::size_t instances = 0;
  for (auto spec : {"q", "fp:2", "fp:3", "zn:4"}) {
    Ring R = Ring::parse(spec);
    for (const auto& [name, g] : groupoids()) {
      for (ObjectId u = 0; u < static_cast<ObjectId>(g->n_objects()); ++u)
        for (const auto& [mname, n] : modules_at(*g, u, R)) {
          CAPTURE(name);
          CAPTURE(spec);
          CAPTURE(mname);
          auto ind = induce(g, n);
          CHECK(rep_validate(ind.rep).empty());
          CHECK(ind.rep.dim() == ind.transversal.orbit.size() * n.dim());
          auto direct = induced_annihilator_direct(g, n);
          CHECK(is_two_sided(*g, direct.space));
          CHECK(ideal_equal(direct, annihilator(ind.rep)));
          ++instances;
        }
    }
  }
  CHECK(instances >= 50);
}

TEST_CASE("induction does not depend on the transversal") {
  for (auto spec : {"fp:2", "fp:3", "q"}) {
    Ring R = Ring::parse(spec);
    for (auto g : {pair(3), swap01fix2(), s3_on_triangle(), z4_on_two()}) {
      for (ObjectId u = 0; u < static_cast<ObjectId>(g->n_objects()); ++u)
        for (const auto& [mname, n] : modules_at(*g, u, R, false)) {
          auto ts = all_transversals(*g, u);
          auto first = induce(g, n, ts[0]);
          auto ann = annihilator(first.rep);
          for (std::size_t i = 1; i < ts.size(); ++i) {
            auto other = induce(g, n, ts[i]);
            CHECK(ideal_equal(annihilator(other.rep), ann));
            CHECK(ideal_equal(induced_annihilator_direct(g, n, ts[i]), ann));
            CHECK(is_isomorphic(first.rep, other.rep));
          }
        }
    }
  }
}

TEST_CASE("induction preserves simplicity and separates orbits") {
  for (auto spec : {"fp:2", "fp:3", "q", "zn:4"}) {
    Ring R = Ring::parse(spec);
    for (const auto& [name, g] : groupoids()) {
      auto orb = orbits(*g);
      std::vector<std::pair<ObjectId, InducedRep>> induced;
      for (const auto& cls : orb.classes) {
        ObjectId u = cls.front();
        std::vector<IsotropyModule> simples;
        try {
          simples = simple_modules_group(isotropy(*g, u), R);
        } catch (const Unsupported&) {
          continue;
        }
        for (const auto& s : simples) {
          CAPTURE(name);
          CAPTURE(spec);
          auto ind = induce(g, s);
          CHECK(is_simple(ind.rep));
          induced.push_back({u, ind});
        }
      }
      for (std::size_t i = 0; i < induced.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
          bool same_orbit = orb.orbit_of[induced[i].first] == orb.orbit_of[induced[j].first];
          // distinct simples at one base stay distinct; different orbits never meet
          CHECK_FALSE(is_isomorphic(induced[i].second.rep, induced[j].second.rep));
          if (!same_orbit) CHECK_FALSE(ideal_equal(annihilator(induced[i].second.rep), annihilator(induced[j].second.rep)));
        }
    }
  }
}
