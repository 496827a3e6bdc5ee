#include "doctest.h"

#include <cmath>

#include "corpus.hpp"
#include "galg/effros_hahn.hpp"

using namespace galg;
using namespace corpus;

namespace {

Vec V(const Ring& R, std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.push_back(R.from_int(x));
  return v;
}

bool same_set(const std::vector<Ideal>& a, const std::vector<Ideal>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!ideal_equal(a[i], b[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("verify_ideal_is_intersection examples") {
  Ring F2 = Ring::prime_field(2);
  auto z2 = group("z2");
  auto I = ideal_from_generators(z2, F2, {V(F2, {1, 1})});
  auto r = verify_ideal_is_intersection(I);
  CHECK(r.verdict == Verdict::verified);
  CHECK(r.witnesses["per_object"][0]["stalk"] == 1);

  auto p = pair(2);
  auto r0 = verify_ideal_is_intersection(zero_ideal(p, F2));
  CHECK(r0.verdict == Verdict::verified);
  CHECK(r0.witnesses["intersection"].empty());

  for (auto g : {z2, p, swap01fix2()}) {
    auto rw = verify_ideal_is_intersection(whole_ideal(g, F2));
    CHECK(rw.verdict == Verdict::verified);
    for (const auto& o : rw.witnesses["per_object"]) CHECK(o["stalk"] == 0);
  }

  Ideal bogus{z2, Subspace::span(F2, 2, {V(F2, {1, 0})})};
  CHECK(verify_ideal_is_intersection(bogus).verdict == Verdict::skipped);
}

TEST_CASE("every ideal is an intersection of induced annihilators") {
  std::size_t checked = 0;
  for (auto spec : {"fp:2", "fp:3", "zn:4"}) {
    Ring R = Ring::parse(spec);
    for (const auto& [name, g] : groupoids()) {
      if (g->n_arrows() > 6) continue;
      for (const auto& I : enumerate_all_ideals(g, R)) {
        CAPTURE(name);
        CAPTURE(spec);
        auto r = verify_ideal_is_intersection(I);
        CHECK(r.verdict == Verdict::verified);
        CHECK(r.witnesses["all_objects_agree"] == true);
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("verify_primitive_single_inducer examples") {
  Ring Q = Ring::rationals();
  Ring F2 = Ring::prime_field(2);

  auto p = pair(2);
  auto column = induce(p, trivial_module(isotropy(*p, 0), F2)).rep;
  auto r = verify_primitive_single_inducer(column);
  CHECK(r.verdict == Verdict::verified);
  CHECK(r.witnesses["object"] == 0);
  CHECK(r.witnesses["annihilator"].empty());

  auto z2 = group("z2");
  auto sign = sign_module(isotropy(*z2, 0), Q);
  auto rs = verify_primitive_single_inducer(sign.as_rep());
  CHECK(rs.verdict == Verdict::verified);
  CHECK(rs.witnesses["stalk_simple"] == true);
  CHECK(rs.witnesses["annihilator"] == json::array({json::array({"1", "1"})}));

  auto s = swap01fix2();
  auto ind = induce(s, sign_module(isotropy(*s, 2), Q)).rep;
  auto ri = verify_primitive_single_inducer(ind);
  CHECK(ri.verdict == Verdict::verified);
  CHECK(ri.witnesses["object"] == 2);

  CHECK(verify_primitive_single_inducer(regular_rep(z2, Q)).verdict == Verdict::skipped);
}

TEST_CASE("simple quotients of the regular module single out one inducer") {
  for (auto spec : {"fp:2", "fp:3", "zn:4"}) {
    Ring R = Ring::parse(spec);
    for (const auto& [name, g] : groupoids()) {
      if (g->n_arrows() > 6) continue;
      for (const auto& rho : simple_quotients_of_regular(g, R)) {
        CAPTURE(name);
        CAPTURE(spec);
        CHECK(verify_primitive_single_inducer(rho).verdict == Verdict::verified);
      }
    }
  }
}

TEST_CASE("enumerate_primitive_ideals examples") {
  for (auto spec : {"q", "fp:2", "fp:3"}) {
    Ring R = Ring::parse(spec);
    for (std::size_t n = 1; n <= 3; ++n) {
      auto prim = enumerate_primitive_ideals(pair(n), R);
      REQUIRE(prim.size() == 1);
      CHECK(prim[0].space.is_zero());
    }
  }

  Ring Q = Ring::rationals();
  auto z2 = group("z2");
  auto q2 = enumerate_primitive_ideals(z2, Q);
  std::vector<Ideal> expected{ideal_from_generators(z2, Q, {V(Q, {1, -1})}), ideal_from_generators(z2, Q, {V(Q, {1, 1})})};
  std::sort(expected.begin(), expected.end(), [](const Ideal& a, const Ideal& b) { return a.space < b.space; });
  CHECK(same_set(q2, expected));

  Ring Z4 = Ring::modular(4);
  auto z4 = enumerate_primitive_ideals(z2, Z4);
  REQUIRE(z4.size() == 1);
  CHECK(ideal_equal(z4[0], ideal_from_generators(z2, Z4, {V(Z4, {2, 0}), V(Z4, {1, 1})})));
  CHECK(z4[0].space.is_full() == false);

  CHECK_THROWS_AS(enumerate_primitive_ideals(group("s3"), Q), Unsupported);
}

TEST_CASE("primitive_ideal_oracle examples") {
  Ring F2 = Ring::prime_field(2), F3 = Ring::prime_field(3);
  auto z2 = group("z2");
  auto o2 = primitive_ideal_oracle(z2, F2);
  REQUIRE(o2.size() == 1);
  CHECK(ideal_equal(o2[0], ideal_from_generators(z2, F2, {V(F2, {1, 1})})));

  auto m2 = primitive_ideal_oracle(pair(2), F2);
  REQUIRE(m2.size() == 1);
  CHECK(m2[0].space.is_zero());

  auto o3 = primitive_ideal_oracle(z2, F3);
  REQUIRE(o3.size() == 2);
  std::vector<Ideal> expected{ideal_from_generators(z2, F3, {V(F3, {1, 1})}), ideal_from_generators(z2, F3, {V(F3, {1, 2})})};
  std::sort(expected.begin(), expected.end(), [](const Ideal& a, const Ideal& b) { return a.space < b.space; });
  CHECK(same_set(o3, expected));

  CHECK_THROWS_AS(primitive_ideal_oracle(z2, Ring::rationals()), Unsupported);
  Limits tight;
  tight.bound = 100;
  CHECK_THROWS_AS(primitive_ideal_oracle(pair(3), F2, tight), BoundExceeded);
}

TEST_CASE("induced annihilators of simples match the oracle") {
  for (auto spec : {"fp:2", "fp:3", "fp:5", "zn:4", "zn:9"}) {
    Ring R = Ring::parse(spec);
    for (const auto& [name, g] : groupoids()) {
      if (std::pow(static_cast<double>(R.modulus()), g->n_arrows()) > 20000) continue;
      CAPTURE(name);
      CAPTURE(spec);
      auto r = verify_primitive_ideals(g, R);
      CHECK(r.verdict == Verdict::verified);
      auto c = verify_induced_from_simples(g, R);
      CHECK(c.verdict == Verdict::verified);
      CHECK(c.reason == "");
    }
  }
}

TEST_CASE("rational primitive ideals come from simple induced modules") {
  Ring Q = Ring::rationals();
  for (const auto& [name, g] : groupoids()) {
    if (name == "s3" || name == "s3-triangle") continue;
    CAPTURE(name);
    auto c = verify_induced_from_simples(g, Q);
    CHECK(c.verdict == Verdict::verified);
    CHECK(verify_primitive_ideals(g, Q).verdict == Verdict::skipped);
  }
  auto skipped = verify_induced_from_simples(group("s3"), Q);
  CHECK(skipped.verdict == Verdict::skipped);
}

TEST_CASE("single-instance checks over the corpus") {
  for (auto spec : {"q", "fp:2", "fp:3", "zn:4"}) {
    Ring R = Ring::parse(spec);
    for (const auto& [name, g] : groupoids()) {
      CAPTURE(name);
      CAPTURE(spec);
      for (const auto& cls : orbits(*g).classes)
        for (const auto& [mname, n] : modules_at(*g, cls.front(), R)) {
          CAPTURE(mname);
          CHECK(verify_induced_annihilator(g, n).verdict == Verdict::verified);
          auto s = verify_induced_simple(g, n);
          CHECK(s.verdict != Verdict::refuted);
          if (mname.rfind("simple:", 0) == 0) CHECK(s.verdict == Verdict::verified);
        }
      CHECK(verify_disintegration(regular_rep(g, R)).verdict == Verdict::verified);
    }
  }
}

TEST_CASE("reports serialise without timings") {
  Ring F2 = Ring::prime_field(2);
  auto z2 = group("z2");
  auto a = verify_ideal_is_intersection(zero_ideal(z2, F2));
  auto b = verify_ideal_is_intersection(zero_ideal(z2, F2));
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK_FALSE(to_json(a).contains("wall_seconds"));
  CHECK(to_json(a)["verdict"] == "verified");
  CHECK(to_json(a)["instance"]["ring"] == "fp:2");
}
