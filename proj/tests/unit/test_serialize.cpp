#include "doctest.h"

#include "corpus.hpp"
#include "galg/serialize.hpp"

using namespace galg;
using namespace corpus;

TEST_CASE("groupoid JSON round trip") {
  for (const auto& [name, g] : groupoids()) {
    CAPTURE(name);
    auto j = to_json(*g);
    CHECK(j["objects"] == g->n_objects());
    CHECK(j["arrows"].size() == g->n_arrows());
    auto back = groupoid_from_text(j.dump());
    CHECK(back == *g);
    CHECK(validate(back).empty());
  }
  auto j = to_json(pair_groupoid(3));
  CHECK(j["arrows"].size() == 9);
  CHECK(j["arrows"][pair_arrow(3, 2, 0)] == json{{"d", 0}, {"r", 2}});
}

TEST_CASE("malformed groupoid JSON") {
  CHECK_THROWS_AS(groupoid_from_text("{"), ParseError);
  CHECK_THROWS_AS(groupoid_from_text("[]"), ParseError);
  CHECK_THROWS_AS(groupoid_from_text(R"({"objects": 1})"), ParseError);
  CHECK_THROWS_AS(groupoid_from_text(R"({"objects": 1, "arrows": [{"d": 0}], "units": [0], "comp": [], "inv": [0]})"),
                  ParseError);
  CHECK_THROWS_AS(
      groupoid_from_text(R"({"objects": 1, "arrows": [{"d": 0, "r": 0}], "units": [0], "comp": [[0, 0]], "inv": [0]})"),
      ParseError);
  CHECK_THROWS_AS(groupoid_from_text(R"({"objects": "one", "arrows": [], "units": [], "comp": [], "inv": []})"),
                  ParseError);
  // structurally fine but not a groupoid: parse succeeds, validate objects
  auto g = groupoid_from_text(R"({"objects": 1, "arrows": [{"d": 0, "r": 0}], "units": [0], "comp": [], "inv": [0]})");
  CHECK_FALSE(validate(g).empty());
}

TEST_CASE("scalars, reps, ideals and sheaves") {
  Ring Q = Ring::rationals();
  CHECK(to_json(Q, Q.from_rational(mpq_class(-1, 2))) == "-1/2");
  CHECK(vec_from_json(Q, json::array({1, "2/3", "-4"})) ==
        Vec{Q.from_int(1), Q.from_rational(mpq_class(2, 3)), Q.from_int(-4)});
  CHECK_THROWS_AS(vec_from_json(Q, json::array({true})), ParseError);
  CHECK_THROWS_AS(vec_from_json(Q, json::array({"x"})), ParseError);
  CHECK_THROWS_AS(vec_from_json(Q, json::object()), ParseError);

  auto s = swap01fix2();
  auto ind = induce(s, sign_module(isotropy(*s, 2), Q));
  auto jr = to_json(ind.rep);
  CHECK(jr["ring"] == "q");
  CHECK(jr["dim"] == 1);
  CHECK(jr["ops"][5] == json::array({json::array({"-1"})}));
  CHECK_FALSE(jr.contains("relations"));

  Ring Z4 = Ring::modular(4);
  auto z2 = group("z2");
  auto simple = simple_modules_group(isotropy(*z2, 0), Z4);
  CHECK(to_json(simple[0]).contains("relations"));

  auto I = annihilator(ind.rep);
  auto ji = to_json(I);
  CHECK(ji["arrows"] == 6);
  CHECK(ji["rank"] == I.space.rank());

  auto js = to_json(sheaf_of(regular_rep(pair(2), Q)));
  CHECK(js["stalks"][0]["dim"] == 2);
  CHECK(js["arrows"].size() == 4);

  CHECK(to_json(indicator(s, std::vector<ArrowId>{0, 5}, Q))["coeffs"] == json::array({"1", "0", "0", "0", "0", "1"}));
}
