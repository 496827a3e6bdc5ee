#include "doctest.h"

#include <random>

#include "corpus.hpp"
#include "galg/disintegration.hpp"

using namespace galg;
using namespace corpus;

namespace {

// ρ conjugated by a product of elementary matrices (and their inverses).
Rep conjugate(const Rep& rho, std::mt19937_64& rng) {
  const Ring& R = rho.ring();
  const std::size_t n = rho.dim();
  Matrix t = Matrix::identity(R, n), ti = Matrix::identity(R, n);
  if (n >= 2) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coef(1, 3);
    for (int k = 0; k < 4; ++k) {
      std::size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      Scalar c = R.from_int(coef(rng));
      Matrix e = Matrix::identity(R, n), ei = Matrix::identity(R, n);
      e(i, j) = c;
      ei(i, j) = R.neg(c);
      t = mul(R, e, t);
      ti = mul(R, ti, ei);
    }
  }
  std::vector<Matrix> ops;
  for (const auto& a : rho.module.ops) ops.push_back(mul(R, t, mul(R, a, ti)));
  return make_rep(rho.groupoid, R, n, std::move(ops));
}

}  // namespace

TEST_CASE("sheaf_of examples") {
  Ring Q = Ring::rationals();
  auto p = pair(2);
  auto s = sheaf_of(regular_rep(p, Q));
  CHECK(s.gens == std::vector<std::size_t>{2, 2});
  CHECK(sheaf_validate(s).empty());

  auto z = sheaf_of(zero_rep(swap01fix2(), Q));
  CHECK(z.support().empty());
  CHECK(sheaf_validate(z).empty());

  auto s3 = group("s3");
  Ring F2 = Ring::prime_field(2);
  auto reg = regular_rep(s3, F2);
  auto one = sheaf_of(reg);
  REQUIRE(one.gens == std::vector<std::size_t>{6});
  for (ArrowId a = 0; a < 6; ++a) CHECK(one.arrows[a] == reg.op(a));
}

TEST_CASE("stalk_isotropy_module examples") {
  Ring Q = Ring::rationals();
  auto z2 = group("z2");
  auto st = stalk_isotropy_module(sheaf_of(regular_rep(z2, Q)), 0);
  CHECK(st.module == regular_rep(z2, Q).module);
  CHECK(is_isomorphic(st, regular_module(isotropy(*z2, 0), Q)));

  auto p = pair(3);
  auto sp = sheaf_of(regular_rep(p, Q));
  for (ObjectId u = 0; u < 3; ++u) {
    auto m = stalk_isotropy_module(sp, u);
    CHECK(m.group.order() == 1);
    CHECK(m.dim() == 3);
  }

  auto s = swap01fix2();
  for (auto spec : {"q", "fp:2", "fp:3"}) {
    Ring R = Ring::parse(spec);
    auto m = stalk_isotropy_module(sheaf_of(regular_rep(s, R)), 2);
    CHECK(m.dim() == 2);
    CHECK(is_isomorphic(m, regular_module(isotropy(*s, 2), R)));
  }
  CHECK_THROWS_AS(stalk_isotropy_module(sp, 3), std::out_of_range);
}

TEST_CASE("gamma_c examples") {
  Ring Q = Ring::rationals();
  auto s = swap01fix2();
  auto zero = gamma_c(sheaf_of(zero_rep(s, Q)));
  CHECK(zero.dim() == 0);
  CHECK(annihilator(zero).space.is_full());

  auto z3 = group("z3");
  auto rho = regular_rep(z3, Ring::prime_field(2));
  CHECK(gamma_c(sheaf_of(rho)).module == rho.module);

  auto back = gamma_c(sheaf_of(regular_rep(pair(2), Q)));
  CHECK(back.dim() == 4);
  CHECK(rep_validate(back).empty());
}

TEST_CASE("disintegration_iso examples") {
  Ring Q = Ring::rationals();
  CHECK(disintegration_iso(regular_rep(group("z2"), Q)) == Matrix::identity(Q, 2));

  auto s = swap01fix2();
  auto ind = induce(s, sign_module(isotropy(*s, 2), Q));
  auto back = gamma_c(sheaf_of(ind.rep));
  CHECK(is_isomorphic(back, ind.rep));
  CHECK(disintegration_iso(ind.rep).rows() == 1);
}

TEST_CASE("disintegration over the corpus") {
  std::mt19937_64 rng(7);
  std::size_t count = 0;
  for (auto spec : {"q", "fp:2", "fp:3", "zn:4"}) {
    Ring R = Ring::parse(spec);
    for (const auto& [name, rho] : reps(R)) {
      CAPTURE(spec);
      CAPTURE(name);
      auto s = sheaf_of(rho);
      CHECK(sheaf_validate(s).empty());
      auto back = gamma_c(s);
      CHECK(rep_validate(back).empty());
      CHECK(ideal_equal(annihilator(back), annihilator(rho)));
      CHECK_NOTHROW(disintegration_iso(rho));

      // the support is a union of orbits
      auto orb = orbits(*rho.groupoid);
      for (ObjectId u = 0; u < static_cast<ObjectId>(s.gens.size()); ++u)
        for (auto v : orb.orbit(u)) CHECK(s.stalk_is_zero(u) == s.stalk_is_zero(v));

      if (R.is_field()) {
        std::size_t total = 0;
        for (auto d : s.gens) total += d;
        CHECK(total == rho.dim());
        auto other = sheaf_of(conjugate(rho, rng));
        CHECK(other.gens == s.gens);
      }
      ++count;
    }
  }
  CHECK(count >= 30);
}
