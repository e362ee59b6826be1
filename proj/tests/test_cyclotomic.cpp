#include "support.hpp"

#include "workbench/cyclotomic.hpp"
#include "workbench/pcgroup.hpp"

#include <doctest.h>

using namespace wb::cyc;

TEST_SUITE("cyclotomic") {
  TEST_CASE("root of unity arithmetic [TRIVIAL]") {
    CHECK((CycNum::eta(1) * CycNum::eta(8)).is_one());
    CHECK((CycNum(1) + CycNum::zeta(1) + CycNum::zeta(2)).is_zero());
    CHECK(CycNum::eta(9).is_one());
    CHECK(CycNum::zeta(1) == CycNum::eta(3));
  }

  TEST_CASE("inverse of eta is eta^8 [DERIVED]") {
    CycNum e = CycNum::eta(1);
    CHECK(e.inv() == CycNum::eta(8));
    CHECK((e * e.inv()).is_one());
    CycNum x = CycNum(2) + CycNum::eta(1) * CycNum(3) - CycNum::eta(5);
    CHECK((x * x.inv()).is_one());
    CHECK((x / x).is_one());
  }

  TEST_CASE("field axioms on random elements [DERIVED]") {
    std::mt19937_64 rng(wbtest::seed());
    auto rnd = [&] {
      std::array<mpq_class, 6> c;
      for (auto& v : c) v = mpq_class(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
      return CycNum::from_coords(c);
    };
    for (int t = 0; t < 30; ++t) {
      CycNum a = rnd(), b = rnd(), c = rnd();
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    }
  }

  TEST_CASE("root_log [TRIVIAL]") {
    CHECK(root_log(CycNum::zeta(2)) == 6);
    CHECK(root_log(CycNum(1)) == 0);
    CHECK_FALSE(root_log(CycNum(2)).has_value());
    CHECK(root_log(-CycNum::eta(1)) == std::nullopt);
    for (int k = 0; k < 9; ++k) CHECK(root_log(CycNum::eta(k)) == k);
  }

  TEST_CASE("closure orders [TRIVIAL]") {
    CHECK(closure({CycMatrix::identity(3)}).order() == 1);
    // c3 permutes coordinates cyclically: c3^3 = I by hand.
    CHECK(c3(0).pow(3).is_identity());
    CHECK(closure({c3(0)}).order() == 3);
  }

  TEST_CASE("(c3^(1))^3 = zeta I3 and e3^(2) has order 3 [DERIVED]") {
    CHECK(c3(1).pow(3) == CycMatrix::scalar(3, CycNum::zeta(1)));
    CHECK(e3(2).pow(3).is_identity());
  }

  TEST_CASE("G(5) images satisfy f1^3 = f4 [PAPER]") {
    auto g = wb::paper::record(243, 5);
    REQUIRE(g);
    CHECK(g->pres.power(0) == g->pres.word({{4, 1}}));
    CHECK(g->rep[0].pow(3) == g->rep[3]);
    CHECK(g->rep[1].pow(3) == g->rep[3]);
  }

  TEST_CASE("G(3) representation: relations and faithful closure [PAPER]") {
    auto g = wb::paper::record(243, 3);
    REQUIRE(g);
    auto r = rep_check(g->pres, g->rep);
    CHECK(r.ok());
    CHECK(r.closure_order == 243);
  }

  TEST_CASE("G(3) with f4 sent to the identity fails a relation [TRIVIAL]") {
    auto g = wb::paper::record(243, 3);
    REQUIRE(g);
    auto imgs = g->rep;
    imgs[3] = CycMatrix::identity(imgs[3].dim());
    auto r = rep_check(g->pres, imgs);
    CHECK_FALSE(r.ok());
    // f1 and f2 still generate the same matrix group.
    CHECK(r.closure_order == 243);
  }

  TEST_CASE("G(3) with f2 sent to the identity is not faithful [TRIVIAL]") {
    auto g = wb::paper::record(243, 3);
    REQUIRE(g);
    auto imgs = g->rep;
    imgs[1] = CycMatrix::identity(imgs[1].dim());
    auto r = rep_check(g->pres, imgs);
    CHECK_FALSE(r.ok());
    CHECK(r.closure_order < 243);
  }

  TEST_CASE("every presented representation is faithful [PAPER]") {
    for (const auto& g : wb::paper::paper_groups()) {
      CAPTURE(g.id);
      auto r = rep_check(g.pres, g.rep);
      CHECK(r.ok());
      CHECK(r.closure_order == 243);
    }
  }
}
