#include "support.hpp"

#include "workbench/pcgroup.hpp"

#include <doctest.h>

#include <set>

using namespace wb::pc;

namespace {

PcPresentation pres(int id) {
  auto r = wb::paper::record(243, id);
  REQUIRE(r);
  return r->pres;
}

Exps unit(int n, int g, int e = 1) {
  Exps v(n, 0);
  v[g - 1] = e;
  return v;
}

}  // namespace

TEST_SUITE("pcgroup") {
  TEST_CASE("collection in G(3): f2 f1 = f1 f2 f3 [PAPER]") {
    const PcPresentation p = pres(3);
    Collector c(p);
    CHECK(c.collect({{1, 1}, {0, 1}}).e == Exps{1, 1, 1, 0, 0});
    CHECK(c.collect({}).e == Exps(5, 0));
  }

  TEST_CASE("f1^3 = f4 in G(4) and f2^3 = f4^2 in G(6) [PAPER]") {
    const PcPresentation p4 = pres(4), p6 = pres(6);
    Collector c4(p4);
    CHECK(c4.collect({{0, 1}, {0, 1}, {0, 1}}).e == unit(5, 4));
    Collector c6(p6);
    CHECK(c6.pow(c6.gen(1), 3).e == unit(5, 4, 2));
  }

  TEST_CASE("[f3,f2] = f5 in G(3) [PAPER]") {
    const PcPresentation p = pres(3);
    Collector c(p);
    CHECK(c.comm(c.gen(2), c.gen(1)).e == unit(5, 5));
    CHECK(c.comm(c.gen(1), c.gen(0)).e == unit(5, 3));
  }

  TEST_CASE("x * x^-1 = 1 for random x [TRIVIAL]") {
    std::mt19937_64 rng(wbtest::seed());
    for (int id : {3, 28, 65}) {
      const PcPresentation p = pres(id);
      Collector c(p);
      for (int t = 0; t < 100; ++t) {
        Exps e(5);
        for (auto& x : e) x = static_cast<int>(rng() % 3);
        auto x = c.from_exps(e);
        CHECK(c.product(x, c.inv(x)).e == Exps(5, 0));
      }
    }
  }

  TEST_CASE("collector agrees with the enumerated table [DERIVED]") {
    PcPresentation p = pres(57);
    PcGroup g(p);
    Collector c(p);
    std::mt19937_64 rng(wbtest::seed() + 1);
    for (int t = 0; t < 200; ++t) {
      std::uint32_t a = rng() % 243, b = rng() % 243;
      CHECK(g.index(c.product(c.from_exps(g.exps(a)), c.from_exps(g.exps(b))).e) == g.mul(a, b));
    }
  }

  TEST_CASE("all 17 presentations are consistent [PAPER]") {
    for (const auto& r : wb::paper::paper_groups()) {
      CAPTURE(r.id);
      CHECK(verify_consistency(r.pres, 2000).ok());
    }
  }

  TEST_CASE("abelian C3^5 is consistent [TRIVIAL]") {
    PcPresentation p(5, "C3^5");
    CHECK(verify_consistency(p, 1000).ok());
    CHECK(PcGroup(p).order() == 243);
  }

  TEST_CASE("dropping [f2,f1] = f3 from G(3) leaves a consistent presentation [DERIVED]") {
    PcPresentation p = pres(3);
    p.set_comm(1, 0, Exps(5, 0));
    CHECK(verify_consistency(p, 1000).ok());
    CHECK_FALSE(is_isoclinic(PcGroup(p), PcGroup(pres(3))).isoclinic);
  }

  TEST_CASE("f1^3 = f3 in G(3) is inconsistent [DERIVED]") {
    // f1^3 f1 = f1 f1^3 would force [f3,f1] = 1, but [f3,f1] = f4.
    PcPresentation p = pres(3);
    p.set_power(0, unit(5, 3));
    auto r = verify_consistency(p, 1000);
    CHECK_FALSE(r.ok());
    CHECK(r.overlaps_checked > 0);
  }

  TEST_CASE("structure of G(3) and G(65) [PAPER]") {
    auto s3 = structure(PcGroup(pres(3)));
    CHECK(s3.order == 243);
    CHECK(s3.center_invariants == std::vector<long>{3, 3});
    CHECK(s3.nilpotency_class == 3);
    auto s65 = structure(PcGroup(pres(65)));
    CHECK(s65.center_invariants == std::vector<long>{3});
    CHECK(s65.nilpotency_class == 2);
  }

  TEST_CASE("G(3) center is <f4,f5> [PAPER]") {
    PcGroup g(pres(3));
    auto s = structure(g);
    REQUIRE(s.center.size() == 9);
    for (auto z : s.center) {
      Exps e = g.exps(z);
      CHECK(e[0] == 0);
      CHECK(e[1] == 0);
      CHECK(e[2] == 0);
    }
  }

  TEST_CASE("G(3) exponent by cubing every element [DERIVED]") {
    // A 2-generated group of exponent 3 has order at most 27, so G(3) has exponent 9.
    PcGroup g(pres(3));
    int e = 3;
    for (std::uint32_t x = 0; x < 243; ++x) {
      if (g.pow(x, 3) != g.identity()) e = 9;
      CHECK(g.pow(x, 9) == g.identity());
    }
    CHECK(e == 9);
    CHECK(structure(g).exponent == e);
  }

  TEST_CASE("commuting pairs [TRIVIAL]") {
    PcPresentation c33(2, "C3xC3");
    CHECK(commuting_pairs(PcGroup(c33)).size() == 81);
    PcGroup g(pres(3));
    auto pairs = commuting_pairs(g);
    std::set<std::pair<std::uint32_t, std::uint32_t>> s(pairs.begin(), pairs.end());
    for (std::uint32_t x = 0; x < 243; ++x) CHECK(s.count({x, g.identity()}));
  }

  TEST_CASE("commuting pairs of G(3) equal the sum of centralizer orders [DERIVED]") {
    PcGroup g(pres(3));
    std::size_t total = 0;
    for (std::uint32_t x = 0; x < 243; ++x)
      for (std::uint32_t y = 0; y < 243; ++y) total += g.mul(x, y) == g.mul(y, x);
    CHECK(commuting_pairs(g).size() == total);
  }

  TEST_CASE("isoclinism decisions [PAPER]") {
    PcGroup g56(pres(56)), g60(pres(60)), g3(pres(3)), g65(pres(65)), g28(pres(28));
    CHECK(is_isoclinic(g56, g60).isoclinic);
    CHECK_FALSE(is_isoclinic(g3, g65).isoclinic);
    CHECK_FALSE(is_isoclinic(g3, g28).isoclinic);
  }

  TEST_CASE("a group is isoclinic to itself [TRIVIAL]") {
    PcGroup g(pres(3));
    auto r = is_isoclinic(g, g);
    CHECK(r.isoclinic);
    CHECK(r.witness.has_value());
  }
}
