#include "support.hpp"

#include "workbench/bogomolov.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace wb::bog;
using wb::pc::Exps;
using wb::pc::PcGroup;
using wb::pc::PcPresentation;

namespace {

// Abelian 3-group with cyclic factors of the given orders (powers of 3).
PcPresentation abelian(const std::vector<int>& orders) {
  int n = 0;
  for (int o : orders)
    for (int k = o; k > 1; k /= 3) ++n;
  PcPresentation p(n, "abelian");
  int g = 0;
  for (int o : orders) {
    int len = 0;
    for (int k = o; k > 1; k /= 3) ++len;
    for (int i = 0; i + 1 < len; ++i) {
      Exps w(n, 0);
      w[g + i + 1] = 1;
      p.set_power(g + i, w);
    }
    g += len;
  }
  return p;
}

PcPresentation heisenberg27() {
  PcPresentation p(3, "3^{1+2}_+");
  p.set_comm(1, 0, {0, 0, 1});
  return p;
}

PcPresentation extraspecial27_exp9() {
  PcPresentation p(3, "3^{1+2}_-");
  p.set_power(0, {0, 0, 1});
  p.set_comm(1, 0, {0, 0, 1});
  return p;
}

// M(C_{n1} x ... x C_{nk}) = sum over i < j of C_{gcd(ni, nj)}.
Invariants abelian_multiplier(const std::vector<int>& orders) {
  Invariants r;
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = i + 1; j < orders.size(); ++j) r.push_back(std::gcd(orders[i], orders[j]));
  std::sort(r.begin(), r.end());
  return r;
}

Invariants cover_multiplier(const PcPresentation& p, int m) { return multiplier(build_cover(p, m)); }

Invariants oracle(const PcPresentation& p, int m) { return h2_oracle(finite_group(PcGroup(p)), m).multiplier; }

}  // namespace

TEST_SUITE("bogomolov") {
  TEST_CASE("cyclic groups have trivial multiplier [TRIVIAL]") {
    auto c = build_cover(abelian({3}), 2);
    CHECK(c.tails == 1);
    CHECK(multiplier(c).empty());
    CHECK(cover_multiplier(abelian({9}), 2).empty());
    CHECK(oracle(abelian({9}), 2).empty());
  }

  TEST_CASE("C3 x C3 [DERIVED]") {
    CHECK(cover_multiplier(abelian({3, 3}), 2) == Invariants{3});
    CHECK(oracle(abelian({3, 3}), 2) == Invariants{3});
  }

  TEST_CASE("C3^3 has multiplier C3^3 [DERIVED]") {
    CHECK(cover_multiplier(abelian({3, 3, 3}), 2) == Invariants{3, 3, 3});
    CHECK(oracle(abelian({3, 3, 3}), 2) == Invariants{3, 3, 3});
  }

  TEST_CASE("Heisenberg group of order 27 [DERIVED]") {
    CHECK(oracle(heisenberg27(), 2) == Invariants{3, 3});
    CHECK(cover_multiplier(heisenberg27(), 2) == Invariants{3, 3});
    CHECK(oracle(extraspecial27_exp9(), 2) == cover_multiplier(extraspecial27_exp9(), 2));
  }

  TEST_CASE("abelian groups of order <= 81: cover, oracle and formula agree [DERIVED]") {
    const std::vector<std::vector<int>> all = {{3},     {9},       {3, 3},    {27},      {9, 3},       {3, 3, 3},
                                               {81},    {27, 3},   {9, 9},    {9, 3, 3}, {3, 3, 3, 3}};
    for (const auto& o : all) {
      CAPTURE(o.size());
      CAPTURE(o[0]);
      auto want = abelian_multiplier(o);
      // 3^m at least the exponent, plus one step of headroom.
      int m = 1;
      for (int e = 3; e < *std::max_element(o.begin(), o.end()); e *= 3) ++m;
      CHECK(cover_multiplier(abelian(o), m + 1) == want);
      CHECK(oracle(abelian(o), m + 1) == want);
    }
  }

  TEST_CASE("abelian groups: M0 is the full multiplier [TRIVIAL]") {
    for (const auto& o : std::vector<std::vector<int>>{{3, 3}, {9, 3}, {3, 3, 3}}) {
      auto r = b0(abelian(o));
      CHECK(r.m0 == r.multiplier);
      CHECK(r.b0.empty());
    }
    CHECK(b0(abelian({3, 3, 3, 3, 3})).b0.empty());
  }

  TEST_CASE("B0 of G(3) and G(65) is trivial, of G(28) nontrivial [PAPER]") {
    auto r3 = b0(wb::paper::record(243, 3)->pres);
    CHECK(r3.b0.empty());
    CHECK(r3.m0 == r3.multiplier);
    CHECK(b0(wb::paper::record(243, 65)->pres).b0.empty());
    auto r28 = b0(wb::paper::record(243, 28)->pres);
    CHECK_FALSE(r28.b0.empty());
    CHECK(r28.m0 != r28.multiplier);
  }

  TEST_CASE("cover of G(3) is consistent enough to collect [DERIVED]") {
    auto c = build_cover(wb::paper::record(243, 3)->pres, 2);
    auto col = c.collector();
    auto x = col.gen(0), y = col.gen(1);
    auto lhs = col.product(col.product(x, y), col.inv(col.product(x, y)));
    CHECK(col.base_is_identity(lhs));
    CHECK(c.relations.modulus() == 9);
  }

  TEST_CASE("stabilize [DERIVED]") {
    auto s = stabilize(abelian({3, 3}), 1);
    CHECK(s.m == 1);
    CHECK(s.multiplier == Invariants{3});
    CHECK(stabilize(abelian({9}), 1).multiplier.empty());
    auto g3 = stabilize(wb::paper::record(243, 3)->pres, 2);
    CHECK_FALSE(g3.anomaly);
    CHECK(cover_multiplier(wb::paper::record(243, 3)->pres, g3.m) ==
          cover_multiplier(wb::paper::record(243, 3)->pres, g3.m + 1));
  }

  TEST_CASE("invalid inputs [TRIVIAL]") {
    CHECK_THROWS_AS(build_cover(abelian({3}), 0), BogomolovError);
    CHECK_THROWS(h2_oracle(finite_group(PcGroup(wb::paper::record(243, 3)->pres)), 2, 81));
  }
}
