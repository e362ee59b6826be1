#include "support.hpp"

#include <doctest.h>

using namespace wb::mono;
using wbtest::MapBuilder;
using wbtest::yv;

namespace {

// Displayed action of G(65) on y11..y33; coefficients in powers of eta (zeta = eta^3).
MonomialMap g65_f1() {
  MapBuilder b(9);
  for (int c = 1; c <= 3; ++c) {
    b.set(yv(1, c), 0, {{yv(2, c), 1}});
    b.set(yv(2, c), 0, {{yv(3, c), 1}});
    b.set(yv(3, c), 0, {{yv(1, c), 1}});
  }
  return b.build();
}

MonomialMap g65_f2() {
  MapBuilder b(9);
  const int twist[3] = {0, 3, 6};
  for (int r = 1; r <= 3; ++r) {
    b.set(yv(r, 1), 0, {{yv(r, 2), 1}});
    b.set(yv(r, 2), 0, {{yv(r, 1), -1}, {yv(r, 2), -1}});
    b.set(yv(r, 3), twist[r - 1], {{yv(r, 1), 1}, {yv(r, 2), 1}, {yv(r, 3), 1}});
  }
  return b.build();
}

std::vector<MonomialMap> g65_center() {
  std::vector<int> f3(9, 6), f4(9, 0), f5(9, 0);
  f4[yv(2, 3)] = 3;
  f4[yv(3, 3)] = 6;
  f5[yv(1, 3)] = f5[yv(2, 3)] = f5[yv(3, 3)] = 3;
  return {MonomialMap::diagonal(f3), MonomialMap::diagonal(f4), MonomialMap::diagonal(f5)};
}

// Phi_10 (G(28)) f1 on y-variables, and the diagonal part f3, f4, f5.
MonomialMap g28_f1() {
  MapBuilder b(9);
  for (int r = 1; r <= 3; ++r) {
    b.set(yv(r, 1), 0, {{yv(r, 2), 1}});
    b.set(yv(r, 2), 0, {{yv(r, 1), -1}, {yv(r, 2), -1}});
    b.set(yv(r, 3), 0, {{yv(r, 1), 1}, {yv(r, 2), 1}, {yv(r, 3), 1}});
  }
  return b.build();
}

std::vector<MonomialMap> g28_center() {
  std::vector<int> f3(9, 0), f4(9, 6), f5(9, 0);
  f3[yv(1, 2)] = f3[yv(2, 2)] = f3[yv(3, 2)] = 6;
  f3[yv(1, 3)] = 2;
  f3[yv(2, 3)] = 8;
  f3[yv(3, 3)] = 5;
  f5[yv(1, 3)] = f5[yv(2, 3)] = f5[yv(3, 3)] = 3;
  return {MonomialMap::diagonal(f3), MonomialMap::diagonal(f4), MonomialMap::diagonal(f5)};
}

// z-variables of G(28): z3 carries 1/zeta, z4..z6 carry zeta^2, m1 = 1.
std::vector<MonomialTerm> g28_z() { return wbtest::columns_as_terms(wbtest::det10_rows(), {0, 0, 6, 6, 6, 6, 0, 0, 0}); }

MonomialTerm term(int coef, std::vector<long> e) { return {coef, std::move(e)}; }

}  // namespace

TEST_SUITE("monomial") {
  TEST_CASE("compose with the identity and apply the identity [TRIVIAL]") {
    auto f = g65_f2();
    CHECK(compose(f, MonomialMap::identity(9)) == f);
    CHECK(compose(MonomialMap::identity(9), f) == f);
    MonomialTerm t = term(4, {1, -2, 0, 3, 0, 0, 1, 0, -1});
    CHECK(apply(MonomialMap::identity(9), t) == t);
  }

  TEST_CASE("G(65): f1 has order 3 [PAPER]") {
    auto f1 = g65_f1();
    CHECK(compose(f1, compose(f1, f1)) == MonomialMap::identity(9));
    CHECK(order(f1) == 3);
    CHECK(order(g65_f2()) == 3);
  }

  TEST_CASE("G(65): f2 f1 (f1 f2)^-1 is the f5 action [DERIVED]") {
    auto f1 = g65_f1(), f2 = g65_f2();
    auto inv = inverse(compose(f1, f2));
    REQUIRE(inv);
    CHECK(compose(compose(f2, f1), *inv) == g65_center()[2]);
  }

  TEST_CASE("inverse round trip [DERIVED]") {
    auto f = compose(g65_f2(), g65_f1());
    auto g = inverse(f);
    REQUIRE(g);
    CHECK(compose(f, *g) == MonomialMap::identity(9));
    CHECK(compose(*g, f) == MonomialMap::identity(9));
  }

  TEST_CASE("G(65) z-variables generate the fixed field of <f3,f4,f5> [PAPER]") {
    auto z = wbtest::columns_as_terms(wbtest::det27_rows(), {});
    auto cert = fixed_field_certificate(g65_center(), z);
    CHECK(cert.invariant);
    CHECK(cert.det == -27);
    CHECK(cert.group_order == 27);
    CHECK(cert.holds);
  }

  TEST_CASE("Phi10 z-variables: |det| = 27 [PAPER]") {
    auto cert = fixed_field_certificate(g28_center(), g28_z());
    CHECK(cert.invariant);
    CHECK(abs(cert.det) == 27);
    CHECK(cert.holds);
  }

  TEST_CASE("fixed field certificate for the trivial group [TRIVIAL]") {
    std::vector<MonomialTerm> z;
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<long> e(3, 0);
      e[i] = 1;
      z.push_back(term(0, e));
    }
    auto cert = fixed_field_certificate({MonomialMap::identity(3)}, z);
    CHECK(abs(cert.det) == 1);
    CHECK(cert.holds);
  }

  TEST_CASE("dropping a z-variable breaks the certificate [TRIVIAL]") {
    auto z = wbtest::columns_as_terms(wbtest::det27_rows(), {});
    z[4].exps[0] += 1;  // z5 * y11 is no longer invariant under f3
    auto cert = fixed_field_certificate(g65_center(), z);
    CHECK_FALSE(cert.holds);
    CHECK(cert.noninvariant == std::vector<std::size_t>{4});
  }

  TEST_CASE("G(65): induced f1 on z [PAPER]") {
    auto z = wbtest::columns_as_terms(wbtest::det27_rows(), {});
    auto a = induced_action(g65_f1(), z);
    CHECK(a.image(5) == term(0, {1, 0, -1, 0, 0, 1, 0, 0, 0}));   // z6 -> z1 z6/z3
    CHECK(a.image(4) == term(0, {-2, 0, -1, 0, 1, 0, 0, 0, 0}));  // z5 -> z5/(z1^2 z3)
    CHECK(a.image(8) == term(0, {-1, 0, 0, 1, 0, 0, 0, 0, 1}));   // z9 -> z4 z9/z1
  }

  TEST_CASE("Phi10: induced f1 on z [PAPER]") {
    auto a = induced_action(g28_f1(), g28_z());
    CHECK(a.image(7) == term(0, {2, 1, 0, 0, -1, 1, -1, -1, 0}));  // z8 -> z1^2 z2 z6/(z5 z7 z8)
    CHECK(a.image(4) == term(6, {-2, 0, -1, 0, 1, 0, 0, 0, 0}));   // z5 -> zeta^2 z5/(z1^2 z3)
    CHECK(a.image(6) == term(0, {0, 0, 0, 0, 0, 0, 0, 1, 0}));     // z7 -> z8
  }

  TEST_CASE("identity induces the identity [TRIVIAL]") {
    auto z = wbtest::columns_as_terms(wbtest::det27_rows(), {});
    CHECK(induced_action(MonomialMap::identity(9), z) == MonomialMap::identity(9));
  }
}
