#include "support.hpp"

#include "workbench/linearize.hpp"

#include <doctest.h>

#include <array>
#include <map>

using namespace wb::rf;
using wb::cyc::CycMatrix;

namespace {

Substitution subst(const VarSet& dst, const std::vector<std::string>& exprs) {
  std::vector<RatFunc> im;
  for (const auto& e : exprs) im.push_back(parse_expr(e, dst));
  return Substitution(exprs.size(), dst.size(), im);
}

RatFunc P(const VarSet& v, const std::string& s) { return parse_expr(s, v); }

// Dense cubic expansion over Q(eta) in three variables, independent of SparsePoly.
using Key = std::array<int, 3>;
using Dense = std::map<Key, CycNum>;

Dense dmul(const Dense& a, const Dense& b) {
  Dense r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      Key k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
      r[k] += ca * cb;
    }
  for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

CycMatrix companion(std::size_t n, const CycNum& c) {
  CycMatrix m(n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = 1;
  m(0, n - 1) = c;
  return m;
}

}  // namespace

TEST_SUITE("ratfunc") {
  TEST_CASE("normalization and substitution [TRIVIAL]") {
    auto v = wbtest::vars("x y");
    CHECK(P(*v, "(x+y)^2/(x+y)").equals(P(*v, "x+y")));
    auto s = subst(*v, {"1/(x*y)", "y"});
    CHECK(s.apply(P(*v, "x*y")).equals(P(*v, "1/x")));
    CHECK(P(*v, "1/(x*y)").is_monomial());
    CHECK_FALSE(P(*v, "x/(x+1)").is_polynomial());
  }

  TEST_CASE("norm form of the w-display against a dense expansion oracle [DERIVED]") {
    auto v = wbtest::vars("w1 w3 w4");
    RatFunc lhs = P(*v, "(w1+w3+w4)*(w1+zeta*w3+zeta^2*w4)*(w1+zeta^2*w3+zeta*w4)");
    CHECK(lhs.equals(P(*v, "w1^3+w3^3+w4^3-3*w1*w3*w4")));
    const CycNum z = CycNum::zeta(1), z2 = CycNum::zeta(2);
    Dense a{{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}};
    Dense b{{{1, 0, 0}, 1}, {{0, 1, 0}, z}, {{0, 0, 1}, z2}};
    Dense c{{{1, 0, 0}, 1}, {{0, 1, 0}, z2}, {{0, 0, 1}, z}};
    Dense prod = dmul(dmul(a, b), c);
    SparsePoly got = lhs.num() * lhs.den().constant_value()->inv();
    REQUIRE(got.size() == prod.size());
    for (const auto& [k, coef] : prod) {
      Mono m{k[0], k[1], k[2]};
      auto it = got.terms().find(m);
      REQUIRE(it != got.terms().end());
      CHECK(it->second == coef);
    }
  }

  TEST_CASE("field identities on random rational functions [DERIVED]") {
    auto v = wbtest::vars("a b c");
    std::mt19937_64 rng(wbtest::seed());
    auto rnd = [&] {
      SparsePoly p(3);
      for (int t = 0; t < 3; ++t) {
        Mono m{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 2)};
        p.add_term(m, CycNum::eta(static_cast<long>(rng() % 9)) * CycNum(1 + static_cast<long>(rng() % 3)));
      }
      return p;
    };
    for (int t = 0; t < 10; ++t) {
      RatFunc f(rnd(), rnd() + SparsePoly::constant(3, 1)), g(rnd(), rnd() + SparsePoly::constant(3, 2));
      if (f.is_zero() || g.is_zero()) continue;
      CHECK(((f + g) * (f - g)).equals(f * f - g * g));
      CHECK((f / g * g).equals(f));
      CHECK((f * f.inv()).equals(RatFunc::constant(3, 1)));
    }
  }

  TEST_CASE("G(3) on x-variables satisfies every relation [PAPER]") {
    auto g = wb::paper::record(243, 3);
    REQUIRE(g);
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= g->rep[0].dim(); ++i) names.push_back("x" + std::to_string(i));
    auto v = make_vars(names);
    CHECK(verify_action(linear_action(g->rep), g->pres, *v).ok());
  }

  TEST_CASE("G(65) on y-variables satisfies every relation [PAPER]") {
    auto g = wb::paper::record(243, 65);
    REQUIRE(g);
    auto v = wbtest::vars("y11 y12 y13 y21 y22 y23 y31 y32 y33");
    Action act = {
        subst(*v, {"y21", "y22", "y23", "y31", "y32", "y33", "y11", "y12", "y13"}),
        subst(*v, {"y12", "1/(y11*y12)", "y11*y12*y13", "y22", "1/(y21*y22)", "zeta*y21*y22*y23", "y32",
                   "1/(y31*y32)", "zeta^2*y31*y32*y33"}),
        subst(*v, {"zeta^2*y11", "zeta^2*y12", "zeta^2*y13", "zeta^2*y21", "zeta^2*y22", "zeta^2*y23",
                   "zeta^2*y31", "zeta^2*y32", "zeta^2*y33"}),
        subst(*v, {"y11", "y12", "y13", "y21", "y22", "zeta*y23", "y31", "y32", "zeta^2*y33"}),
        subst(*v, {"y11", "y12", "zeta*y13", "y21", "y22", "zeta*y23", "y31", "y32", "zeta*y33"}),
    };
    auto rep = verify_action(act, g->pres, *v);
    CHECK(rep.ok());
    CHECK(rep.relations_checked == 15);
  }

  TEST_CASE("broken action is rejected [TRIVIAL]") {
    auto g = wb::paper::record(243, 3);
    REQUIRE(g);
    auto mats = g->rep;
    mats[3] = CycMatrix::identity(mats[3].dim());
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= mats[0].dim(); ++i) names.push_back("x" + std::to_string(i));
    auto v = make_vars(names);
    auto rep = verify_action(linear_action(mats), g->pres, *v);
    CHECK_FALSE(rep.ok());
  }

  TEST_CASE("p <-> q is birational with a hand-solved inverse [DERIVED]") {
    auto p = wbtest::vars("p1 p2 p3 p4"), q = wbtest::vars("q1 q2 q3 q4");
    // p in terms of q: p3 = q4/q3, p3 p4 = (1-q3-q4)/q3.
    auto f = subst(*q, {"q1", "q2", "q4/q3", "(1-q3-q4)/q4"});
    auto finv = subst(*p, {"p1", "p2", "1/(1+p3+p3*p4)", "p3/(1+p3+p3*p4)"});
    CHECK(verify_birational(f, finv));
    CHECK(verify_birational(Substitution::identity(4), Substitution::identity(4)));
    CHECK_FALSE(verify_birational(f, subst(*p, {"p1", "p2", "1/(1+p3)", "p3/(1+p3+p3*p4)"})));
  }

  TEST_CASE("w <-> s is birational with the averaging inverse [DERIVED]") {
    auto w = wbtest::vars("w1 w2 w3 w4 w5"), s = wbtest::vars("s1 s2 s3 s4 s5");
    auto f = subst(*s, {"(s1+s2+s3)/3", "(s1+zeta*s2+zeta^2*s3)/3", "(1+zeta*s4+zeta^2*s5)/(1+s4+s5)",
                        "(1+zeta^2*s4+zeta*s5)/(1+zeta*s4+zeta^2*s5)", "(s1+zeta^2*s2+zeta*s3)/3"});
    auto finv = subst(*w, {"w1+w2+w5", "w1+zeta^2*w2+zeta*w5", "w1+zeta*w2+zeta^2*w5",
                           "(1+zeta^2*w3+zeta*w3*w4)/(1+w3+w3*w4)", "(1+zeta*w3+zeta^2*w3*w4)/(1+w3+w3*w4)"});
    CHECK(verify_birational(f, finv));
  }

  TEST_CASE("f1 on p from the w-action [PAPER]") {
    auto w = wbtest::vars("w1 w2 w3 w4"), p = wbtest::vars("p1 p2 p3 p4");
    auto f1 = subst(*w, {"zeta^2*w4/w2", "(w1+w3+w4)*(w1+zeta*w3+zeta^2*w4)*(w1+zeta^2*w3+zeta*w4)/w2^2",
                         "zeta^2*w1/w2", "zeta^2*w3/w2"});
    auto def = subst(*w, {"w1", "zeta^2*w4/w2", "w3^2/(w1*w4)", "w1^2/(w3*w4)"});
    CHECK(verify_claimed_image(f1, def, 0, P(*p, "p2")));
    CHECK(verify_claimed_image(f1, def, 1, P(*p, "p3*p4/(p1*p2*(1-3*p3*p4+p3^2*p4+p3*p4^2))")));
    CHECK(verify_claimed_image(f1, def, 2, P(*p, "p4")));
    CHECK(verify_claimed_image(f1, def, 3, P(*p, "1/(p3*p4)")));
    CHECK_FALSE(verify_claimed_image(f1, def, 1, P(*p, "p3*p4/(p1*p2*(1-3*p3*p4+p3^2*p4))")));
  }

  TEST_CASE("f1 on q from the p-action [PAPER]") {
    auto p = wbtest::vars("p1 p2 p3 p4"), q = wbtest::vars("q1 q2 q3 q4");
    auto f1 = subst(*p, {"p2", "p3*p4/(p1*p2*(1-3*p3*p4+p3^2*p4+p3*p4^2))", "p4", "1/(p3*p4)"});
    auto def = subst(*p, {"p1", "p2", "1/(1+p3+p3*p4)", "p3/(1+p3+p3*p4)"});
    CHECK(verify_claimed_image(f1, def, 2, P(*q, "q4")));
    CHECK(verify_claimed_image(f1, def, 3, P(*q, "1-q3-q4")));
    CHECK(verify_claimed_image(
        f1, def, 1,
        P(*q, "q3*q4*(1-q3-q4)/(q1*q2*(q3-2*q3^2+q3^3-5*q3*q4+6*q3^2*q4+q4^2+3*q3*q4^2-q4^3))")));
  }

  TEST_CASE("char_poly of identity and companions [TRIVIAL]") {
    auto one = CycNum(1);
    CHECK(char_poly(CycMatrix::identity(3)) == std::vector<CycNum>{CycNum(-1), CycNum(3), CycNum(-3), one});
    auto z = CycNum::zeta(1);
    CHECK(char_poly(companion(3, z)) == std::vector<CycNum>{-z, CycNum(0), CycNum(0), one});
    CHECK(char_poly(companion(4, CycNum::eta(1))) ==
          std::vector<CycNum>{-CycNum::eta(1), CycNum(0), CycNum(0), CycNum(0), one});
  }

  TEST_CASE("char_poly_generic of a symbolic companion [TRIVIAL]") {
    auto v = wbtest::vars("t");
    RatFunc zero(1), one = RatFunc::constant(1, 1), t = RatFunc::var(1, 0);
    RatMatrix m = {{zero, zero, t}, {one, zero, zero}, {zero, one, zero}};
    auto cp = char_poly_generic(m);
    REQUIRE(cp.size() == 4);
    CHECK(cp[0].equals(-t));
    CHECK(cp[1].is_zero());
    CHECK(cp[2].is_zero());
    CHECK(cp[3].equals(one));
  }

  TEST_CASE("linearize the companion of T^3 - 1 [TRIVIAL]") {
    auto r = linearize_cyclic(companion(3, CycNum(1)), CycNum(1));
    CHECK(r.ok());
  }

  TEST_CASE("linearize conjugates of T^3 - zeta [DERIVED]") {
    std::mt19937_64 rng(wbtest::seed());
    int done = 0;
    while (done < 10) {
      CycMatrix p(3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          p(i, j) = CycNum(static_cast<long>(rng() % 5) - 2) + CycNum::eta(static_cast<long>(rng() % 9)) *
                                                               CycNum(static_cast<long>(rng() % 2));
      auto pinv = p.inverse();
      if (!pinv) continue;
      auto a = p * companion(3, CycNum::zeta(1)) * *pinv;
      CHECK(char_poly(a) == std::vector<CycNum>{-CycNum::zeta(1), CycNum(0), CycNum(0), CycNum(1)});
      CHECK(linearize_cyclic(a, CycNum::zeta(1)).ok());
      ++done;
    }
  }

  TEST_CASE("char poly T^3 - T is rejected [TRIVIAL]") {
    CycMatrix a = CycMatrix::diag({CycNum(0), CycNum(1), CycNum(-1)});
    CHECK_THROWS_AS(linearize_cyclic(a, CycNum(1)), LinearizeError);
  }

  TEST_CASE("lemma4_check on the G(65) orbit element [PAPER]") {
    auto z = wbtest::vars("z1 z2 z3 z4 z5 z6 z7 z8 z9");
    auto f2 = subst(*z, {"z3", "z4", "1/(z1*z3)", "1/(z2*z4)", "z6", "1/(z5*z6)", "z4*z7/z3", "z8/(z3*z4^2)",
                         "z4*z9/z1"});
    CHECK(lemma4_check(P(*z, "1/(z1*z3)"), f2));
    CHECK(lemma4_check(RatFunc::constant(9, 1), f2));
    // z1 -> z3 -> 1/(z1 z3) also has orbit product 1; z9 does not.
    CHECK(lemma4_check(P(*z, "z1"), f2));
    CHECK_FALSE(lemma4_check(P(*z, "z9"), f2));
    CHECK_FALSE(lemma4_check(RatFunc::constant(9, 2), f2));
  }

  TEST_CASE("affine_shape_check [TRIVIAL]") {
    auto v = wbtest::vars("x y");
    auto lin = subst(*v, {"zeta*x", "y"});
    CHECK(affine_shape_check(lin, {0}, Shape::Linear, *v).ok());
    auto sq = subst(*v, {"x^2", "y"});
    CHECK_FALSE(affine_shape_check(sq, {0}, Shape::Affine, *v).ok());
    auto leak = subst(*v, {"x", "x*y"});
    CHECK_FALSE(affine_shape_check(leak, {0}, Shape::Linear, *v).ok());
  }

  TEST_CASE("one-variable descent over a faithful base [DERIVED]") {
    // s1, s2 rotate z1, z2 and z3, z4 independently and scale v by z1 and z3.
    auto v = wbtest::vars("z1 z2 z3 z4 v");
    auto s1 = subst(*v, {"z2", "1/(z1*z2)", "z3", "z4", "z1*v"});
    auto s2 = subst(*v, {"z1", "z2", "z4", "1/(z3*z4)", "z3*v"});
    auto r = linear_descend(s1, s2, 4);
    CHECK(r.ok());
    REQUIRE(r.invariants.size() == 1);
    CHECK(s1.apply(r.invariants[0]).equals(r.invariants[0]));
  }

  TEST_CASE("one-variable descent needs a faithful base action [TRIVIAL]") {
    auto v = wbtest::vars("z1 z2 v");
    auto s1 = subst(*v, {"z2", "1/(z1*z2)", "z1*v"});
    auto s2 = subst(*v, {"z1", "z2", "zeta*v"});
    CHECK_FALSE(linear_descend(s1, s2, 2).ok());
  }
}
