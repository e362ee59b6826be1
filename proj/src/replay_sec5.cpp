#include "replay_engine.hpp"

#include <algorithm>
#include <sstream>

namespace wb::replay::detail {

namespace {

const std::vector<Line> kX = {
    {"f1", "x11 -> x21, x12 -> x22, x13 -> x23, x21 -> x31, x22 -> x32, x23 -> x33, x31 -> x11, x32 -> x12, "
           "x33 -> x13"},
    {"f2", "x11 -> x12, x12 -> x13, x13 -> x11, x21 -> zeta x22, x22 -> zeta x23, x23 -> zeta x21, "
           "x31 -> zeta^2 x32, x32 -> zeta^2 x33, x33 -> zeta^2 x31"},
    {"f3", "x11 -> x11, x12 -> zeta x12, x13 -> zeta^2 x13, x21 -> x21, x22 -> zeta x22, x23 -> zeta^2 x23, "
           "x31 -> x31, x32 -> zeta x32, x33 -> zeta^2 x33"},
    {"f4", "x11 -> x11, x12 -> x12, x13 -> x13, x21 -> zeta x21, x22 -> zeta x22, x23 -> zeta x23, "
           "x31 -> zeta^2 x31, x32 -> zeta^2 x32, x33 -> zeta^2 x33"},
    {"f5", "x11 -> zeta x11, x12 -> zeta x12, x13 -> zeta x13, x21 -> zeta x21, x22 -> zeta x22, "
           "x23 -> zeta x23, x31 -> zeta x31, x32 -> zeta x32, x33 -> zeta x33"},
};

const std::vector<Line> kY = {
    {"f1", "y11 -> y21, y12 -> y22, y13 -> y23, y21 -> y31, y22 -> y32, y23 -> y33, y31 -> y11, y32 -> y12, "
           "y33 -> y13"},
    {"f2", "y11 -> y12, y12 -> 1/(y11 y12), y13 -> y11 y12 y13, y21 -> y22, y22 -> 1/(y21 y22), "
           "y23 -> zeta y21 y22 y23, y31 -> y32, y32 -> 1/(y31 y32), y33 -> zeta^2 y31 y32 y33"},
    {"f3", "y11 -> zeta^2 y11, y12 -> zeta^2 y12, y13 -> zeta^2 y13, y21 -> zeta^2 y21, y22 -> zeta^2 y22, "
           "y23 -> zeta^2 y23, y31 -> zeta^2 y31, y32 -> zeta^2 y32, y33 -> zeta^2 y33"},
    {"f4", "y11 -> y11, y12 -> y12, y13 -> y13, y21 -> y21, y22 -> y22, y23 -> zeta y23, y31 -> y31, "
           "y32 -> y32, y33 -> zeta^2 y33"},
    {"f5", "y11 -> y11, y12 -> y12, y13 -> zeta y13, y21 -> y21, y22 -> y22, y23 -> zeta y23, y31 -> y31, "
           "y32 -> y32, y33 -> zeta y33"},
};

const std::vector<std::string> kYDefs = {"x11/x12", "x12/x13", "x13", "x21/x22", "x22/x23",
                                         "x23",     "x31/x32", "x32/x33", "x33"};
const std::vector<std::string> kYInv = {"y11 y12 y13", "y12 y13", "y13", "y21 y22 y23", "y22 y23",
                                        "y23",         "y31 y32 y33", "y32 y33", "y33"};
const std::vector<std::string> kZDefs = {"y22/y32",         "y32/y12",           "y31 y32/(y21 y22)",
                                         "y11 y12/(y31 y32)", "y11 y22 y31",      "y12 y32/(y21 y22)",
                                         "y13 y23/y33^2",   "y23 y33/y13^2",     "y13 y22 y23 y31 y32 y33"};

const std::vector<std::vector<long>> kDet27 = {
    {0, 0, 0, 1, 1, 0, 0, 0, 0},     {0, -1, 0, 1, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1, -2, 1},
    {0, 0, -1, 0, 0, -1, 0, 0, 0},   {1, 0, -1, 0, 1, -1, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 1, 1, 1},
    {0, 0, 1, -1, 1, 0, 0, 0, 1},    {-1, 1, 1, -1, 0, 1, 0, 0, 1}, {0, 0, 0, 0, 0, 0, -2, 1, 1},
};

const std::vector<Line> kZ = {
    {"f1", "z1 -> z2, z2 -> 1/(z1 z2), z3 -> z4, z4 -> 1/(z3 z4), z5 -> z5/(z1^2 z3), z6 -> z1 z6/z3, "
           "z7 -> z8, z8 -> 1/(z7 z8), z9 -> z4 z9/z1"},
    {"f2", "z1 -> z3, z2 -> z4, z3 -> 1/(z1 z3), z4 -> 1/(z2 z4), z5 -> z6, z6 -> 1/(z5 z6), "
           "z7 -> z4 z7/z3, z8 -> z8/(z3 z4^2), z9 -> z4 z9/z1"},
};

const std::vector<Line> kActZ = {
    {"f1", "z1 -> z2, z2 -> 1/(z1 z2), z3 -> z4, z4 -> 1/(z3 z4), Z5 -> Z5, Z6 -> Z6, Z7 -> Z7, Z8 -> Z8, "
           "z9 -> z4 z9/z1"},
    {"f2", "z1 -> z3, z2 -> z4, z3 -> 1/(z1 z3), z4 -> 1/(z2 z4), Z5 -> Z5, Z6 -> Z6, Z7 -> Z7, Z8 -> Z8, "
           "z9 -> z4 z9/z1"},
};

// Orbit identities for a = 1/(z1 z3) and b = 1/z3.
const std::vector<std::pair<std::string, std::string>> kOrbitA = {
    {"a", "1/(z1 z3)"},       {"f1(a)", "1/(z2 z4)"},     {"f1(f1(a))", "z1 z2 z3 z4"}, {"f2(a)", "z1"},
    {"f2(f2(a))", "z3"},      {"a/f2(a)", "1/(z1^2 z3)"}, {"f2(a)/f2(f2(a))", "z1/z3"},
};
const std::vector<std::pair<std::string, std::string>> kOrbitB = {
    {"b", "1/z3"},            {"f2(b)", "z1 z3"},     {"f2(f2(b))", "1/z1"}, {"f1(b)", "1/z4"},
    {"f1(f1(b))", "z3 z4"},   {"b/f1(b)", "z4/z3"},   {"f1(b)/f1(f1(b))", "1/(z3 z4^2)"},
};

const std::vector<Line> kW = {
    {"f1", "w1 -> w2, w2 -> w5, w3 -> w4, w4 -> 1/(w3 w4), w5 -> w1"},
    {"f2", "w1 -> w2, w2 -> w5, w3 -> w1/(w3 w4 w5), w4 -> w2 w3/w1, w5 -> w1"},
};

const std::vector<Line> kS = {
    {"f1", "s1 -> s1, s2 -> zeta s2, s3 -> zeta^2 s3, s4 -> zeta s4, s5 -> zeta^2 s5"},
    {"f2", "s1 -> s1, s2 -> zeta s2, s3 -> zeta^2 s3, s4 -> zeta^2 (s2+s1 s4+s3 s5)/(s1+s3 s4+s2 s5), "
           "s5 -> zeta (s3+s2 s4+s1 s5)/(s1+s3 s4+s2 s5)"},
};

const std::vector<Line> kT = {
    {"f2", "t1 -> t1, t2 -> t2, t3 -> t3, t4 -> zeta (t2+t1 t4+t2 t3 t5)/(t1+t3 t4+t5), "
           "t5 -> zeta^2 (t2 t3+t4+t1 t5)/(t1+t3 t4+t5)"},
};

const std::vector<std::vector<std::string>> kL = {
    {"t1", "t3", "1"}, {"zeta t2", "zeta t1", "zeta t2 t3"}, {"zeta^2 t2 t3", "zeta^2", "zeta^2 t1"}};
const char* kD = "t1^3+t2-3 t1 t2 t3+t2^2 t3^3";

const std::vector<Line> kU = {
    {"f2", "t1 -> t1, t2 -> t2, t3 -> t3, u4 -> u5, u5 -> (t1^3+t2-3 t1 t2 t3+t2^2 t3^3)/(u4 u5)"}};
const std::vector<Line> kBigU = {
    {"f2", "U1 -> U1, U2 -> U2, U3 -> U3, U4 -> U5, U5 -> (3 U1^2-3 U1 U2+U2^2+U1^3 U3)/(U3 U4 U5)"}};
const std::vector<Line> kV = {{"f2", "v1 -> v1, v2 -> v2, v3 -> v4, v4 -> v5, v5 -> v3"}};

const std::vector<Line> k66 = {
    {"f1", "z1 -> z2, z2 -> 1/(z1 z2), z3 -> z4, z4 -> 1/(z3 z4), z9 -> zeta z4 z9/z1"},
    {"f2", "z1 -> z3, z2 -> z4, z3 -> 1/(z1 z3), z4 -> 1/(z2 z4), z9 -> z4 z9/z1"},
};

const std::vector<Line> kCor = {
    {"f1", "z1 -> z2, z2 -> 1/(z1 z2), z3 -> z4, z4 -> 1/(z3 z4), z9 -> z9"},
    {"f2", "z1 -> z3, z2 -> z4, z3 -> 1/(z1 z3), z4 -> 1/(z2 z4), z9 -> z9"},
};

// x -> y -> z, all monomial.
struct Charts {
  VarSetPtr x;
  Chart Y, Z, XZ;
};

Charts charts(const Script& s) {
  Charts c;
  c.x = rf::make_vars(grid_names("x", 3, 3));
  c.Y = s.chart(c.x, grid_names("y", 3, 3), kYDefs);
  c.Z = s.chart(c.Y.vars, split_names("z1 z2 z3 z4 z5 z6 z7 z8 z9"), kZDefs);
  c.XZ = compose(c.Y, c.Z);
  return c;
}

// Action of every generator of G(id) on z1..z9, through the monomial chart from x.
Level z_level(const Charts& c, int id) {
  Level x = matrix_level(*paper::record(243, id), c.x);
  Level z;
  z.vars = c.Z.vars;
  for (const auto& [g, sub] : x.act) {
    auto t = monomial_transport(sub, c.XZ);
    if (!t) throw ReplayError("G(" + std::to_string(id) + ") " + g + " is not monomial on z");
    z.act[g] = *t;
  }
  return z;
}

void descent_claims(Script& s, const std::string& name, const std::string& ref, const rf::DescentResult& r) {
  s.claim(name + ".group", ref, r.group_ok, r.group_ok ? "" : r.detail);
  s.claim(name + ".hypothesis", ref, r.hypothesis_ok, r.hypothesis_ok ? "" : r.detail);
  s.claim(name + ".invariant", ref, r.invariant_ok, r.invariant_ok ? "" : r.detail);
  s.claim(name + ".birational", ref, r.birational_ok, r.birational_ok ? "" : r.detail);
}

bool order_nine(const Level& l, std::string& d) {
  const std::size_t n = l.vars->size();
  const Substitution id = Substitution::identity(n);
  const Substitution &a = l.at("f1"), &b = l.at("f2");
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < n; ++i) all.push_back(i);
  if (!same_images(a.after(a).after(a), id, all) || !same_images(b.after(b).after(b), id, all)) {
    d = "a generator does not have order 3";
    return false;
  }
  if (!same_images(a.after(b), b.after(a), all)) {
    d = "generators do not commute";
    return false;
  }
  return true;
}

std::vector<std::size_t> range(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

void s5_case1(Script& s) {
  const std::string ref1 = "sec5.case1.step1", ref2 = "sec5.case1.step2", ref3 = "sec5.case1.step3",
                    ref4 = "sec5.case1.step4", ref5 = "sec5.case1.step5";
  Charts c = charts(s);
  Level truth = matrix_level(*paper::record(243, 65), c.x);
  Level x = s.display("step1.x", ref1, truth, kX);

  s.birational("step2.y", ref2, c.Y, c.x->names(), kYInv);
  Level y = s.display("step2.y", ref2, x, c.Y, kY);
  s.fixed_field("step2.z", ref2, {y.at("f3"), y.at("f4"), y.at("f5")}, c.Z, c.Y.vars->names(), -27);
  s.exponent_display("step2.z", ref2, c.Z, c.Y.vars->names(), kDet27);
  Level z = s.display("step2.z", ref2, y, c.Z, kZ);

  // Step 3: orbit identities and the two descents.
  const VarSet& zv = *z.vars;
  RatFunc a = s.parse(zv, "1/(z1 z3)"), b = s.parse(zv, "1/z3");
  rf::ParseEnv env = s.env;
  env.macros["a"] = a;
  env.macros["b"] = b;
  env.functions["f1"] = &z.at("f1");
  env.functions["f2"] = &z.at("f2");
  int k = 0;
  for (const auto* orbit : {&kOrbitA, &kOrbitB}) {
    for (const auto& [lhs, rhs] : *orbit) {
      s.check("step3.orbit" + std::to_string(++k), ref3, [&](std::string& d) {
        bool ok = rf::parse_expr(lhs, zv, env).equals(s.parse(zv, rhs));
        if (!ok) d = lhs + " differs from the display";
        return ok;
      });
    }
  }
  std::vector<std::size_t> base = indices(zv, split_names("z1 z2 z3 z4"));
  s.claim("step3.faithful", ref3, s.faithful_c3c3(z.at("f1"), z.at("f2"), base),
          "some element of <f1, f2> is trivial on k(z1,z2,z3,z4)");
  rf::DescentResult d56 = rf::lemma4_descend(z.at("f2"), z.at("f1"), z.var("z5"), z.var("z6"), a);
  descent_claims(s, "step3.lemma4.z5z6", ref3, d56);
  rf::DescentResult d78 = rf::lemma4_descend(z.at("f1"), z.at("f2"), z.var("z7"), z.var("z8"), b);
  descent_claims(s, "step3.lemma4.z7z8", ref3, d78);
  if (d56.invariants.size() != 2 || d78.invariants.size() != 2) {
    s.claim("step3.actz", ref3, false, "descent produced no invariants");
    return;
  }
  auto var = [&](const char* n) { return RatFunc::var(zv.size(), z.var(n)); };
  Chart actc = chart_from(z.vars, split_names("z1 z2 z3 z4 Z5 Z6 Z7 Z8 z9"),
                          {var("z1"), var("z2"), var("z3"), var("z4"), d56.invariants[0], d56.invariants[1],
                           d78.invariants[0], d78.invariants[1], var("z9")});
  Level act = s.display("step3.actz", ref3, z, actc, kActZ);

  // Step 4.
  Chart wc = s.chart(act.vars, split_names("w1 w2 w3 w4 w5"), {"z4 z9/z1", "z9/(z1 z2 z3)", "z3", "z4", "z9"});
  s.birational("step4.w", ref4, wc, split_names("z1 z2 z3 z4 z9"), {"w4 w5/w1", "w1/(w2 w3 w4)", "w3", "w4", "w5"});
  Level w = s.display("step4.w", ref4, act, wc, kW);

  Chart sc = s.chart(w.vars, split_names("s1 s2 s3 s4 s5"),
                     {"w1+w2+w5", "w1+zeta^2 w2+zeta w5", "w1+zeta w2+zeta^2 w5",
                      "(1+zeta^2 w3+zeta w3 w4)/(1+w3+w3 w4)", "(1+zeta w3+zeta^2 w3 w4)/(1+w3+w3 w4)"});
  s.birational("step4.s", ref4, sc, w.vars->names(),
               {"(s1+s2+s3)/3", "(s1+zeta s2+zeta^2 s3)/3", "(1+zeta s4+zeta^2 s5)/(1+s4+s5)",
                "(1+zeta^2 s4+zeta s5)/(1+zeta s4+zeta^2 s5)", "(s1+zeta^2 s2+zeta s3)/3"});
  Level sl = s.display("step4.s", ref4, w, sc, kS);

  Chart tc = s.chart(sl.vars, split_names("t1 t2 t3 t4 t5"), {"s1", "s2^3", "s3/s2^2", "s2^2 s4", "s2 s5"});
  s.fixed_field("step4.t", ref4, {sl.at("f1")}, tc, sl.vars->names(), std::nullopt);
  Level t = s.display("step4.t", ref4, sl, tc, kT);

  // Step 5.
  const VarSet& tv = *t.vars;
  rf::RatMatrix shown(3, std::vector<RatFunc>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) shown[i][j] = s.parse(tv, kL[i][j]);
  std::vector<std::size_t> t45 = indices(tv, split_names("t4 t5"));
  s.check("step5.matrix", ref5, [&](std::string& d) {
    rf::RatMatrix got = rf::fractional_linear_matrix(t.at("f2"), t45);
    RatFunc lambda = got[0][0] / shown[0][0];
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (!got[i][j].equals(lambda * shown[i][j])) {
          d = "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") differs";
          return false;
        }
    return true;
  });
  RatFunc D = s.parse(tv, kD);
  s.check("step5.charpoly", ref5, [&](std::string& d) {
    auto cp = rf::char_poly_generic(shown);
    bool ok = cp.size() == 4 && cp[0].equals(-D) && cp[1].is_zero() && cp[2].is_zero() &&
              cp[3].equals(RatFunc::constant(tv.size(), 1));
    if (!ok) d = "characteristic polynomial is not T^3 - D";
    return ok;
  });
  rf::LinearizeResult lin;
  try {
    lin = rf::linearize_cyclic(shown, D, tv.size(), t45);
  } catch (const std::exception& e) {
    s.claim("step5.linearize", ref5, false, e.what());
    return;
  }
  s.claim("step5.linearize", ref5, lin.ok(), lin.ok() ? "" : "shift, last or birational check failed");
  Chart uc = chart_from(t.vars, split_names("t1 t2 t3 u4 u5"),
                        {RatFunc::var(5, 0), RatFunc::var(5, 1), RatFunc::var(5, 2), lin.y.at(0), lin.y.at(1)});
  Level u = s.display("step5.u", ref5, t, uc, kU);

  Chart bigu = s.chart(u.vars, split_names("U1 U2 U3 U4 U5"), {"(t1 t3-1)/t3", "(t2 t3^3-1)/t3", "t3", "u4", "u5"});
  s.birational("step5.U", ref5, bigu, u.vars->names(), {"(U1 U3+1)/U3", "(U2 U3+1)/U3^3", "U3", "U4", "U5"});
  Level ul = s.display("step5.U", ref5, u, bigu, kBigU);
  s.check("step5.U3linear", ref5, [&](std::string& d) {
    const RatFunc& img = ul.at("f2").image(ul.var("U5"));
    std::size_t u3 = ul.var("U3");
    // Monomial factors are stored with negative exponents; move them back to whichever side they belong.
    long nlo = img.num().min_exps()[u3], dlo = img.den().min_exps()[u3];
    long shift = nlo - dlo;
    long pdeg = img.num().max_exps()[u3] - nlo + std::max(0L, shift);
    long qdeg = img.den().max_exps()[u3] - dlo + std::max(0L, -shift);
    bool ok = pdeg <= 1 && qdeg <= 1;
    if (!ok) d = "f2(U5) is not a ratio of polynomials linear in U3";
    return ok;
  });

  Chart vc = s.chart(ul.vars, split_names("v1 v2 v3 v4 v5"),
                     {"U1", "U2", "(3 U1^2-3 U1 U2+U2^2+U1^3 U3)/(U3 U4 U5)", "U4", "U5"});
  s.birational("step5.v", ref5, vc, ul.vars->names(),
               {"v1", "v2", "(3 v1^2-3 v1 v2+v2^2)/(v3 v4 v5-v1^3)", "v4", "v5"});
  Level v = s.display("step5.v", ref5, ul, vc, kV);
  s.check("step5.linear", ref5, [&](std::string& d) {
    auto rep = rf::affine_shape_check(v.at("f2"), indices(*v.vars, split_names("v3 v4 v5")), rf::Shape::Linear,
                                      *v.vars);
    if (!rep.ok()) d = "f2 is not linear on v3, v4, v5";
    return rep.ok();
  });
}

void s5_case2(Script& s) {
  const std::string ref = "sec5.case2";
  Charts c = charts(s);
  Level x66 = matrix_level(*paper::record(243, 66), c.x);
  s.display("z", ref, x66, c.XZ, k66);

  Level z = z_level(c, 66), z65 = z_level(c, 65);
  for (const char* g : {"f3", "f4", "f5"})
    s.claim(std::string(g) + ".trivial", ref, same_images(z.at(g), Substitution::identity(9), range(9)),
            std::string(g) + " moves some z_i");
  std::vector<std::size_t> base = indices(*z.vars, split_names("z1 z2 z3 z4"));
  for (const char* g : {"f1", "f2"})
    s.claim(std::string("base.") + g, ref, same_images(z.at(g), z65.at(g), base),
            "action on z1..z4 differs from G(65)");

  // f1 sends z7 to zeta z8; rescaling z8 puts the pair in the form needed for the descent.
  Chart nc = s.chart(z.vars, split_names("z1 z2 z3 z4 z5 z6 z7 z8 z9"),
                     {"z1", "z2", "z3", "z4", "z5", "z6", "z7", "zeta z8", "z9"});
  Substitution ninv = inverse_of(nc, {"z1", "z2", "z3", "z4", "z5", "z6", "z7", "zeta^2 z8", "z9"}, s.env);
  Level n;
  n.vars = nc.vars;
  for (const char* g : {"f1", "f2"}) n.act[g] = transport(z.at(g), nc, ninv);

  const VarSet& nv = *n.vars;
  RatFunc a = s.parse(nv, "1/(z1 z3)"), b = s.parse(nv, "1/z3");
  descent_claims(s, "lemma4.z5z6", ref, rf::lemma4_descend(n.at("f2"), n.at("f1"), n.var("z5"), n.var("z6"), a));
  descent_claims(s, "lemma4.z7z8", ref, rf::lemma4_descend(n.at("f1"), n.at("f2"), n.var("z7"), n.var("z8"), b));
  descent_claims(s, "linear.z9", ref, rf::linear_descend(n.at("f1"), n.at("f2"), n.var("z9")));

  // The same one-variable descent for z9 over G(65) leaves both fields as k(z1,...,z4)^G with five
  // invariant variables adjoined.
  descent_claims(s, "linear.z9.G65", ref, rf::linear_descend(z65.at("f1"), z65.at("f2"), z65.var("z9")));
}

void s5_cor1(Script& s) {
  const std::string ref = "sec5.cor1";
  Charts c = charts(s);
  Level z65 = z_level(c, 65);
  VarSetPtr cv = rf::make_vars(split_names("z1 z2 z3 z4 z9"));
  Level shown;
  shown.vars = cv;
  for (const auto& line : kCor) {
    Substitution sub = Substitution::identity(5);
    std::stringstream ss(line.maps);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto arrow = item.find("->");
      auto lhs = split_names(item.substr(0, arrow)).at(0);
      sub.set_image(*cv->index(lhs), s.parse(*cv, item.substr(arrow + 2)));
    }
    shown.act[line.gen] = sub;
  }
  s.check("group", ref, [&](std::string& d) { return order_nine(shown, d); });
  s.claim("faithful", ref, s.faithful_c3c3(shown.at("f1"), shown.at("f2"), {0, 1, 2, 3}),
          "some element acts trivially");

  // Restrict G(65) on z1..z4 by evaluating through the common variable names.
  std::vector<std::size_t> zi = indices(*z65.vars, split_names("z1 z2 z3 z4"));
  for (const char* g : {"f1", "f2"})
    s.check(std::string("base.") + g, ref, [&, g](std::string& d) {
      for (std::size_t k = 0; k < 4; ++k) {
        RatFunc img = z65.at(g).image(zi[k]);
        std::vector<RatFunc> into(9, RatFunc::constant(5, 1));
        for (std::size_t m = 0; m < 4; ++m) into[zi[m]] = RatFunc::var(5, m);
        for (std::size_t m = 0; m < 9; ++m)
          if (img.involves(m) && std::find(zi.begin(), zi.end(), m) == zi.end()) {
            d = "G(65) image involves z5..z9";
            return false;
          }
        if (!Substitution(9, 5, into).apply(img).equals(shown.at(g).image(k))) {
          d = "differs from G(65) at z" + std::to_string(k + 1);
          return false;
        }
      }
      return true;
    });
  s.claim("z9.fixed", ref,
          shown.at("f1").image(4).equals(RatFunc::var(5, 4)) && shown.at("f2").image(4).equals(RatFunc::var(5, 4)),
          "z9 is moved");
  descent_claims(s, "linear.z9.G65", ref, rf::linear_descend(z65.at("f1"), z65.at("f2"), z65.var("z9")));
}

}  // namespace wb::replay::detail
