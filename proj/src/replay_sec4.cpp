#include "replay_engine.hpp"

#include <sstream>

namespace wb::replay::detail {

namespace {

const std::vector<Line> kX = {
    {"f1", "x11 -> x12, x12 -> x13, x13 -> x11, x21 -> x21, x22 -> x22, x23 -> zeta^2 x23"},
    {"f2", "x11 -> x11, x12 -> x12, x13 -> zeta x13, x21 -> x22, x22 -> x23, x23 -> x21"},
    {"f3", "x11 -> x11, x12 -> zeta x12, x13 -> zeta^2 x13, x21 -> x21, x22 -> zeta x22, x23 -> zeta^2 x23"},
    {"f4", "x11 -> zeta x11, x12 -> zeta x12, x13 -> zeta x13, x21 -> x21, x22 -> x22, x23 -> x23"},
    {"f5", "x11 -> x11, x12 -> x12, x13 -> x13, x21 -> zeta x21, x22 -> zeta x22, x23 -> zeta x23"},
};

const std::vector<Line> kY = {
    {"f1", "y11 -> y12, y12 -> 1/(y11 y12), y13 -> y11 y12 y13, y21 -> y21, y22 -> zeta y22, y23 -> zeta^2 y23"},
    {"f2", "y11 -> y11, y12 -> zeta^2 y12, y13 -> zeta y13, y21 -> y22, y22 -> 1/(y21 y22), y23 -> y21 y22 y23"},
    {"f3", "y11 -> zeta^2 y11, y12 -> zeta^2 y12, y13 -> zeta^2 y13, y21 -> zeta^2 y21, y22 -> zeta^2 y22, "
           "y23 -> zeta^2 y23"},
    {"f4", "y11 -> y11, y12 -> y12, y13 -> zeta y13, y21 -> y21, y22 -> y22, y23 -> y23"},
    {"f5", "y11 -> y11, y12 -> y12, y13 -> y13, y21 -> y21, y22 -> y22, y23 -> zeta y23"},
};

const std::vector<Line> kZ = {
    {"f1", "z1 -> zeta^2 z1/z2, z2 -> z1 z3 z4/z2^2, z3 -> z3/z2, z4 -> zeta z4/z2"},
    {"f2", "z1 -> z3, z2 -> zeta^2 z2, z3 -> z4, z4 -> z1"},
};

const std::vector<Line> kW = {
    {"f1", "w1 -> zeta^2 w4/w2, w2 -> (w1+w3+w4)(w1+zeta w3+zeta^2 w4)(w1+zeta^2 w3+zeta w4)/w2^2, "
           "w3 -> zeta^2 w1/w2, w4 -> zeta^2 w3/w2"},
    {"f2", "w1 -> w1, w2 -> zeta^2 w2, w3 -> zeta w3, w4 -> zeta^2 w4"},
};

const std::vector<Line> kP = {
    {"f1", "p1 -> p2, p2 -> p3 p4/(p1 p2 (1-3 p3 p4+p3^2 p4+p3 p4^2)), p3 -> p4, p4 -> 1/(p3 p4)"},
};

const std::vector<Line> kQ = {
    {"f1", "q1 -> q2, q2 -> q3 q4 (1-q3-q4)/(q1 q2 (q3-2 q3^2+q3^3-5 q3 q4+6 q3^2 q4+q4^2+3 q3 q4^2-q4^3)), "
           "q3 -> q4, q4 -> 1-q3-q4"},
};

const std::vector<Line> kR = {
    {"f1", "r1 -> r2, r2 -> (1+r3^3-3 r3 r4+r4^3)/(3 r1 r2 (3 r3 r4-r4^3 (zeta+2)+r3^3 (zeta-1))), "
           "r3 -> zeta r3, r4 -> zeta^2 r4"},
};

const std::vector<Line> kS = {
    {"f1", "s1 -> s2, s2 -> s3^3/(3 s1 s2 (3 s3 s4-s4^3 (zeta+2)+s3^3 (zeta-1))), s3 -> zeta s3, "
           "s4 -> zeta^2 s4"},
};

const std::vector<Line> kT = {{"f1", "t1 -> t2, t2 -> t3, t3 -> t1, t4 -> zeta^2 t4"}};

const char* kS2 = "zeta r3 r2/(1+zeta r3+zeta^2 r4)";
const char* kT3 = "(s3/s4)^3/(3 s1 s2 (3 (s3/s4) (1/s4)-(zeta+2)+(s3/s4)^3 (zeta-1)))";

const std::vector<Line> kTwisted = {{"f1", "t1 -> zeta^(-j) t2, t2 -> t3, t3 -> zeta^j t1, t4 -> zeta^2 t4"}};
const std::vector<Line> kU = {{"f1", "u1 -> u2, u2 -> u3, u3 -> u1, u4 -> zeta^2 u4"}};

struct Chain {
  VarSetPtr x;
  Chart Y, Z, W, P, Q, R, S, T;
};

Chain build_chain(const Script& s) {
  Chain c;
  c.x = rf::make_vars(grid_names("x", 2, 3));
  c.Y = s.chart(c.x, grid_names("y", 2, 3), {"x11/x12", "x12/x13", "x13", "x21/x22", "x22/x23", "x23"});
  c.Z = s.chart(c.Y.vars, split_names("z1 z2 z3 z4"), {"1/(y11 y21 y22)", "y12/y11", "y21/y11", "y22/y11"});
  c.W = s.chart(c.Z.vars, split_names("w1 w2 w3 w4"),
                {"(z1+z3+z4)/3", "z2", "(z1+zeta^2 z3+zeta z4)/3", "(z1+zeta z3+zeta^2 z4)/3"});
  c.P = s.chart(c.W.vars, split_names("p1 p2 p3 p4"), {"w1", "zeta^2 w4/w2", "w3^2/(w1 w4)", "w1^2/(w3 w4)"});
  c.Q = s.chart(c.P.vars, split_names("q1 q2 q3 q4"), {"p1", "p2", "1/(1+p3+p3 p4)", "p3/(1+p3+p3 p4)"});
  c.R = s.chart(c.Q.vars, split_names("r1 r2 r3 r4"),
                {"q1", "q2", "q3+zeta^2 q4+zeta (1-q3-q4)", "q3+zeta q4+zeta^2 (1-q3-q4)"});
  c.S = s.chart(c.R.vars, split_names("s1 s2 s3 s4"), {"r3 r1/(1+r3+r4)", kS2, "r3", "r4"});
  c.T = s.chart(c.S.vars, split_names("t1 t2 t3 t4"), {"s1", "s2", kT3, "s3/s4"});
  return c;
}

const std::vector<std::string> kYInv = {"y11 y12 y13", "y12 y13", "y13", "y21 y22 y23", "y22 y23", "y23"};

// Hypotheses for the one-variable affine reductions on y13 and y23: each maps to a multiple of itself
// over the field of the remaining variables, without involving the other.
bool affine_pair(const Level& y, std::string& d) {
  std::size_t a = y.var("y13"), b = y.var("y23");
  for (const auto& [g, s] : y.act) {
    if (!rf::affine_shape_check(s, {a, b}, rf::Shape::Linear, *y.vars).ok() || s.image(a).involves(b) ||
        s.image(b).involves(a)) {
      d = g + " is not of the required shape";
      return false;
    }
  }
  return true;
}

// Hypotheses of the linear reduction for <f1> on k(t4)(t1, t2, t3).
bool hk_t(const Level& t, std::string& d) {
  const auto& f = t.at("f1");
  std::size_t n = t.vars->size();
  bool shape = rf::affine_shape_check(f, {0, 1, 2}, rf::Shape::Linear, *t.vars).ok();
  bool faithful = !f.image(3).equals(RatFunc::var(n, 3));
  if (!shape) d = "f1 is not linear on the first three variables";
  else if (!faithful) d = "f1 acts trivially on the base";
  return shape && faithful;
}

Level apply_level(const Level& x, const Chart& c, const Substitution& inv) {
  Level out;
  out.vars = c.vars;
  for (const auto& [g, s] : x.act) out.act[g] = transport(s, c, inv);
  return out;
}

}  // namespace

void s4_case1(Script& s) {
  const std::string ref1 = "sec4.case1.step1", ref2 = "sec4.case1.step2", ref3 = "sec4.case1.step3",
                    ref4 = "sec4.case1.step4";
  Chain c = build_chain(s);
  auto rec = paper::record(243, 3);
  Level truth = matrix_level(*rec, c.x);
  Level x = s.display("step1.x", ref1, truth, kX);

  s.birational("step2.y", ref2, c.Y, c.x->names(), kYInv);
  Level y = s.display("step2.y", ref2, x, c.Y, kY);
  s.check("step2.affine", ref2, [&](std::string& d) { return affine_pair(y, d); });

  std::vector<std::size_t> y4 = indices(*c.Y.vars, split_names("y11 y12 y21 y22"));
  for (const char* g : {"f4", "f5"})
    s.check(std::string("step3.") + g + ".trivial", ref3, [&, g](std::string& d) {
      bool ok = same_images(y.at(g), Substitution::identity(y.vars->size()), y4);
      if (!ok) d = std::string(g) + " moves y11, y12, y21 or y22";
      return ok;
    });
  s.fixed_field("step3.z", ref3, {y.at("f3")}, c.Z, split_names("y11 y12 y21 y22"), -3);
  Level z = s.display("step3.z", ref3, y, c.Z, kZ);

  s.birational("step3.w", ref3, c.W, c.Z.vars->names(), {"w1+w3+w4", "w2", "w1+zeta w3+zeta^2 w4", "w1+zeta^2 w3+zeta w4"});
  Level w = s.display("step3.w", ref3, z, c.W, kW);

  s.fixed_field("step3.p", ref3, {w.at("f2")}, c.P, c.W.vars->names(), std::nullopt);
  Level p = s.display("step3.p", ref3, w, c.P, kP);

  s.birational("step4.q", ref4, c.Q, c.P.vars->names(), {"q1", "q2", "q4/q3", "(1-q3-q4)/q4"});
  Level q = s.display("step4.q", ref4, p, c.Q, kQ);

  s.birational("step4.r", ref4, c.R, c.Q.vars->names(),
               {"r1", "r2", "(1+r3+r4)/3", "(1+zeta r3+zeta^2 r4)/3"});
  Level r = s.display("step4.r", ref4, q, c.R, kR);

  s.check("step4.s2", ref4, [&](std::string& d) {
    rf::ParseEnv env = s.env;
    env.functions["f1"] = &r.at("f1");
    bool ok = rf::parse_expr("f1(r3 r1/(1+r3+r4))", *r.vars, env).equals(s.parse(*r.vars, kS2));
    if (!ok) d = "f1(s1) differs from the displayed s2";
    return ok;
  });
  s.birational("step4.s", ref4, c.S, c.R.vars->names(),
               {"s1 (1+s3+s4)/s3", "s2 (1+zeta s3+zeta^2 s4)/(zeta s3)", "s3", "s4"});
  Level sl = s.display("step4.s", ref4, r, c.S, kS);

  s.check("step4.t3", ref4, [&](std::string& d) {
    rf::ParseEnv env = s.env;
    env.functions["f1"] = &sl.at("f1");
    bool ok = rf::parse_expr("f1(s2)", *sl.vars, env).equals(s.parse(*sl.vars, kT3));
    if (!ok) d = "f1(s2) differs from the displayed t3";
    return ok;
  });
  const std::string den = "(t4^3/(3 t1 t2 t3)+zeta+2-(zeta-1) t4^3)";
  s.birational("step4.t", ref4, c.T, c.S.vars->names(), {"t1", "t2", "3 t4^2/" + den, "3 t4/" + den});
  Level t = s.display("step4.t", ref4, sl, c.T, kT);

  s.check("step4.hk", ref4, [&](std::string& d) { return hk_t(t, d); });
  s.check("step4.t4cubed", ref4, [&](std::string& d) {
    std::size_t n = t.vars->size();
    RatFunc t4 = RatFunc::var(n, 3);
    bool ok = t.at("f1").apply(t4.pow(3)).equals(t4.pow(3)) && !t.at("f1").apply(t4).equals(t4);
    if (!ok) d = "t4^3 is not a generator of the fixed field of k(t4)";
    return ok;
  });
}

void s4_case2(Script& s) {
  const std::string ref = "sec4.case2";
  Chain c = build_chain(s);
  Chart yc = c.Y;
  Substitution yinv = inverse_of(yc, kYInv, s.env);
  auto base = paper::record(243, 3);
  Level y3 = apply_level(matrix_level(*base, c.x), yc, yinv);
  std::vector<std::size_t> y4 = indices(*yc.vars, split_names("y11 y12 y21 y22"));

  // f1 on the t-variables for G(3), as verified in case 1.
  Level t3;
  t3.vars = c.T.vars;
  {
    std::vector<RatFunc> im;
    for (const auto& [lhs, rhs] : std::vector<std::pair<std::string, std::string>>{
             {"t1", "t2"}, {"t2", "t3"}, {"t3", "t1"}, {"t4", "zeta^2 t4"}})
      im.push_back(s.parse(*c.T.vars, rhs));
    t3.act["f1"] = Substitution(4, 4, im);
  }

  for (int i = 3; i <= 9; ++i) {
    const long j = (i == 4 || i == 5 || i == 7) ? 1 : 0;
    const std::string g = "G" + std::to_string(i);
    auto rec = paper::record(243, i);
    Level yi = apply_level(matrix_level(*rec, c.x), yc, yinv);

    for (const char* f : {"f2", "f3"})
      s.check(g + "." + f + ".same", ref, [&, f](std::string& d) {
        bool ok = same_images(yi.at(f), y3.at(f), y4);
        if (!ok) d = std::string(f) + " differs from G(3) on k(y11,y12,y21,y22)";
        return ok;
      });
    for (const char* f : {"f4", "f5"})
      s.check(g + "." + f + ".trivial", ref, [&, f](std::string& d) {
        bool ok = same_images(yi.at(f), Substitution::identity(yi.vars->size()), y4);
        if (!ok) d = std::string(f) + " moves k(y11,y12,y21,y22)";
        return ok;
      });

    // f1 of G(i) = f1 of G(3) composed with a diagonal scaling tau.
    const Substitution& f13 = y3.at("f1");
    Substitution tau = f13.after(f13).after(yi.at("f1"));
    s.check(g + ".tau", ref, [&](std::string& d) {
      bool ok = same_images(f13.after(tau), yi.at("f1"), y4) && diag_scalars(tau, y4).has_value();
      if (!ok) d = "f1 is not a diagonal twist of the G(3) action";
      return ok;
    });
    std::optional<Substitution> sc = tau;
    for (const Chart* ch : {&c.Z, &c.W, &c.P, &c.Q, &c.R, &c.S, &c.T})
      if (sc) sc = scale_through(*sc, *ch);
    s.claim(g + ".scaling", ref, sc.has_value(), sc ? "" : "twist is not diagonal on the t-variables");
    if (!sc) continue;

    s.env.int_params["j"] = j;
    Level tw;
    tw.vars = c.T.vars;
    Substitution shown = Substitution::identity(4);
    for (const auto& line : kTwisted) {
      std::stringstream ss(line.maps);
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto arrow = item.find("->");
        std::string lhs = item.substr(0, arrow), rhs = item.substr(arrow + 2);
        lhs.erase(0, lhs.find_first_not_of(' '));
        lhs.erase(lhs.find_last_not_of(' ') + 1);
        std::size_t v = *c.T.vars->index(lhs);
        s.check(g + ".f1." + lhs, ref, [&](std::string& d) {
          RatFunc claimed = s.parse(*c.T.vars, rhs);
          shown.set_image(v, claimed);
          RatFunc got = t3.at("f1").apply(sc->apply(RatFunc::var(4, v)));
          bool ok = got.equals(claimed);
          if (!ok) d = "twisted image differs from the display";
          return ok;
        });
      }
    }
    tw.act["f1"] = shown;
    if (j == 0) {
      s.check(g + ".hk", ref, [&](std::string& d) { return hk_t(tw, d); });
    } else {
      Chart u = s.chart(c.T.vars, split_names("u1 u2 u3 u4"), {"zeta t1", "t2", "t3", "t4"});
      s.birational(g + ".u", ref, u, c.T.vars->names(), {"u1/zeta", "u2", "u3", "u4"});
      Level ul = s.display(g + ".u", ref, tw, u, kU);
      s.check(g + ".hk", ref, [&](std::string& d) { return hk_t(ul, d); });
    }
  }
  s.env.int_params.erase("j");
}

}  // namespace wb::replay::detail
