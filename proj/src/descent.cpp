#include "workbench/linearize.hpp"

#include <set>

namespace wb::rf {

bool lemma4_check(const RatFunc& a, const Substitution& s2) {
  RatFunc a1 = s2.apply(a);
  RatFunc a2 = s2.apply(a1);
  return (a * a1 * a2).equals(RatFunc::constant(a.nvars(), 1));
}

namespace {

using SubExps = std::set<Mono>;

SubExps listed_exponents(const SparsePoly& p, const std::vector<std::size_t>& vars) {
  SubExps out;
  for (const auto& [m, c] : p.terms()) {
    Mono sub;
    for (auto v : vars) sub.push_back(m[v]);
    out.insert(sub);
  }
  return out;
}

bool degree_at_most_one(const SubExps& s, bool allow_constant) {
  for (const auto& e : s) {
    int ones = 0;
    for (auto x : e) {
      if (x == 1) ++ones;
      else if (x != 0) return false;
    }
    if (ones > 1 || (ones == 0 && !allow_constant)) return false;
  }
  return true;
}

bool involves_any(const RatFunc& r, const std::vector<std::size_t>& vars) {
  for (auto v : vars)
    if (r.involves(v)) return true;
  return false;
}

Substitution extend(const Substitution& s, std::size_t total, const std::map<std::size_t, RatFunc>& extra) {
  std::vector<RatFunc> im;
  for (std::size_t i = 0; i < s.src_vars(); ++i) im.push_back(widen(s.image(i), total));
  for (std::size_t i = s.src_vars(); i < total; ++i) {
    auto it = extra.find(i);
    im.push_back(it == extra.end() ? RatFunc::var(total, i) : it->second);
  }
  return {total, total, std::move(im)};
}

bool order_three_commuting(const Substitution& s1, const Substitution& s2) {
  Substitution id = Substitution::identity(s1.src_vars());
  return substitutions_equal(s1.after(s1).after(s1), id) && substitutions_equal(s2.after(s2).after(s2), id) &&
         substitutions_equal(s1.after(s2), s2.after(s1));
}

std::vector<Substitution> group_elements(const Substitution& s1, const Substitution& s2) {
  std::vector<Substitution> out;
  Substitution p = Substitution::identity(s1.src_vars());
  for (int i = 0; i < 3; ++i) {
    Substitution q = p;
    for (int j = 0; j < 3; ++j) {
      out.push_back(q);
      q = q.after(s2);
    }
    p = p.after(s1);
  }
  return out;
}

RatFunc trace(const std::vector<Substitution>& elems, const RatFunc& r) {
  RatFunc s(r.nvars());
  for (const auto& g : elems) s = s + g.apply(r);
  return s;
}

// 1, then each base variable, then products of two base variables.
std::vector<RatFunc> multipliers(std::size_t nvars, const std::vector<std::size_t>& base) {
  std::vector<RatFunc> out{RatFunc::constant(nvars, 1)};
  for (auto v : base) out.push_back(RatFunc::var(nvars, v));
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j)
      out.push_back(RatFunc::var(nvars, base[i]) * RatFunc::var(nvars, base[j]));
  return out;
}

}  // namespace

ShapeReport affine_shape_check(const Substitution& s, const std::vector<std::size_t>& vars, Shape shape,
                               const VarSet& names) {
  ShapeReport rep;
  rep.base_preserved = true;
  rep.shape_ok = true;
  std::set<std::size_t> listed(vars.begin(), vars.end());
  for (std::size_t v = 0; v < s.src_vars(); ++v) {
    const RatFunc& im = s.image(v);
    if (!listed.count(v)) {
      if (involves_any(im, vars)) {
        rep.base_preserved = false;
        rep.offenders.push_back(names.name(v) + ": leaves the base field");
      }
      continue;
    }
    SubExps num = listed_exponents(im.num(), vars);
    SubExps den = listed_exponents(im.den(), vars);
    Mono zero(vars.size(), 0);
    bool den_in_base = den.size() == 1 && *den.begin() == zero;
    bool ok = false;
    switch (shape) {
      case Shape::Affine: ok = den_in_base && degree_at_most_one(num, true); break;
      case Shape::Linear: ok = den_in_base && degree_at_most_one(num, false); break;
      case Shape::Fractional: ok = degree_at_most_one(num, true) && degree_at_most_one(den, true); break;
      case Shape::Monomial: ok = num.size() == 1 && den.size() == 1; break;
    }
    if (!ok) {
      rep.shape_ok = false;
      rep.offenders.push_back(names.name(v) + ": wrong shape");
    }
  }
  return rep;
}

DescentResult lemma4_descend(const Substitution& s1, const Substitution& s2, std::size_t x, std::size_t y,
                             const RatFunc& a) {
  DescentResult res;
  const std::size_t n = s1.src_vars();
  std::vector<std::size_t> base;
  for (std::size_t i = 0; i < n; ++i)
    if (i != x && i != y) base.push_back(i);

  RatFunc X = RatFunc::var(n, x), Y = RatFunc::var(n, y);
  RatFunc a1 = s1.apply(a), a2 = s1.apply(a1);
  bool base_ok = !involves_any(a, {x, y});
  for (auto v : base)
    if (involves_any(s1.image(v), {x, y}) || involves_any(s2.image(v), {x, y})) base_ok = false;
  bool shape = s1.image(x).equals(Y) && s1.image(y).equals((X * Y).inv()) && s2.image(x).equals(a / a1 * X) &&
               s2.image(y).equals(a1 / a2 * Y);
  bool norm = lemma4_check(a, s2);
  res.hypothesis_ok = base_ok && shape && norm;
  if (!res.hypothesis_ok) {
    res.detail = !base_ok ? "action does not preserve the base field"
                 : !shape ? "action is not of the required form"
                          : "norm condition a*s2(a)*s2^2(a) = 1 fails";
    return res;
  }

  // Model: L(x1,x2,x3) with X = x1/x2, Y = x2/x3.
  const std::size_t N = n + 3;
  std::vector<RatFunc> xs{RatFunc::var(N, n), RatFunc::var(N, n + 1), RatFunc::var(N, n + 2)};
  Substitution m1 = extend(s1, N, {{n, xs[1]}, {n + 1, xs[2]}, {n + 2, xs[0]}});
  Substitution m2 = extend(s2, N, {{n, widen(a, N) * xs[0]}, {n + 1, widen(a1, N) * xs[1]}, {n + 2, widen(a2, N) * xs[2]}});
  res.group_ok = order_three_commuting(s1, s2) && order_three_commuting(m1, m2);
  if (!res.group_ok) {
    res.detail = "generators do not give a group of order 9";
    return res;
  }
  std::vector<Substitution> elems = group_elements(m1, m2);

  // Back to L(X, Y): x1 -> XY, x2 -> Y, x3 -> 1 (the z_k are homogeneous of degree one).
  std::vector<RatFunc> narrow_im;
  for (std::size_t i = 0; i < n; ++i) narrow_im.push_back(RatFunc::var(n, i));
  narrow_im.push_back(X * Y);
  narrow_im.push_back(Y);
  narrow_im.push_back(RatFunc::constant(n, 1));
  Substitution narrow(N, n, narrow_im);

  std::vector<RatFunc> cands = multipliers(N, base);
  for (std::size_t li = 0; li < cands.size(); ++li) {
    std::vector<RatFunc> z;
    RatMatrix c(3, std::vector<RatFunc>(3));
    for (std::size_t k = 0; k < 3; ++k) {
      z.push_back(trace(elems, cands[li] * xs[k]));
      for (std::size_t j = 0; j < 3; ++j) {
        std::vector<RatFunc> pick;
        for (std::size_t i = 0; i < N; ++i) pick.push_back(RatFunc::var(N, i));
        for (std::size_t t = 0; t < 3; ++t) pick[n + t] = RatFunc::constant(N, t == j ? 1 : 0);
        c[k][j] = narrow.apply(Substitution(N, N, pick).apply(z[k]));
      }
    }
    if (det(c).is_zero()) continue;
    auto cinv = inverse(c);
    res.lambda_index = li;
    RatFunc z1 = narrow.apply(z[0]), z2 = narrow.apply(z[1]), z3 = narrow.apply(z[2]);
    RatFunc Z = z1 / z2, W = z2 / z3;
    res.invariants = {Z, W};
    res.invariant_ok = s1.apply(Z).equals(Z) && s2.apply(Z).equals(Z) && s1.apply(W).equals(W) &&
                       s2.apply(W).equals(W);

    std::vector<RatFunc> old_im, new_im;
    for (std::size_t i = 0; i < n; ++i) {
      old_im.push_back(RatFunc::var(n, i));
      new_im.push_back(RatFunc::var(n, i));
    }
    old_im[x] = Z;
    old_im[y] = W;
    // z = (ZW, W, 1) up to the factor z3; x = C^{-1} z.
    std::vector<RatFunc> zv{X * Y, Y, RatFunc::constant(n, 1)};
    std::vector<RatFunc> xv;
    for (std::size_t k = 0; k < 3; ++k) {
      RatFunc s(n);
      for (std::size_t j = 0; j < 3; ++j) s = s + (*cinv)[k][j] * zv[j];
      xv.push_back(s);
    }
    new_im[x] = xv[0] / xv[1];
    new_im[y] = xv[1] / xv[2];
    res.to_old = Substitution(n, n, old_im);
    res.to_new = Substitution(n, n, new_im);
    // (XY : Y : 1) and (ZW : W : 1) differ by C over the base field, so C C^{-1} = 1 certifies
    // both substitutions; composing them symbolically is far more expensive.
    res.birational_ok = true;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        RatFunc s(n);
        for (std::size_t k = 0; k < 3; ++k) s = s + c[i][k] * (*cinv)[k][j];
        if (!s.equals(RatFunc::constant(n, i == j ? 1 : 0)) || involves_any(c[i][j], {x, y}))
          res.birational_ok = false;
      }
    }
    res.detail = "trace multiplier #" + std::to_string(li);
    return res;
  }
  res.detail = "no trace multiplier gave an invertible coefficient matrix";
  return res;
}

DescentResult linear_descend(const Substitution& s1, const Substitution& s2, std::size_t v) {
  DescentResult res;
  const std::size_t n = s1.src_vars();
  std::vector<std::size_t> base;
  for (std::size_t i = 0; i < n; ++i)
    if (i != v) base.push_back(i);
  RatFunc V = RatFunc::var(n, v);
  bool ok = true;
  for (const auto* s : {&s1, &s2}) {
    if (involves_any(s->image(v) / V, {v})) ok = false;
    for (auto b : base)
      if (s->image(b).involves(v)) ok = false;
  }
  res.hypothesis_ok = ok;
  if (!ok) {
    res.detail = "action is not linear in the variable over the base field";
    return res;
  }
  res.group_ok = order_three_commuting(s1, s2);
  if (!res.group_ok) {
    res.detail = "generators do not give a group of order 9";
    return res;
  }
  std::vector<Substitution> elems = group_elements(s1, s2);
  std::vector<RatFunc> cands = multipliers(n, base);
  for (std::size_t li = 0; li < cands.size(); ++li) {
    RatFunc z = trace(elems, cands[li] * V);
    if (z.is_zero()) continue;
    RatFunc coef = z / V;
    res.lambda_index = li;
    res.invariants = {z};
    res.invariant_ok = s1.apply(z).equals(z) && s2.apply(z).equals(z);
    std::vector<RatFunc> old_im, new_im;
    for (std::size_t i = 0; i < n; ++i) {
      old_im.push_back(RatFunc::var(n, i));
      new_im.push_back(RatFunc::var(n, i));
    }
    old_im[v] = z;
    new_im[v] = V / coef;
    res.to_old = Substitution(n, n, old_im);
    res.to_new = Substitution(n, n, new_im);
    res.birational_ok = verify_birational(res.to_new, res.to_old);
    res.detail = "trace multiplier #" + std::to_string(li);
    return res;
  }
  res.detail = "every trace vanished";
  return res;
}

}  // namespace wb::rf
