#include "workbench/linearize.hpp"

#include <algorithm>
#include <numeric>

namespace wb::rf {

RatFunc widen(const RatFunc& r, std::size_t nvars) {
  if (nvars < r.nvars()) throw RatFuncError("widen: target has fewer variables");
  auto lift = [&](const SparsePoly& p) {
    SparsePoly out(nvars);
    for (const auto& [m, c] : p.terms()) {
      Mono w(nvars, 0);
      std::copy(m.begin(), m.end(), w.begin());
      out.add_term(w, c);
    }
    return out;
  };
  return RatFunc(lift(r.num()), lift(r.den()));
}

namespace {

std::size_t matrix_vars(const RatMatrix& m) {
  if (m.empty() || m[0].empty()) throw LinearizeError("empty matrix");
  for (const auto& row : m)
    if (row.size() != m.size()) throw LinearizeError("matrix is not square");
  return m[0][0].nvars();
}

int permutation_sign(const std::vector<std::size_t>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

RatFunc det_gauss(RatMatrix a) {
  const std::size_t n = a.size();
  const std::size_t nv = a[0][0].nvars();
  RatFunc d = RatFunc::constant(nv, 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return RatFunc(nv);
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d = d * a[c][c];
    RatFunc inv = a[c][c].inv();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      RatFunc f = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) a[r][k] = a[r][k] - f * a[c][k];
    }
  }
  return d;
}

}  // namespace

RatFunc det(const RatMatrix& m) {
  const std::size_t nv = matrix_vars(m);
  const std::size_t n = m.size();
  if (n > 5) return det_gauss(m);
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  RatFunc sum(nv);
  do {
    RatFunc term = RatFunc::constant(nv, permutation_sign(p));
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m[i][p[i]];
    if (!term.is_zero()) sum = sum + term;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  const std::size_t nv = matrix_vars(m);
  const std::size_t n = m.size();
  RatFunc d = det(m);
  if (d.is_zero()) return std::nullopt;
  RatFunc dinv = d.inv();
  RatMatrix out(n, std::vector<RatFunc>(n, RatFunc(nv)));
  if (n == 1) {
    out[0][0] = dinv;
    return out;
  }
  // Adjugate: out[j][i] = (-1)^(i+j) minor(i, j) / det.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      RatMatrix minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<RatFunc> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      RatFunc cof = det(minor) * dinv;
      out[j][i] = (i + j) % 2 ? -cof : cof;
    }
  }
  return out;
}

std::vector<RatFunc> char_poly_generic(const RatMatrix& m) {
  const std::size_t nv = matrix_vars(m);
  const std::size_t n = m.size();
  if (n > 4) throw LinearizeError("char_poly_generic supports dimension at most 4");
  using TPoly = std::vector<RatFunc>;
  auto mul = [&](const TPoly& a, const TPoly& b) {
    TPoly r(a.size() + b.size() - 1, RatFunc(nv));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        if (!b[j].is_zero()) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return r;
  };
  TPoly sum(n + 1, RatFunc(nv));
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    TPoly term{RatFunc::constant(nv, permutation_sign(p))};
    for (std::size_t i = 0; i < n; ++i) {
      TPoly entry{-m[i][p[i]]};
      if (p[i] == i) entry.push_back(RatFunc::constant(nv, 1));
      term = mul(term, entry);
    }
    for (std::size_t k = 0; k < term.size(); ++k) sum[k] = sum[k] + term[k];
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

// Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
std::vector<CycNum> char_poly(const cyc::CycMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<CycNum> c(n + 1);
  c[n] = 1;
  cyc::CycMatrix mk(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    cyc::CycMatrix am = a * mk;
    CycNum tr;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / CycNum(static_cast<long>(k));
  }
  return c;
}

bool substitutions_equal(const Substitution& a, const Substitution& b) {
  if (a.src_vars() != b.src_vars() || a.dst_vars() != b.dst_vars()) return false;
  for (std::size_t i = 0; i < a.src_vars(); ++i)
    if (!a.image(i).equals(b.image(i))) return false;
  return true;
}

Action linear_action(const std::vector<cyc::CycMatrix>& mats) {
  Action out;
  for (const auto& m : mats) {
    const std::size_t n = m.dim();
    std::vector<RatFunc> im;
    for (std::size_t i = 0; i < n; ++i) {
      SparsePoly p(n);
      for (std::size_t j = 0; j < n; ++j) {
        Mono e(n, 0);
        e[j] = 1;
        p.add_term(e, m(j, i));
      }
      im.push_back(RatFunc::from_poly(std::move(p)));
    }
    out.emplace_back(n, n, std::move(im));
  }
  return out;
}

Substitution eval_word(const Action& s, const pc::Exps& word) {
  if (s.empty()) throw RatFuncError("empty action");
  Substitution r = Substitution::identity(s[0].src_vars());
  for (std::size_t i = 0; i < word.size(); ++i)
    for (int k = 0; k < word[i]; ++k) r = r.after(s.at(i));
  return r;
}

ActionReport verify_action(const Action& s, const pc::PcPresentation& p, const VarSet& vars) {
  ActionReport rep;
  if (s.size() != static_cast<std::size_t>(p.n())) throw RatFuncError("action needs one map per generator");
  auto compare = [&](const std::string& rel, const Substitution& lhs, const Substitution& rhs) {
    ++rep.relations_checked;
    for (std::size_t v = 0; v < lhs.src_vars(); ++v)
      if (!lhs.image(v).equals(rhs.image(v))) rep.failures.push_back({rel, vars.name(v)});
  };
  auto g = [](int i) { return "f" + std::to_string(i + 1); };
  for (int i = 0; i < p.n(); ++i) {
    Substitution cube = s[i].after(s[i]).after(s[i]);
    compare(g(i) + "^3", cube, eval_word(s, p.power(i)));
  }
  for (int j = 1; j < p.n(); ++j) {
    for (int i = 0; i < j; ++i) {
      // [f_j, f_i] = w  <=>  f_j f_i = f_i f_j w
      Substitution lhs = s[j].after(s[i]);
      Substitution rhs = s[i].after(s[j]).after(eval_word(s, p.comm(j, i)));
      compare("[" + g(j) + "," + g(i) + "]", lhs, rhs);
    }
  }
  return rep;
}

bool verify_birational(const Substitution& f, const Substitution& finv) {
  if (f.src_vars() != finv.dst_vars() || f.dst_vars() != finv.src_vars()) return false;
  Substitution a = f.after(finv);
  for (std::size_t v = 0; v < a.src_vars(); ++v)
    if (!a.image(v).equals(RatFunc::var(a.dst_vars(), v))) return false;
  Substitution b = finv.after(f);
  for (std::size_t v = 0; v < b.src_vars(); ++v)
    if (!b.image(v).equals(RatFunc::var(b.dst_vars(), v))) return false;
  return true;
}

bool verify_claimed_image(const Substitution& old_action, const Substitution& def, std::size_t v,
                          const RatFunc& claimed) {
  RatFunc lhs = old_action.apply(def.image(v));
  RatFunc rhs = def.apply(claimed);
  return lhs.equals(rhs);
}

bool verify_claimed_image(const Substitution& action, std::size_t v, const RatFunc& claimed) {
  return action.image(v).equals(claimed);
}

RatMatrix fractional_linear_matrix(const Substitution& s, const std::vector<std::size_t>& xvars) {
  const std::size_t n = xvars.size();
  const std::size_t nv = s.dst_vars();
  if (n == 0) throw LinearizeError("no variables");
  const SparsePoly& den = s.image(xvars[0]).den();
  auto split = [&](const SparsePoly& p) {
    std::vector<SparsePoly> parts(n + 1, SparsePoly(nv));
    for (const auto& [m, c] : p.terms()) {
      std::size_t slot = 0;
      Mono base = m;
      for (std::size_t k = 0; k < n; ++k) {
        auto e = m[xvars[k]];
        if (e == 0) continue;
        if (e != 1 || slot != 0) throw LinearizeError("image is not a degree-one fraction");
        slot = k + 1;
        base[xvars[k]] = 0;
      }
      parts[slot].add_term(base, c);
    }
    std::vector<RatFunc> row;
    for (auto& q : parts) row.push_back(RatFunc::from_poly(std::move(q)));
    return row;
  };
  RatMatrix a;
  a.push_back(split(den));
  for (std::size_t i = 0; i < n; ++i) {
    const RatFunc& im = s.image(xvars[i]);
    if (!(im.den() == den)) throw LinearizeError("images do not share a denominator");
    a.push_back(split(im.num()));
  }
  return a;
}

LinearizeResult linearize_cyclic(const RatMatrix& a, const RatFunc& c, std::size_t nvars,
                                 const std::vector<std::size_t>& xvars) {
  const std::size_t m = a.size();
  const std::size_t n = m - 1;
  if (matrix_vars(a) != nvars || c.nvars() != nvars) throw LinearizeError("variable count mismatch");
  if (xvars.size() != n) throw LinearizeError("need one variable per non-constant column");
  if (c.is_zero()) throw LinearizeError("c must be nonzero");
  for (const auto& row : a)
    for (const auto& e : row)
      for (auto v : xvars)
        if (e.involves(v)) throw LinearizeError("matrix entries must lie in the base field");

  std::vector<RatFunc> cp = char_poly_generic(a);
  for (std::size_t k = 1; k < m; ++k)
    if (!cp[k].is_zero()) throw LinearizeError("characteristic polynomial is not T^(n+1) - c");
  if (!cp[0].equals(-c)) throw LinearizeError("characteristic polynomial is not T^(n+1) - c");

  LinearizeResult res;
  RatMatrix binv;
  bool found = false;
  for (std::size_t j = 0; j < m && !found; ++j) {
    RatMatrix k;
    std::vector<RatFunc> row(m, RatFunc(nvars));
    row[j] = RatFunc::constant(nvars, 1);
    for (std::size_t i = 0; i < m; ++i) {
      k.push_back(row);
      std::vector<RatFunc> next(m, RatFunc(nvars));
      for (std::size_t col = 0; col < m; ++col)
        for (std::size_t r = 0; r < m; ++r)
          if (!row[r].is_zero() && !a[r][col].is_zero()) next[col] = next[col] + row[r] * a[r][col];
      row = std::move(next);
    }
    auto inv = inverse(k);
    if (!inv) continue;
    res.cyclic_index = j;
    res.krylov = std::move(k);
    binv = std::move(*inv);
    found = true;
  }
  if (!found) throw LinearizeError("no standard basis vector is cyclic");

  // u_0 = 1, u_k = x_k.
  auto linear_form = [&](const std::vector<RatFunc>& coef) {
    RatFunc s = coef[0];
    for (std::size_t k = 1; k < m; ++k) s = s + coef[k] * RatFunc::var(nvars, xvars[k - 1]);
    return s;
  };
  std::vector<RatFunc> v;
  for (std::size_t i = 0; i < m; ++i) v.push_back(linear_form(res.krylov[i]));
  for (std::size_t i = 1; i < m; ++i) res.y.push_back(v[i] / v[i - 1]);

  std::vector<RatFunc> sigma_im;
  for (std::size_t i = 0; i < nvars; ++i) sigma_im.push_back(RatFunc::var(nvars, i));
  RatFunc l0 = linear_form(a[0]);
  for (std::size_t k = 1; k < m; ++k) sigma_im[xvars[k - 1]] = linear_form(a[k]) / l0;
  Substitution sigma(nvars, nvars, sigma_im);

  std::vector<RatFunc> old_im, new_im;
  for (std::size_t i = 0; i < nvars; ++i) {
    old_im.push_back(RatFunc::var(nvars, i));
    new_im.push_back(RatFunc::var(nvars, i));
  }
  for (std::size_t i = 0; i < n; ++i) old_im[xvars[i]] = res.y[i];
  // v_i = y_1...y_i v_0, u = B^{-1} v, x_k = u_k / u_0
  std::vector<RatFunc> prods{RatFunc::constant(nvars, 1)};
  for (std::size_t i = 0; i < n; ++i) prods.push_back(prods.back() * RatFunc::var(nvars, xvars[i]));
  std::vector<RatFunc> u;
  for (std::size_t k = 0; k < m; ++k) {
    RatFunc s(nvars);
    for (std::size_t i = 0; i < m; ++i)
      if (!binv[k][i].is_zero()) s = s + binv[k][i] * prods[i];
    u.push_back(s);
  }
  for (std::size_t k = 1; k < m; ++k) new_im[xvars[k - 1]] = u[k] / u[0];
  res.to_old = Substitution(nvars, nvars, old_im);
  res.to_new = Substitution(nvars, nvars, new_im);

  res.shift_ok = true;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!sigma.apply(res.y[i]).equals(res.y[i + 1])) res.shift_ok = false;
  RatFunc prod = RatFunc::constant(nvars, 1);
  for (const auto& y : res.y) prod = prod * y;
  res.last_ok = sigma.apply(res.y[n - 1]).equals(c / prod);
  res.birational_ok = verify_birational(res.to_new, res.to_old);
  return res;
}

LinearizeResult linearize_cyclic(const cyc::CycMatrix& a, const CycNum& c) {
  const std::size_t m = a.dim();
  if (m < 2) throw LinearizeError("matrix must be at least 2 x 2");
  const std::size_t n = m - 1;
  // char_poly over constants first: Leibniz is limited to dimension 4.
  std::vector<CycNum> cp = char_poly(a);
  for (std::size_t k = 1; k < m; ++k)
    if (!cp[k].is_zero()) throw LinearizeError("characteristic polynomial is not T^(n+1) - c");
  if (cp[0] != -c) throw LinearizeError("characteristic polynomial is not T^(n+1) - c");
  RatMatrix r(m, std::vector<RatFunc>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) r[i][j] = RatFunc::constant(n, a(i, j));
  std::vector<std::size_t> xv(n);
  std::iota(xv.begin(), xv.end(), 0);
  if (m > 4) throw LinearizeError("linearize_cyclic supports dimension at most 4");
  return linearize_cyclic(r, RatFunc::constant(n, c), n, xv);
}

}  // namespace wb::rf
