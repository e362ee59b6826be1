#include "replay_engine.hpp"

#include <algorithm>
#include <sstream>

namespace wb::replay {

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(claims.begin(), claims.end(), [](const Claim& c) { return !c.pass; }));
}

namespace detail {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::pair<std::string, std::string>> split_maps(const std::string& maps) {
  std::vector<std::pair<std::string, std::string>> out;
  std::stringstream ss(maps);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto arrow = item.find("->");
    if (arrow == std::string::npos) throw ReplayError("display item without '->': " + item);
    out.emplace_back(trim(item.substr(0, arrow)), trim(item.substr(arrow + 2)));
  }
  return out;
}

RatFunc one(std::size_t n) { return RatFunc::constant(n, 1); }

}  // namespace

const Substitution& Level::at(const std::string& gen) const {
  auto it = act.find(gen);
  if (it == act.end()) throw ReplayError("no action recorded for " + gen);
  return it->second;
}

std::size_t Level::var(const std::string& name) const {
  auto i = vars->index(name);
  if (!i) throw ReplayError("unknown variable " + name);
  return *i;
}

void Script::claim(const std::string& name, const std::string& ref, bool pass, const std::string& detail) {
  r_.claims.push_back({id_ + "." + name, ref, pass, detail});
}

void Script::check(const std::string& name, const std::string& ref, const std::function<bool(std::string&)>& fn) {
  std::string detail;
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  claim(name, ref, ok, detail);
}

void Script::note(const std::string& name, const std::string& text) { r_.notes.push_back({id_ + "." + name, text}); }

RatFunc Script::parse(const VarSet& vars, const std::string& text) const { return rf::parse_expr(text, vars, env); }

Chart Script::chart(const VarSetPtr& old, const std::vector<std::string>& names,
                    const std::vector<std::string>& defs) const {
  std::vector<RatFunc> im;
  for (const auto& d : defs) im.push_back(parse(*old, d));
  return chart_from(old, names, std::move(im));
}

Level Script::display(const std::string& step, const std::string& ref, const Level& truth, const Chart& c,
                      const std::vector<Line>& lines) {
  Level out;
  out.vars = c.vars;
  const std::size_t n = c.vars->size();
  for (const auto& line : lines) {
    Substitution shown = Substitution::identity(n);
    for (const auto& [lhs, rhs] : split_maps(line.maps)) {
      auto v = c.vars->index(lhs);
      if (!v) throw ReplayError("display names unknown variable " + lhs);
      RatFunc claimed;
      try {
        claimed = parse(*c.vars, rhs);
        shown.set_image(*v, claimed);
      } catch (const std::exception& e) {
        claim(step + "." + line.gen + "." + lhs, ref, false, e.what());
        continue;
      }
      check(step + "." + line.gen + "." + lhs, ref, [&](std::string& d) {
        RatFunc got = truth.at(line.gen).apply(c.def.image(*v));
        bool ok = got.equals(c.def.apply(claimed));
        if (!ok) d = "computed image differs from the display";
        return ok;
      });
    }
    out.act[line.gen] = shown;
  }
  return out;
}

Level Script::display(const std::string& step, const std::string& ref, const Level& truth,
                      const std::vector<Line>& lines) {
  std::vector<RatFunc> id;
  for (std::size_t i = 0; i < truth.vars->size(); ++i) id.push_back(RatFunc::var(truth.vars->size(), i));
  return display(step, ref, truth, chart_from(truth.vars, truth.vars->names(), id), lines);
}

void Script::birational(const std::string& step, const std::string& ref, const Chart& c,
                        const std::vector<std::string>& old_names, const std::vector<std::string>& inv) {
  check(step + ".birational", ref, [&](std::string& d) {
    if (old_names.size() != inv.size() || old_names.size() != c.vars->size())
      throw ReplayError("birational certificate needs one inverse per new variable");
    const std::size_t no = c.old->size(), nn = c.vars->size();
    std::vector<std::size_t> listed = indices(*c.old, old_names);
    std::vector<RatFunc> back(no, one(nn));
    for (std::size_t k = 0; k < listed.size(); ++k) back[listed[k]] = parse(*c.vars, inv[k]);
    Substitution to_new(no, nn, back);
    for (std::size_t v = 0; v < nn; ++v) {
      for (std::size_t o = 0; o < no; ++o)
        if (c.def.image(v).involves(o) && std::find(listed.begin(), listed.end(), o) == listed.end()) {
          d = c.vars->name(v) + " involves " + c.old->name(o);
          return false;
        }
      if (!to_new.apply(c.def.image(v)).equals(RatFunc::var(nn, v))) {
        d = "round trip fails at " + c.vars->name(v);
        return false;
      }
    }
    for (auto o : listed)
      if (!c.def.apply(to_new.image(o)).equals(RatFunc::var(no, o))) {
        d = "round trip fails at " + c.old->name(o);
        return false;
      }
    return true;
  });
}

void Script::fixed_field(const std::string& step, const std::string& ref, const std::vector<Substitution>& gens,
                         const Chart& c, const std::vector<std::string>& on, std::optional<long> det) {
  std::vector<std::size_t> idx = indices(*c.old, on);
  std::vector<mono::MonomialMap> d;
  std::vector<mono::MonomialTerm> z;
  std::string err;
  for (const auto& g : gens) {
    auto sc = diag_scalars(g, idx);
    if (!sc) {
      err = "a generator is not diagonal on the listed variables";
      break;
    }
    std::vector<int> ex;
    for (const auto& x : *sc) {
      auto l = cyc::root_log(x);
      if (!l) {
        err = "scaling is not a root of unity";
        break;
      }
      ex.push_back(*l);
    }
    d.push_back(mono::MonomialMap::diagonal(ex));
  }
  for (std::size_t v = 0; v < c.vars->size() && err.empty(); ++v) {
    const RatFunc& r = c.def.image(v);
    if (!r.is_monomial()) {
      err = c.vars->name(v) + " is not a monomial";
      break;
    }
    const auto& [m, coef] = *r.num().terms().begin();
    auto l = cyc::root_log(coef / *r.den().constant_value());
    if (!l) {
      err = c.vars->name(v) + " has a coefficient that is not a root of unity";
      break;
    }
    mono::MonomialTerm t{*l, {}};
    for (std::size_t o = 0; o < m.size(); ++o) {
      bool listed = std::find(idx.begin(), idx.end(), o) != idx.end();
      if (!listed && m[o] != 0) err = c.vars->name(v) + " involves an unlisted variable";
    }
    for (auto o : idx) t.exps.push_back(m[o]);
    z.push_back(t);
  }
  if (!err.empty()) {
    claim(step + ".fixed", ref, false, err);
    if (det) claim(step + ".det", ref, false, err);
    claim(step + ".field", ref, false, err);
    return;
  }
  mono::FixedFieldCertificate cert = mono::fixed_field_certificate(d, z);
  claim(step + ".fixed", ref, cert.invariant, cert.invariant ? "" : "some monomial is not invariant");
  if (det) claim(step + ".det", ref, cert.det == *det, "det=" + cert.det.get_str());
  claim(step + ".field", ref, cert.holds, cert.detail);
}

void Script::exponent_display(const std::string& step, const std::string& ref, const Chart& c,
                              const std::vector<std::string>& on, const std::vector<std::vector<long>>& rows) {
  check(step + ".exponents", ref, [&](std::string& d) {
    std::vector<std::size_t> idx = indices(*c.old, on);
    if (rows.size() != idx.size()) throw ReplayError("displayed matrix has the wrong number of rows");
    for (std::size_t v = 0; v < c.vars->size(); ++v) {
      const RatFunc& r = c.def.image(v);
      if (!r.is_monomial()) {
        d = c.vars->name(v) + " is not a monomial";
        return false;
      }
      const Mono& m = r.num().terms().begin()->first;
      for (std::size_t k = 0; k < idx.size(); ++k)
        if (rows[k].at(v) != m[idx[k]]) {
          d = "entry (" + c.old->name(idx[k]) + ", " + c.vars->name(v) + ") differs";
          return false;
        }
    }
    return true;
  });
}

bool Script::faithful_c3c3(const Substitution& s1, const Substitution& s2, const std::vector<std::size_t>& base) const {
  Substitution id = Substitution::identity(s1.src_vars());
  Substitution p = id;
  for (int a = 0; a < 3; ++a) {
    Substitution q = p;
    for (int b = 0; b < 3; ++b) {
      if (a || b) {
        if (same_images(q, id, base)) return false;
      }
      q = q.after(s2);
    }
    p = p.after(s1);
  }
  return true;
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string w;
  while (ss >> w) out.push_back(w);
  return out;
}

std::vector<std::string> grid_names(const std::string& prefix, int rows, int cols) {
  std::vector<std::string> out;
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) out.push_back(prefix + std::to_string(i) + std::to_string(j));
  return out;
}

Level matrix_level(const paper::GroupRecord& g, const VarSetPtr& xvars) {
  Level l;
  l.vars = xvars;
  rf::Action a = rf::linear_action(g.rep);
  for (std::size_t i = 0; i < a.size(); ++i) l.act["f" + std::to_string(i + 1)] = a[i];
  return l;
}

Chart compose(const Chart& first, const Chart& second) {
  return {second.vars, first.old, first.def.after(second.def)};
}

Chart chart_from(const VarSetPtr& old, const std::vector<std::string>& names, std::vector<RatFunc> defs) {
  if (names.size() != defs.size()) throw ReplayError("chart needs one definition per variable");
  VarSetPtr v = rf::make_vars(names);
  return {v, old, Substitution(names.size(), old->size(), std::move(defs))};
}

Substitution transport(const Substitution& s, const Chart& c, const Substitution& inv) {
  std::vector<RatFunc> im;
  for (std::size_t v = 0; v < c.vars->size(); ++v) im.push_back(inv.apply(s.apply(c.def.image(v))));
  return Substitution(c.vars->size(), c.vars->size(), std::move(im));
}

Substitution inverse_of(const Chart& c, const std::vector<std::string>& exprs, const rf::ParseEnv& env) {
  if (exprs.size() != c.old->size()) throw ReplayError("inverse needs one expression per old variable");
  std::vector<RatFunc> im;
  for (const auto& e : exprs) im.push_back(rf::parse_expr(e, *c.vars, env));
  return Substitution(c.old->size(), c.vars->size(), std::move(im));
}

std::optional<std::vector<CycNum>> diag_scalars(const Substitution& s, const std::vector<std::size_t>& on) {
  std::vector<CycNum> out;
  const std::size_t n = s.src_vars();
  for (auto v : on) {
    auto c = (s.image(v) / RatFunc::var(n, v)).constant_value();
    if (!c) return std::nullopt;
    out.push_back(*c);
  }
  return out;
}

std::optional<Substitution> scale_through(const Substitution& tau, const Chart& c) {
  const std::size_t n = c.vars->size();
  std::vector<RatFunc> im;
  for (std::size_t v = 0; v < n; ++v) {
    const RatFunc& d = c.def.image(v);
    auto k = (tau.apply(d) / d).constant_value();
    if (!k) return std::nullopt;
    im.push_back(RatFunc::constant(n, *k) * RatFunc::var(n, v));
  }
  return Substitution(n, n, std::move(im));
}

std::optional<Substitution> monomial_transport(const Substitution& s, const Chart& c) {
  const std::size_t n = c.vars->size(), no = c.old->size();
  lat::IntMatrix b(0, no);
  for (std::size_t v = 0; v < n; ++v) {
    const RatFunc& d = c.def.image(v);
    if (!d.is_monomial()) return std::nullopt;
    lat::IntVec row;
    for (auto e : d.num().terms().begin()->first) row.emplace_back(static_cast<long>(e));
    b.append_row(row);
  }
  std::vector<RatFunc> im;
  for (std::size_t v = 0; v < n; ++v) {
    RatFunc img = s.apply(c.def.image(v));
    if (!img.is_monomial()) return std::nullopt;
    lat::IntVec target;
    for (auto e : img.num().terms().begin()->first) target.emplace_back(static_cast<long>(e));
    auto sol = lat::solve_lattice(b, target);
    if (!sol) return std::nullopt;
    RatFunc cand = one(n);
    for (std::size_t k = 0; k < n; ++k) cand = cand * RatFunc::var(n, k).pow((*sol)[k].get_si());
    auto coef = (img / c.def.apply(cand)).constant_value();
    if (!coef) return std::nullopt;
    im.push_back(RatFunc::constant(n, *coef) * cand);
  }
  return Substitution(n, n, std::move(im));
}

bool same_images(const Substitution& a, const Substitution& b, const std::vector<std::size_t>& vars) {
  for (auto v : vars)
    if (!a.image(v).equals(b.image(v))) return false;
  return true;
}

std::vector<std::size_t> indices(const VarSet& v, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& n : names) {
    auto i = v.index(n);
    if (!i) throw ReplayError("unknown variable " + n);
    out.push_back(*i);
  }
  return out;
}

}  // namespace detail

namespace {

struct Entry {
  const char* id;
  int section;
  void (*fn)(detail::Script&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = {
      {"S4.case1", 4, detail::s4_case1},   {"S4.case2", 4, detail::s4_case2}, {"S5.case1", 5, detail::s5_case1},
      {"S5.case2", 5, detail::s5_case2},   {"S5.cor1", 5, detail::s5_cor1},  {"S6.thmain1", 6, detail::s6_thmain1},
      {"S6.phi7", 6, detail::s6_phi7},     {"S6.phi10", 6, detail::s6_phi10},
  };
  return e;
}

const Entry& find(const std::string& id) {
  for (const auto& e : entries())
    if (id == e.id) return e;
  throw ReplayError("unknown replay script: " + id);
}

}  // namespace

const std::vector<std::string>& script_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : entries()) v.push_back(e.id);
    return v;
  }();
  return ids;
}

int script_section(const std::string& id) { return find(id).section; }

Report replay(const std::string& id) {
  const Entry& e = find(id);
  Report r;
  detail::Script s(r, e.id);
  try {
    e.fn(s);
  } catch (const std::exception& ex) {
    s.claim("aborted", "-", false, ex.what());
  }
  return r;
}

}  // namespace wb::replay
