#include "workbench/ratfunc.hpp"

#include <algorithm>
#include <sstream>

namespace wb::rf {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second) throw RatFuncError("duplicate variable " + names_[i]);
  }
}

std::optional<std::size_t> VarSet::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VarSetPtr make_vars(std::vector<std::string> names) { return std::make_shared<const VarSet>(std::move(names)); }

bool GrlexLess::operator()(const Mono& a, const Mono& b) const {
  long da = 0, db = 0;
  for (auto v : a) da += v;
  for (auto v : b) db += v;
  if (da != db) return da < db;
  return a < b;
}

SparsePoly SparsePoly::constant(std::size_t nvars, const CycNum& c) {
  SparsePoly p(nvars);
  p.add_term(Mono(nvars, 0), c);
  return p;
}

SparsePoly SparsePoly::var(std::size_t nvars, std::size_t i) {
  Mono m(nvars, 0);
  m.at(i) = 1;
  return monomial(nvars, m, 1);
}

SparsePoly SparsePoly::monomial(std::size_t nvars, const Mono& m, const CycNum& c) {
  SparsePoly p(nvars);
  p.add_term(m, c);
  return p;
}

bool SparsePoly::is_constant() const {
  if (t_.empty()) return true;
  if (t_.size() > 1) return false;
  const Mono& m = t_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](auto v) { return v == 0; });
}

std::optional<CycNum> SparsePoly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  if (t_.empty()) return CycNum(0);
  return t_.begin()->second;
}

void SparsePoly::add_term(const Mono& m, const CycNum& c) {
  if (c.is_zero()) return;
  if (m.size() != n_) throw RatFuncError("monomial length does not match variable count");
  auto [it, inserted] = t_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  if (n_ != o.n_) throw RatFuncError("variable count mismatch");
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly r = *this;
  r += o;
  return r;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + (-o); }

SparsePoly SparsePoly::operator*(const CycNum& c) const {
  SparsePoly r(n_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : t_) r.t_.emplace_hint(r.t_.end(), m, v * c);
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  if (n_ != o.n_) throw RatFuncError("variable count mismatch");
  SparsePoly r(n_);
  if (t_.empty() || o.t_.empty()) return r;
  Mono m(n_);
  for (const auto& [ma, ca] : t_) {
    for (const auto& [mb, cb] : o.t_) {
      for (std::size_t i = 0; i < n_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly result = constant(n_, 1);
  SparsePoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

SparsePoly SparsePoly::shifted(const Mono& s) const {
  SparsePoly r(n_);
  Mono m(n_);
  for (const auto& [ma, c] : t_) {
    for (std::size_t i = 0; i < n_; ++i) m[i] = ma[i] + s[i];
    r.t_.emplace(m, c);
  }
  return r;
}

Mono SparsePoly::min_exps() const {
  if (t_.empty()) return {};
  Mono r = t_.begin()->first;
  for (const auto& [m, c] : t_)
    for (std::size_t i = 0; i < n_; ++i) r[i] = std::min(r[i], m[i]);
  return r;
}

Mono SparsePoly::max_exps() const {
  if (t_.empty()) return {};
  Mono r = t_.begin()->first;
  for (const auto& [m, c] : t_)
    for (std::size_t i = 0; i < n_; ++i) r[i] = std::max(r[i], m[i]);
  return r;
}

bool SparsePoly::involves(std::size_t var) const {
  for (const auto& [m, c] : t_)
    if (m[var] != 0) return true;
  return false;
}

std::string SparsePoly::str(const VarSet& vars) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars.name(i);
      if (m[i] != 1) mono += "^" + (m[i] < 0 ? "(" + std::to_string(m[i]) + ")" : std::to_string(m[i]));
    }
    std::string coef = c.str();
    bool simple = c.is_rational();
    bool negative = simple && c.coord(0) < 0;
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    std::string mag = negative ? (-c).str() : coef;
    if (!simple) mag = "(" + mag + ")";
    if (mono.empty()) os << mag;
    else if (mag == "1") os << mono;
    else os << mag << "*" << mono;
    first = false;
  }
  return os.str();
}

}  // namespace wb::rf
