#include "workbench/ratfunc.hpp"

namespace wb::rf {

RatFunc::RatFunc(SparsePoly num, SparsePoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != den_.nvars()) throw RatFuncError("numerator and denominator variable counts differ");
  normalize();
}

RatFunc RatFunc::constant(std::size_t nvars, const CycNum& c) {
  return RatFunc(SparsePoly::constant(nvars, c), SparsePoly::constant(nvars, 1));
}

RatFunc RatFunc::var(std::size_t nvars, std::size_t i) {
  return RatFunc(SparsePoly::var(nvars, i), SparsePoly::constant(nvars, 1));
}

RatFunc RatFunc::from_poly(SparsePoly p) {
  std::size_t n = p.nvars();
  return RatFunc(std::move(p), SparsePoly::constant(n, 1));
}

void RatFunc::normalize() {
  const std::size_t n = num_.nvars();
  if (den_.is_zero()) throw RatFuncError("division by zero");
  if (num_.is_zero()) {
    den_ = SparsePoly::constant(n, 1);
    return;
  }
  if (den_.is_monomial()) {
    const auto& [m, c] = *den_.terms().begin();
    Mono neg(n);
    for (std::size_t i = 0; i < n; ++i) neg[i] = -m[i];
    num_ = num_.shifted(neg) * c.inv();
    den_ = SparsePoly::constant(n, 1);
    return;
  }
  // Strip the common monomial content, then make the denominator monic.
  Mono lo = num_.min_exps();
  Mono dlo = den_.min_exps();
  bool shift = false;
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = -std::min(lo[i], dlo[i]);
    if (lo[i] != 0) shift = true;
  }
  if (shift) {
    num_ = num_.shifted(lo);
    den_ = den_.shifted(lo);
  }
  if (!den_.leading_coef().is_one()) {
    CycNum s = den_.leading_coef().inv();
    num_ = num_ * s;
    den_ = den_ * s;
  }
  if (num_.size() == den_.size() && num_.leading_mono() == den_.leading_mono()) {
    CycNum r = num_.leading_coef();
    if (num_ == den_ * r) {
      num_ = SparsePoly::constant(n, r);
      den_ = SparsePoly::constant(n, 1);
    }
  }
}

std::optional<CycNum> RatFunc::constant_value() const {
  if (!den_.is_constant()) return std::nullopt;
  auto n = num_.constant_value();
  if (!n) return std::nullopt;
  return *n / *den_.constant_value();
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (num_ == o.den_) return RatFunc(o.num_, den_);
  if (den_ == o.num_) return RatFunc(num_, o.den_);
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inv() const {
  if (num_.is_zero()) throw RatFuncError("inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

bool RatFunc::equals(const RatFunc& o) const {
  if (nvars() != o.nvars()) return false;
  if (den_ == o.den_) return num_ == o.num_;
  return num_ * o.den_ == o.num_ * den_;
}

std::string RatFunc::str(const VarSet& vars) const {
  if (den_.is_constant()) return num_.str(vars);
  auto wrap = [&](const SparsePoly& p) {
    std::string s = p.str(vars);
    return p.size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

Substitution::Substitution(std::size_t src_vars, std::size_t dst_vars, std::vector<RatFunc> images)
    : dst_(dst_vars), images_(std::move(images)) {
  if (images_.size() != src_vars) throw RatFuncError("substitution needs one image per source variable");
  for (const auto& r : images_)
    if (r.nvars() != dst_) throw RatFuncError("substitution image has wrong variable count");
}

Substitution Substitution::identity(std::size_t n) {
  std::vector<RatFunc> im;
  for (std::size_t i = 0; i < n; ++i) im.push_back(RatFunc::var(n, i));
  return {n, n, std::move(im)};
}

void Substitution::set_image(std::size_t i, RatFunc r) {
  if (r.nvars() != dst_) throw RatFuncError("substitution image has wrong variable count");
  images_.at(i) = std::move(r);
}

namespace {

class PowerCache {
public:
  PowerCache(const SparsePoly& base, std::size_t n) : pows_{SparsePoly::constant(n, 1)}, base_(base) {}
  const SparsePoly& get(std::size_t k) {
    while (pows_.size() <= k) pows_.push_back(pows_.back() * base_);
    return pows_[k];
  }

private:
  std::vector<SparsePoly> pows_;
  SparsePoly base_;
};

}  // namespace

// Each term c*x^e of N and D maps to c * prod(unit images)^e * prod a_i^(e_i-lo_i) b_i^(hi_i-e_i),
// where a_i/b_i are the non-monomial images; the common factor prod a_i^lo_i b_i^-hi_i cancels.
RatFunc Substitution::apply(const RatFunc& r) const {
  if (r.nvars() != src_vars()) throw RatFuncError("apply: variable count mismatch");
  const std::size_t n = src_vars();
  std::vector<bool> unit(n);
  std::vector<Mono> unit_mono(n);
  std::vector<CycNum> unit_coef(n);
  std::vector<std::int32_t> lo(n, 0), hi(n, 0);
  std::vector<std::optional<PowerCache>> num_pows(n), den_pows(n);
  Mono rmin = r.num().min_exps(), rmax = r.num().max_exps();
  Mono dmin = r.den().min_exps(), dmax = r.den().max_exps();
  for (std::size_t i = 0; i < n; ++i) {
    const RatFunc& im = images_[i];
    if (im.is_zero()) {
      unit[i] = false;
    } else if (im.is_monomial()) {
      unit[i] = true;
      unit_mono[i] = im.num().terms().begin()->first;
      unit_coef[i] = im.num().terms().begin()->second;
      continue;
    }
    lo[i] = std::min({0, rmin.empty() ? 0 : rmin[i], dmin[i]});
    hi[i] = std::max({0, rmax.empty() ? 0 : rmax[i], dmax[i]});
    if (lo[i] < 0 && im.is_zero()) throw RatFuncError("apply: substituting zero into a negative power");
    num_pows[i].emplace(im.num(), dst_);
    if (!im.is_polynomial()) den_pows[i].emplace(im.den(), dst_);
  }
  std::map<std::pair<std::size_t, long>, CycNum> coef_pows;
  auto transform = [&](const SparsePoly& p) {
    SparsePoly out(dst_);
    for (const auto& [m, c] : p.terms()) {
      CycNum coef = c;
      Mono shift(dst_, 0);
      SparsePoly prod = SparsePoly::constant(dst_, 1);
      for (std::size_t i = 0; i < n; ++i) {
        if (unit[i]) {
          if (m[i] == 0) continue;
          auto key = std::make_pair(i, static_cast<long>(m[i]));
          auto it = coef_pows.find(key);
          if (it == coef_pows.end()) it = coef_pows.emplace(key, unit_coef[i].pow(m[i])).first;
          coef *= it->second;
          for (std::size_t j = 0; j < dst_; ++j) shift[j] += m[i] * unit_mono[i][j];
          continue;
        }
        std::size_t up = static_cast<std::size_t>(m[i] - lo[i]);
        if (up > 0) prod = prod * num_pows[i]->get(up);
        if (den_pows[i]) {
          std::size_t down = static_cast<std::size_t>(hi[i] - m[i]);
          if (down > 0) prod = prod * den_pows[i]->get(down);
        }
      }
      out += prod.shifted(shift) * coef;
    }
    return out;
  };
  return RatFunc(transform(r.num()), transform(r.den()));
}

Substitution Substitution::after(const Substitution& inner) const {
  if (inner.dst_vars() != src_vars()) throw RatFuncError("compose: variable count mismatch");
  std::vector<RatFunc> im;
  for (const auto& r : inner.images()) im.push_back(apply(r));
  return {inner.src_vars(), dst_, std::move(im)};
}

}  // namespace wb::rf
