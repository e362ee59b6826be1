#include "workbench/monomial.hpp"

namespace wb::mono {

int mod9(long v) { return static_cast<int>(((v % kRootOrder) + kRootOrder) % kRootOrder); }

MonomialMap::MonomialMap(lat::IntMatrix e, std::vector<int> c) : e_(std::move(e)), c_(std::move(c)) {
  if (e_.rows() != c_.size() || e_.cols() != c_.size()) throw MonomialError("exponent matrix must be n x n");
  for (int& x : c_) x = mod9(x);
}

MonomialMap MonomialMap::identity(std::size_t n) { return {lat::IntMatrix::identity(n), std::vector<int>(n, 0)}; }

MonomialMap MonomialMap::diagonal(const std::vector<int>& c) { return {lat::IntMatrix::identity(c.size()), c}; }

MonomialTerm MonomialMap::image(std::size_t i) const {
  MonomialTerm t;
  t.coef = c_[i];
  for (std::size_t j = 0; j < n(); ++j) t.exps.push_back(e_(i, j).get_si());
  return t;
}

bool MonomialMap::is_diagonal() const { return e_ == lat::IntMatrix::identity(n()); }

MonomialTerm apply(const MonomialMap& f, const MonomialTerm& t) {
  if (t.exps.size() != f.n()) throw MonomialError("term length does not match map");
  MonomialTerm r;
  long coef = t.coef;
  r.exps.assign(f.n(), 0);
  for (std::size_t i = 0; i < f.n(); ++i) {
    long v = t.exps[i];
    if (v == 0) continue;
    coef += v * f.c()[i];
    for (std::size_t j = 0; j < f.n(); ++j) r.exps[j] += v * f.E()(i, j).get_si();
  }
  r.coef = mod9(coef);
  return r;
}

MonomialMap compose(const MonomialMap& f, const MonomialMap& g) {
  if (f.n() != g.n()) throw MonomialError("compose: size mismatch");
  lat::IntMatrix e(g.n(), g.n());
  std::vector<int> c(g.n());
  for (std::size_t i = 0; i < g.n(); ++i) {
    MonomialTerm t = apply(f, g.image(i));
    for (std::size_t j = 0; j < g.n(); ++j) e(i, j) = t.exps[j];
    c[i] = t.coef;
  }
  return {e, c};
}

std::optional<MonomialMap> inverse(const MonomialMap& f) {
  lat::Int d = lat::det(f.E());
  if (d != 1 && d != -1) return std::nullopt;
  const std::size_t n = f.n();
  // E^{-1} via solving x * E = e_i; coefficients from g(f(y_i)) = y_i.
  lat::IntMatrix einv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    lat::IntVec unit(n);
    unit[i] = 1;
    auto x = lat::solve_lattice(f.E(), unit);
    if (!x) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) einv(i, j) = (*x)[j];
  }
  // f(g(y_i)) = y_i with g(y_i) = eta^{c'_i} y^{row i of E^{-1}}: c'_i + row_i(E^{-1}) . c_f = 0
  std::vector<int> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    long s = 0;
    for (std::size_t j = 0; j < n; ++j) s += einv(i, j).get_si() * f.c()[j];
    c[i] = mod9(-s);
  }
  return MonomialMap(einv, c);
}

int order(const MonomialMap& f, int cap) {
  MonomialMap p = f;
  MonomialMap id = MonomialMap::identity(f.n());
  for (int k = 1; k <= cap; ++k) {
    if (p == id) return k;
    p = compose(f, p);
  }
  return 0;
}

lat::IntMatrix exponent_matrix(const std::vector<MonomialTerm>& z) {
  lat::IntMatrix b(0, z.empty() ? 0 : z[0].exps.size());
  for (const auto& t : z) {
    lat::IntVec r;
    for (long v : t.exps) r.emplace_back(v);
    b.append_row(r);
  }
  return b;
}

FixedFieldCertificate fixed_field_certificate(const std::vector<MonomialMap>& d, const std::vector<MonomialTerm>& z) {
  FixedFieldCertificate cert;
  if (z.empty()) throw MonomialError("certificate needs monomials");
  const std::size_t n = z[0].exps.size();
  if (z.size() != n) throw MonomialError("certificate needs exactly n monomials");
  for (const auto& m : d) {
    if (m.n() != n) throw MonomialError("certificate: map size mismatch");
    if (!m.is_diagonal()) throw MonomialError("certificate: map is not diagonal");
  }
  cert.invariant = true;
  for (std::size_t k = 0; k < z.size(); ++k) {
    bool inv = true;
    for (const auto& m : d) {
      long s = 0;
      for (std::size_t i = 0; i < n; ++i) s += z[k].exps[i] * m.c()[i];
      if (mod9(s) != 0) inv = false;
    }
    if (!inv) {
      cert.invariant = false;
      cert.noninvariant.push_back(k);
    }
  }
  cert.det = lat::det(exponent_matrix(z));
  lat::ResMatrix chars(0, n, kRootOrder);
  for (const auto& m : d) {
    std::vector<long long> row(m.c().begin(), m.c().end());
    chars.append_row_signed(row);
  }
  cert.group_order = lat::span_size(lat::howell(chars));
  cert.holds = cert.invariant && abs(cert.det) == cert.group_order;
  cert.detail = "det=" + cert.det.get_str() + " scaling-group-order=" + cert.group_order.get_str() +
                (cert.invariant ? "" : " (not invariant)");
  return cert;
}

MonomialMap induced_action(const MonomialMap& f, const std::vector<MonomialTerm>& z) {
  const std::size_t m = z.size();
  lat::IntMatrix b = exponent_matrix(z);
  lat::IntMatrix e(m, m);
  std::vector<int> c(m);
  for (std::size_t k = 0; k < m; ++k) {
    MonomialTerm t = apply(f, z[k]);
    lat::IntVec v;
    for (long x : t.exps) v.emplace_back(x);
    auto x = lat::solve_lattice(b, v);
    if (!x) throw MonomialError("induced_action: image of z" + std::to_string(k + 1) + " leaves the lattice");
    long coef = t.coef;
    for (std::size_t l = 0; l < m; ++l) {
      e(k, l) = (*x)[l];
      coef -= (*x)[l].get_si() * z[l].coef;
    }
    c[k] = mod9(coef);
  }
  return {e, c};
}

}  // namespace wb::mono
