#pragma once

#include "workbench/latalg.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wb::mono {

constexpr int kRootOrder = 9;

int mod9(long v);

// eta^coef * prod_i y_i^exps[i]
struct MonomialTerm {
  int coef = 0;
  std::vector<long> exps;
  bool operator==(const MonomialTerm& o) const = default;
};

// Field automorphism y_i -> eta^c[i] * y^(row i of E).
class MonomialMap {
public:
  MonomialMap() = default;
  MonomialMap(lat::IntMatrix e, std::vector<int> c);
  static MonomialMap identity(std::size_t n);
  static MonomialMap diagonal(const std::vector<int>& c);

  std::size_t n() const { return c_.size(); }
  const lat::IntMatrix& E() const { return e_; }
  const std::vector<int>& c() const { return c_; }
  MonomialTerm image(std::size_t i) const;
  bool is_diagonal() const;
  bool operator==(const MonomialMap& o) const { return e_ == o.e_ && c_ == o.c_; }

private:
  lat::IntMatrix e_;
  std::vector<int> c_;
};

MonomialTerm apply(const MonomialMap& f, const MonomialTerm& t);
// (f o g)(y) = f(g(y))
MonomialMap compose(const MonomialMap& f, const MonomialMap& g);
std::optional<MonomialMap> inverse(const MonomialMap& f);
// Smallest k >= 1 with f^k = id, or 0 if none up to cap.
int order(const MonomialMap& f, int cap = 81);

struct FixedFieldCertificate {
  bool invariant = false;
  std::vector<std::size_t> noninvariant;  // indices into Z
  lat::Int det;
  mpz_class group_order;
  bool holds = false;
  std::string detail;
};

// D: diagonal maps; Z: n monomials. Holds iff every z is D-invariant and
// |det(exponents of Z)| equals the order of the group of scalings generated by D.
FixedFieldCertificate fixed_field_certificate(const std::vector<MonomialMap>& d, const std::vector<MonomialTerm>& z);

// Action of f in the coordinates Z (m terms, full row rank exponent matrix).
MonomialMap induced_action(const MonomialMap& f, const std::vector<MonomialTerm>& z);

lat::IntMatrix exponent_matrix(const std::vector<MonomialTerm>& z);

class MonomialError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace wb::mono
