#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace wb::pc {
class PcPresentation;
}

namespace wb::cyc {

// Element of Q(eta) = Q[x]/(x^6 + x^3 + 1), eta a primitive 9th root of unity, zeta = eta^3.
class CycNum {
public:
  CycNum() = default;
  CycNum(long v) { c_[0] = v; }
  CycNum(const mpq_class& v) { c_[0] = v; }

  static CycNum eta(long k);
  static CycNum zeta(long k) { return eta(3 * k); }
  static CycNum from_coords(const std::array<mpq_class, 6>& c);

  const mpq_class& coord(int i) const { return c_[i]; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator-() const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator/(const CycNum& o) const { return *this * o.inv(); }
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
  bool operator==(const CycNum& o) const { return c_ == o.c_; }
  bool operator!=(const CycNum& o) const { return !(c_ == o.c_); }
  // Lexicographic on coordinates; only used for canonical orderings.
  bool operator<(const CycNum& o) const;

  CycNum inv() const;
  CycNum pow(long e) const;

  // Canonical serialization, e.g. "1/2+3*e^2-e^5"; "0" for zero.
  std::string str() const;
  std::string key() const;

private:
  std::array<mpq_class, 6> c_{};
};

// j in [0,9) with c = eta^j, if any.
std::optional<int> root_log(const CycNum& c);

class CycMatrix {
public:
  CycMatrix() = default;
  explicit CycMatrix(std::size_t n) : n_(n), a_(n * n) {}

  static CycMatrix identity(std::size_t n);
  static CycMatrix scalar(std::size_t n, const CycNum& s);
  static CycMatrix diag(const std::vector<CycNum>& d);
  // Block matrix from a grid of equal-size square blocks; empty blocks are zero.
  static CycMatrix blocks(const std::vector<std::vector<std::optional<CycMatrix>>>& grid);
  static CycMatrix block_diag(const std::vector<CycMatrix>& bs);

  std::size_t dim() const { return n_; }
  CycNum& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const CycNum& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  CycMatrix operator*(const CycMatrix& o) const;
  CycMatrix operator*(const CycNum& s) const;
  bool operator==(const CycMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const CycMatrix& o) const { return !(*this == o); }
  CycMatrix pow(long e) const;
  std::optional<CycMatrix> inverse() const;
  bool is_identity() const;

  std::string key() const;

private:
  std::size_t n_ = 0;
  std::vector<CycNum> a_;
};

// Named matrices: c3^(i), d3, d9^(i), e3^(i).
CycMatrix c3(int i = 0);
CycMatrix d3();
CycMatrix d9(int i);
CycMatrix e3(int i);

struct MatrixGroup {
  std::vector<CycMatrix> gens;
  std::vector<CycMatrix> elements;
  std::vector<std::vector<int>> words;  // generator indices, product left to right
  std::unordered_map<std::string, std::size_t> index;
  bool overflow = false;

  std::size_t order() const { return elements.size(); }
  std::optional<std::size_t> find(const CycMatrix& m) const;
};

MatrixGroup closure(const std::vector<CycMatrix>& gens, std::size_t cap = 2187);

struct RelationCheck {
  std::string relation;  // e.g. "pow 1" or "comm 2 1"
  bool ok;
};

struct RepReport {
  std::vector<RelationCheck> relations;
  std::size_t closure_order = 0;
  bool overflow = false;
  bool ok() const;
};

RepReport rep_check(const pc::PcPresentation& p, const std::vector<CycMatrix>& images,
                    std::size_t cap = 2187);

class CycError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace wb::cyc
