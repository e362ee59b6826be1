#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wb::lat {

using Int = mpz_class;
using IntVec = std::vector<Int>;

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  void set_row(std::size_t i, const IntVec& v);
  void append_row(const IntVec& v);
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  bool is_zero() const;

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;
  IntMatrix transpose() const;

  std::string str() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

IntVec vec_mat(const IntVec& x, const IntMatrix& m);

// Fraction-free Bareiss elimination.
Int det(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

struct HnfResult {
  IntMatrix H, U;  // U * M = H
};
HnfResult hnf(const IntMatrix& m);

struct SnfResult {
  IntMatrix S, U, V;  // U * M * V = S
};
SnfResult snf(const IntMatrix& m);

// Diagonal of the Smith form, nonzero entries only, ascending.
std::vector<Int> elementary_divisors(const IntMatrix& m);

// x with x * B = v; B must have full row rank.
std::optional<IntVec> solve_lattice(const IntMatrix& b, const IntVec& v);

// Finite abelian invariants of A/B for lattices B <= A <= Z^k given by row generators.
// Throws if B does not have full rank (infinite quotient) or B is not contained in A.
std::vector<Int> quotient_invariants(const IntMatrix& a_gens, const IntMatrix& b_gens);

// Invariants of the abelian group with generators e_1..e_k and the given relation rows.
// Zero entries denote free Z factors.
std::vector<Int> abelian_invariants(const IntMatrix& relations, std::size_t k);

// Residue matrices over Z/N for N = 3^m.
class ResMatrix {
public:
  ResMatrix() = default;
  ResMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t modulus() const { return n_; }
  std::uint64_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<std::uint64_t> row(std::size_t i) const;
  void append_row(const std::vector<std::uint64_t>& v);
  void append_row_signed(const std::vector<long long>& v);
  bool operator==(const ResMatrix& o) const = default;
  std::string str() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::uint64_t n_ = 3;
  std::vector<std::uint64_t> a_;
};

bool is_power_of_three(std::uint64_t n);
int valuation3(std::uint64_t x, std::uint64_t modulus);

// Canonical Howell form; zero rows dropped.
ResMatrix howell(const ResMatrix& m);

// Size of the row span, computed from a Howell form.
mpz_class span_size(const ResMatrix& howell_form);

// Generators of {x : C * x = 0 mod N}. The kernel is the direct sum of the cyclic groups
// generated by gens rows, with the listed orders. coord(x) returns the coefficients of a
// kernel element in that basis.
struct KernelResult {
  std::vector<std::vector<std::uint64_t>> gens;
  std::vector<std::uint64_t> orders;
  std::vector<std::vector<std::uint64_t>> coord_rows;
  std::uint64_t modulus = 3;
  std::vector<std::uint64_t> coord(const std::vector<std::uint64_t>& x) const;
};
KernelResult kernel(const ResMatrix& c);

// Invariants of (Z/N)^cols / rowspan(M), as powers of 3 > 1, ascending.
std::vector<std::uint64_t> cokernel_invariants(const ResMatrix& m);

class LatticeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace wb::lat
