#pragma once

#include "workbench/cyclotomic.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wb::rf {

using cyc::CycNum;
using Mono = std::vector<std::int32_t>;

class VarSet {
public:
  explicit VarSet(std::vector<std::string> names);
  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index(const std::string& name) const;

private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
};
using VarSetPtr = std::shared_ptr<const VarSet>;
VarSetPtr make_vars(std::vector<std::string> names);

// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const;
};

// Laurent polynomial over Q(eta); negative exponents allowed.
class SparsePoly {
public:
  using Terms = std::map<Mono, CycNum, GrlexLess>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : n_(nvars) {}
  static SparsePoly constant(std::size_t nvars, const CycNum& c);
  static SparsePoly var(std::size_t nvars, std::size_t i);
  static SparsePoly monomial(std::size_t nvars, const Mono& m, const CycNum& c);

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return t_.size() == 1; }
  std::optional<CycNum> constant_value() const;
  const Mono& leading_mono() const { return t_.rbegin()->first; }
  const CycNum& leading_coef() const { return t_.rbegin()->second; }

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator-() const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator*(const CycNum& c) const;
  SparsePoly& operator+=(const SparsePoly& o);
  bool operator==(const SparsePoly& o) const { return n_ == o.n_ && t_ == o.t_; }
  SparsePoly pow(unsigned e) const;
  SparsePoly shifted(const Mono& m) const;  // multiply by x^m

  void add_term(const Mono& m, const CycNum& c);
  // Componentwise minimum / maximum exponent over all terms (zero polynomial: empty).
  Mono min_exps() const;
  Mono max_exps() const;
  bool involves(std::size_t var) const;

  std::string str(const VarSet& vars) const;

private:
  std::size_t n_ = 0;
  Terms t_;
};

class RatFunc {
public:
  RatFunc() = default;
  explicit RatFunc(std::size_t nvars) : num_(nvars), den_(SparsePoly::constant(nvars, 1)) {}
  RatFunc(SparsePoly num, SparsePoly den);
  static RatFunc constant(std::size_t nvars, const CycNum& c);
  static RatFunc var(std::size_t nvars, std::size_t i);
  static RatFunc from_poly(SparsePoly p);

  std::size_t nvars() const { return num_.nvars(); }
  const SparsePoly& num() const { return num_; }
  const SparsePoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  std::optional<CycNum> constant_value() const;
  // Single term c*x^m (denominator folded in).
  bool is_monomial() const { return den_.is_constant() && num_.is_monomial(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool involves(std::size_t var) const { return num_.involves(var) || den_.involves(var); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inv() const;
  RatFunc pow(long e) const;

  // Cross-multiplication equality.
  bool equals(const RatFunc& o) const;

  std::string str(const VarSet& vars) const;

private:
  void normalize();
  SparsePoly num_, den_;
};

// Field map sending source variable i to images[i] (a RatFunc in the target variables).
class Substitution {
public:
  Substitution() = default;
  Substitution(std::size_t src_vars, std::size_t dst_vars, std::vector<RatFunc> images);
  static Substitution identity(std::size_t n);

  std::size_t src_vars() const { return images_.size(); }
  std::size_t dst_vars() const { return dst_; }
  const RatFunc& image(std::size_t i) const { return images_.at(i); }
  const std::vector<RatFunc>& images() const { return images_; }
  void set_image(std::size_t i, RatFunc r);

  RatFunc apply(const RatFunc& r) const;
  // (this o inner)(v) = this(inner(v)); inner's images live in this map's source variables.
  Substitution after(const Substitution& inner) const;

private:
  std::size_t dst_ = 0;
  std::vector<RatFunc> images_;
};

// Expression parsing. Identifiers resolve, in order, to: macros, constants, variables.
// zeta and eta are built in; functions apply a Substitution to their argument.
struct ParseEnv {
  std::map<std::string, RatFunc> macros;
  std::map<std::string, CycNum> constants;
  std::map<std::string, long> int_params;  // usable in exponents
  std::map<std::string, const Substitution*> functions;
};

class ExprError : public std::runtime_error {
public:
  ExprError(std::size_t pos, const std::string& msg);
  std::size_t pos() const { return pos_; }

private:
  std::size_t pos_;
};

RatFunc parse_expr(const std::string& text, const VarSet& vars, const ParseEnv& env = {});

class RatFuncError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace wb::rf
