#pragma once

#include "workbench/cyclotomic.hpp"
#include "workbench/pcgroup.hpp"
#include "workbench/ratfunc.hpp"

#include <string>
#include <vector>

namespace wb::rf {

using RatMatrix = std::vector<std::vector<RatFunc>>;
// One field automorphism per pc generator, sigma_{gh} = sigma_g o sigma_h.
using Action = std::vector<Substitution>;

RatFunc widen(const RatFunc& r, std::size_t nvars);

RatFunc det(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

// det(T*I - M), coefficients from T^0 up to T^n (monic). Leibniz expansion, n <= 4.
std::vector<RatFunc> char_poly_generic(const RatMatrix& m);
std::vector<CycNum> char_poly(const cyc::CycMatrix& m);

bool substitutions_equal(const Substitution& a, const Substitution& b);

// Substitution of x_i -> sum_j M_ji x_j for each matrix.
Action linear_action(const std::vector<cyc::CycMatrix>& mats);
Substitution eval_word(const Action& s, const pc::Exps& word);

struct ActionFailure {
  std::string relation;
  std::string variable;
};

struct ActionReport {
  std::size_t relations_checked = 0;
  std::vector<ActionFailure> failures;
  bool ok() const { return failures.empty(); }
};

ActionReport verify_action(const Action& s, const pc::PcPresentation& p, const VarSet& vars);

// f: old variable -> expression in new variables; finv: new variable -> expression in old variables.
bool verify_birational(const Substitution& f, const Substitution& finv);

// old_action acts on the old variables; def maps each new variable to its expression in the old ones;
// claimed is an expression in the new variables.
bool verify_claimed_image(const Substitution& old_action, const Substitution& def, std::size_t v,
                          const RatFunc& claimed);
bool verify_claimed_image(const Substitution& action, std::size_t v, const RatFunc& claimed);

// sigma(x_i) = L_i / L_0 for the listed variables; row i holds the coefficients of L_i on (1, x_1, ..., x_n).
RatMatrix fractional_linear_matrix(const Substitution& s, const std::vector<std::size_t>& xvars);

struct LinearizeResult {
  std::size_t cyclic_index = 0;  // b = e_j used as the cyclic vector
  RatMatrix krylov;              // rows b A^i
  std::vector<RatFunc> y;        // y_i in the old variables
  Substitution to_old;           // new variable -> old expression
  Substitution to_new;           // old variable -> new expression
  bool shift_ok = false;         // sigma(y_i) = y_{i+1}
  bool last_ok = false;          // sigma(y_n) = c / (y_1 ... y_n)
  bool birational_ok = false;
  bool ok() const { return shift_ok && last_ok && birational_ok; }
};

// sigma acts on xvars by x_i -> L_i/L_0 with coefficient matrix a, other variables fixed.
// Throws LinearizeError unless char_poly(a) = T^(n+1) - c.
LinearizeResult linearize_cyclic(const RatMatrix& a, const RatFunc& c, std::size_t nvars,
                                 const std::vector<std::size_t>& xvars);
LinearizeResult linearize_cyclic(const cyc::CycMatrix& a, const CycNum& c);

bool lemma4_check(const RatFunc& a, const Substitution& s2);

enum class Shape { Affine, Linear, Fractional, Monomial };

struct ShapeReport {
  bool base_preserved = false;  // non-listed variables map into the base field
  bool shape_ok = false;
  std::vector<std::string> offenders;
  bool ok() const { return base_preserved && shape_ok; }
};

ShapeReport affine_shape_check(const Substitution& s, const std::vector<std::size_t>& vars, Shape shape,
                               const VarSet& names);

// Invariants for a group of order 9 generated by commuting s1, s2 of order 3.
struct DescentResult {
  bool group_ok = false;      // s1^3 = s2^3 = 1 and s1 s2 = s2 s1 on every variable
  bool hypothesis_ok = false;  // the action has the required shape
  bool invariant_ok = false;
  bool birational_ok = false;
  std::size_t lambda_index = 0;  // candidate multiplier used by the trace
  std::vector<RatFunc> invariants;
  Substitution to_old, to_new;
  std::string detail;
  bool ok() const { return group_ok && hypothesis_ok && invariant_ok && birational_ok; }
};

// Two-variable descent: s1: X -> Y -> 1/(XY), s2: X -> (a/s1(a)) X, Y -> (s1(a)/s1^2(a)) Y with
// a * s2(a) * s2^2(a) = 1. Returns Z, W in the X, Y slots.
DescentResult lemma4_descend(const Substitution& s1, const Substitution& s2, std::size_t x, std::size_t y,
                             const RatFunc& a);

// One-variable descent for v -> A(sigma) v with A(sigma) in the field of the remaining variables.
DescentResult linear_descend(const Substitution& s1, const Substitution& s2, std::size_t v);

class LinearizeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace wb::rf
