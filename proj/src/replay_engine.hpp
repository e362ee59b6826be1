#pragma once

#include "workbench/linearize.hpp"
#include "workbench/monomial.hpp"
#include "workbench/paperdata.hpp"
#include "workbench/replay.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wb::replay::detail {

using rf::CycNum;
using rf::Mono;
using rf::RatFunc;
using rf::Substitution;
using rf::VarSet;
using rf::VarSetPtr;

// Named variables together with the action of named generators on them.
struct Level {
  VarSetPtr vars;
  std::map<std::string, Substitution> act;
  const Substitution& at(const std::string& gen) const;
  std::size_t var(const std::string& name) const;
};

// New variables given by expressions in older ones.
struct Chart {
  VarSetPtr vars;
  VarSetPtr old;
  Substitution def;  // new variable -> expression in old variables
};

// One generator's displayed images, "a -> expr, b -> expr".
struct Line {
  std::string gen;
  std::string maps;
};

class Script {
public:
  Script(Report& r, std::string id) : r_(r), id_(std::move(id)) { r_.script = id_; }

  rf::ParseEnv env;

  const std::string& id() const { return id_; }
  void claim(const std::string& name, const std::string& ref, bool pass, const std::string& detail = "");
  // Runs fn; an exception counts as a failure with its message as detail.
  void check(const std::string& name, const std::string& ref, const std::function<bool(std::string&)>& fn);
  void note(const std::string& name, const std::string& text);

  RatFunc parse(const VarSet& vars, const std::string& text) const;
  Chart chart(const VarSetPtr& old, const std::vector<std::string>& names, const std::vector<std::string>& defs) const;

  // One claim per displayed image: truth(def(v)) == def(claimed). Returns the displayed action.
  Level display(const std::string& step, const std::string& ref, const Level& truth, const Chart& c,
                const std::vector<Line>& lines);
  // Display on the variables of truth itself.
  Level display(const std::string& step, const std::string& ref, const Level& truth, const std::vector<Line>& lines);

  // k(listed old variables) = k(new variables); inv gives each listed old variable in the new ones.
  void birational(const std::string& step, const std::string& ref, const Chart& c,
                  const std::vector<std::string>& old_names, const std::vector<std::string>& inv);

  // The chart's monomials generate the fixed field of the diagonal substitutions gens
  // on the variables `on` of the chart's old level.
  void fixed_field(const std::string& step, const std::string& ref, const std::vector<Substitution>& gens,
                   const Chart& c, const std::vector<std::string>& on, std::optional<long> det);
  // Exponent matrix of the chart (columns = new variables, rows = `on`) equals the displayed one.
  void exponent_display(const std::string& step, const std::string& ref, const Chart& c,
                        const std::vector<std::string>& on, const std::vector<std::vector<long>>& rows);

  // Every non-identity element of <s1, s2> (both of order 3) moves some variable of `base`.
  bool faithful_c3c3(const Substitution& s1, const Substitution& s2, const std::vector<std::size_t>& base) const;

private:
  Report& r_;
  std::string id_;
};

std::vector<std::string> split_names(const std::string& s);
std::vector<std::string> grid_names(const std::string& prefix, int rows, int cols);

Level matrix_level(const paper::GroupRecord& g, const VarSetPtr& xvars);
// second is defined over first.vars; the result expresses second.vars over first.old.
Chart compose(const Chart& first, const Chart& second);
Chart chart_from(const VarSetPtr& old, const std::vector<std::string>& names, std::vector<RatFunc> defs);
// Action on the new variables given old variable -> expression in the new ones.
Substitution transport(const Substitution& s, const Chart& c, const Substitution& inv);
Substitution inverse_of(const Chart& c, const std::vector<std::string>& exprs, const rf::ParseEnv& env);
// Images of the listed variables are scalar multiples of themselves.
std::optional<std::vector<CycNum>> diag_scalars(const Substitution& s, const std::vector<std::size_t>& on);
// tau diagonal on the old variables; the induced diagonal action on the chart variables, if any.
std::optional<Substitution> scale_through(const Substitution& tau, const Chart& c);
// Action of a monomial substitution on monomial coordinates, by solving for exponents.
std::optional<Substitution> monomial_transport(const Substitution& s, const Chart& c);
bool same_images(const Substitution& a, const Substitution& b, const std::vector<std::size_t>& vars);
std::vector<std::size_t> indices(const VarSet& v, const std::vector<std::string>& names);

// Script bodies.
void s4_case1(Script& s);
void s4_case2(Script& s);
void s5_case1(Script& s);
void s5_case2(Script& s);
void s5_cor1(Script& s);
void s6_thmain1(Script& s);
void s6_phi7(Script& s);
void s6_phi10(Script& s);

}  // namespace wb::replay::detail
