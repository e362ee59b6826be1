#pragma once

// Shared fixtures for the unit suites. Each case names the source of its expected value:
// PAPER (checked against the displayed value), DERIVED (independent oracle in this file or
// the test) or TRIVIAL.

#include "workbench/latalg.hpp"
#include "workbench/monomial.hpp"
#include "workbench/paperdata.hpp"
#include "workbench/ratfunc.hpp"

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

namespace wbtest {

inline std::uint64_t seed() {
  const char* s = std::getenv("WORKBENCH_SEED");
  return s ? std::strtoull(s, nullptr, 10) : 20240611ULL;
}

// Exponent matrix with rows = y11..y33, columns = z1..z9, as displayed for G(65).
inline const std::vector<std::vector<long>>& det27_rows() {
  static const std::vector<std::vector<long>> m = {
      {0, 0, 0, 1, 1, 0, 0, 0, 0},    {0, -1, 0, 1, 0, 1, 0, 0, 0},  {0, 0, 0, 0, 0, 0, 1, -2, 1},
      {0, 0, -1, 0, 0, -1, 0, 0, 0},  {1, 0, -1, 0, 1, -1, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 1, 1, 1},
      {0, 0, 1, -1, 1, 0, 0, 0, 1},   {-1, 1, 1, -1, 0, 1, 0, 0, 1}, {0, 0, 0, 0, 0, 0, -2, 1, 1},
  };
  return m;
}

// Same layout for the Phi_10 groups.
inline const std::vector<std::vector<long>>& det10_rows() {
  static const std::vector<std::vector<long>> m = {
      {0, -1, 0, 1, 0, 1, 1, 0, -1},  {1, -1, -1, 1, 1, 0, 0, 1, -1}, {0, 0, 0, 0, 1, 1, 0, 0, -1},
      {0, 1, 0, 0, 1, -1, 0, -2, 0},  {-1, 1, 0, 0, 0, -1, 1, -2, -1}, {0, 0, 0, 0, 1, -2, -1, -1, -1},
      {0, 0, 0, -1, -1, 0, 0, 0, 0},  {0, 0, 1, -1, -1, 1, 1, 0, 0},   {0, 0, 0, 0, -2, 1, 1, 1, -1},
  };
  return m;
}

// Monomial terms z_j = eta^coef[j] * prod_i y_i^rows[i][j].
inline std::vector<wb::mono::MonomialTerm> columns_as_terms(const std::vector<std::vector<long>>& rows,
                                                            const std::vector<int>& coef) {
  std::vector<wb::mono::MonomialTerm> z(rows[0].size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    z[j].coef = coef.empty() ? 0 : coef[j];
    for (const auto& r : rows) z[j].exps.push_back(r[j]);
  }
  return z;
}

// Variable index of y_rc (1-based r, c) in y11, y12, ..., y33.
inline std::size_t yv(int r, int c) { return static_cast<std::size_t>(3 * (r - 1) + (c - 1)); }

// Builds y -> eta^c * y^row maps from (target, exps) lists.
struct MapBuilder {
  std::size_t n;
  wb::lat::IntMatrix e;
  std::vector<int> c;
  explicit MapBuilder(std::size_t n_) : n(n_), e(n_, n_), c(n_, 0) {}
  MapBuilder& set(std::size_t i, int coef, const std::vector<std::pair<std::size_t, long>>& mono) {
    for (std::size_t j = 0; j < n; ++j) e(i, j) = 0;
    for (auto [j, k] : mono) e(i, j) = k;
    c[i] = coef;
    return *this;
  }
  wb::mono::MonomialMap build() const { return {e, c}; }
};

inline wb::rf::VarSetPtr vars(const std::string& names) {
  std::vector<std::string> v;
  std::string cur;
  for (char ch : names + " ")
    if (ch == ' ' || ch == ',') {
      if (!cur.empty()) v.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  return wb::rf::make_vars(v);
}

}  // namespace wbtest
