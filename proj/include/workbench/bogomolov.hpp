#pragma once

#include "workbench/latalg.hpp"
#include "workbench/pcgroup.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wb::bog {

// Finite abelian 3-group as ascending invariant factors; empty = trivial.
using Invariants = std::vector<std::uint64_t>;

std::string invariants_str(const Invariants& inv);

// Central extension of G by one tail per relation: g_i^3 = w_i t_i, [g_j,g_i] = w_ji t_ji,
// tails central of order dividing 3^m, modulo the tail relations forced by consistency.
struct TailedCover {
  pc::PcPresentation base;
  int m = 0;
  std::uint64_t modulus = 0;
  std::size_t tails = 0;
  lat::ResMatrix relations;  // Howell form of the consistency relations among tails
  std::size_t overlaps = 0;

  pc::Collector collector() const { return pc::Collector(base, modulus); }
};

TailedCover build_cover(const pc::PcPresentation& p, int m);

// Invariants of A/B for submodules B <= A of (Z/N)^k given by generating rows.
Invariants quotient(const lat::ResMatrix& a, const lat::ResMatrix& b);

// Tail subgroup T; T = M(G) x (Z/3^m)^n once 3^m >= exp M(G).
Invariants tail_invariants(const TailedCover& c);

// Tail vectors spanning T cap [G*,G*] (consistency relations included), Howell form.
lat::ResMatrix derived_tail_span(const TailedCover& c);
Invariants multiplier(const TailedCover& c);

// Span of the commutators of zero-tail lifts of commuting pairs, plus the consistency relations.
lat::ResMatrix m0_subgroup(const TailedCover& c, const std::vector<std::pair<pc::Exps, pc::Exps>>& pairs);
std::vector<std::pair<pc::Exps, pc::Exps>> commuting_pair_exps(const pc::PcGroup& g);

struct Stabilized {
  int m = 0;
  Invariants multiplier;
  bool anomaly = false;  // not stable by m = 5
};

// Smallest m >= m0 with equal multiplier invariants at m and m + 1.
Stabilized stabilize(const pc::PcPresentation& p, int m0 = 2);

struct B0Result {
  int m = 0;
  Invariants multiplier;
  Invariants m0;
  Invariants b0;
  bool anomaly = false;
  std::size_t commuting_pairs = 0;
};

B0Result b0(const pc::PcPresentation& p, int m0 = 2);

// Bar-resolution oracle on an explicit multiplication table (element 0 is the identity).
struct FiniteGroup {
  std::size_t order = 0;
  std::vector<std::uint32_t> table;  // table[a * order + b] = ab
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table[a * order + b]; }
};

FiniteGroup finite_group(const pc::PcGroup& g);

struct H2Result {
  Invariants h2;            // H^2(G, Z/3^m), trivial action
  Invariants hom;           // Hom(G, Z/3^m)
  Invariants multiplier;    // h2 with the hom part removed
  std::size_t unknowns = 0;
  std::size_t equations = 0;
};

// Normalized 2-cocycles are parametrized by f(a, s) for s in a generating set; f(a, g s) is
// forced by the cocycle identity along a spanning tree and the remaining edges give the equations.
H2Result h2_oracle(const FiniteGroup& g, int m, std::size_t max_order = 81);

class BogomolovError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace wb::bog
