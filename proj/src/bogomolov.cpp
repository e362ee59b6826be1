#include "workbench/bogomolov.hpp"

#include <algorithm>

namespace wb::bog {

std::string invariants_str(const Invariants& inv) {
  if (inv.empty()) return "[]";
  std::string s = "[";
  for (std::size_t i = 0; i < inv.size(); ++i) s += (i ? "," : "") + std::to_string(inv[i]);
  return s + "]";
}

namespace {

std::uint64_t pow3(int m) {
  std::uint64_t r = 1;
  for (int i = 0; i < m; ++i) r *= pc::kPrime;
  return r;
}

std::vector<std::uint64_t> diff(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                std::uint64_t mod) {
  std::vector<std::uint64_t> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = (a[i] + mod - b[i]) % mod;
  return d;
}

bool nonzero(const std::vector<std::uint64_t>& v) {
  return std::any_of(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
}

}  // namespace

TailedCover build_cover(const pc::PcPresentation& p, int m) {
  if (m < 1) throw BogomolovError("tail exponent m must be at least 1");
  TailedCover c;
  c.base = p;
  c.m = m;
  c.modulus = pow3(m);
  pc::Collector col = c.collector();
  c.tails = col.tail_count();
  lat::ResMatrix rel(0, c.tails, c.modulus);
  for (const auto& o : pc::overlaps(col)) {
    ++c.overlaps;
    if (o.lhs.e != o.rhs.e) throw BogomolovError("presentation is inconsistent at " + o.name);
    auto d = diff(o.lhs.t, o.rhs.t, c.modulus);
    if (nonzero(d)) rel.append_row(d);
  }
  c.relations = lat::howell(rel);
  return c;
}

Invariants quotient(const lat::ResMatrix& a, const lat::ResMatrix& b) {
  const std::size_t k = a.cols();
  const std::uint64_t n = a.modulus();
  auto lift = [&](const lat::ResMatrix& r) {
    lat::ResMatrix h = lat::howell(r);
    lat::IntMatrix z(0, k);
    for (std::size_t i = 0; i < h.rows(); ++i) {
      lat::IntVec v;
      for (std::size_t j = 0; j < k; ++j) v.emplace_back(static_cast<unsigned long>(h(i, j)));
      z.append_row(v);
    }
    for (std::size_t j = 0; j < k; ++j) {
      lat::IntVec v(k);
      v[j] = static_cast<unsigned long>(n);
      z.append_row(v);
    }
    return z;
  };
  Invariants out;
  for (const auto& d : lat::quotient_invariants(lift(a), lift(b)))
    if (d > 1) out.push_back(d.get_ui());
  std::sort(out.begin(), out.end());
  return out;
}

Invariants tail_invariants(const TailedCover& c) { return lat::cokernel_invariants(c.relations); }

lat::ResMatrix derived_tail_span(const TailedCover& c) {
  pc::Collector col = c.collector();
  pc::SubgroupEchelon ech(col);
  std::vector<pc::Collector::Elem> gens, norms;
  const int n = c.base.n();
  for (int i = 0; i < n; ++i) norms.push_back(col.gen(i));
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) gens.push_back(col.comm(col.gen(j), col.gen(i)));
  ech.close(gens, norms);
  lat::ResMatrix span = c.relations;
  for (const auto& t : ech.tail_residues()) span.append_row(t);
  return lat::howell(span);
}

Invariants multiplier(const TailedCover& c) { return quotient(derived_tail_span(c), c.relations); }

std::vector<std::pair<pc::Exps, pc::Exps>> commuting_pair_exps(const pc::PcGroup& g) {
  std::vector<std::pair<pc::Exps, pc::Exps>> out;
  for (auto [a, b] : pc::commuting_pairs(g))
    if (a < b) out.emplace_back(g.exps(a), g.exps(b));
  return out;
}

lat::ResMatrix m0_subgroup(const TailedCover& c, const std::vector<std::pair<pc::Exps, pc::Exps>>& pairs) {
  pc::Collector col = c.collector();
  lat::ResMatrix span = c.relations;
  for (const auto& [x, y] : pairs) {
    auto k = col.comm(col.from_exps(x), col.from_exps(y));
    if (!col.base_is_identity(k)) throw BogomolovError("pair does not commute in the base group");
    if (nonzero(k.t)) span.append_row(k.t);
    // keep the working matrix small
    if (span.rows() > 4 * c.tails) span = lat::howell(span);
  }
  return lat::howell(span);
}

Stabilized stabilize(const pc::PcPresentation& p, int m0) {
  Stabilized s;
  Invariants prev = multiplier(build_cover(p, m0));
  for (int m = m0;; ++m) {
    Invariants next = multiplier(build_cover(p, m + 1));
    if (next == prev) {
      s.m = m;
      s.multiplier = prev;
      return s;
    }
    if (m + 1 >= 5) {
      s.m = m + 1;
      s.multiplier = next;
      s.anomaly = true;
      return s;
    }
    prev = next;
  }
}

B0Result b0(const pc::PcPresentation& p, int m0) {
  B0Result r;
  Stabilized s = stabilize(p, m0);
  r.m = s.m;
  r.anomaly = s.anomaly;
  TailedCover c = build_cover(p, s.m);
  lat::ResMatrix mspan = derived_tail_span(c);
  r.multiplier = quotient(mspan, c.relations);
  pc::PcGroup g(p);
  auto pairs = commuting_pair_exps(g);
  r.commuting_pairs = pairs.size();
  lat::ResMatrix m0span = m0_subgroup(c, pairs);
  // M0 lies inside M: commutators of commuting lifts are tail-only members of [G*,G*].
  r.m0 = quotient(m0span, c.relations);
  r.b0 = quotient(mspan, m0span);
  return r;
}

}  // namespace wb::bog
