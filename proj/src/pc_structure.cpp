#include "workbench/latalg.hpp"
#include "workbench/pcgroup.hpp"

#include <algorithm>

namespace wb::pc {

std::vector<Overlap> overlaps(const Collector& c) {
  const int n = c.n();
  std::vector<Overlap> out;
  auto name = [](const char* kind, std::initializer_list<int> idx) {
    std::string s = kind;
    s += '(';
    bool first = true;
    for (int i : idx) {
      if (!first) s += ',';
      s += std::to_string(i + 1);
      first = false;
    }
    return s + ')';
  };
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < j; ++i) {
        Collector::Elem lhs = c.collect_pair(k, j);
        c.mul_gen(lhs, i);
        Collector::Elem rhs = c.gen(k);
        c.mul(rhs, c.collect_pair(j, i));
        out.push_back({name("overlap", {k, j, i}), std::move(lhs), std::move(rhs)});
      }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      Collector::Elem lhs = c.power_elem(j);
      c.mul_gen(lhs, i);
      Exps sq(n, 0);
      sq[j] = kPrime - 1;
      Collector::Elem rhs = c.from_exps(sq);
      c.mul(rhs, c.collect_pair(j, i));
      out.push_back({name("power-left", {j, i}), std::move(lhs), std::move(rhs)});
    }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      Collector::Elem lhs = c.gen(j);
      c.mul(lhs, c.power_elem(i));
      Collector::Elem rhs = c.collect_pair(j, i);
      for (int r = 1; r < kPrime; ++r) c.mul_gen(rhs, i);
      out.push_back({name("power-right", {j, i}), std::move(lhs), std::move(rhs)});
    }
  for (int i = 0; i < n; ++i) {
    Collector::Elem lhs = c.gen(i);
    c.mul(lhs, c.power_elem(i));
    Collector::Elem rhs = c.power_elem(i);
    c.mul_gen(rhs, i);
    out.push_back({name("power-self", {i}), std::move(lhs), std::move(rhs)});
  }
  return out;
}

ConsistencyReport verify_consistency(const PcPresentation& p, std::size_t random_triples, std::uint64_t seed) {
  ConsistencyReport rep;
  Collector c(p);
  for (const auto& o : overlaps(c)) {
    ++rep.overlaps_checked;
    if (o.lhs.e != o.rhs.e) rep.failures.push_back(o.name);
  }
  if (random_triples == 0) return rep;
  PcGroup g(p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(g.order() - 1));
  std::size_t bad = 0;
  for (std::size_t t = 0; t < random_triples; ++t) {
    std::uint32_t a = pick(rng), b = pick(rng), d = pick(rng);
    if (g.mul(g.mul(a, b), d) != g.mul(a, g.mul(b, d))) ++bad;
  }
  rep.random_triples = random_triples;
  if (bad) rep.failures.push_back("associativity(" + std::to_string(bad) + " of " + std::to_string(random_triples) + ")");
  return rep;
}

std::vector<long> abelian_invariants_of(const PcGroup& g, const std::vector<std::uint32_t>& elems) {
  std::vector<std::size_t> counts{1};
  for (long q = kPrime;; q *= kPrime) {
    std::size_t cnt = 0;
    for (auto x : elems)
      if (g.pow(x, q) == 0) ++cnt;
    counts.push_back(cnt);
    if (cnt == elems.size()) break;
  }
  auto lg = [](std::size_t v) {
    int r = 0;
    while (v > 1) {
      v /= kPrime;
      ++r;
    }
    return r;
  };
  std::vector<int> ge;  // ge[k] = number of cyclic factors of order >= 3^k
  for (std::size_t k = 1; k < counts.size(); ++k) ge.push_back(lg(counts[k] / counts[k - 1]));
  ge.push_back(0);
  std::vector<long> inv;
  long q = kPrime;
  for (std::size_t k = 0; k + 1 < ge.size(); ++k, q *= kPrime)
    for (int r = 0; r < ge[k] - ge[k + 1]; ++r) inv.push_back(q);
  std::sort(inv.begin(), inv.end());
  return inv;
}

Structure structure(const PcGroup& g) {
  Structure s;
  const PcPresentation& p = g.presentation();
  const int n = p.n();
  s.order = g.order();
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int i = 0; i < n && central; ++i) central = g.mul(x, g.gen(i)) == g.mul(g.gen(i), x);
    if (central) s.center.push_back(x);
  }
  s.center_invariants = abelian_invariants_of(g, s.center);

  Collector c(p);
  std::vector<Collector::Elem> gens;
  for (int i = 0; i < n; ++i) gens.push_back(c.gen(i));
  auto size_of = [](const SubgroupEchelon& e) {
    std::size_t r = 1;
    for (std::size_t k = 0; k < e.base_size(); ++k) r *= kPrime;
    return r;
  };
  std::vector<Collector::Elem> comms;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) comms.push_back(c.comm(c.gen(j), c.gen(i)));
  SubgroupEchelon derived(c);
  derived.close(comms, gens);
  s.derived_order = size_of(derived);

  SubgroupEchelon gamma(c);
  gamma.close(gens, gens);
  s.lower_central_orders.push_back(size_of(gamma));
  while (gamma.base_size() > 0) {
    std::vector<Collector::Elem> next;
    for (const auto& x : gamma.generators())
      for (const auto& y : gens) next.push_back(c.comm(x, y));
    SubgroupEchelon g2(c);
    g2.close(next, gens);
    gamma = g2;
    s.lower_central_orders.push_back(size_of(gamma));
    ++s.nilpotency_class;
    if (s.nilpotency_class > n) throw PcError("lower central series does not terminate");
  }

  for (std::uint32_t x = 0; x < g.order(); ++x) s.exponent = std::max(s.exponent, g.element_order(x));

  lat::IntMatrix rel(0, n);
  for (int i = 0; i < n; ++i) {
    lat::IntVec r(n);
    for (int k = 0; k < n; ++k) r[k] = -p.power(i)[k];
    r[i] += kPrime;
    rel.append_row(r);
  }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      lat::IntVec r(n);
      for (int k = 0; k < n; ++k) r[k] = p.comm(j, i)[k];
      rel.append_row(r);
    }
  for (const auto& d : lat::abelian_invariants(rel, n)) s.abelianization.push_back(d.get_si());
  std::sort(s.abelianization.begin(), s.abelianization.end());
  return s;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> commuting_pairs(const PcGroup& g) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t x = 0; x < g.order(); ++x)
    for (std::uint32_t y = 0; y < g.order(); ++y)
      if (g.mul(x, y) == g.mul(y, x)) out.emplace_back(x, y);
  return out;
}

}  // namespace wb::pc
