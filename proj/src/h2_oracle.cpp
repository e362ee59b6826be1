#include "workbench/bogomolov.hpp"

#include <algorithm>
#include <deque>

namespace wb::bog {

FiniteGroup finite_group(const pc::PcGroup& g) {
  FiniteGroup f;
  f.order = g.order();
  f.table.resize(f.order * f.order);
  for (std::uint32_t a = 0; a < f.order; ++a)
    for (std::uint32_t b = 0; b < f.order; ++b) f.table[a * f.order + b] = g.mul(a, b);
  return f;
}

namespace {

using Row = std::vector<std::uint64_t>;

std::vector<std::uint32_t> generated(const FiniteGroup& g, const std::vector<std::uint32_t>& s) {
  std::vector<bool> seen(g.order, false);
  std::vector<std::uint32_t> out{0};
  seen[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto x : s) {
      auto y = g.mul(out[i], x);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  return out;
}

std::vector<std::uint32_t> generating_set(const FiniteGroup& g) {
  std::vector<std::uint32_t> s;
  for (;;) {
    auto h = generated(g, s);
    if (h.size() == g.order) return s;
    std::vector<bool> in(g.order, false);
    for (auto x : h) in[x] = true;
    for (std::uint32_t x = 1; x < g.order; ++x)
      if (!in[x]) {
        s.push_back(x);
        break;
      }
  }
}

// Accumulates rows over Z/N, folding into Howell form whenever the buffer grows.
class RowSink {
public:
  RowSink(std::size_t cols, std::uint64_t n) : m_(0, cols, n), cols_(cols) {}
  void add(const Row& r) {
    if (std::all_of(r.begin(), r.end(), [](std::uint64_t v) { return v == 0; })) return;
    m_.append_row(r);
    ++count_;
    if (m_.rows() > 2 * cols_ + 64) m_ = lat::howell(m_);
  }
  lat::ResMatrix finish() { return lat::howell(m_); }
  std::size_t count() const { return count_; }

private:
  lat::ResMatrix m_;
  std::size_t cols_;
  std::size_t count_ = 0;
};

Invariants kernel_orders(const lat::KernelResult& k) {
  Invariants out;
  for (auto o : k.orders)
    if (o > 1) out.push_back(o);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

H2Result h2_oracle(const FiniteGroup& g, int m, std::size_t max_order) {
  if (g.order > max_order) throw BogomolovError("h2_oracle: group order exceeds the size cap");
  if (m < 1) throw BogomolovError("h2_oracle: m must be at least 1");
  std::uint64_t n = 1;
  for (int i = 0; i < m; ++i) n *= pc::kPrime;
  const std::size_t G = g.order;
  H2Result res;

  std::vector<std::uint32_t> s = generating_set(g);
  const std::size_t S = s.size();
  const std::size_t U = G * S;
  res.unknowns = U;
  auto u = [&](std::uint32_t a, std::size_t si) { return a * S + si; };

  // Spanning tree of the Cayley graph: parent[h] = (g, si) with g * s[si] = h.
  std::vector<std::pair<std::uint32_t, std::size_t>> parent(G, {0, 0});
  std::vector<bool> seen(G, false);
  std::vector<std::uint32_t> bfs{0};
  seen[0] = true;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t si = 0; si < S; ++si) {
      auto h = g.mul(bfs[i], s[si]);
      if (!seen[h]) {
        seen[h] = true;
        parent[h] = {bfs[i], si};
        bfs.push_back(h);
      }
    }

  // F[a][h]: f(a, h) as a combination of unknowns; f(a, p s) = f(a, p) + f(a p, s) - f(p, s).
  std::vector<std::uint16_t> F(G * G * U, 0);
  auto cell = [&](std::uint32_t a, std::uint32_t h) { return F.data() + (static_cast<std::size_t>(a) * G + h) * U; };
  for (std::size_t i = 1; i < bfs.size(); ++i) {
    std::uint32_t h = bfs[i];
    auto [p, si] = parent[h];
    for (std::uint32_t a = 0; a < G; ++a) {
      std::uint16_t* dst = cell(a, h);
      const std::uint16_t* src = cell(a, p);
      std::copy(src, src + U, dst);
      std::size_t plus = u(g.mul(a, p), si), minus = u(p, si);
      dst[plus] = static_cast<std::uint16_t>((dst[plus] + 1) % n);
      dst[minus] = static_cast<std::uint16_t>((dst[minus] + n - 1) % n);
    }
  }

  RowSink sink(U, n);
  for (std::size_t si = 0; si < S; ++si) {
    Row r(U, 0);
    r[u(0, si)] = 1;
    sink.add(r);
  }
  for (std::uint32_t p = 0; p < G; ++p)
    for (std::size_t si = 0; si < S; ++si) {
      std::uint32_t h = g.mul(p, s[si]);
      if (h != 0 && parent[h] == std::make_pair(p, si)) continue;
      for (std::uint32_t a = 0; a < G; ++a) {
        Row r(U);
        const std::uint16_t* fh = cell(a, h);
        const std::uint16_t* fp = cell(a, p);
        for (std::size_t k = 0; k < U; ++k) r[k] = (fh[k] + n - fp[k]) % n;
        std::size_t plus = u(g.mul(a, p), si), minus = u(p, si);
        r[plus] = (r[plus] + n - 1) % n;
        r[minus] = (r[minus] + 1) % n;
        sink.add(r);
      }
    }
  res.equations = sink.count();
  lat::KernelResult z2 = lat::kernel(sink.finish());

  // Coboundaries of indicator cochains: u(a, s) = [a = x] + [s = x] - [a s = x].
  lat::IntMatrix rel(0, z2.gens.size());
  for (std::size_t k = 0; k < z2.orders.size(); ++k) {
    lat::IntVec r(z2.gens.size());
    r[k] = static_cast<unsigned long>(z2.orders[k]);
    rel.append_row(r);
  }
  for (std::uint32_t x = 1; x < G; ++x) {
    Row b(U, 0);
    for (std::uint32_t a = 0; a < G; ++a)
      for (std::size_t si = 0; si < S; ++si) {
        long v = (a == x) + (s[si] == x) - (g.mul(a, s[si]) == x);
        b[u(a, si)] = (static_cast<std::uint64_t>(v + static_cast<long>(n))) % n;
      }
    auto c = z2.coord(b);
    lat::IntVec r;
    for (auto v : c) r.emplace_back(static_cast<unsigned long>(v));
    rel.append_row(r);
  }
  for (const auto& d : lat::abelian_invariants(rel, z2.gens.size())) {
    if (d == 0) throw BogomolovError("h2_oracle: infinite quotient");
    if (d > 1) res.h2.push_back(d.get_ui());
  }
  std::sort(res.h2.begin(), res.h2.end());

  // Hom(G, Z/N): h(e) = 0 and h(p s) = h(p) + h(s).
  RowSink hom(G, n);
  {
    Row r(G, 0);
    r[0] = 1;
    hom.add(r);
  }
  for (std::uint32_t p = 0; p < G; ++p)
    for (auto x : s) {
      Row r(G, 0);
      auto h = g.mul(p, x);
      r[h] = (r[h] + 1) % n;
      r[p] = (r[p] + n - 1) % n;
      r[x] = (r[x] + n - 1) % n;
      hom.add(r);
    }
  res.hom = kernel_orders(lat::kernel(hom.finish()));

  res.multiplier = res.h2;
  for (auto o : res.hom) {
    auto it = std::find(res.multiplier.begin(), res.multiplier.end(), o);
    if (it == res.multiplier.end()) throw BogomolovError("h2_oracle: Hom part is not a summand of H^2");
    res.multiplier.erase(it);
  }
  return res;
}

}  // namespace wb::bog
