#include "workbench/pcgroup.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

namespace wb::pc {

namespace {

constexpr std::uint32_t kNone = 0xffffffffu;

struct CentralQuotient {
  const PcGroup* g = nullptr;
  std::vector<std::uint32_t> coset_of;
  std::vector<std::uint32_t> rep;
  std::size_t q = 0;
  std::vector<std::uint32_t> qmul;
  std::vector<std::uint32_t> comm;  // q x q -> element of G
  std::vector<std::uint32_t> derived;
  std::vector<std::uint32_t> qgens;
  std::vector<std::pair<int, int>> profile;  // per coset: (order in Q, number of commuting cosets)

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return qmul[a * q + b]; }
  std::uint32_t cm(std::uint32_t a, std::uint32_t b) const { return comm[a * q + b]; }
};

std::vector<std::uint32_t> closure_in(std::size_t order, const std::vector<std::uint32_t>& gens,
                                      const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& mul) {
  std::vector<char> seen(order, 0);
  std::vector<std::uint32_t> out{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto s : gens) {
      std::uint32_t y = mul(out[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

CentralQuotient central_quotient(const PcGroup& g) {
  CentralQuotient cq;
  cq.g = &g;
  const std::size_t n = g.order();
  std::vector<std::uint32_t> center;
  for (std::uint32_t x = 0; x < n; ++x) {
    bool central = true;
    for (int i = 0; i < g.n() && central; ++i) central = g.mul(x, g.gen(i)) == g.mul(g.gen(i), x);
    if (central) center.push_back(x);
  }
  cq.coset_of.assign(n, kNone);
  for (std::uint32_t x = 0; x < n; ++x) {
    if (cq.coset_of[x] != kNone) continue;
    auto id = static_cast<std::uint32_t>(cq.rep.size());
    cq.rep.push_back(x);
    for (auto z : center) cq.coset_of[g.mul(x, z)] = id;
  }
  cq.q = cq.rep.size();
  cq.qmul.resize(cq.q * cq.q);
  cq.comm.resize(cq.q * cq.q);
  for (std::uint32_t a = 0; a < cq.q; ++a)
    for (std::uint32_t b = 0; b < cq.q; ++b) {
      cq.qmul[a * cq.q + b] = cq.coset_of[g.mul(cq.rep[a], cq.rep[b])];
      cq.comm[a * cq.q + b] = g.comm(cq.rep[a], cq.rep[b]);
    }
  std::vector<std::uint32_t> values(cq.comm.begin(), cq.comm.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  cq.derived = closure_in(n, values, [&](std::uint32_t a, std::uint32_t b) { return g.mul(a, b); });

  auto qm = [&](std::uint32_t a, std::uint32_t b) { return cq.mul(a, b); };
  std::vector<std::uint32_t> sub{0};
  for (int i = 0; i < g.n(); ++i) {
    std::uint32_t c = cq.coset_of[g.gen(i)];
    if (std::binary_search(sub.begin(), sub.end(), c)) continue;
    cq.qgens.push_back(c);
    sub = closure_in(cq.q, cq.qgens, qm);
  }
  if (sub.size() != cq.q) throw PcError("central quotient generators do not generate");
  cq.profile.resize(cq.q);
  for (std::uint32_t a = 0; a < cq.q; ++a) {
    int ord = 1;
    for (std::uint32_t x = a; x != 0; x = cq.mul(x, a)) ++ord;
    int commuting = 0;
    for (std::uint32_t b = 0; b < cq.q; ++b)
      if (cq.cm(a, b) == 0) ++commuting;
    cq.profile[a] = {ord, commuting};
  }
  return cq;
}

class Search {
public:
  Search(const CentralQuotient& a, const CentralQuotient& b) : a_(a), b_(b) {}

  std::optional<IsoclinismWitness> run(std::size_t& tried) {
    const std::size_t k = a_.qgens.size();
    cands_.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::uint32_t gi = a_.qgens[i];
      // identity-first: the coset of the same-index pc generator of G2
      std::uint32_t preferred = kNone;
      Exps e = a_.g->exps(a_.rep[gi]);
      if (b_.g->n() == a_.g->n()) preferred = b_.coset_of[b_.g->index(e)];
      if (preferred != kNone && b_.profile[preferred] == a_.profile[gi]) cands_[i].push_back(preferred);
      for (std::uint32_t c = 0; c < b_.q; ++c)
        if (c != preferred && b_.profile[c] == a_.profile[gi]) cands_[i].push_back(c);
      if (cands_[i].empty()) return std::nullopt;
    }
    theta_gen_.assign(k, kNone);
    phi_.clear();
    phi_inv_.clear();
    tried_ = 0;
    bool found = dfs(0);
    tried = tried_;
    if (!found) return std::nullopt;
    return witness_;
  }

private:
  bool bind(std::uint32_t v1, std::uint32_t v2, std::vector<std::uint32_t>& undo) {
    auto it = phi_.find(v1);
    if (it != phi_.end()) return it->second == v2;
    auto jt = phi_inv_.find(v2);
    if (jt != phi_inv_.end()) return false;
    phi_[v1] = v2;
    phi_inv_[v2] = v1;
    undo.push_back(v1);
    return true;
  }

  bool dfs(std::size_t level) {
    if (level == a_.qgens.size()) return complete();
    for (std::uint32_t c : cands_[level]) {
      theta_gen_[level] = c;
      std::vector<std::uint32_t> undo;
      bool ok = true;
      for (std::size_t i = 0; i <= level && ok; ++i) {
        std::uint32_t x = a_.qgens[i], y = a_.qgens[level];
        std::uint32_t tx = theta_gen_[i], ty = theta_gen_[level];
        ok = bind(a_.cm(x, y), b_.cm(tx, ty), undo) && bind(a_.cm(y, x), b_.cm(ty, tx), undo);
      }
      if (ok && dfs(level + 1)) return true;
      for (auto v : undo) {
        phi_inv_.erase(phi_[v]);
        phi_.erase(v);
      }
    }
    theta_gen_[level] = kNone;
    return false;
  }

  bool complete() {
    ++tried_;
    const std::size_t q = a_.q;
    std::vector<std::uint32_t> theta(q, kNone);
    theta[0] = 0;
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
      std::uint32_t x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < a_.qgens.size(); ++i) {
        std::uint32_t y = a_.mul(x, a_.qgens[i]);
        std::uint32_t ty = b_.mul(theta[x], theta_gen_[i]);
        if (theta[y] == kNone) {
          theta[y] = ty;
          queue.push_back(y);
        } else if (theta[y] != ty) {
          return false;
        }
      }
    }
    std::vector<char> hit(q, 0);
    for (auto t : theta) {
      if (hit[t]) return false;
      hit[t] = 1;
    }
    // phi on commutator values: functional and injective
    const std::size_t n1 = a_.g->order(), n2 = b_.g->order();
    std::vector<std::uint32_t> phi(n1, kNone), phinv(n2, kNone);
    for (std::uint32_t x = 0; x < q; ++x)
      for (std::uint32_t y = 0; y < q; ++y) {
        std::uint32_t v1 = a_.cm(x, y), v2 = b_.cm(theta[x], theta[y]);
        if (phi[v1] == kNone && phinv[v2] == kNone) {
          phi[v1] = v2;
          phinv[v2] = v1;
        } else if (phi[v1] != v2 || phinv[v2] != v1) {
          return false;
        }
      }
    // extend multiplicatively over [G1,G1] and require an isomorphism onto [G2,G2]
    std::vector<std::uint32_t> cgens;
    for (std::uint32_t v = 0; v < n1; ++v)
      if (phi[v] != kNone && v != 0) cgens.push_back(v);
    std::vector<std::uint32_t> ext(n1, kNone);
    ext[0] = 0;
    std::deque<std::uint32_t> dq{0};
    std::size_t reached = 1;
    while (!dq.empty()) {
      std::uint32_t d = dq.front();
      dq.pop_front();
      for (auto c : cgens) {
        std::uint32_t e = a_.g->mul(d, c);
        std::uint32_t te = b_.g->mul(ext[d], phi[c]);
        if (ext[e] == kNone) {
          ext[e] = te;
          ++reached;
          dq.push_back(e);
        } else if (ext[e] != te) {
          return false;
        }
      }
    }
    if (reached != a_.derived.size() || a_.derived.size() != b_.derived.size()) return false;
    for (std::uint32_t v = 0; v < n1; ++v)
      if (phi[v] != kNone && ext[v] != phi[v]) return false;
    std::vector<char> img(n2, 0);
    for (auto d : a_.derived) {
      if (img[ext[d]] || !std::binary_search(b_.derived.begin(), b_.derived.end(), ext[d])) return false;
      img[ext[d]] = 1;
    }
    IsoclinismWitness w;
    for (std::size_t i = 0; i < a_.qgens.size(); ++i)
      w.theta.emplace_back(a_.g->exps(a_.rep[a_.qgens[i]]), b_.g->exps(b_.rep[theta_gen_[i]]));
    std::vector<std::uint32_t> sub{0};
    for (auto c : cgens) {
      if (std::binary_search(sub.begin(), sub.end(), c)) continue;
      w.phi.emplace_back(a_.g->exps(c), b_.g->exps(phi[c]));
      std::vector<std::uint32_t> gens;
      for (const auto& [e, f] : w.phi) gens.push_back(a_.g->index(e));
      sub = closure_in(n1, gens, [&](std::uint32_t x, std::uint32_t y) { return a_.g->mul(x, y); });
    }
    witness_ = std::move(w);
    return true;
  }

  const CentralQuotient& a_;
  const CentralQuotient& b_;
  std::vector<std::vector<std::uint32_t>> cands_;
  std::vector<std::uint32_t> theta_gen_;
  std::unordered_map<std::uint32_t, std::uint32_t> phi_, phi_inv_;
  std::size_t tried_ = 0;
  IsoclinismWitness witness_;
};

}  // namespace

IsoclinismResult is_isoclinic(const PcGroup& g1, const PcGroup& g2) {
  IsoclinismResult res;
  CentralQuotient a = central_quotient(g1), b = central_quotient(g2);
  if (a.q != b.q) {
    res.reason = "central quotient orders differ (" + std::to_string(a.q) + " vs " + std::to_string(b.q) + ")";
    return res;
  }
  if (a.derived.size() != b.derived.size()) {
    res.reason = "derived subgroup orders differ (" + std::to_string(a.derived.size()) + " vs " +
                 std::to_string(b.derived.size()) + ")";
    return res;
  }
  auto pa = a.profile, pb = b.profile;
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  if (pa != pb) {
    res.reason = "central quotient order/commuting profiles differ";
    return res;
  }
  Search s(a, b);
  auto w = s.run(res.candidates_tried);
  if (!w) {
    res.reason = "no compatible pair (theta, phi) exists";
    return res;
  }
  res.isoclinic = true;
  res.reason = "witness found";
  res.witness = std::move(w);
  return res;
}

}  // namespace wb::pc
