#include "workbench/pcgroup.hpp"

#include <algorithm>
#include <deque>

namespace wb::pc {

PcPresentation::PcPresentation(int n, std::string label)
    : n_(n), label_(std::move(label)), power_(n, Exps(n, 0)), comm_(n * (n - 1) / 2, Exps(n, 0)) {
  if (n <= 0) throw PcError("presentation needs at least one generator");
}

const Exps& PcPresentation::comm(int j, int i) const {
  if (!(j > i && i >= 0 && j < n_)) throw PcError("comm index out of range");
  return comm_[comm_index(j, i)];
}

void PcPresentation::check_rhs(int i, const Exps& w) const {
  if (static_cast<int>(w.size()) != n_) throw PcError("relation word has wrong length");
  for (int k = 0; k < n_; ++k) {
    if (w[k] < 0 || w[k] >= kPrime) throw PcError("relation exponent out of range");
    if (k <= i && w[k] != 0) throw PcError("relation right-hand side must involve higher generators only");
  }
}

void PcPresentation::set_power(int i, Exps w) {
  if (i < 0 || i >= n_) throw PcError("power index out of range");
  check_rhs(i, w);
  power_[i] = std::move(w);
}

void PcPresentation::set_comm(int j, int i, Exps w) {
  if (!(j > i && i >= 0 && j < n_)) throw PcError("comm index out of range");
  check_rhs(j, w);
  comm_[comm_index(j, i)] = std::move(w);
}

Exps PcPresentation::word(std::initializer_list<std::pair<int, int>> factors) const {
  Exps w(n_, 0);
  int last = 0;
  for (auto [g, e] : factors) {
    if (g <= last || g > n_) throw PcError("word factors must be increasing generators");
    w[g - 1] = ((e % kPrime) + kPrime) % kPrime;
    last = g;
  }
  return w;
}

std::string exps_str(const Exps& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += ' ';
    s += "g" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

Collector::Collector(const PcPresentation& p, std::uint64_t tail_modulus) : p_(&p), tail_mod_(tail_modulus) {
  if (tail_mod_) tails_ = p.n() + p.n() * (p.n() - 1) / 2;
}

Collector::Elem Collector::identity() const { return Elem{Exps(n(), 0), std::vector<std::uint64_t>(tails_, 0)}; }

Collector::Elem Collector::gen(int i) const {
  Elem x = identity();
  x.e[i] = 1;
  return x;
}

Collector::Elem Collector::from_exps(const Exps& e) const {
  Elem x = identity();
  x.e = e;
  return x;
}

Collector::Elem Collector::power_elem(int i) const {
  Elem x = from_exps(p_->power(i));
  add_tail(x, i);
  return x;
}

Collector::Elem Collector::collect_pair(int j, int i) const {
  Elem x = gen(j);
  mul_gen(x, i);
  return x;
}

void Collector::add_tail(Elem& x, std::size_t idx) const {
  if (tail_mod_) x.t[idx] = (x.t[idx] + 1) % tail_mod_;
}

void Collector::mul_word(Elem& x, const Exps& w, std::size_t tail_idx, bool with_tail) const {
  if (with_tail) add_tail(x, tail_idx);
  for (int g = 0; g < n(); ++g)
    for (int r = 0; r < w[g]; ++r) mul_gen(x, g);
}

void Collector::mul_gen(Elem& x, int k) const {
  const int nn = n();
  int last = nn - 1;
  while (last > k && x.e[last] == 0) --last;
  if (last == k) {
    if (++x.e[k] == kPrime) {
      x.e[k] = 0;
      mul_word(x, p_->power(k), k, true);
    }
    return;
  }
  Exps suffix(x.e.begin() + k + 1, x.e.end());
  std::fill(x.e.begin() + k + 1, x.e.end(), 0);
  if (++x.e[k] == kPrime) {
    x.e[k] = 0;
    mul_word(x, p_->power(k), k, true);
  }
  // g_j^{g_k} = g_j [g_j, g_k]
  for (int j = k + 1; j < nn; ++j)
    for (int r = 0; r < suffix[j - k - 1]; ++r) {
      mul_gen(x, j);
      mul_word(x, p_->comm(j, k), nn + comm_index(j, k), true);
    }
}

void Collector::mul(Elem& x, const Elem& y) const {
  for (int g = 0; g < n(); ++g)
    for (int r = 0; r < y.e[g]; ++r) mul_gen(x, g);
  for (std::size_t i = 0; i < tails_; ++i) x.t[i] = (x.t[i] + y.t[i]) % tail_mod_;
}

Collector::Elem Collector::inv(const Elem& x) const {
  Elem r = x;
  Elem y = identity();
  for (int k = 0; k < n(); ++k) {
    int a = (kPrime - r.e[k]) % kPrime;
    for (int s = 0; s < a; ++s) mul_gen(r, k);
    y.e[k] = a;
  }
  for (std::size_t i = 0; i < tails_; ++i) y.t[i] = (tail_mod_ - r.t[i]) % tail_mod_;
  return y;
}

Collector::Elem Collector::pow(const Elem& x, long k) const {
  Elem base = k < 0 ? inv(x) : x;
  if (k < 0) k = -k;
  Elem r = identity();
  while (k) {
    if (k & 1) mul(r, base);
    k >>= 1;
    if (k) base = product(base, base);
  }
  return r;
}

Collector::Elem Collector::comm(const Elem& x, const Elem& y) const {
  Elem r = inv(x);
  mul(r, inv(y));
  mul(r, x);
  mul(r, y);
  return r;
}

Collector::Elem Collector::collect(const std::vector<std::pair<int, int>>& letters) const {
  Elem x = identity();
  for (auto [g, s] : letters) {
    if (g < 0 || g >= n()) throw PcError("letter generator out of range");
    if (s == 1) mul_gen(x, g);
    else if (s == -1) mul(x, inv(gen(g)));
    else throw PcError("letter sign must be +1 or -1");
  }
  return x;
}

bool Collector::base_is_identity(const Elem& x) const {
  return std::all_of(x.e.begin(), x.e.end(), [](int v) { return v == 0; });
}

SubgroupEchelon::SubgroupEchelon(const Collector& c) : c_(&c), by_depth_(c.n()) {}

int SubgroupEchelon::depth(const Collector::Elem& x) const {
  for (int i = 0; i < c_->n(); ++i)
    if (x.e[i] != 0) return i;
  return c_->n();
}

Collector::Elem SubgroupEchelon::sift(Collector::Elem x) const {
  for (;;) {
    int d = depth(x);
    if (d == c_->n() || !by_depth_[d]) return x;
    // entries are normalized to leading exponent 1
    Collector::Elem inv = c_->inv(*by_depth_[d]);
    int e = x.e[d];
    for (int s = 0; s < e; ++s) c_->mul(x, inv);
  }
}

bool SubgroupEchelon::contains(const Collector::Elem& x) const {
  Collector::Elem r = sift(x);
  if (!c_->base_is_identity(r)) return false;
  return !c_->has_tails() || std::all_of(r.t.begin(), r.t.end(), [](std::uint64_t v) { return v == 0; });
}

void SubgroupEchelon::close(const std::vector<Collector::Elem>& gens,
                            const std::vector<Collector::Elem>& normalizers) {
  std::deque<Collector::Elem> queue(gens.begin(), gens.end());
  while (!queue.empty()) {
    Collector::Elem x = sift(std::move(queue.front()));
    queue.pop_front();
    int d = depth(x);
    if (d == c_->n()) {
      if (c_->has_tails() && std::any_of(x.t.begin(), x.t.end(), [](std::uint64_t v) { return v != 0; }))
        tails_.push_back(x.t);
      continue;
    }
    if (x.e[d] != 1) x = c_->pow(x, 2);
    for (const auto& y : by_depth_)
      if (y) queue.push_back(c_->comm(x, *y));
    for (const auto& g : normalizers) queue.push_back(c_->comm(x, g));
    queue.push_back(c_->pow(x, kPrime));
    by_depth_[d] = std::move(x);
  }
}

std::size_t SubgroupEchelon::base_size() const {
  return static_cast<std::size_t>(std::count_if(by_depth_.begin(), by_depth_.end(), [](const auto& e) { return e.has_value(); }));
}

std::vector<Collector::Elem> SubgroupEchelon::generators() const {
  std::vector<Collector::Elem> g;
  for (const auto& e : by_depth_)
    if (e) g.push_back(*e);
  return g;
}

PcGroup::PcGroup(const PcPresentation& p) : p_(p) {
  if (p_.n() > 9) throw PcError("group too large to enumerate");
  order_ = 1;
  for (int i = 0; i < p_.n(); ++i) order_ *= kPrime;
  Collector c(p_);
  std::vector<Collector::Elem> elems;
  elems.reserve(order_);
  for (std::uint32_t i = 0; i < order_; ++i) elems.push_back(c.from_exps(exps(i)));
  table_.resize(order_ * order_);
  for (std::uint32_t a = 0; a < order_; ++a)
    for (std::uint32_t b = 0; b < order_; ++b) table_[a * order_ + b] = index(c.product(elems[a], elems[b]).e);
  inv_.resize(order_);
  for (std::uint32_t a = 0; a < order_; ++a) inv_[a] = index(c.inv(elems[a]).e);
}

std::uint32_t PcGroup::pow(std::uint32_t a, long k) const {
  if (k < 0) {
    a = inv_[a];
    k = -k;
  }
  std::uint32_t r = 0;
  while (k--) r = mul(r, a);
  return r;
}

std::uint32_t PcGroup::gen(int i) const {
  Exps e(n(), 0);
  e[i] = 1;
  return index(e);
}

std::uint32_t PcGroup::index(const Exps& e) const {
  std::uint32_t idx = 0;
  for (int v : e) idx = idx * kPrime + static_cast<std::uint32_t>(v);
  return idx;
}

Exps PcGroup::exps(std::uint32_t idx) const {
  Exps e(n(), 0);
  for (int i = n() - 1; i >= 0; --i) {
    e[i] = static_cast<int>(idx % kPrime);
    idx /= kPrime;
  }
  return e;
}

int PcGroup::element_order(std::uint32_t a) const {
  int k = 1;
  std::uint32_t x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

}  // namespace wb::pc
