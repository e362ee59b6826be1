#include "workbench/cyclotomic.hpp"

#include <deque>
#include <sstream>

namespace wb::cyc {

namespace {

// Reduce a product of length 11 modulo x^6 + x^3 + 1.
void reduce(std::array<mpq_class, 11>& t) {
  for (int k = 10; k >= 6; --k) {
    if (t[k] == 0) continue;
    t[k - 3] -= t[k];
    t[k - 6] -= t[k];
    t[k] = 0;
  }
}

}  // namespace

CycNum CycNum::eta(long k) {
  k %= 9;
  if (k < 0) k += 9;
  CycNum r;
  if (k < 6) {
    r.c_[k] = 1;
  } else {
    // eta^6 = -eta^3 - 1, eta^7 = -eta^4 - eta, eta^8 = -eta^5 - eta^2
    r.c_[k - 3] = -1;
    r.c_[k - 6] = -1;
  }
  return r;
}

CycNum CycNum::from_coords(const std::array<mpq_class, 6>& c) {
  CycNum r;
  r.c_ = c;
  for (auto& x : r.c_) x.canonicalize();
  return r;
}

bool CycNum::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNum::is_one() const {
  if (c_[0] != 1) return false;
  for (int i = 1; i < 6; ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (int i = 1; i < 6; ++i)
    if (c_[i] != 0) return false;
  return true;
}

CycNum CycNum::operator+(const CycNum& o) const {
  CycNum r = *this;
  r += o;
  return r;
}

CycNum CycNum::operator-(const CycNum& o) const {
  CycNum r = *this;
  r -= o;
  return r;
}

CycNum CycNum::operator-() const {
  CycNum r;
  for (int i = 0; i < 6; ++i) r.c_[i] = -c_[i];
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  for (int i = 0; i < 6; ++i)
    if (o.c_[i] != 0) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  for (int i = 0; i < 6; ++i)
    if (o.c_[i] != 0) c_[i] -= o.c_[i];
  return *this;
}

CycNum CycNum::operator*(const CycNum& o) const {
  if (is_rational()) {
    CycNum r;
    if (c_[0] == 0) return r;
    for (int i = 0; i < 6; ++i)
      if (o.c_[i] != 0) r.c_[i] = c_[0] * o.c_[i];
    return r;
  }
  if (o.is_rational()) return o * *this;
  std::array<mpq_class, 11> t{};
  for (int i = 0; i < 6; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < 6; ++j)
      if (o.c_[j] != 0) t[i + j] += c_[i] * o.c_[j];
  }
  reduce(t);
  CycNum r;
  for (int i = 0; i < 6; ++i) r.c_[i] = t[i];
  return r;
}

bool CycNum::operator<(const CycNum& o) const {
  for (int i = 0; i < 6; ++i)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

CycNum CycNum::inv() const {
  if (is_zero()) throw CycError("inverse of zero");
  if (is_rational()) return CycNum(mpq_class(1) / c_[0]);
  // Solve (multiplication-by-this matrix) * x = e_0 over Q.
  std::array<std::array<mpq_class, 7>, 6> a;
  for (int j = 0; j < 6; ++j) {
    CycNum col = *this * eta(j);
    for (int i = 0; i < 6; ++i) a[i][j] = col.c_[i];
  }
  for (int i = 0; i < 6; ++i) a[i][6] = (i == 0) ? 1 : 0;
  for (int k = 0; k < 6; ++k) {
    int p = k;
    while (a[p][k] == 0) ++p;
    std::swap(a[p], a[k]);
    mpq_class piv = a[k][k];
    for (int j = k; j < 7; ++j) a[k][j] /= piv;
    for (int i = 0; i < 6; ++i) {
      if (i == k || a[i][k] == 0) continue;
      mpq_class f = a[i][k];
      for (int j = k; j < 7; ++j) a[i][j] -= f * a[k][j];
    }
  }
  CycNum r;
  for (int i = 0; i < 6; ++i) r.c_[i] = a[i][6];
  return r;
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycNum r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

std::string CycNum::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 6; ++i) {
    if (c_[i] == 0) continue;
    mpq_class a = c_[i];
    if (!first) os << (a < 0 ? "-" : "+");
    else if (a < 0) os << "-";
    mpq_class abs_a = abs(a);
    if (i == 0) os << abs_a.get_str();
    else {
      if (abs_a != 1) os << abs_a.get_str() << "*";
      os << "e";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

std::string CycNum::key() const {
  std::string s;
  for (int i = 0; i < 6; ++i) {
    if (i) s += ',';
    s += c_[i].get_str();
  }
  return s;
}

std::optional<int> root_log(const CycNum& c) {
  for (int j = 0; j < 9; ++j)
    if (c == CycNum::eta(j)) return j;
  return std::nullopt;
}

CycMatrix CycMatrix::identity(std::size_t n) { return scalar(n, CycNum(1)); }

CycMatrix CycMatrix::scalar(std::size_t n, const CycNum& s) {
  CycMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

CycMatrix CycMatrix::diag(const std::vector<CycNum>& d) {
  CycMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CycMatrix CycMatrix::blocks(const std::vector<std::vector<std::optional<CycMatrix>>>& grid) {
  const std::size_t nb = grid.size();
  std::size_t b = 0;
  for (const auto& row : grid) {
    if (row.size() != nb) throw CycError("block grid not square");
    for (const auto& blk : row)
      if (blk) {
        if (b && blk->dim() != b) throw CycError("block size mismatch");
        b = blk->dim();
      }
  }
  if (b == 0) throw CycError("block grid has no blocks");
  CycMatrix m(nb * b);
  for (std::size_t I = 0; I < nb; ++I)
    for (std::size_t J = 0; J < nb; ++J) {
      if (!grid[I][J]) continue;
      for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j) m(I * b + i, J * b + j) = (*grid[I][J])(i, j);
    }
  return m;
}

CycMatrix CycMatrix::block_diag(const std::vector<CycMatrix>& bs) {
  std::vector<std::vector<std::optional<CycMatrix>>> grid(bs.size(),
                                                           std::vector<std::optional<CycMatrix>>(bs.size()));
  for (std::size_t i = 0; i < bs.size(); ++i) grid[i][i] = bs[i];
  return blocks(grid);
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  if (n_ != o.n_) throw CycError("matrix dimension mismatch");
  CycMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const CycNum& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const CycNum& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  return r;
}

CycMatrix CycMatrix::operator*(const CycNum& s) const {
  CycMatrix r(n_);
  for (std::size_t i = 0; i < n_ * n_; ++i)
    if (!a_[i].is_zero()) r.a_[i] = a_[i] * s;
  return r;
}

CycMatrix CycMatrix::pow(long e) const {
  if (e < 0) {
    auto inv = inverse();
    if (!inv) throw CycError("singular matrix power");
    return inv->pow(-e);
  }
  CycMatrix r = identity(n_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::optional<CycMatrix> CycMatrix::inverse() const {
  CycMatrix a = *this, r = identity(n_);
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t p = k;
    while (p < n_ && a(p, k).is_zero()) ++p;
    if (p == n_) return std::nullopt;
    if (p != k)
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(a(p, j), a(k, j));
        std::swap(r(p, j), r(k, j));
      }
    CycNum piv = a(k, k).inv();
    for (std::size_t j = 0; j < n_; ++j) {
      a(k, j) = a(k, j) * piv;
      r(k, j) = r(k, j) * piv;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      CycNum f = a(i, k);
      for (std::size_t j = 0; j < n_; ++j) {
        if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
        if (!r(k, j).is_zero()) r(i, j) -= f * r(k, j);
      }
    }
  }
  return r;
}

bool CycMatrix::is_identity() const { return *this == identity(n_); }

std::string CycMatrix::key() const {
  std::string s;
  for (std::size_t i = 0; i < n_ * n_; ++i) {
    if (a_[i].is_zero()) {
      s += ';';
      continue;
    }
    s += std::to_string(i);
    s += ':';
    s += a_[i].key();
    s += ';';
  }
  return s;
}

CycMatrix c3(int i) {
  CycMatrix m(3);
  m(0, 2) = 1;
  m(1, 0) = CycNum::zeta(i);
  m(2, 1) = 1;
  return m;
}

CycMatrix d3() { return CycMatrix::diag({CycNum(1), CycNum::zeta(1), CycNum::zeta(2)}); }

CycMatrix d9(int i) { return CycMatrix::diag({CycNum(1), CycNum::eta(i), CycNum::eta(2 * i)}); }

CycMatrix e3(int i) { return CycMatrix::diag({CycNum(1), CycNum(1), CycNum::zeta(i)}); }

std::optional<std::size_t> MatrixGroup::find(const CycMatrix& m) const {
  auto it = index.find(m.key());
  if (it == index.end()) return std::nullopt;
  return it->second;
}

MatrixGroup closure(const std::vector<CycMatrix>& gens, std::size_t cap) {
  MatrixGroup g;
  g.gens = gens;
  if (gens.empty()) throw CycError("closure needs at least one generator");
  const std::size_t n = gens[0].dim();
  for (const auto& m : gens) {
    if (m.dim() != n) throw CycError("generators of different dimension");
    if (!m.inverse()) throw CycError("singular generator");
  }
  CycMatrix id = CycMatrix::identity(n);
  g.elements.push_back(id);
  g.words.push_back({});
  g.index.emplace(id.key(), 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t e = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      CycMatrix p = g.elements[e] * gens[k];
      std::string key = p.key();
      if (g.index.count(key)) continue;
      if (g.elements.size() >= cap) {
        g.overflow = true;
        return g;
      }
      g.index.emplace(std::move(key), g.elements.size());
      std::vector<int> w = g.words[e];
      w.push_back(static_cast<int>(k));
      g.words.push_back(std::move(w));
      g.elements.push_back(std::move(p));
      queue.push_back(g.elements.size() - 1);
    }
  }
  return g;
}

bool RepReport::ok() const {
  if (overflow) return false;
  for (const auto& r : relations)
    if (!r.ok) return false;
  return true;
}

}  // namespace wb::cyc
