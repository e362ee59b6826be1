#include "workbench/latalg.hpp"

#include <algorithm>
#include <sstream>

namespace wb::lat {

using u64 = std::uint64_t;
using Row = std::vector<u64>;

ResMatrix::ResMatrix(std::size_t rows, std::size_t cols, u64 modulus)
    : rows_(rows), cols_(cols), n_(modulus), a_(rows * cols, 0) {
  if (!is_power_of_three(modulus)) throw LatticeError("modulus must be a power of 3");
}

Row ResMatrix::row(std::size_t i) const { return Row(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

void ResMatrix::append_row(const Row& v) {
  if (v.size() != cols_) throw LatticeError("row length mismatch");
  for (u64 x : v) a_.push_back(x % n_);
  ++rows_;
}

void ResMatrix::append_row_signed(const std::vector<long long>& v) {
  if (v.size() != cols_) throw LatticeError("row length mismatch");
  const long long n = static_cast<long long>(n_);
  for (long long x : v) a_.push_back(static_cast<u64>(((x % n) + n) % n));
  ++rows_;
}

std::string ResMatrix::str() const {
  std::ostringstream os;
  os << "mod " << n_ << " [";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

bool is_power_of_three(u64 n) {
  if (n < 3) return false;
  while (n % 3 == 0) n /= 3;
  return n == 1;
}

int valuation3(u64 x, u64 modulus) {
  if (x % modulus == 0) {
    int m = 0;
    while (modulus > 1) {
      modulus /= 3;
      ++m;
    }
    return m;
  }
  int v = 0;
  while (x % 3 == 0) {
    x /= 3;
    ++v;
  }
  return v;
}

namespace {

u64 inv_mod(u64 a, u64 n) {
  long long t = 0, nt = 1, r = static_cast<long long>(n), nr = static_cast<long long>(a % n);
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw LatticeError("inv_mod: not a unit");
  if (t < 0) t += static_cast<long long>(n);
  return static_cast<u64>(t);
}

u64 pow3(int e) {
  u64 r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

int log3(u64 n) {
  int m = 0;
  while (n > 1) {
    n /= 3;
    ++m;
  }
  return m;
}

// row -= f * src (mod n), from column `from` on.
void sub_mul(Row& row, const Row& src, u64 f, u64 n, std::size_t from) {
  if (f == 0) return;
  for (std::size_t j = from; j < row.size(); ++j) {
    if (src[j] == 0) continue;
    row[j] = (row[j] + n - (f * src[j]) % n) % n;
  }
}

void scale(Row& row, u64 f, u64 n) {
  for (u64& x : row) x = (x * f) % n;
}

bool is_zero_row(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](u64 x) { return x == 0; });
}

// Echelonizes rows with pivots normalized to powers of 3; with `howell_extra` the
// annihilated multiple of each pivot row is fed back so the span property holds.
std::vector<std::pair<std::size_t, Row>> echelon_local(std::vector<Row> work, std::size_t cols, u64 n,
                                                       bool howell_extra) {
  const int m = log3(n);
  std::vector<std::pair<std::size_t, Row>> out;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t best = work.size();
    int bestv = m;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (work[i][c] == 0) continue;
      int v = valuation3(work[i][c], n);
      if (v < bestv) {
        bestv = v;
        best = i;
        if (v == 0) break;
      }
    }
    if (best == work.size()) continue;
    Row piv = std::move(work[best]);
    work[best] = std::move(work.back());
    work.pop_back();
    u64 p = pow3(bestv);
    scale(piv, inv_mod(piv[c] / p, n), n);
    for (auto& r : work)
      if (r[c] != 0) sub_mul(r, piv, r[c] / p, n, c);
    if (howell_extra && bestv > 0) {
      Row extra = piv;
      scale(extra, pow3(m - bestv), n);
      if (!is_zero_row(extra)) work.push_back(std::move(extra));
    }
    std::erase_if(work, is_zero_row);
    out.emplace_back(c, std::move(piv));
  }
  return out;
}

std::vector<Row> rows_of(const ResMatrix& m) {
  std::vector<Row> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Row r = m.row(i);
    if (!is_zero_row(r)) rows.push_back(std::move(r));
  }
  return rows;
}

struct LocalSnf {
  std::vector<int> vals;  // valuations of the diagonal, one per pivot
  std::vector<Row> q, qinv;
};

LocalSnf local_snf(std::vector<Row> a, std::size_t cols, u64 n, bool track) {
  LocalSnf res;
  if (track) {
    res.q.assign(cols, Row(cols, 0));
    res.qinv.assign(cols, Row(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) res.q[i][i] = res.qinv[i][i] = 1;
  }
  const int m = log3(n);
  for (std::size_t k = 0; k < std::min(a.size(), cols); ++k) {
    std::size_t bi = a.size(), bj = cols;
    int bv = m;
    for (std::size_t i = k; i < a.size() && bv > 0; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        int v = valuation3(a[i][j], n);
        if (v < bv) {
          bv = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (bi == a.size()) break;
    std::swap(a[k], a[bi]);
    if (bj != k) {
      for (auto& r : a) std::swap(r[k], r[bj]);
      if (track) {
        for (auto& r : res.q) std::swap(r[k], r[bj]);
        std::swap(res.qinv[k], res.qinv[bj]);
      }
    }
    u64 p = pow3(bv);
    scale(a[k], inv_mod(a[k][k] / p, n), n);
    for (std::size_t i = k + 1; i < a.size(); ++i)
      if (a[i][k] != 0) sub_mul(a[i], a[k], a[i][k] / p, n, k);
    for (std::size_t j = k + 1; j < cols; ++j) {
      if (a[k][j] == 0) continue;
      u64 f = a[k][j] / p;
      a[k][j] = 0;
      if (track) {
        for (auto& r : res.q) r[j] = (r[j] + n - (f * r[k]) % n) % n;
        for (std::size_t t = 0; t < cols; ++t) res.qinv[k][t] = (res.qinv[k][t] + f * res.qinv[j][t]) % n;
      }
    }
    res.vals.push_back(bv);
  }
  return res;
}

}  // namespace

ResMatrix howell(const ResMatrix& m) {
  const u64 n = m.modulus();
  auto ech = echelon_local(rows_of(m), m.cols(), n, true);
  for (std::size_t i = 0; i < ech.size(); ++i) {
    std::size_t c = ech[i].first;
    u64 p = ech[i].second[c];
    for (std::size_t k = 0; k < i; ++k) {
      u64 q = ech[k].second[c] / p;
      if (q) sub_mul(ech[k].second, ech[i].second, q, n, c);
    }
  }
  ResMatrix out(0, m.cols(), n);
  for (auto& [c, r] : ech) out.append_row(r);
  return out;
}

mpz_class span_size(const ResMatrix& h) {
  mpz_class s = 1;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t j = 0;
    while (j < h.cols() && h(i, j) == 0) ++j;
    if (j == h.cols()) continue;
    s *= static_cast<unsigned long>(h.modulus() / h(i, j));
  }
  return s;
}

std::vector<u64> KernelResult::coord(const Row& x) const {
  std::vector<u64> out;
  for (std::size_t k = 0; k < coord_rows.size(); ++k) {
    u64 w = 0;
    for (std::size_t t = 0; t < x.size(); ++t) w = (w + coord_rows[k][t] * (x[t] % modulus)) % modulus;
    u64 step = modulus / orders[k];
    if (w % step != 0) throw LatticeError("kernel coordinate: vector not in kernel");
    out.push_back(w / step);
  }
  return out;
}

KernelResult kernel(const ResMatrix& c) {
  const u64 n = c.modulus();
  const int m = log3(n);
  const std::size_t cols = c.cols();
  ResMatrix h = howell(c);
  LocalSnf s = local_snf(rows_of(h), cols, n, true);
  KernelResult res;
  res.modulus = n;
  for (std::size_t k = 0; k < cols; ++k) {
    u64 order, mult;
    if (k < s.vals.size()) {
      if (s.vals[k] == 0) continue;
      order = pow3(s.vals[k]);
      mult = pow3(m - s.vals[k]);
    } else {
      order = n;
      mult = 1;
    }
    Row g(cols);
    for (std::size_t t = 0; t < cols; ++t) g[t] = (s.q[t][k] * mult) % n;
    res.gens.push_back(std::move(g));
    res.orders.push_back(order);
    res.coord_rows.push_back(s.qinv[k]);
  }
  return res;
}

std::vector<u64> cokernel_invariants(const ResMatrix& mtx) {
  const u64 n = mtx.modulus();
  ResMatrix h = howell(mtx);
  LocalSnf s = local_snf(rows_of(h), mtx.cols(), n, false);
  std::vector<u64> inv;
  for (int v : s.vals)
    if (v > 0) inv.push_back(pow3(v));
  for (std::size_t k = s.vals.size(); k < mtx.cols(); ++k) inv.push_back(n);
  std::sort(inv.begin(), inv.end());
  return inv;
}

}  // namespace wb::lat
