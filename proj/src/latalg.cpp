#include "workbench/latalg.hpp"

#include <algorithm>
#include <sstream>

namespace wb::lat {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw LatticeError("ragged matrix literal");
    for (long v : r) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows[0].size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw LatticeError("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t i) const {
  return IntVec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

void IntMatrix::set_row(std::size_t i, const IntVec& v) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void IntMatrix::append_row(const IntVec& v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw LatticeError("row length mismatch");
  a_.insert(a_.end(), v.begin(), v.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

bool IntMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw LatticeError("dimension mismatch in product");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

IntVec vec_mat(const IntVec& x, const IntMatrix& m) {
  if (x.size() != m.rows()) throw LatticeError("dimension mismatch in vector product");
  IntVec r(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += x[i] * m(i, j);
  }
  return r;
}

Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw LatticeError("det of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix h = hnf(m).H;
  std::size_t r = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool nz = false;
    for (std::size_t j = 0; j < h.cols() && !nz; ++j) nz = h(i, j) != 0;
    if (nz) ++r;
  }
  return r;
}

namespace {

void row_combine(IntMatrix& m, std::size_t r, std::size_t i, const Int& s, const Int& t, const Int& u,
                 const Int& v) {
  // (row_r, row_i) <- (s*row_r + t*row_i, u*row_r + v*row_i)
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Int a = m(r, j), b = m(i, j);
    m(r, j) = s * a + t * b;
    m(i, j) = u * a + v * b;
  }
}

void row_addmul(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void col_addmul(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  HnfResult res{m, IntMatrix::identity(m.rows())};
  IntMatrix& h = res.H;
  IntMatrix& u = res.U;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    std::size_t p = r;
    while (p < h.rows() && h(p, c) == 0) ++p;
    if (p == h.rows()) continue;
    h.swap_rows(r, p);
    u.swap_rows(r, p);
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      Int a = h(r, c), b = h(i, c), g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Int uu = -b / g, vv = a / g;
      row_combine(h, r, i, s, t, uu, vv);
      row_combine(u, r, i, s, t, uu, vv);
    }
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      row_addmul(h, i, r, q);
      row_addmul(u, i, r, q);
    }
    ++r;
  }
  return res;
}

SnfResult snf(const IntMatrix& m) {
  SnfResult res{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& s = res.S;
  const std::size_t nr = s.rows(), nc = s.cols();
  for (std::size_t k = 0; k < std::min(nr, nc); ++k) {
    for (;;) {
      std::size_t pi = nr, pj = nc;
      for (std::size_t i = k; i < nr; ++i)
        for (std::size_t j = k; j < nc; ++j)
          if (s(i, j) != 0 && (pi == nr || abs(s(i, j)) < abs(s(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == nr) return res;
      s.swap_rows(k, pi);
      res.U.swap_rows(k, pi);
      s.swap_cols(k, pj);
      res.V.swap_cols(k, pj);
      bool clean = true;
      for (std::size_t i = k + 1; i < nr; ++i) {
        if (s(i, k) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), s(i, k).get_mpz_t(), s(k, k).get_mpz_t());
        row_addmul(s, i, k, q);
        row_addmul(res.U, i, k, q);
        if (s(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < nc; ++j) {
        if (s(k, j) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), s(k, j).get_mpz_t(), s(k, k).get_mpz_t());
        col_addmul(s, j, k, q);
        col_addmul(res.V, j, k, q);
        if (s(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = nr;
      for (std::size_t i = k + 1; i < nr && bad == nr; ++i)
        for (std::size_t j = k + 1; j < nc; ++j)
          if (s(i, j) % s(k, k) != 0) {
            bad = i;
            break;
          }
      if (bad == nr) break;
      row_addmul(s, k, bad, -1);
      row_addmul(res.U, k, bad, -1);
    }
    if (s(k, k) < 0) {
      negate_row(s, k);
      negate_row(res.U, k);
    }
  }
  return res;
}

std::vector<Int> elementary_divisors(const IntMatrix& m) {
  SnfResult r = snf(m);
  std::vector<Int> d;
  for (std::size_t k = 0; k < std::min(r.S.rows(), r.S.cols()); ++k)
    if (r.S(k, k) != 0) d.push_back(r.S(k, k));
  return d;
}

std::optional<IntVec> solve_lattice(const IntMatrix& b, const IntVec& v) {
  if (v.size() != b.cols()) throw LatticeError("solve_lattice: vector length mismatch");
  HnfResult h = hnf(b);
  std::size_t r = 0;
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < h.H.rows(); ++i) {
    std::size_t j = 0;
    while (j < h.H.cols() && h.H(i, j) == 0) ++j;
    if (j == h.H.cols()) break;
    piv.push_back(j);
    ++r;
  }
  if (r != b.rows()) throw LatticeError("solve_lattice: basis is rank deficient");
  IntVec y(r);
  for (std::size_t i = 0; i < r; ++i) {
    Int acc = v[piv[i]];
    for (std::size_t k = 0; k < i; ++k) acc -= y[k] * h.H(k, piv[i]);
    if (acc % h.H(i, piv[i]) != 0) return std::nullopt;
    y[i] = acc / h.H(i, piv[i]);
  }
  if (vec_mat(y, h.H) != v) return std::nullopt;
  return vec_mat(y, h.U);
}

namespace {

IntMatrix nonzero_rows(const IntMatrix& h) {
  IntMatrix out;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    IntVec r = h.row(i);
    if (std::any_of(r.begin(), r.end(), [](const Int& x) { return x != 0; })) out.append_row(r);
  }
  return out;
}

}  // namespace

std::vector<Int> quotient_invariants(const IntMatrix& a_gens, const IntMatrix& b_gens) {
  IntMatrix basis = nonzero_rows(hnf(a_gens).H);
  if (basis.rows() == 0) return {};
  IntMatrix rel(0, basis.rows());
  for (std::size_t i = 0; i < b_gens.rows(); ++i) {
    auto x = solve_lattice(basis, b_gens.row(i));
    if (!x) throw LatticeError("quotient_invariants: sublattice not contained");
    rel.append_row(*x);
  }
  std::vector<Int> d = elementary_divisors(rel);
  if (d.size() != basis.rows()) throw LatticeError("quotient_invariants: infinite quotient");
  std::vector<Int> out;
  for (const Int& x : d)
    if (x != 1) out.push_back(x);
  return out;
}

std::vector<Int> abelian_invariants(const IntMatrix& relations, std::size_t k) {
  std::vector<Int> d = relations.rows() ? elementary_divisors(relations) : std::vector<Int>{};
  std::vector<Int> out;
  for (const Int& x : d)
    if (x != 1) out.push_back(x);
  for (std::size_t i = d.size(); i < k; ++i) out.push_back(0);
  return out;
}

}  // namespace wb::lat
