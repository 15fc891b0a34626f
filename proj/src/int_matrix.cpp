#include "latticeforge/int_matrix.hpp"

#include <algorithm>
#include <numeric>

namespace lf {

IntMat::IntMat(std::initializer_list<std::initializer_list<Int>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw Error("Internal", "ragged initializer");
    for (const auto& x : r) a_.push_back(x);
  }
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVec IntMat::row(std::size_t i) const {
  IntVec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

void IntMat::set_row(std::size_t i, const IntVec& v) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMat::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMat::add_row(std::size_t i, std::size_t j, const Int& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
}

void IntMat::add_col(std::size_t i, std::size_t j, const Int& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
}

void IntMat::scale_row(std::size_t i, const Int& c) {
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) *= c;
}

void IntMat::scale_col(std::size_t j, const Int& c) {
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) *= c;
}

RatMat::RatMat(const IntMat& m) : rows_(m.rows()), cols_(m.cols()), a_(rows_ * cols_) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = Rat(m(i, j));
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) throw Error("Internal", "matmul shape mismatch");
  IntMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntVec operator*(const IntVec& v, const IntMat& m) {
  if (v.size() != m.rows()) throw Error("Internal", "vecmat shape mismatch");
  IntVec r(m.cols());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[k] * m(k, j);
  }
  return r;
}

IntMat transpose(const IntMat& m) {
  IntMat t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

IntMat direct_sum(const IntMat& a, const IntMat& b) {
  IntMat c(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

IntMat vstack(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.cols()) throw Error("Internal", "vstack shape mismatch");
  IntMat c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

IntMat submatrix_rows(const IntMat& m, const std::vector<std::size_t>& rows) {
  IntMat c(rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(rows[i], j);
  return c;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.rows()) throw Error("Internal", "matmul shape mismatch");
  RatMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RatVec operator*(const RatVec& v, const RatMat& m) {
  if (v.size() != m.rows()) throw Error("Internal", "vecmat shape mismatch");
  RatVec r(m.cols());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[k] * m(k, j);
  }
  return r;
}

RatVec operator*(const RatVec& v, const IntMat& m) {
  if (v.size() != m.rows()) throw Error("Internal", "vecmat shape mismatch");
  RatVec r(m.cols());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[k] * Rat(m(k, j));
  }
  return r;
}

RatMat transpose(const RatMat& m) {
  RatMat t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

Int det(const IntMat& m) {
  if (m.rows() != m.cols()) throw Error("Internal", "det of non-square");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
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
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = t / prev;  // Bareiss: division exact
      }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

RatMat inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw Error("Internal", "inverse of non-square");
  std::size_t n = m.rows();
  RatMat a = m;
  RatMat inv = RatMat::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw Error("Singular", "matrix not invertible");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    Rat piv = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rat f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

IntMat inverse_unimodular(const IntMat& m) {
  RatMat ri = inverse(RatMat(m));
  IntMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (den(ri(i, j)) != 1) throw Error("Internal", "inverse_unimodular on non-unimodular input");
      out(i, j) = num(ri(i, j));
    }
  return out;
}

HnfResult hnf(const IntMat& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  HnfResult res{m, IntMat::identity(rows), 0};
  IntMat& h = res.h;
  IntMat& u = res.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // gcd-reduce the column below row r
    while (true) {
      std::size_t p = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (h(i, c) != 0 && (p == rows || abs(h(i, c)) < abs(h(p, c)))) p = i;
      if (p == rows) break;  // column zero from r down
      h.swap_rows(r, p);
      u.swap_rows(r, p);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Int q = floor_div(h(i, c), h(r, c));
        h.add_row(i, r, -q);
        u.add_row(i, r, -q);
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.scale_row(r, -1);
      u.scale_row(r, -1);
    }
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h(i, c), h(r, c));
      h.add_row(i, r, -q);
      u.add_row(i, r, -q);
    }
    ++r;
  }
  res.rank = r;
  return res;
}

SnfResult smith_normal_form(const IntMat& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  SnfResult res{IntMat::identity(rows), m, IntMat::identity(cols)};
  IntMat& d = res.d;
  IntMat& u = res.u;
  IntMat& v = res.v;
  std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    // find a pivot of minimal absolute value in the trailing block
    while (true) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (pi == rows || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) { t = n; break; }  // trailing block zero
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q = floor_div(d(i, t), d(t, t));
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q = floor_div(d(t, j), d(t, t));
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // pivot must divide every entry of the trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row(t, i, 1);
            u.add_row(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (t == n) break;
  }
  for (std::size_t t = 0; t < n; ++t)
    if (d(t, t) < 0) {
      d.scale_row(t, -1);
      u.scale_row(t, -1);
    }
  return res;
}

IntMat right_kernel(const IntMat& m) {
  SnfResult s = smith_normal_form(m);
  std::size_t n = m.cols();
  std::size_t r = 0;
  std::size_t lim = std::min(m.rows(), n);
  while (r < lim && s.d(r, r) != 0) ++r;
  // kernel = span of the last n - r columns of V
  IntMat k(n - r, n);
  for (std::size_t i = 0; i < n - r; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i, j) = s.v(j, r + i);
  return k;
}

IntMat left_kernel(const IntMat& m) { return right_kernel(transpose(m)); }

bool solve_left_integer(const IntMat& m, const IntVec& b, IntVec& x) {
  // x * m = b  <=>  (U m V = D):  x U^{-1} D = b V, so z_i = (bV)_i / d_i, x = z U.
  SnfResult s = smith_normal_form(m);
  IntVec bv = b * s.v;
  std::size_t rows = m.rows(), cols = m.cols();
  IntVec z(rows, Int(0));
  std::size_t lim = std::min(rows, cols);
  for (std::size_t i = 0; i < cols; ++i) {
    Int di = (i < lim) ? s.d(i, i) : Int(0);
    if (di == 0) {
      if (bv[i] != 0) return false;
    } else {
      if (bv[i] % di != 0) return false;
      if (i < rows) z[i] = bv[i] / di;
    }
  }
  x = z * s.u;
  return true;
}

bool solve_left_rational(const IntMat& m, const RatVec& b, RatVec& x) {
  SnfResult s = smith_normal_form(m);
  RatVec bv = b * s.v;
  std::size_t rows = m.rows(), cols = m.cols();
  RatVec z(rows, Rat(0));
  std::size_t lim = std::min(rows, cols);
  for (std::size_t i = 0; i < cols; ++i) {
    Int di = (i < lim) ? s.d(i, i) : Int(0);
    if (di == 0) {
      if (bv[i] != 0) return false;
    } else if (i < rows) {
      z[i] = bv[i] / Rat(di);
    }
  }
  x = z * s.u;
  return true;
}

IntMat saturate_rows(const IntMat& m) {
  // With U m V = D of rank r, the first r rows of V^{-1} span (rowspan_Q m) ∩ Z^n.
  SnfResult s = smith_normal_form(m);
  std::size_t r = 0;
  std::size_t lim = std::min(m.rows(), m.cols());
  while (r < lim && s.d(r, r) != 0) ++r;
  IntMat vinv = inverse_unimodular(s.v);
  IntMat out(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = vinv(i, j);
  return out;
}

IntMat intersect_rows(const IntMat& a, const IntMat& b) {
  if (a.rows() == 0 || b.rows() == 0) return IntMat(0, a.cols());
  // pairs (x, y) with x a - y b = 0; the intersection is spanned by the x a parts
  IntMat stacked = vstack(a, b);
  IntMat k = left_kernel(stacked);  // rows (x | y') with x a + y' b = 0
  IntMat xa(k.rows(), a.cols());
  for (std::size_t i = 0; i < k.rows(); ++i) {
    IntVec x(a.rows());
    for (std::size_t j = 0; j < a.rows(); ++j) x[j] = k(i, j);
    IntVec prod = x * a;
    xa.set_row(i, prod);
  }
  HnfResult h = hnf(xa);
  IntMat out(h.rank, a.cols());
  for (std::size_t i = 0; i < h.rank; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = h.h(i, j);
  return out;
}

bool row_lattice_contains(const IntMat& m, const IntVec& v) {
  IntVec x;
  return solve_left_integer(m, v, x);
}

IntMat complete_to_basis(const IntVec& primitive) {
  std::size_t n = primitive.size();
  IntMat row(1, n);
  for (std::size_t j = 0; j < n; ++j) row(0, j) = primitive[j];
  SnfResult s = smith_normal_form(row);
  if (s.d(0, 0) != 1) throw Error("Internal", "complete_to_basis on imprimitive vector");
  // row * V = e1, so row = e1 * V^{-1}: the first row of V^{-1} is the vector.
  IntMat vinv = inverse_unimodular(s.v);
  // s.u is 1x1 = ±1; fold its sign into the first row so that row 0 equals `primitive`.
  if (s.u(0, 0) == -1) vinv.scale_row(0, -1);
  return vinv;
}

InertiaResult inertia(const RatMat& sym) {
  std::size_t n = sym.rows();
  RatMat a = sym;
  InertiaResult res{0, 0, 0};
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    // prefer a nonzero diagonal pivot among the remaining indices
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && a(i, i) != 0) { piv = i; break; }
    if (piv == n) {
      // all remaining diagonal zero: look for an off-diagonal entry
      std::size_t bi = n, bj = n;
      for (std::size_t i = 0; i < n && bi == n; ++i)
        if (!done[i])
          for (std::size_t j = i + 1; j < n; ++j)
            if (!done[j] && a(i, j) != 0) { bi = i; bj = j; break; }
      if (bi == n) {
        for (std::size_t i = 0; i < n; ++i)
          if (!done[i]) ++res.zero;
        return res;
      }
      // row/col i += row/col j makes the (i,i) entry 2*a(i,j) != 0
      for (std::size_t k = 0; k < n; ++k) a(bi, k) += a(bj, k);
      for (std::size_t k = 0; k < n; ++k) a(k, bi) += a(k, bj);
      piv = bi;
    }
    Rat p = a(piv, piv);
    if (p > 0) ++res.positive; else ++res.negative;
    done[piv] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a(i, piv) == 0) continue;
      Rat f = a(i, piv) / p;
      for (std::size_t k = 0; k < n; ++k) a(i, k) -= f * a(piv, k);
      for (std::size_t k = 0; k < n; ++k) a(k, i) -= f * a(k, piv);
    }
  }
  return res;
}

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

IntVec scale_to_primitive(const IntVec& v) {
  Int g = content(v);
  if (g == 0) return v;
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

IntVec clear_denominators(const RatVec& v, Int& denom) {
  denom = 1;
  for (const Rat& x : v) denom = boost::multiprecision::lcm(denom, den(x));
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = num(v[i]) * (denom / den(v[i]));
  return out;
}

}  // namespace lf
