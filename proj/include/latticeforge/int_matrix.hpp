#pragma once

#include "latticeforge/numeric.hpp"

#include <cstddef>
#include <vector>

namespace lf {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMat(std::initializer_list<std::initializer_list<Int>> init);

  static IntMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  void set_row(std::size_t i, const IntVec& v);

  bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const IntMat& o) const { return !(*this == o); }

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row i += c * row j
  void add_row(std::size_t i, std::size_t j, const Int& c);
  void add_col(std::size_t i, std::size_t j, const Int& c);
  void scale_row(std::size_t i, const Int& c);
  void scale_col(std::size_t j, const Int& c);

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  explicit RatMat(const IntMat& m);

  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

IntMat operator*(const IntMat& a, const IntMat& b);
IntVec operator*(const IntVec& v, const IntMat& m);   // row vector times matrix
IntMat transpose(const IntMat& m);
IntMat direct_sum(const IntMat& a, const IntMat& b);
IntMat vstack(const IntMat& a, const IntMat& b);
IntMat submatrix_rows(const IntMat& m, const std::vector<std::size_t>& rows);

RatMat operator*(const RatMat& a, const RatMat& b);
RatVec operator*(const RatVec& v, const RatMat& m);
RatVec operator*(const RatVec& v, const IntMat& m);
RatMat transpose(const RatMat& m);

// Exact determinant (fraction-free Bareiss).
Int det(const IntMat& m);

// Inverse of a matrix with |det| = 1; entries stay integral.
IntMat inverse_unimodular(const IntMat& m);

// Exact rational inverse; throws Error("Singular") if not invertible.
RatMat inverse(const RatMat& m);

struct HnfResult {
  IntMat h;  // row-style Hermite normal form of the input
  IntMat u;  // unimodular, u * input = h
  std::size_t rank;
};

// Row-style HNF: pivots positive, entries above a pivot reduced to [0, pivot),
// zero rows at the bottom.
HnfResult hnf(const IntMat& m);

struct SnfResult {
  IntMat u, d, v;  // u * input * v = d, diagonal with d1 | d2 | ...
};

SnfResult smith_normal_form(const IntMat& m);

// Basis of {x in Z^n : m * x^T = 0} as rows; saturated by construction.
IntMat right_kernel(const IntMat& m);

// Basis of {x in Z^rows(m) : x * m = 0} as rows.
IntMat left_kernel(const IntMat& m);

// Solve x * m = b over the integers; returns false when no integral solution.
bool solve_left_integer(const IntMat& m, const IntVec& b, IntVec& x);

// Solve x * m = b over the rationals; false when inconsistent.
bool solve_left_rational(const IntMat& m, const RatVec& b, RatVec& x);

// Saturation of the row span: basis of (rowspan_Q(m)) ∩ Z^n.
IntMat saturate_rows(const IntMat& m);

// Intersection of the row lattices of a and b.
IntMat intersect_rows(const IntMat& a, const IntMat& b);

// Does the row lattice of m contain v?
bool row_lattice_contains(const IntMat& m, const IntVec& v);

// Unimodular matrix whose first row is the given primitive vector.
IntMat complete_to_basis(const IntVec& primitive);

// Signs of a symmetric rational matrix under exact congruence diagonalization.
struct InertiaResult {
  std::size_t positive, negative, zero;
};
InertiaResult inertia(const RatMat& sym);

Int content(const IntVec& v);  // gcd of entries, non-negative
IntVec scale_to_primitive(const IntVec& v);
RatVec to_rat(const IntVec& v);
// Common-denominator clearing: v = result / denom with result primitive... (denominator returned)
IntVec clear_denominators(const RatVec& v, Int& denom);

}  // namespace lf
