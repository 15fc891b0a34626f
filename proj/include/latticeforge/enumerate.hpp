#pragma once

#include "latticeforge/lattice.hpp"

namespace lf {

// Exact LLL reduction of a positive definite integer Gram matrix.
// Returns unimodular T with reduced Gram T * q * T^T; basis rows transform as T.
struct LllResult {
  IntMat transform;      // T
  IntMat reduced_gram;   // T q T^T
};
LllResult lll_reduce(const IntMat& q, const Rat& delta = Rat(3, 4));

// All x in Z^n with (x + shift) q (x + shift)^T == target (q positive definite,
// exact arithmetic throughout). With collect_upto = true, "<= target" instead.
// Vectors come back sorted lexicographically.
std::vector<IntVec> enumerate_quadratic(const IntMat& q, const Rat& target,
                                        const RatVec& shift, bool collect_upto = false);

// All v in L with (v, v) = norm for L negative definite and norm < 0.
// Output closed under negation, sorted lexicographically.
// Splits over Gram components and LLL-reduces each before enumerating;
// every vector is re-verified against the integer Gram.
std::vector<IntVec> short_vectors(const Lattice& l, const Int& norm);

// Coset variant on a negative definite lattice: all integer x with
// (x + shift, x + shift) = norm.
std::vector<IntVec> short_vectors_coset(const Lattice& l, const RatVec& shift, const Rat& norm);

}  // namespace lf
