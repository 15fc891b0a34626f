#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace lf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Domain error with a stable machine-readable code ("NotUnimodular", "OnWall", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Floor division, sign-correct for negative operands.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int floor_rat(const Rat& r) { return floor_div(num(r), den(r)); }
inline Int ceil_rat(const Rat& r) { return ceil_div(num(r), den(r)); }

// Largest k with k*k <= n. Requires n >= 0.
inline Int isqrt(const Int& n) {
  if (n < 0) throw Error("Internal", "isqrt of negative");
  return boost::multiprecision::sqrt(n);
}

// floor(sqrt(a) + b) for rational a >= 0 and rational b.
// Used for exact integer ranges in lattice-point enumeration.
inline Int floor_sqrt_plus(const Rat& a, const Rat& b) {
  // floor(sqrt(p/q)) = floor(sqrt(p*q)/q)
  Int p = num(a), q = den(a);
  Int s = isqrt(p * q);  // floor(sqrt(pq))
  // candidate from the floor of each part, then fix up exactly
  Int k = floor_rat(Rat(s, q) + b);
  // increase while (k+1) <= sqrt(a)+b, i.e. (k+1-b) <= sqrt(a)
  auto le_sqrt = [&](const Rat& t) {
    if (t <= 0) return true;
    return Rat(t * t) <= a;
  };
  while (le_sqrt(Rat(k + 1) - b)) ++k;
  while (!le_sqrt(Rat(k) - b)) --k;
  return k;
}

// ceil(-sqrt(a) + b): lower end of the symmetric interval.
inline Int ceil_minus_sqrt_plus(const Rat& a, const Rat& b) {
  return -floor_sqrt_plus(a, -b);
}

// Exact test whether a rational is a perfect square; returns root when it is.
inline bool rat_sqrt(const Rat& a, Rat& root) {
  if (a < 0) return false;
  Int p = num(a), q = den(a);
  Int sp = isqrt(p), sq = isqrt(q);
  if (sp * sp != p || sq * sq != q) return false;
  root = Rat(sp, sq);
  return true;
}

}  // namespace lf
