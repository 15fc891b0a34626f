#pragma once

#include "latticeforge/lattice.hpp"

#include <map>
#include <optional>

namespace lf {

// Element of a finite quadratic module: least non-negative residues modulo the
// generator orders (only orders > 1 are kept).
using FqmElement = std::vector<Int>;

// Discriminant quadratic module A = L^vee / L with q: A -> Q/2Z and b: A -> Q/Z.
class FiniteQuadraticModule {
 public:
  FiniteQuadraticModule() = default;

  // orders d1 | d2 | ... (> 1); lifts: row i = dual-lattice vector of generator i
  // in the source lattice basis (empty when constructed abstractly).
  FiniteQuadraticModule(std::vector<Int> orders, RatMat gram_q);

  static FiniteQuadraticModule from_lattice(const Lattice& l);

  const std::vector<Int>& orders() const { return orders_; }
  std::size_t generator_count() const { return orders_.size(); }
  Int order() const;

  bool has_lifts() const { return lifts_.rows() == orders_.size() && !orders_.empty(); }
  const RatMat& lifts() const { return lifts_; }
  void set_lifts(RatMat lifts) { lifts_ = std::move(lifts); }

  FqmElement zero() const { return FqmElement(orders_.size(), Int(0)); }
  FqmElement reduce(const FqmElement& x) const;
  FqmElement add(const FqmElement& x, const FqmElement& y) const;
  FqmElement scale(const Int& c, const FqmElement& x) const;
  bool is_zero(const FqmElement& x) const;
  Int element_order(const FqmElement& x) const;

  // q(x) mod 2Z, canonical representative in [0, 2)
  Rat q(const FqmElement& x) const;
  // b(x, y) mod Z, canonical representative in [0, 1)
  Rat b(const FqmElement& x, const FqmElement& y) const;

  // all elements, lexicographic coordinate order (|A| must stay sane)
  std::vector<FqmElement> all_elements() const;

  // dual vector in the source lattice basis (requires lifts)
  RatVec lift(const FqmElement& x) const;

 private:
  std::vector<Int> orders_;
  // Rational Gram of the chosen generators: diagonal = q values (mod 2 handled
  // on read), off-diagonal = b values.
  RatMat gq_;
  RatMat lifts_;
};

std::size_t p_length(const FiniteQuadraticModule& a, const Int& p);
std::size_t length(const FiniteQuadraticModule& a);

// Non-zero x with q(x) = 0 mod 2Z, or nullopt. Exhaustive over p-torsion
// subgroups in order of increasing p-group size (see Lemma 2.6 / Remark 2.7
// guarantees, which the test suite checks as postconditions).
std::optional<FqmElement> find_isotropic(const FiniteQuadraticModule& a);

FiniteQuadraticModule discriminant_module(const Lattice& l);

struct IsotropicSubgroup {
  FiniteQuadraticModule parent;
  std::vector<FqmElement> generators;
};

IsotropicSubgroup make_isotropic_subgroup(const FiniteQuadraticModule& a,
                                          std::vector<FqmElement> generators);

struct Overlattice {
  Lattice lattice;       // the overlattice L' with its own (new) basis
  RatMat basis_in_old;   // rows: new basis vectors in the old basis coordinates
  Int index;             // [L' : L]
};

Overlattice overlattice_from_isotropic(const Lattice& l, const IsotropicSubgroup& h);

// Iterates isotropic-kernel gluing until the module has no non-zero isotropic
// element; composition of the basis maps is returned.
Overlattice maximal_overlattice(const Lattice& l);

// Group isomorphism preserving q (hence b), as images of the generators.
struct FqmIsomorphism {
  std::vector<FqmElement> images;
};

// Exhaustive fingerprint-pruned search; budget bounds |A|.
std::optional<FqmIsomorphism> fqm_isomorphism(const FiniteQuadraticModule& a,
                                              const FiniteQuadraticModule& b,
                                              const Int& budget = Int(10000));

struct GenusWitness {
  bool equal = false;
  std::optional<FqmIsomorphism> iso;
};

// Equal signature plus discriminant-form isomorphism.
// Throws Error("SearchBudgetExceeded") when |A| exceeds the budget.
GenusWitness genus_equal(const Lattice& l1, const Lattice& l2, const Int& budget = Int(10000));

struct StructureDecomposition {
  Overlattice maximal;    // L' over the input
  std::size_t n = 0;      // number of E8 summands split off
  Lattice m;              // remaining negative definite part
  // rows: basis of U, then each E8, then M, all in L'-basis coordinates
  IntMat factor_basis_in_lprime;
  bool success = false;   // rank(m) <= 11 reached
};

// Best-effort constructive decomposition L' = U + E8^n + M (see Prop 2.8 usage);
// throws Error("NotFound") when no hyperbolic pair is found within budget.
StructureDecomposition structure_decompose(const Lattice& l);

}  // namespace lf
