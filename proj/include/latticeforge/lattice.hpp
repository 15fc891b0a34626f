#pragma once

#include "latticeforge/int_matrix.hpp"

#include <optional>
#include <string>
#include <utility>

namespace lf {

// Even integral lattice, held as a symmetric Gram matrix over a distinguished basis.
// Non-degenerate unless explicitly flagged (extended ADE lattices, e-perp slices).
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(IntMat gram, std::string name = {}, bool allow_degenerate = false);

  std::size_t rank() const { return gram_.rows(); }
  const IntMat& gram() const { return gram_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  bool degenerate_flagged() const { return allow_degenerate_; }

  Int disc() const { return abs(det(gram_)); }

  Int inner(const IntVec& u, const IntVec& v) const;
  Rat inner(const RatVec& u, const RatVec& v) const;
  Rat inner(const RatVec& u, const IntVec& v) const;
  Int norm(const IntVec& v) const { return inner(v, v); }

 private:
  IntMat gram_;
  std::string name_;
  bool allow_degenerate_ = false;
};

// Sublattice given by basis rows in ambient coordinates.
struct Sublattice {
  Lattice ambient;
  IntMat basis;  // rows linearly independent

  std::size_t rank() const { return basis.rows(); }
  IntMat induced_gram() const;
  // The induced form as a Lattice value (flagged degenerate when requested).
  Lattice as_lattice(bool allow_degenerate = false, std::string name = {}) const;
};

Sublattice make_sublattice(const Lattice& ambient, IntMat basis, bool allow_degenerate = false);

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice rescale(const Lattice& l, const Int& m);

std::pair<std::size_t, std::size_t> signature(const Lattice& l);

// (p, q, corank) for possibly degenerate forms.
InertiaResult signature_with_corank(const Lattice& l);

Sublattice saturate(const Sublattice& s);

Sublattice orthogonal_complement(const Sublattice& s);

struct UnimodularSplit {
  // Projection L -> S expressed over the sublattice basis: for u in L, the row
  // u * proj_coeff gives the coordinates of u_S over S's basis.
  RatMat proj_coeff;  // entries integral when S is unimodular; kept exact
  Sublattice complement;
};

UnimodularSplit split_unimodular_summand(const Sublattice& s);

// Connected components of the Gram matrix viewed as a graph (nonzero
// off-diagonal entries are edges); each component is a list of basis indices.
std::vector<std::vector<std::size_t>> gram_components(const IntMat& gram);

}  // namespace lf
