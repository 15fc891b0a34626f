#include "latticeforge/lattice.hpp"

#include <algorithm>

namespace lf {

Lattice::Lattice(IntMat gram, std::string name, bool allow_degenerate)
    : gram_(std::move(gram)), name_(std::move(name)), allow_degenerate_(allow_degenerate) {
  if (gram_.rows() != gram_.cols()) throw Error("Internal", "Gram matrix not square");
  for (std::size_t i = 0; i < gram_.rows(); ++i) {
    if (gram_(i, i) % 2 != 0)
      throw Error("NotEven", "diagonal entry " + std::to_string(i) + " is odd");
    for (std::size_t j = i + 1; j < gram_.cols(); ++j)
      if (gram_(i, j) != gram_(j, i)) throw Error("Internal", "Gram matrix not symmetric");
  }
  if (!allow_degenerate_ && gram_.rows() > 0 && det(gram_) == 0)
    throw Error("DegenerateForm", "Gram determinant is zero");
}

Int Lattice::inner(const IntVec& u, const IntVec& v) const {
  if (u.size() != rank() || v.size() != rank()) throw Error("Internal", "vector/lattice rank mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (u[i] == 0) continue;
    Int t = 0;
    for (std::size_t j = 0; j < rank(); ++j) t += gram_(i, j) * v[j];
    s += u[i] * t;
  }
  return s;
}

Rat Lattice::inner(const RatVec& u, const RatVec& v) const {
  if (u.size() != rank() || v.size() != rank()) throw Error("Internal", "vector/lattice rank mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (u[i] == 0) continue;
    Rat t = 0;
    for (std::size_t j = 0; j < rank(); ++j) t += Rat(gram_(i, j)) * v[j];
    s += u[i] * t;
  }
  return s;
}

Rat Lattice::inner(const RatVec& u, const IntVec& v) const { return inner(u, to_rat(v)); }

IntMat Sublattice::induced_gram() const {
  const IntMat& g = ambient.gram();
  IntMat bg = basis * g;
  return bg * transpose(basis);
}

Lattice Sublattice::as_lattice(bool allow_degenerate, std::string name) const {
  return Lattice(induced_gram(), std::move(name), allow_degenerate);
}

Sublattice make_sublattice(const Lattice& ambient, IntMat basis, bool allow_degenerate) {
  if (basis.cols() != ambient.rank()) throw Error("Internal", "sublattice basis width mismatch");
  Sublattice s{ambient, std::move(basis)};
  HnfResult h = hnf(s.basis);
  if (h.rank != s.basis.rows()) throw Error("Internal", "sublattice basis rows dependent");
  // validate evenness / degeneracy of the induced form
  (void)s.as_lattice(allow_degenerate);
  return s;
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + " + " + b.name();
  return Lattice(direct_sum(a.gram(), b.gram()), name,
                 a.degenerate_flagged() || b.degenerate_flagged());
}

Lattice rescale(const Lattice& l, const Int& m) {
  if (m == 0) throw Error("Internal", "rescale by zero");
  IntMat g = l.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= m;
  std::string name;
  if (!l.name().empty()) name = l.name() + "(" + m.str() + ")";
  return Lattice(g, name, l.degenerate_flagged());
}

std::pair<std::size_t, std::size_t> signature(const Lattice& l) {
  InertiaResult r = inertia(RatMat(l.gram()));
  if (r.zero != 0) throw Error("DegenerateForm", "signature of degenerate form");
  return {r.positive, r.negative};
}

InertiaResult signature_with_corank(const Lattice& l) { return inertia(RatMat(l.gram())); }

Sublattice saturate(const Sublattice& s) {
  IntMat sat = saturate_rows(s.basis);
  return Sublattice{s.ambient, sat};
}

Sublattice orthogonal_complement(const Sublattice& s) {
  // kernel of v |-> (basis * G) v^T
  IntMat pairing = s.basis * s.ambient.gram();  // k x n
  IntMat k = right_kernel(pairing);
  return Sublattice{s.ambient, k};
}

UnimodularSplit split_unimodular_summand(const Sublattice& s) {
  IntMat gs = s.induced_gram();
  Int d = det(gs);
  if (d != 1 && d != -1)
    throw Error("NotUnimodular", "sublattice has |disc| = " + abs(d).str());
  // u_S = (u . b_i) solved against Gram(S):  coords = (B G u^T)^T Gram(S)^{-1}
  RatMat gsinv = inverse(RatMat(gs));
  RatMat proj = RatMat(transpose(s.basis * s.ambient.gram())) * gsinv;
  Sublattice comp = orthogonal_complement(s);

  // verify the split: stacked basis must give index 1 and a block Gram
  IntMat stacked = vstack(s.basis, comp.basis);
  if (stacked.rows() != s.ambient.rank() || abs(det(stacked)) != 1)
    throw Error("Internal", "unimodular split failed index check");
  IntMat block = direct_sum(gs, comp.induced_gram());
  IntMat got = (stacked * s.ambient.gram()) * transpose(stacked);
  if (got != block) throw Error("Internal", "unimodular split failed Gram check");
  return UnimodularSplit{proj, comp};
}

std::vector<std::vector<std::size_t>> gram_components(const IntMat& gram) {
  std::size_t n = gram.rows();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      members.push_back(i);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && comp[j] < 0 && gram(i, j) != 0) {
          comp[j] = comp[i];
          stack.push_back(j);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace lf
