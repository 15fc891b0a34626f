#include "latticeforge/disc_form.hpp"

#include <algorithm>
#include <set>

namespace lf {

namespace {

Rat mod_interval(const Rat& x, const Int& modulus) {
  // canonical representative in [0, modulus)
  Rat m(modulus);
  Rat r = x - Rat(floor_rat(x / m)) * m;
  if (r < 0) r += m;
  if (r >= m) r -= m;
  return r;
}

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> ps;
  n = abs(n);
  for (Int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

FiniteQuadraticModule::FiniteQuadraticModule(std::vector<Int> orders, RatMat gram_q)
    : orders_(std::move(orders)), gq_(std::move(gram_q)) {
  for (const Int& d : orders_)
    if (d <= 1) throw Error("Internal", "module orders must exceed 1");
  if (gq_.rows() != orders_.size() || gq_.cols() != orders_.size())
    throw Error("Internal", "module Gram size mismatch");
}

FiniteQuadraticModule FiniteQuadraticModule::from_lattice(const Lattice& l) {
  if (l.degenerate_flagged() && det(l.gram()) == 0)
    throw Error("DegenerateForm", "discriminant module of degenerate lattice");
  SnfResult s = smith_normal_form(l.gram());
  std::size_t n = l.rank();
  std::vector<Int> orders;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (s.d(i, i) > 1) {
      orders.push_back(s.d(i, i));
      idx.push_back(i);
    }
  // generator i lifts to (row idx[i] of U) / d_i in the lattice basis
  RatMat lifts(orders.size(), n);
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) lifts(i, j) = Rat(s.u(idx[i], j), orders[i]);
  RatMat gq = (lifts * RatMat(l.gram())) * transpose(lifts);
  FiniteQuadraticModule a(std::move(orders), std::move(gq));
  a.set_lifts(std::move(lifts));
  return a;
}

Int FiniteQuadraticModule::order() const {
  Int o = 1;
  for (const Int& d : orders_) o *= d;
  return o;
}

FqmElement FiniteQuadraticModule::reduce(const FqmElement& x) const {
  FqmElement r(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    r[i] = x[i] % orders_[i];
    if (r[i] < 0) r[i] += orders_[i];
  }
  return r;
}

FqmElement FiniteQuadraticModule::add(const FqmElement& x, const FqmElement& y) const {
  FqmElement r(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) r[i] = x[i] + y[i];
  return reduce(r);
}

FqmElement FiniteQuadraticModule::scale(const Int& c, const FqmElement& x) const {
  FqmElement r(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) r[i] = c * x[i];
  return reduce(r);
}

bool FiniteQuadraticModule::is_zero(const FqmElement& x) const {
  for (std::size_t i = 0; i < orders_.size(); ++i)
    if (x[i] % orders_[i] != 0) return false;
  return true;
}

Int FiniteQuadraticModule::element_order(const FqmElement& x) const {
  Int o = 1;
  FqmElement r = reduce(x);
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    Int g = boost::multiprecision::gcd(r[i], orders_[i]);
    o = boost::multiprecision::lcm(o, orders_[i] / g);
  }
  return o;
}

Rat FiniteQuadraticModule::q(const FqmElement& x) const {
  FqmElement r = reduce(x);
  Rat s = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (r[i] == 0) continue;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      if (r[j] == 0) continue;
      s += Rat(r[i]) * Rat(r[j]) * gq_(i, j);
    }
  }
  return mod_interval(s, 2);
}

Rat FiniteQuadraticModule::b(const FqmElement& x, const FqmElement& y) const {
  FqmElement rx = reduce(x), ry = reduce(y);
  Rat s = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (rx[i] == 0) continue;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      if (ry[j] == 0) continue;
      s += Rat(rx[i]) * Rat(ry[j]) * gq_(i, j);
    }
  }
  return mod_interval(s, 1);
}

std::vector<FqmElement> FiniteQuadraticModule::all_elements() const {
  std::vector<FqmElement> out;
  FqmElement c = zero();
  while (true) {
    out.push_back(c);
    std::size_t i = orders_.size();
    while (i > 0) {
      --i;
      if (++c[i] < orders_[i]) break;
      c[i] = 0;
      if (i == 0) return out;
    }
    if (orders_.empty()) return out;
  }
}

RatVec FiniteQuadraticModule::lift(const FqmElement& x) const {
  if (!has_lifts()) throw Error("Internal", "module has no lattice lifts");
  FqmElement r = reduce(x);
  RatVec v(lifts_.cols(), Rat(0));
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (r[i] == 0) continue;
    for (std::size_t j = 0; j < lifts_.cols(); ++j) v[j] += Rat(r[i]) * lifts_(i, j);
  }
  return v;
}

std::size_t p_length(const FiniteQuadraticModule& a, const Int& p) {
  std::size_t c = 0;
  for (const Int& d : a.orders())
    if (d % p == 0) ++c;
  return c;
}

std::size_t length(const FiniteQuadraticModule& a) { return a.orders().size(); }

std::optional<FqmElement> find_isotropic(const FiniteQuadraticModule& a) {
  if (a.generator_count() == 0) return std::nullopt;
  // a non-zero isotropic element exists iff one of prime-power order exists,
  // so scanning p-Sylow subgroups is exhaustive
  std::vector<Int> primes = prime_factors(a.order());
  std::vector<std::pair<Int, Int>> sized;  // (sylow size, p)
  for (const Int& p : primes) {
    Int size = 1;
    for (Int d : a.orders()) {
      Int pe = 1;
      while (d % p == 0) {
        d /= p;
        pe *= p;
      }
      size *= pe;
    }
    sized.push_back({size, p});
  }
  std::sort(sized.begin(), sized.end());
  for (const auto& [size, p] : sized) {
    // Sylow generators: (d_i / p^{v_i}) g_i of order p^{v_i}
    std::vector<Int> pe;        // p^{v_i} per generator with v_i > 0
    std::vector<std::size_t> gi;
    std::vector<Int> cof;
    for (std::size_t i = 0; i < a.orders().size(); ++i) {
      Int d = a.orders()[i], q = 1;
      while (d % p == 0) {
        d /= p;
        q *= p;
      }
      if (q > 1) {
        pe.push_back(q);
        gi.push_back(i);
        cof.push_back(a.orders()[i] / q);
      }
    }
    std::vector<Int> c(pe.size(), Int(0));
    while (true) {
      // advance mixed-radix counter (skip the all-zero element)
      std::size_t i = pe.size();
      bool done = false;
      while (i > 0) {
        --i;
        if (++c[i] < pe[i]) break;
        c[i] = 0;
        if (i == 0) done = true;
      }
      if (done) break;
      FqmElement x = a.zero();
      for (std::size_t k = 0; k < pe.size(); ++k) x[gi[k]] = c[k] * cof[k];
      x = a.reduce(x);
      if (!a.is_zero(x) && a.q(x) == 0) return x;
    }
  }
  return std::nullopt;
}

FiniteQuadraticModule discriminant_module(const Lattice& l) {
  return FiniteQuadraticModule::from_lattice(l);
}

IsotropicSubgroup make_isotropic_subgroup(const FiniteQuadraticModule& a,
                                          std::vector<FqmElement> generators) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    generators[i] = a.reduce(generators[i]);
    if (a.q(generators[i]) != 0)
      throw Error("NotIsotropic", "generator has q != 0 mod 2Z");
    for (std::size_t j = 0; j < i; ++j)
      if (a.b(generators[i], generators[j]) != 0)
        throw Error("NotIsotropic", "generators pair non-integrally");
  }
  return IsotropicSubgroup{a, std::move(generators)};
}

namespace {

// order of the subgroup generated inside ⊕ Z/d_i
Int subgroup_order(const FiniteQuadraticModule& a, const std::vector<FqmElement>& gens) {
  if (gens.empty()) return 1;
  std::size_t k = a.generator_count();
  IntMat rel(k + gens.size(), k);
  for (std::size_t i = 0; i < k; ++i) rel(i, i) = a.orders()[i];
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) rel(k + i, j) = gens[i][j];
  // |A / H| = product of elementary divisors of the stacked relation matrix
  SnfResult s = smith_normal_form(rel);
  Int quot = 1;
  for (std::size_t i = 0; i < k; ++i) quot *= s.d(i, i);
  return a.order() / quot;
}

}  // namespace

Overlattice overlattice_from_isotropic(const Lattice& l, const IsotropicSubgroup& h) {
  const FiniteQuadraticModule& a = h.parent;
  std::size_t n = l.rank();
  // L' = L + Z-span of the lifted generators
  RatMat gen(h.generators.size(), n);
  for (std::size_t i = 0; i < h.generators.size(); ++i) {
    RatVec v = a.lift(h.generators[i]);
    for (std::size_t j = 0; j < n; ++j) gen(i, j) = v[j];
  }
  Int denom = 1;
  for (std::size_t i = 0; i < gen.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) denom = boost::multiprecision::lcm(denom, den(gen(i, j)));
  IntMat stacked(n + gen.rows(), n);
  for (std::size_t i = 0; i < n; ++i) stacked(i, i) = denom;
  for (std::size_t i = 0; i < gen.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      stacked(n + i, j) = num(gen(i, j)) * (denom / den(gen(i, j)));
  HnfResult hn = hnf(stacked);
  if (hn.rank != n) throw Error("Internal", "overlattice basis rank defect");
  RatMat basis(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i, j) = Rat(hn.h(i, j), denom);

  RatMat gq = (basis * RatMat(l.gram())) * transpose(basis);
  IntMat gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (den(gq(i, j)) != 1)
        throw Error("NotIsotropic", "glued lattice is not integral");
      gram(i, j) = num(gq(i, j));
    }
  Lattice lp(gram, "", false);  // evenness checked by the constructor

  Int hsize = subgroup_order(a, h.generators);
  Int expected_disc = l.disc() / (hsize * hsize);
  if (lp.disc() != expected_disc)
    throw Error("Internal", "overlattice disc mismatch");
  return Overlattice{lp, basis, hsize};
}

Overlattice maximal_overlattice(const Lattice& l) {
  Lattice cur = l;
  RatMat total = RatMat::identity(l.rank());
  Int index = 1;
  while (true) {
    FiniteQuadraticModule a = discriminant_module(cur);
    std::optional<FqmElement> x = find_isotropic(a);
    if (!x) break;
    IsotropicSubgroup h = make_isotropic_subgroup(a, {*x});
    Overlattice step = overlattice_from_isotropic(cur, h);
    total = step.basis_in_old * total;
    index *= step.index;
    cur = step.lattice;
  }
  return Overlattice{cur, total, index};
}

std::optional<FqmIsomorphism> fqm_isomorphism(const FiniteQuadraticModule& a,
                                              const FiniteQuadraticModule& b,
                                              const Int& budget) {
  if (a.orders() != b.orders()) return std::nullopt;
  if (a.order() > budget) throw Error("SearchBudgetExceeded", "|A| exceeds isomorphism budget");
  if (a.generator_count() == 0) return FqmIsomorphism{{}};

  std::vector<FqmElement> belts = b.all_elements();
  // fingerprint pruning: (order, q) multisets must agree
  auto fingerprint = [](const FiniteQuadraticModule& m, const FqmElement& x) {
    return std::make_pair(m.element_order(x), m.q(x));
  };
  std::multiset<std::pair<Int, Rat>> fa, fb;
  for (const FqmElement& x : a.all_elements()) fa.insert(fingerprint(a, x));
  for (const FqmElement& x : belts) fb.insert(fingerprint(b, x));
  if (fa != fb) return std::nullopt;

  std::size_t k = a.generator_count();
  std::vector<FqmElement> gens(k);
  for (std::size_t i = 0; i < k; ++i) {
    gens[i] = a.zero();
    gens[i][i] = 1;
  }
  std::vector<FqmElement> images(k);

  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == k) {
      // homomorphism is well-defined (orders checked); bijective iff images generate
      return subgroup_order(b, images) == b.order();
    }
    for (const FqmElement& y : belts) {
      if (b.element_order(y) != a.orders()[i]) continue;
      if (b.q(y) != a.q(gens[i])) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (b.b(y, images[j]) != a.b(gens[i], gens[j])) ok = false;
      if (!ok) continue;
      images[i] = y;
      if (assign(i + 1)) return true;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return FqmIsomorphism{images};
}

GenusWitness genus_equal(const Lattice& l1, const Lattice& l2, const Int& budget) {
  if (signature(l1) != signature(l2)) return GenusWitness{false, std::nullopt};
  FiniteQuadraticModule a = discriminant_module(l1);
  FiniteQuadraticModule b = discriminant_module(l2);
  std::optional<FqmIsomorphism> iso = fqm_isomorphism(a, b, budget);
  if (!iso) return GenusWitness{false, std::nullopt};
  return GenusWitness{true, iso};
}

}  // namespace lf
