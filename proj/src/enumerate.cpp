#include "latticeforge/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace lf {

namespace {

// Gram-Schmidt data for a positive definite rational Gram matrix.
struct Gso {
  std::vector<Rat> b;                // squared lengths of GS vectors
  std::vector<std::vector<Rat>> mu;  // mu[i][j], j < i

  void compute(const IntMat& g) {
    std::size_t n = g.rows();
    b.assign(n, Rat(0));
    mu.assign(n, std::vector<Rat>(n, Rat(0)));
    std::vector<std::vector<Rat>> r(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        Rat s = Rat(g(i, j));
        for (std::size_t k = 0; k < j; ++k) s -= mu[j][k] * r[i][k];
        r[i][j] = s;
        if (j < i) mu[i][j] = s / b[j];
      }
      b[i] = r[i][i];
      if (b[i] <= 0) throw Error("NotDefinite", "form not positive definite");
    }
  }
};

}  // namespace

LllResult lll_reduce(const IntMat& q, const Rat& delta) {
  std::size_t n = q.rows();
  IntMat t = IntMat::identity(n);
  IntMat g = q;
  if (n <= 1) return {t, g};
  Gso gso;
  gso.compute(g);

  // GSO is recomputed from scratch after each basis change: ranks here stay
  // small (<= ~45) and entries modest, which keeps this affordable and simple.
  std::size_t k = 1;
  long guard = 0;
  while (k < n) {
    if (++guard > 2000000) throw Error("Internal", "LLL failed to converge");
    bool changed = false;
    for (std::size_t j = k; j-- > 0;) {
      Rat m = gso.mu[k][j];
      Int c = floor_rat(m + Rat(1, 2));
      if (c != 0) {
        t.add_row(k, j, -c);
        for (std::size_t i = 0; i < n; ++i) g(k, i) -= c * g(j, i);
        for (std::size_t i = 0; i < n; ++i) g(i, k) = g(k, i);
        changed = true;
      }
    }
    if (changed) gso.compute(g);
    Rat lhs = gso.b[k];
    Rat rhs = (delta - gso.mu[k][k - 1] * gso.mu[k][k - 1]) * gso.b[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      t.swap_rows(k, k - 1);
      g.swap_rows(k, k - 1);
      g.swap_cols(k, k - 1);
      gso.compute(g);
      k = (k > 1) ? k - 1 : 1;
    }
  }
  return {t, g};
}

std::vector<IntVec> enumerate_quadratic(const IntMat& q, const Rat& target,
                                        const RatVec& shift, bool collect_upto) {
  std::size_t n = q.rows();
  std::vector<IntVec> out;
  if (target < 0) return out;
  if (n == 0) {
    if (collect_upto || target == 0) out.push_back(IntVec{});
    return out;
  }
  Gso gso;
  gso.compute(q);

  // (x+s) q (x+s)^T = sum_i b_i (x_i + s_i + sum_{j>i} mu[j][i] (x_j + s_j))^2,
  // scanned depth-first from the last coordinate with exact interval bounds.
  IntVec x(n, Int(0));
  std::vector<Rat> ofs(n);
  std::vector<Rat> rem(n + 1);
  rem[n] = target;
  std::vector<Int> hi(n);
  std::vector<bool> entered(n, false);

  std::size_t level = n;
  while (true) {
    std::size_t i = level - 1;
    if (!entered[i]) {
      Rat o = shift[i];
      for (std::size_t j = i + 1; j < n; ++j) o += gso.mu[j][i] * (Rat(x[j]) + shift[j]);
      ofs[i] = o;
      Rat bound = rem[i + 1] / gso.b[i];
      hi[i] = floor_sqrt_plus(bound, -o);
      x[i] = ceil_minus_sqrt_plus(bound, -o);
      entered[i] = true;
    } else {
      ++x[i];
    }
    if (x[i] > hi[i]) {
      entered[i] = false;
      ++level;
      if (level > n) break;
      continue;
    }
    Rat term = Rat(x[i]) + ofs[i];
    term = gso.b[i] * term * term;
    Rat r = rem[i + 1] - term;
    if (r < 0) continue;
    if (i == 0) {
      if (collect_upto || r == 0) out.push_back(x);
      continue;
    }
    rem[i] = r;
    --level;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<IntVec> short_vectors_block(const IntMat& neg_gram, const Int& norm_abs) {
  std::size_t n = neg_gram.rows();
  IntMat q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) = -neg_gram(i, j);
  LllResult red = lll_reduce(q);
  RatVec shift(n, Rat(0));
  std::vector<IntVec> ys = enumerate_quadratic(red.reduced_gram, Rat(norm_abs), shift, false);
  std::vector<IntVec> out;
  out.reserve(ys.size());
  for (const IntVec& y : ys) out.push_back(y * red.transform);
  return out;
}

}  // namespace

std::vector<IntVec> short_vectors(const Lattice& l, const Int& norm) {
  if (norm >= 0) throw Error("NotDefinite", "short_vectors expects a negative norm");
  InertiaResult sig = signature_with_corank(l);
  if (sig.positive != 0 || sig.zero != 0)
    throw Error("NotDefinite", "short_vectors needs a negative definite lattice");
  Int target = -norm;
  std::size_t n = l.rank();
  auto comps = gram_components(l.gram());

  std::vector<IntMat> blocks;
  blocks.reserve(comps.size());
  for (const auto& c : comps) {
    IntMat b(c.size(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) b(i, j) = l.gram()(c[i], c[j]);
    blocks.push_back(std::move(b));
  }

  std::vector<std::map<Int, std::vector<IntVec>>> memo(comps.size());
  auto solutions_for = [&](std::size_t ci, const Int& t) -> const std::vector<IntVec>& {
    auto it = memo[ci].find(t);
    if (it != memo[ci].end()) return it->second;
    std::vector<IntVec> sols;
    if (t == 0)
      sols.push_back(IntVec(blocks[ci].rows(), Int(0)));
    else
      sols = short_vectors_block(blocks[ci], t);
    return memo[ci].emplace(t, std::move(sols)).first->second;
  };

  std::vector<IntVec> result;
  std::vector<IntVec> partial(comps.size());
  std::function<void(std::size_t, Int)> rec = [&](std::size_t ci, Int left) {
    if (ci == comps.size()) {
      if (left != 0) return;
      IntVec v(n, Int(0));
      for (std::size_t k = 0; k < comps.size(); ++k)
        for (std::size_t j = 0; j < comps[k].size(); ++j) v[comps[k][j]] = partial[k][j];
      result.push_back(std::move(v));
      return;
    }
    if (ci + 1 == comps.size()) {
      for (const IntVec& s : solutions_for(ci, left)) {
        partial[ci] = s;
        rec(ci + 1, 0);
      }
      return;
    }
    for (Int t = 0; t <= left; t += 2) {
      for (const IntVec& s : solutions_for(ci, t)) {
        partial[ci] = s;
        rec(ci + 1, left - t);
      }
    }
  };
  rec(0, target);

  std::vector<IntVec> verified;
  verified.reserve(result.size());
  for (IntVec& v : result) {
    if (l.norm(v) != norm) throw Error("Internal", "enumeration produced wrong norm");
    bool zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
    if (!zero) verified.push_back(std::move(v));
  }
  std::sort(verified.begin(), verified.end());
  return verified;
}

std::vector<IntVec> short_vectors_coset(const Lattice& l, const RatVec& shift, const Rat& norm) {
  InertiaResult sig = signature_with_corank(l);
  if (sig.positive != 0 || sig.zero != 0)
    throw Error("NotDefinite", "short_vectors_coset needs a negative definite lattice");
  std::size_t n = l.rank();
  if (n == 0) return (norm == 0) ? std::vector<IntVec>{IntVec{}} : std::vector<IntVec>{};
  IntMat q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) = -l.gram()(i, j);
  LllResult red = lll_reduce(q);
  IntMat tinv = inverse_unimodular(red.transform);
  RatVec s2 = shift * RatMat(tinv);
  std::vector<IntVec> ys = enumerate_quadratic(red.reduced_gram, -norm, s2, false);
  std::vector<IntVec> out;
  out.reserve(ys.size());
  for (const IntVec& y : ys) {
    IntVec v = y * red.transform;
    RatVec full(n);
    for (std::size_t i = 0; i < n; ++i) full[i] = Rat(v[i]) + shift[i];
    if (l.inner(full, full) != norm) throw Error("Internal", "coset enumeration wrong norm");
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lf
