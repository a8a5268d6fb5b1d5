#pragma once

// Seeded random generators for complexes, chain maps and strictly
// functorial diagrams.  Random diagrams are built as summand-inclusion
// ("free") diagrams conjugated objectwise by random chain automorphisms,
// which keeps strict functoriality for arbitrary finite posets.

#include <map>
#include <stdexcept>
#include <vector>

#include "sph/complex.hpp"
#include "sph/diagrams.hpp"
#include "sph/rng.hpp"

namespace sph {

template <class K>
K random_scalar(Rng& rng, bool nonzero = false) {
  // small integers keep exact arithmetic cheap
  int v = rng.range(nonzero ? 1 : -2, 2);
  if (nonzero && v == 0) v = 1;
  K out = K::zero();
  K one = K::one();
  bool neg = v < 0;
  for (int i = 0; i < (neg ? -v : v); ++i) out = out + one;
  return neg ? -out : out;
}

template <class K>
Mat<K> random_matrix(Rng& rng, int rows, int cols, int density_pct = 60) {
  Mat<K> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (rng.uniform(100) < density_pct) {
        K v = random_scalar<K>(rng);
        if (!v.is_zero()) m.set(i, j, v);
      }
  return m;
}

template <class K>
Mat<K> random_invertible(Rng& rng, int n) {
  if (n == 0) return Mat<K>(0, 0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Mat<K> m = random_matrix<K>(rng, n, n, 70);
    for (int i = 0; i < n; ++i)
      if (m.get(i, i).is_zero()) m.set(i, i, K::one());
    if (rank(m) == n) return m;
  }
  return Mat<K>::identity(n);
}

// A random bounded complex: direct sum of points and contractible
// two-term intervals placed in [lo, hi], conjugated degreewise by random
// invertible matrices.
template <class K>
ChainComplex<K> random_complex(Rng& rng, int lo, int hi, int max_dim = 2) {
  std::vector<int> dims(hi - lo + 1, 0);
  // cells: (degree, is_interval); an interval occupies degrees n and n-1
  std::vector<std::pair<int, bool>> cells;
  int budget = rng.range(1, max_dim * (hi - lo + 1));
  for (int i = 0; i < budget; ++i) {
    int n = rng.range(lo, hi);
    bool iv = n > lo && rng.coin();
    if (dims[n - lo] >= max_dim) continue;
    if (iv && dims[n - 1 - lo] >= max_dim) iv = false;
    cells.push_back({n, iv});
    dims[n - lo] += 1;
    if (iv) dims[n - 1 - lo] += 1;
  }
  std::vector<Mat<K>> diffs;
  std::vector<int> fill(hi - lo + 1, 0);
  for (int n = lo + 1; n <= hi; ++n)
    diffs.push_back(Mat<K>::zero(dims[n - 1 - lo], dims[n - lo]));
  // place interval differentials on fresh basis vectors
  for (const auto& [n, iv] : cells) {
    int src = fill[n - lo]++;
    if (iv) {
      int tgt = fill[n - 1 - lo]++;
      diffs[n - 1 - lo].set(tgt, src, K::one());
    }
  }
  // conjugate: d'_n = P_{n-1} d_n P_n^{-1}
  std::vector<Mat<K>> p, pinv;
  for (int n = lo; n <= hi; ++n) {
    Mat<K> q = random_invertible<K>(rng, dims[n - lo]);
    auto qi = solve(q, Mat<K>::identity(q.rows()));
    p.push_back(q);
    pinv.push_back(*qi);
  }
  for (int n = lo + 1; n <= hi; ++n)
    diffs[n - 1 - lo] = p[n - 1 - lo] * diffs[n - 1 - lo] * pinv[n - lo];
  return ChainComplex<K>(lo, std::move(dims), std::move(diffs));
}

// Basis of the space of chain maps a -> b, as a list of component maps.
template <class K>
std::vector<std::map<int, Mat<K>>> chain_map_space(const ChainComplex<K>& a,
                                                   const ChainComplex<K>& b) {
  detail::LinSys<K> sys;
  int lo = std::min(a.lo(), b.lo());
  int hi = std::max(a.hi(), b.hi());
  std::map<int, int> blocks;
  for (int n = lo; n <= hi; ++n) blocks[n] = sys.add_block(b.dim(n), a.dim(n));
  int nvars = 0;
  for (int n = lo; n <= hi; ++n) nvars += b.dim(n) * a.dim(n);
  // collect equations d_b f - f d_a = 0 as a matrix, then its kernel
  std::vector<typename Mat<K>::Entry> entries;
  int eq = 0;
  auto var_index = [&](int n, int r, int c) { return sys.var(blocks[n], r, c); };
  for (int n = lo; n <= hi; ++n) {
    Mat<K> db = b.diff(n);
    Mat<K> da = a.diff(n);
    int rows = b.dim(n - 1), cols = a.dim(n);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        for (const auto& e : db.entries())
          if (e.row == i)
            entries.push_back({eq, var_index(n, e.col, j), e.value});
        for (const auto& e : da.entries())
          if (e.col == j)
            entries.push_back({eq, var_index(n - 1, i, e.row), -e.value});
        ++eq;
      }
  }
  std::map<std::pair<int, int>, K> acc;
  for (const auto& e : entries) {
    auto key = std::make_pair(e.row, e.col);
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, e.value);
    else
      it->second = it->second + e.value;
  }
  std::vector<typename Mat<K>::Entry> dedup;
  for (const auto& [key, v] : acc)
    if (!v.is_zero()) dedup.push_back({key.first, key.second, v});
  Mat<K> system = Mat<K>::from_entries(eq, nvars, std::move(dedup));
  Mat<K> ker = kernel_basis(system);
  std::vector<std::map<int, Mat<K>>> out;
  for (int k = 0; k < ker.cols(); ++k) {
    std::map<int, Mat<K>> comps;
    int off = 0;
    for (int n = lo; n <= hi; ++n) {
      Mat<K> m(b.dim(n), a.dim(n));
      for (int r = 0; r < b.dim(n); ++r)
        for (int c = 0; c < a.dim(n); ++c) {
          K v = ker.get(off + r * a.dim(n) + c, k);
          if (!v.is_zero()) m.set(r, c, v);
        }
      off += b.dim(n) * a.dim(n);
      if (!m.is_zero()) comps[n] = m;
    }
    out.push_back(std::move(comps));
  }
  return out;
}

template <class K>
ChainMap<K> random_chain_map(Rng& rng, const ChainComplex<K>& a,
                             const ChainComplex<K>& b) {
  auto basis = chain_map_space(a, b);
  std::map<int, Mat<K>> comps;
  int lo = std::min(a.lo(), b.lo());
  int hi = std::max(a.hi(), b.hi());
  for (int n = lo; n <= hi; ++n) comps[n] = Mat<K>::zero(b.dim(n), a.dim(n));
  for (const auto& elem : basis) {
    K c = random_scalar<K>(rng);
    if (c.is_zero()) continue;
    for (const auto& [n, m] : elem) comps[n] = comps[n] + m.scaled(c);
  }
  return ChainMap<K>(a, b, std::move(comps));
}

// Random chain automorphism of c (random combination of the endomorphism
// space, retried until invertible; falls back to the identity).
template <class K>
ChainMap<K> random_chain_auto(Rng& rng, const ChainComplex<K>& c) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    ChainMap<K> f = random_chain_map(rng, c, c);
    bool inv = true;
    for (int n = c.lo(); n <= c.hi(); ++n)
      if (rank(f.at(n)) != c.dim(n)) inv = false;
    if (inv) return f;
  }
  return ChainMap<K>::identity(c);
}

// Random strictly functorial diagram: free summand-inclusion diagram on
// random generators, conjugated objectwise.
template <class K>
Diagram<K> random_diagram(Rng& rng, const FinPoset& p, int lo, int hi,
                          int max_dim = 2) {
  std::vector<ChainComplex<K>> gens;
  for (int y = 0; y < p.size(); ++y)
    gens.push_back(random_complex<K>(rng, lo, hi, max_dim));
  std::vector<ChainComplex<K>> vals;
  std::vector<std::vector<int>> down(p.size());
  for (int x = 0; x < p.size(); ++x) {
    ChainComplex<K> v;
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(y, x)) {
        down[x].push_back(y);
        v = direct_sum(v, gens[y]);
      }
    vals.push_back(v);
  }
  auto inclusion = [&](int a, int b) {
    // summands of a sit inside b by generator index
    std::map<int, Mat<K>> comps;
    for (int n = vals[a].lo(); n <= vals[a].hi(); ++n) {
      Mat<K> m(vals[b].dim(n), vals[a].dim(n));
      int coff = 0;
      for (int y : down[a]) {
        int roff = 0;
        for (int z : down[b]) {
          if (z == y) break;
          roff += gens[z].dim(n);
        }
        m.place(Mat<K>::identity(gens[y].dim(n)), roff, coff);
        coff += gens[y].dim(n);
      }
      if (!m.is_zero()) comps[n] = m;
    }
    return ChainMap<K>(vals[a], vals[b], std::move(comps), false);
  };
  std::vector<ChainMap<K>> autos, autos_inv;
  for (int x = 0; x < p.size(); ++x) {
    ChainMap<K> f = random_chain_auto(rng, vals[x]);
    std::map<int, Mat<K>> invc;
    for (int n = vals[x].lo(); n <= vals[x].hi(); ++n) {
      auto m = solve(f.at(n), Mat<K>::identity(vals[x].dim(n)));
      if (!m->is_zero()) invc[n] = *m;
    }
    autos.push_back(f);
    autos_inv.push_back(ChainMap<K>(vals[x], vals[x], std::move(invc)));
  }
  std::map<std::pair<int, int>, ChainMap<K>> edges;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.lt(a, b))
        edges[{a, b}] = autos[b]
                            .compose_after(inclusion(a, b))
                            .compose_after(autos_inv[a]);
  return Diagram<K>(p, std::move(vals), std::move(edges), false);
}

}  // namespace sph
