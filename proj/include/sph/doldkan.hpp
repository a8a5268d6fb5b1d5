#pragma once

// Truncated augmented simplicial objects in chain complexes and their
// totalizations.
//
// A simplicial datum is a strict contravariant functor from a concrete
// finite index category (the truncated augmented simplex category, or
// its top-preserving variant) to chain complexes.  Two filtered
// totalizations are built independently: one from homotopy colimits over
// the cube posets of faces, one from the normalized (Moore) subcomplexes;
// a graded totalization over the top-containing cubes comes with an
// explicit chainwise comparison map from the shifted associated graded.
// A Grothendieck-construction / pointwise-Kan-extension route recomputes
// the same levels as counit cofibers, serving as a definitional oracle.

#include <bit>
#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "sph/diagrams.hpp"
#include "sph/gen.hpp"
#include "sph/simplexcat.hpp"

namespace sph {

// ---------------------------------------------------------------------
// Strict contravariant functors on a concrete finite category.

// action(a, b, f) : value(b) -> value(a) for every f in cat.hom[a][b].
template <class K>
struct OpFunctor {
  FinCat cat;
  std::vector<ChainComplex<K>> vals;
  std::map<std::tuple<int, int, Fn>, ChainMap<K>> act;

  const ChainComplex<K>& value(int i) const { return vals[i]; }

  const ChainMap<K>& action(int a, int b, const Fn& f) const {
    auto it = act.find(std::make_tuple(a, b, f));
    if (it == act.end()) throw std::out_of_range("no action for morphism");
    return it->second;
  }

  // Identities act as identities; every action is a chain map with the
  // right endpoints; composition is respected.  Compositions are checked
  // against all morphisms on one side and adjacent-size generators on
  // the other, which suffices: every monotone map factors through its
  // image by maps between adjacent sizes.
  void validate() const {
    int m = cat.size();
    if (static_cast<int>(vals.size()) != m)
      throw std::invalid_argument("value count mismatch");
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (const auto& f : cat.hom[a][b]) {
          const ChainMap<K>& g = action(a, b, f);
          if (!(g.src() == vals[b]) || !(g.tgt() == vals[a]))
            throw std::invalid_argument("action endpoints mismatch");
          if (!g.commutes())
            throw std::invalid_argument("action is not a chain map");
        }
    for (int a = 0; a < m; ++a)
      if (!(action(a, a, cat.identity(a)) == ChainMap<K>::identity(vals[a])))
        throw std::invalid_argument("identity does not act as identity");
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        if (cat.hom[a][b].empty()) continue;
        for (int c = 0; c < m; ++c) {
          if (cat.obj_size[c] != cat.obj_size[b] + 1 &&
              cat.obj_size[c] != cat.obj_size[b] - 1)
            continue;
          for (const auto& e : cat.hom[b][c])
            for (const auto& f : cat.hom[a][b])
              if (!(action(a, c, compose_fn(e, f)) ==
                    action(a, b, f).compose_after(action(b, c, e))))
                throw std::invalid_argument("composition not respected");
        }
      }
  }
};

namespace detail_dk {

inline Fn face_map(int j, int skip) {  // injection of sets of size j into j+1
  Fn f;
  for (int v = 0; v <= j; ++v)
    if (v != skip) f.push_back(v);
  return f;
}

inline Fn collapse_map(int l) {  // [l+1] -> [l], folds the top two together
  Fn f(l + 2);
  for (int i = 0; i <= l + 1; ++i) f[i] = std::min(i, l);
  return f;
}

inline Fn top_injection(int l) {  // [l] -> [l+1], top-preserving, skips l
  Fn f(l + 1);
  for (int i = 0; i < l; ++i) f[i] = i;
  f[l] = l + 1;
  return f;
}

}  // namespace detail_dk

// Restriction along the top-marking inclusion: the object [i] of the
// top-preserving category takes the value of [i], with the same actions.
template <class K>
OpFunctor<K> restrict_infty(const OpFunctor<K>& x, int n) {
  if (n + 2 > x.cat.size())
    throw std::invalid_argument("restriction exceeds truncation");
  OpFunctor<K> y;
  y.cat = delta_infty(n);
  for (int i = 0; i <= n; ++i) y.vals.push_back(x.vals[i + 1]);
  for (int a = 0; a < y.cat.size(); ++a)
    for (int b = 0; b < y.cat.size(); ++b)
      for (const auto& f : y.cat.hom[a][b])
        y.act.emplace(std::make_tuple(a, b, f), x.action(a + 1, b + 1, f));
  return y;
}

// ---------------------------------------------------------------------
// Corpus generators.

template <class K>
OpFunctor<K> constant_functor(const FinCat& cat, const ChainComplex<K>& c) {
  OpFunctor<K> x;
  x.cat = cat;
  x.vals.assign(cat.size(), c);
  for (int a = 0; a < cat.size(); ++a)
    for (int b = 0; b < cat.size(); ++b)
      for (const auto& f : cat.hom[a][b])
        x.act.emplace(std::make_tuple(a, b, f), ChainMap<K>::identity(c));
  return x;
}

enum class SimplicialShape { Simplex, Boundary, Horn };

// Free module on the simplices of the standard simplex on `verts + 1`
// vertices, its boundary, or the horn missing the face opposite vertex
// `missing`; augmented by the coefficient sum.  Values sit in degree 0.
template <class K>
OpFunctor<K> linearized_shape(int n, int verts, SimplicialShape shape,
                              int missing = 0) {
  FinCat cat = delta_plus(n);
  std::uint32_t full = (1u << (verts + 1)) - 1;
  auto keep = [&](const Fn& f) {
    std::uint32_t im = 0;
    for (int v : f) im |= 1u << v;
    switch (shape) {
      case SimplicialShape::Simplex:
        return true;
      case SimplicialShape::Boundary:
        return im != full;
      case SimplicialShape::Horn:
        return (im | (1u << missing)) != full;
    }
    return false;
  };
  std::vector<std::vector<Fn>> simps(cat.size());
  std::vector<std::map<Fn, int>> index(cat.size());
  OpFunctor<K> x;
  x.cat = cat;
  for (int a = 0; a < cat.size(); ++a) {
    for (const auto& f : monotone_maps(cat.obj_size[a], verts + 1))
      if (keep(f)) {
        index[a][f] = static_cast<int>(simps[a].size());
        simps[a].push_back(f);
      }
    int d = static_cast<int>(simps[a].size());
    x.vals.push_back(ChainComplex<K>(0, {d}, {}));
  }
  for (int a = 0; a < cat.size(); ++a)
    for (int b = 0; b < cat.size(); ++b)
      for (const auto& f : cat.hom[a][b]) {
        Mat<K> m(static_cast<int>(simps[a].size()),
                 static_cast<int>(simps[b].size()));
        for (size_t col = 0; col < simps[b].size(); ++col)
          m.set(index[a].at(compose_fn(simps[b][col], f)),
                static_cast<int>(col), K::one());
        std::map<int, Mat<K>> comps;
        if (!m.is_zero()) comps[0] = std::move(m);
        x.act.emplace(std::make_tuple(a, b, f),
                      ChainMap<K>(x.vals[b], x.vals[a], std::move(comps)));
      }
  return x;
}

// Cofree simplicial datum on a few random generator complexes: the value
// at an object is the direct sum of one generator copy per morphism into
// the generator's level, with actions by precomposition.  Strictly
// functorial by construction.
template <class K>
OpFunctor<K> cofree_functor(Rng& rng, int n, int deg_lo, int deg_hi,
                            int max_dim = 1, int extra_gens = 2) {
  FinCat cat = delta_plus(n);
  std::vector<ChainComplex<K>> gen(cat.size(), ChainComplex<K>::zero());
  gen[0] = random_complex<K>(rng, deg_lo, deg_hi, max_dim);
  for (int t = 0; t < extra_gens; ++t) {
    int k = rng.range(1, cat.size() - 1);
    if (gen[k].empty_support())
      gen[k] = random_complex<K>(rng, deg_lo, deg_hi, max_dim);
  }
  OpFunctor<K> x;
  x.cat = cat;
  // summand list of object b: pairs (level k, morphism index into hom[b][k])
  std::vector<std::vector<std::pair<int, int>>> summands(cat.size());
  for (int b = 0; b < cat.size(); ++b) {
    ChainComplex<K> v = ChainComplex<K>::zero();
    for (int k = 0; k < cat.size(); ++k)
      for (size_t fi = 0; fi < cat.hom[b][k].size(); ++fi) {
        summands[b].push_back({k, static_cast<int>(fi)});
        v = direct_sum(v, gen[k]);
      }
    x.vals.push_back(std::move(v));
  }
  auto offset = [&](int b, size_t s, int d) {
    int o = 0;
    for (size_t t = 0; t < s; ++t) o += gen[summands[b][t].first].dim(d);
    return o;
  };
  auto find_index = [&](int a, int k, const Fn& f) {
    const auto& h = cat.hom[a][k];
    for (size_t i = 0; i < h.size(); ++i)
      if (h[i] == f) return static_cast<int>(i);
    throw std::logic_error("composite not found");
  };
  for (int a = 0; a < cat.size(); ++a)
    for (int b = 0; b < cat.size(); ++b)
      for (const auto& g : cat.hom[a][b]) {
        std::map<int, Mat<K>> comps;
        int lo = std::min(x.vals[a].lo(), x.vals[b].lo());
        int hi = std::max(x.vals[a].hi(), x.vals[b].hi());
        for (int d = lo; d <= hi; ++d) {
          Mat<K> m(x.vals[a].dim(d), x.vals[b].dim(d));
          for (size_t s = 0; s < summands[b].size(); ++s) {
            auto [k, fi] = summands[b][s];
            if (gen[k].dim(d) == 0) continue;
            int ti = find_index(a, k, compose_fn(cat.hom[b][k][fi], g));
            // position of (k, ti) in the summand list of a
            size_t ts = 0;
            for (; ts < summands[a].size(); ++ts)
              if (summands[a][ts] == std::make_pair(k, ti)) break;
            m.place(Mat<K>::identity(gen[k].dim(d)), offset(a, ts, d),
                    offset(b, s, d));
          }
          if (!m.is_zero()) comps[d] = std::move(m);
        }
        x.act.emplace(std::make_tuple(a, b, g),
                      ChainMap<K>(x.vals[b], x.vals[a], std::move(comps)));
      }
  return x;
}

// ---------------------------------------------------------------------
// Cube-shaped restrictions.

// Diagram over the cone poset of faces: base elements are the nonempty
// subsets S (as bitmasks, under reverse inclusion), the cone point is the
// empty face, values are the simplicial levels, and edges act by the
// position injections of subsets.
template <class K>
struct CubeRestriction {
  ConeObject shape;
  Diagram<K> diagram;  // over shape.total
  Diagram<K> base;     // restriction to shape.base
  std::vector<std::uint32_t> mask;  // base element -> subset bitmask
};

// All nonempty subsets of {0..k} with the empty set as cone point.
template <class K>
CubeRestriction<K> cube_plus(const OpFunctor<K>& x, int k) {
  int m = (1 << (k + 1)) - 1;
  std::vector<std::vector<bool>> le(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) le[a][b] = (((b + 1) & (a + 1)) == b + 1);
  CubeRestriction<K> out;
  out.shape = cone_of(FinPoset(std::move(le)));
  std::vector<ChainComplex<K>> vals;
  for (int a = 0; a < m; ++a) {
    out.mask.push_back(static_cast<std::uint32_t>(a + 1));
    vals.push_back(x.vals[std::popcount(out.mask[a])]);
  }
  vals.push_back(x.vals[0]);
  std::map<std::pair<int, int>, ChainMap<K>> edges;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b <= m; ++b) {
      if (!out.shape.total.lt(a, b)) continue;
      std::uint32_t ma = out.mask[a], mb = (b == m) ? 0u : out.mask[b];
      edges[{a, b}] = x.action(std::popcount(mb), std::popcount(ma),
                               subset_injection(ma, mb));
    }
  out.diagram =
      Diagram<K>(out.shape.total, std::move(vals), std::move(edges), false);
  out.base = restrict(out.diagram, PosetMap{out.shape.incl}, out.shape.base);
  return out;
}

// Subsets of {0..k} containing the top element k, with {k} as cone point.
template <class K>
CubeRestriction<K> cube_max(const OpFunctor<K>& y, int k) {
  if (k + 1 > y.cat.size())
    throw std::invalid_argument("cube exceeds truncation");
  int m = (1 << k) - 1;
  std::uint32_t kbit = 1u << k;
  std::vector<std::vector<bool>> le(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) le[a][b] = (((b + 1) & (a + 1)) == b + 1);
  CubeRestriction<K> out;
  out.shape = cone_of(FinPoset(std::move(le)));
  std::vector<ChainComplex<K>> vals;
  for (int a = 0; a < m; ++a) {
    out.mask.push_back(static_cast<std::uint32_t>(a + 1) | kbit);
    vals.push_back(y.vals[std::popcount(out.mask[a]) - 1]);
  }
  vals.push_back(y.vals[0]);
  std::map<std::pair<int, int>, ChainMap<K>> edges;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b <= m; ++b) {
      if (!out.shape.total.lt(a, b)) continue;
      std::uint32_t ma = out.mask[a], mb = (b == m) ? kbit : out.mask[b];
      edges[{a, b}] = y.action(std::popcount(mb) - 1, std::popcount(ma) - 1,
                               subset_injection(ma, mb));
    }
  out.diagram =
      Diagram<K>(out.shape.total, std::move(vals), std::move(edges), false);
  out.base = restrict(out.diagram, PosetMap{out.shape.incl}, out.shape.base);
  return out;
}

namespace detail_dk {

template <class K>
ChainMap<K> cube_augmentation(const CubeRestriction<K>& cu,
                              const Hocolim<K>& h) {
  std::vector<ChainMap<K>> phi;
  for (int a = 0; a < cu.shape.base.size(); ++a)
    phi.push_back(cu.diagram.edge(cu.shape.incl[a], cu.shape.cone));
  return augmentation(h, cu.base, cu.diagram.value(cu.shape.cone), phi);
}

}  // namespace detail_dk

// ---------------------------------------------------------------------
// Filtered totalization from cube homotopy colimits.

// Level 0 is the augmentation value; level k+1 is the cone of the
// augmentation from the homotopy colimit over the nonempty faces of
// {0..k}; structure maps include the smaller cube's nerve chains.
template <class K>
struct FilteredTotal {
  Diagram<K> filt;  // over the chain poset on n+2 levels
  std::vector<CubeRestriction<K>> cubes;
  std::vector<Hocolim<K>> hoc;
  std::vector<ChainMap<K>> aug;
};

template <class K>
FilteredTotal<K> ldk_tilde(const OpFunctor<K>& x, int n) {
  if (n + 2 > x.cat.size())
    throw std::invalid_argument("totalization exceeds truncation");
  FilteredTotal<K> out;
  const ChainComplex<K>& e = x.vals[0];
  std::vector<ChainComplex<K>> levels{e};
  std::vector<ChainMap<K>> step;
  for (int k = 0; k <= n; ++k) {
    out.cubes.push_back(cube_plus(x, k));
    const CubeRestriction<K>& cu = out.cubes[k];
    out.hoc.push_back(hocolim(cu.base));
    out.aug.push_back(detail_dk::cube_augmentation(cu, out.hoc[k]));
    ConeData<K> cd = cone(out.aug[k]);
    if (k == 0) {
      step.push_back(cd.from_target);
    } else {
      PosetMap g;  // subsets of {0..k-1} keep their index in the bigger cube
      g.map.resize((1 << k) - 1);
      for (size_t i = 0; i < g.map.size(); ++i) g.map[i] = static_cast<int>(i);
      ChainMap<K> push = hocolim_pushforward(out.hoc[k - 1], out.hoc[k],
                                             out.cubes[k - 1].base, g);
      std::map<int, Mat<K>> comps;
      for (int d = std::min(levels[k].lo(), cd.complex.lo());
           d <= std::max(levels[k].hi(), cd.complex.hi()); ++d) {
        Mat<K> m(cd.complex.dim(d), levels[k].dim(d));
        m.place(Mat<K>::identity(e.dim(d)), 0, 0);
        m.place(push.at(d - 1), e.dim(d), e.dim(d));
        if (!m.is_zero()) comps[d] = std::move(m);
      }
      step.push_back(ChainMap<K>(levels[k], cd.complex, std::move(comps)));
    }
    levels.push_back(cd.complex);
  }
  std::map<std::pair<int, int>, ChainMap<K>> edges;
  for (int a = 0; a <= n; ++a) {
    edges[{a, a + 1}] = step[a];
    for (int b = a + 2; b <= n + 1; ++b)
      edges[{a, b}] = step[b - 1].compose_after(edges[{a, b - 1}]);
  }
  out.filt = Diagram<K>(FinPoset::chain(n + 2), std::move(levels),
                        std::move(edges), false);
  return out;
}

// ---------------------------------------------------------------------
// Filtered totalization from normalized subcomplexes.

// The normalized part of level j is the intersection of the kernels of
// all faces except the zeroth; the zeroth face restricts to it and gives
// the connecting boundary.
template <class K>
struct MooreComplex {
  std::vector<ChainComplex<K>> normalized;
  std::vector<std::map<int, Mat<K>>> basis;  // columns inside the level
  std::vector<ChainMap<K>> boundary;         // index j-1 : N_j -> N_{j-1}
};

template <class K>
MooreComplex<K> moore_normalization(const OpFunctor<K>& x, int n) {
  MooreComplex<K> mo;
  for (int j = 0; j <= n; ++j) {
    const ChainComplex<K>& xj = x.vals[j + 1];
    std::map<int, Mat<K>> bas;
    std::vector<int> dims;
    int lo = xj.lo(), hi = xj.hi();
    std::vector<const ChainMap<K>*> faces;
    for (int i = 1; i <= j; ++i)
      faces.push_back(&x.action(j, j + 1, detail_dk::face_map(j, i)));
    for (int d = lo; d <= hi; ++d) {
      if (j == 0) {
        bas[d] = Mat<K>::identity(xj.dim(d));
      } else {
        int rows = x.vals[j].dim(d);
        Mat<K> st(rows * j, xj.dim(d));
        for (int i = 0; i < j; ++i) st.place(faces[i]->at(d), rows * i, 0);
        bas[d] = kernel_basis(st);
      }
      dims.push_back(bas[d].cols());
    }
    std::vector<Mat<K>> diffs;
    for (int d = lo + 1; d <= hi; ++d) {
      auto s = solve(bas[d - 1], xj.diff(d) * bas[d]);
      if (!s) throw std::logic_error("differential leaves the normalized part");
      diffs.push_back(std::move(*s));
    }
    if (xj.empty_support()) {
      mo.normalized.push_back(ChainComplex<K>::zero());
    } else {
      mo.normalized.push_back(ChainComplex<K>(lo, std::move(dims),
                                              std::move(diffs)));
    }
    if (j > 0) {
      const ChainMap<K>& f0 = x.action(j, j + 1, detail_dk::face_map(j, 0));
      std::map<int, Mat<K>> comps;
      for (int d = lo; d <= hi; ++d) {
        int rows = mo.normalized[j - 1].dim(d);
        if (rows == 0 || bas[d].cols() == 0) continue;
        auto s = solve(mo.basis[j - 1].at(d), f0.at(d) * bas[d]);
        if (!s) throw std::logic_error("zeroth face leaves the normalized part");
        if (!s->is_zero()) comps[d] = std::move(*s);
      }
      mo.boundary.push_back(ChainMap<K>(mo.normalized[j], mo.normalized[j - 1],
                                        std::move(comps)));
    }
    mo.basis.push_back(std::move(bas));
  }
  return mo;
}

template <class K>
struct FilteredMoore {
  Diagram<K> filt;  // over the chain poset on n+2 levels
  MooreComplex<K> moore;
  std::vector<ChainComplex<K>> totals;  // truncated normalized totals
};

template <class K>
FilteredMoore<K> ldk_plus(const OpFunctor<K>& x, int n) {
  if (n + 2 > x.cat.size())
    throw std::invalid_argument("totalization exceeds truncation");
  FilteredMoore<K> out;
  out.moore = moore_normalization(x, n);
  const MooreComplex<K>& mo = out.moore;
  const ChainComplex<K>& e = x.vals[0];
  const ChainMap<K>& aug0 = x.action(0, 1, Fn{});
  std::vector<ChainMap<K>> eps;
  for (int k = 0; k <= n; ++k) {
    int lo = INT_MAX, hi = INT_MIN;
    for (int j = 0; j <= k; ++j)
      if (!mo.normalized[j].empty_support()) {
        lo = std::min(lo, mo.normalized[j].lo() + j);
        hi = std::max(hi, mo.normalized[j].hi() + j);
      }
    if (lo > hi) {
      out.totals.push_back(ChainComplex<K>::zero());
      eps.push_back(ChainMap<K>::zero(out.totals[k], e));
      continue;
    }
    auto bdim = [&](int j, int d) { return mo.normalized[j].dim(d - j); };
    auto boff = [&](int j, int d) {
      int o = 0;
      for (int t = 0; t < j; ++t) o += bdim(t, d);
      return o;
    };
    std::vector<int> dims;
    for (int d = lo; d <= hi; ++d) {
      int t = 0;
      for (int j = 0; j <= k; ++j) t += bdim(j, d);
      dims.push_back(t);
    }
    std::vector<Mat<K>> diffs;
    for (int d = lo + 1; d <= hi; ++d) {
      Mat<K> m(dims[d - 1 - lo], dims[d - lo]);
      for (int j = 0; j <= k; ++j) {
        Mat<K> blk = mo.normalized[j].diff(d - j);
        if (j % 2 != 0) blk = -blk;
        m.place(blk, boff(j, d - 1), boff(j, d));
        if (j > 0)
          m.place(mo.boundary[j - 1].at(d - j), boff(j - 1, d - 1), boff(j, d));
      }
      diffs.push_back(std::move(m));
    }
    out.totals.push_back(ChainComplex<K>(lo, std::move(dims),
                                         std::move(diffs)));
    std::map<int, Mat<K>> comps;
    for (int d = lo; d <= hi; ++d) {
      Mat<K> m(e.dim(d), out.totals[k].dim(d));
      m.place(aug0.at(d), 0, 0);
      if (!m.is_zero()) comps[d] = std::move(m);
    }
    eps.push_back(ChainMap<K>(out.totals[k], e, std::move(comps)));
  }
  std::vector<ChainComplex<K>> levels{e};
  std::vector<ChainMap<K>> step;
  for (int k = 0; k <= n; ++k) {
    ConeData<K> cd = cone(eps[k]);
    if (k == 0) {
      step.push_back(cd.from_target);
    } else {
      std::map<int, Mat<K>> comps;
      for (int d = std::min(levels[k].lo(), cd.complex.lo());
           d <= std::max(levels[k].hi(), cd.complex.hi()); ++d) {
        Mat<K> m(cd.complex.dim(d), levels[k].dim(d));
        m.place(Mat<K>::identity(e.dim(d)), 0, 0);
        // truncated totals include blockwise as a prefix
        m.place(Mat<K>::identity(out.totals[k - 1].dim(d - 1)), e.dim(d),
                e.dim(d));
        if (!m.is_zero()) comps[d] = std::move(m);
      }
      step.push_back(ChainMap<K>(levels[k], cd.complex, std::move(comps)));
    }
    levels.push_back(cd.complex);
  }
  std::map<std::pair<int, int>, ChainMap<K>> edges;
  for (int a = 0; a <= n; ++a) {
    edges[{a, a + 1}] = step[a];
    for (int b = a + 2; b <= n + 1; ++b)
      edges[{a, b}] = step[b - 1].compose_after(edges[{a, b - 1}]);
  }
  out.filt = Diagram<K>(FinPoset::chain(n + 2), std::move(levels),
                        std::move(edges), false);
  return out;
}

// ---------------------------------------------------------------------
// Graded totalization over the top-containing cubes.

template <class K>
struct GradedTotal {
  Diagram<K> graded;  // over the antichain on n+1 gradings
  std::vector<CubeRestriction<K>> cubes;
  std::vector<Hocolim<K>> hoc;
  std::vector<ChainMap<K>> aug;
};

template <class K>
GradedTotal<K> dk_infty(const OpFunctor<K>& y, int n) {
  GradedTotal<K> out;
  std::vector<ChainComplex<K>> vals;
  for (int k = 0; k <= n; ++k) {
    out.cubes.push_back(cube_max(y, k));
    out.hoc.push_back(hocolim(out.cubes[k].base));
    out.aug.push_back(detail_dk::cube_augmentation(out.cubes[k], out.hoc[k]));
    vals.push_back(cone(out.aug[k]).complex);
  }
  out.graded = Diagram<K>(FinPoset::antichain(n + 1), std::move(vals), {},
                          false);
  return out;
}

// ---------------------------------------------------------------------
// Homology bookkeeping shared by the model-agreement checks.

// Rank of the induced map on homology in each degree.
template <class K>
std::map<int, int> homology_map_ranks(const ChainMap<K>& f) {
  const ChainComplex<K>& c = f.src();
  const ChainComplex<K>& d = f.tgt();
  std::map<int, int> out;
  int lo = std::min(c.lo(), d.lo()), hi = std::max(c.hi(), d.hi());
  for (int n = lo; n <= hi; ++n) {
    Mat<K> zc = kernel_basis(c.diff(n));
    if (zc.cols() == 0) continue;
    Mat<K> bd = d.diff(n + 1);
    Mat<K> fz = f.at(n) * zc;
    Mat<K> juxt(d.dim(n), bd.cols() + fz.cols());
    juxt.place(bd, 0, 0);
    juxt.place(fz, 0, bd.cols());
    // cycles map to cycles and boundaries to boundaries, so the rank gain
    // over the boundary columns counts independent homology classes
    int r = rank(juxt) - rank(bd);
    if (r != 0) out[n] = r;
  }
  return out;
}

// The two filtered totalizations agree: levelwise equal homology and
// equal homology ranks of all consecutive structure maps.
template <class K>
bool ldk_models_agree(const FilteredMoore<K>& lp, const FilteredTotal<K>& lt) {
  int n = lt.filt.index().size();
  if (lp.filt.index().size() != n) return false;
  for (int i = 0; i < n; ++i)
    if (lp.filt.value(i).homology() != lt.filt.value(i).homology())
      return false;
  for (int i = 0; i + 1 < n; ++i)
    if (homology_map_ranks(lp.filt.edge(i, i + 1)) !=
        homology_map_ranks(lt.filt.edge(i, i + 1)))
      return false;
  return true;
}

// ---------------------------------------------------------------------
// Comparison between the shifted associated graded of the filtered
// totalization and the graded totalization.

// The graded piece at k is the cone of the structure map between levels
// k and k+1, shifted down once.  The comparison projects its nerve-chain
// summands onto the chains of top-containing faces that end exactly at
// the singleton top face, dropping that endpoint (the length-one chain
// at the singleton maps to the cone value).  Signs alternate with chain
// length so that dropped-face terms cancel.
template <class K>
ChainMap<K> graded_comparison(const FilteredTotal<K>& lt,
                              const GradedTotal<K>& dk, int k) {
  ConeData<K> gc = cone(lt.filt.edge(k, k + 1));
  ChainComplex<K> g = gc.complex.shift(-1);
  const ChainComplex<K>& m = dk.graded.value(k);
  const ChainComplex<K>& e = lt.filt.value(0);
  const CubeRestriction<K>& cu = dk.cubes[k];
  const ChainComplex<K>& f = cu.diagram.value(cu.shape.cone);
  const Hocolim<K>& hb = lt.hoc[k];
  const Hocolim<K>& ha = dk.hoc[k];
  std::uint32_t kbit = 1u << k;
  std::map<int, Mat<K>> comps;
  for (int d = g.lo(); d <= g.hi(); ++d) {
    Mat<K> mm(m.dim(d), g.dim(d));
    for (size_t ci = 0; ci < hb.chains.size(); ++ci) {
      int col = hb.offset(d, static_cast<int>(ci));
      if (col < 0) continue;
      const std::vector<int>& c = hb.chains[ci];
      int len = static_cast<int>(c.size());
      bool keep = (static_cast<std::uint32_t>(c.back() + 1) == kbit);
      for (int i = 0; keep && i < len; ++i)
        if ((static_cast<std::uint32_t>(c[i] + 1) & kbit) == 0) keep = false;
      if (!keep) continue;
      int blkdim = lt.cubes[k].base.value(c[0]).dim(d - (len - 1));
      if (blkdim == 0) continue;
      int row = 0;
      if (len > 1) {
        std::vector<int> cp;
        for (int i = 0; i + 1 < len; ++i)
          cp.push_back(static_cast<int>(
              (static_cast<std::uint32_t>(c[i] + 1) & ~kbit) - 1));
        row = f.dim(d) + ha.offset(d - 1, ha.chain_id(cp));
      }
      Mat<K> blk = Mat<K>::identity(blkdim);
      if (len >= 3 && len % 2 == 1) blk = -blk;
      mm.place(blk, row, e.dim(d + 1) + col);
    }
    if (!mm.is_zero()) comps[d] = std::move(mm);
  }
  return ChainMap<K>(std::move(g), m, std::move(comps));
}

// ---------------------------------------------------------------------
// Mate composite on graded totalizations.

// The collapse of the top two elements followed by the top-preserving
// injection composes to the identity; both induce maps of cube diagrams
// and hence of total cofibers.  The round trip must be the map induced
// by the identity and in particular a quasi-isomorphism.
template <class K>
bool mate_composite_ok(const OpFunctor<K>& y, int k) {
  if (k + 2 > y.cat.size())
    throw std::invalid_argument("mate stage exceeds truncation");
  CubeRestriction<K> d0 = cube_max(y, k);
  int m = (1 << k) - 1;
  std::uint32_t kbit = 1u << k;
  auto fullmask = [&](int a) {
    return a < m ? (static_cast<std::uint32_t>(a + 1) | kbit) : kbit;
  };
  // the same cube shape on the next simplicial levels
  std::vector<ChainComplex<K>> vals;
  std::map<std::pair<int, int>, ChainMap<K>> edges;
  TIotaAdjunction ti{0};
  for (int a = 0; a <= m; ++a)
    vals.push_back(y.vals[std::popcount(fullmask(a))]);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b <= m; ++b) {
      if (!d0.shape.total.lt(a, b)) continue;
      int pa = std::popcount(fullmask(a)), pb = std::popcount(fullmask(b));
      Fn tf = ti.t_mor(subset_injection(fullmask(a), fullmask(b)), pa - 1);
      edges[{a, b}] = y.action(pb, pa, tf);
    }
  Diagram<K> d1(d0.shape.total, std::move(vals), std::move(edges), false);
  DiagMap<K> fold{d0.diagram, d1, {}, {}};
  DiagMap<K> back{d1, d0.diagram, {}, {}};
  for (int a = 0; a <= m; ++a) {
    int p = std::popcount(fullmask(a));
    fold.comps.push_back(y.action(p, p - 1, detail_dk::collapse_map(p - 1)));
    back.comps.push_back(y.action(p - 1, p, detail_dk::top_injection(p - 1)));
  }
  if (!fold.natural() || !back.natural()) return false;
  Diagram<K> b1 = restrict(d1, PosetMap{d0.shape.incl}, d0.shape.base);
  Hocolim<K> h0 = hocolim(d0.base), h1 = hocolim(b1);
  std::vector<ChainMap<K>> phi1;
  for (int a = 0; a < m; ++a) phi1.push_back(d1.edge(a, m));
  ChainMap<K> a0 = detail_dk::cube_augmentation(d0, h0);
  ChainMap<K> a1 = augmentation(h1, b1, d1.value(m), phi1);
  ConeData<K> c0 = cone(a0), c1 = cone(a1);
  auto induced = [&](const DiagMap<K>& fm, const Diagram<K>& sb,
                     const Diagram<K>& tb, const Hocolim<K>& hs,
                     const Hocolim<K>& ht, const ConeData<K>& cs,
                     const ConeData<K>& ct) {
    DiagMap<K> fb{sb, tb, {}, {}};
    for (int a = 0; a < m; ++a) fb.comps.push_back(fm.comps[a]);
    ChainMap<K> hm = hocolim_map(hs, ht, fb);
    const ChainComplex<K>& sv = fm.src.value(m);
    const ChainComplex<K>& tv = fm.tgt.value(m);
    std::map<int, Mat<K>> comps;
    for (int d = std::min(cs.complex.lo(), ct.complex.lo());
         d <= std::max(cs.complex.hi(), ct.complex.hi()); ++d) {
      Mat<K> mm(ct.complex.dim(d), cs.complex.dim(d));
      mm.place(fm.comps[m].at(d), 0, 0);
      mm.place(hm.at(d - 1), tv.dim(d), sv.dim(d));
      if (!mm.is_zero()) comps[d] = std::move(mm);
    }
    return ChainMap<K>(cs.complex, ct.complex, std::move(comps));
  };
  ChainMap<K> m1 = induced(fold, d0.base, b1, h0, h1, c0, c1);
  ChainMap<K> m2 = induced(back, b1, d0.base, h1, h0, c1, c0);
  ChainMap<K> round = m2.compose_after(m1);
  return round == ChainMap<K>::identity(c0.complex) && is_quasi_iso(round);
}

// ---------------------------------------------------------------------
// Top-level verification.

struct TdkldkReport {
  std::vector<bool> comparison_ok;  // per grading
  std::vector<bool> mate_ok;        // per stage
  bool models_agree = false;

  bool ok() const {
    if (!models_agree) return false;
    for (bool b : comparison_ok)
      if (!b) return false;
    for (bool b : mate_ok)
      if (!b) return false;
    return true;
  }
};

template <class K>
TdkldkReport verify_tdkldk(const OpFunctor<K>& x, int n) {
  FilteredTotal<K> lt = ldk_tilde(x, n);
  FilteredMoore<K> lp = ldk_plus(x, n);
  OpFunctor<K> y = restrict_infty(x, n);
  GradedTotal<K> dk = dk_infty(y, n);
  TdkldkReport r;
  r.models_agree = ldk_models_agree(lp, lt);
  for (int k = 0; k <= n; ++k)
    r.comparison_ok.push_back(is_quasi_iso(graded_comparison(lt, dk, k)));
  for (int k = 0; k + 1 <= n; ++k) r.mate_ok.push_back(mate_composite_ok(y, k));
  return r;
}

// Passing to opposites: linear duality transposes every complex and
// reverses every index arrow.  It is an involution on diagrams, and the
// dualized comparison maps must again be quasi-isomorphisms.
struct DkMinusReport {
  bool involution_ok = false;
  std::vector<bool> dual_comparison_ok;

  bool ok() const {
    if (!involution_ok) return false;
    for (bool b : dual_comparison_ok)
      if (!b) return false;
    return true;
  }
};

template <class K>
DkMinusReport verify_dk_minus(const OpFunctor<K>& x, int n) {
  FilteredTotal<K> lt = ldk_tilde(x, n);
  OpFunctor<K> y = restrict_infty(x, n);
  GradedTotal<K> dk = dk_infty(y, n);
  DkMinusReport r;
  r.involution_ok = true;
  for (int k = 0; k <= n; ++k) {
    if (!(dualize(dualize(lt.cubes[k].diagram)) == lt.cubes[k].diagram) ||
        !(dualize(dualize(dk.cubes[k].diagram)) == dk.cubes[k].diagram))
      r.involution_ok = false;
    ChainMap<K> dual = dualize(graded_comparison(lt, dk, k));
    r.dual_comparison_ok.push_back(is_quasi_iso(dual));
  }
  return r;
}

// ---------------------------------------------------------------------
// Definitional oracle: counit cofibers over the Grothendieck poset.

// Fiber i is the cone poset of nonempty subsets of {0..i-1} (so fiber 0
// is a bare cone point); transitions keep the subset and send cone point
// to cone point.
inline ConeFunctorFamily stagewise_cube_family(int j) {
  ConeFunctorFamily fam;
  for (int i = 0; i <= j; ++i) {
    int m = (1 << i) - 1;
    std::vector<std::vector<bool>> le(m, std::vector<bool>(m, false));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) le[a][b] = (((b + 1) & (a + 1)) == b + 1);
    fam.fibers.push_back(cone_of(FinPoset(std::move(le))));
  }
  for (int i = 0; i < j; ++i) {
    PosetMap t;
    t.map.resize(1 << i);
    for (int a = 0; a < (1 << i) - 1; ++a) t.map[a] = a;
    t.map[(1 << i) - 1] = (1 << (i + 1)) - 1;
    fam.transitions.push_back(t);
  }
  return fam;
}

// Restrict to the non-cone part, extend back by the pointwise left Kan
// extension, and take the cone of the counit along the cone-point
// section.
template <class K>
std::vector<ChainComplex<K>> counit_cofiber_levels(const Diagram<K>& d,
                                                   const GrothendieckPoset& g) {
  if (g.total.size() > 64)
    throw std::invalid_argument("index poset too large for the definitional"
                                " computation");
  PosetMap incl{g.base_elems};
  Diagram<K> restricted = restrict(d, incl, g.base_total);
  Diagram<K> ext = kan_left(restricted, incl, g.base_total, g.total);
  DiagMap<K> cu = kan_left_counit(d, ext, incl, g.base_total, g.total);
  std::vector<ChainComplex<K>> out;
  for (int s : g.section) out.push_back(cone(cu.comps[s]).complex);
  return out;
}

// Levels of the filtered totalization recomputed definitionally.
template <class K>
std::vector<ChainComplex<K>> definitional_filtered_levels(const OpFunctor<K>& x,
                                                          int j) {
  ConeFunctorFamily fam = stagewise_cube_family(j);
  GrothendieckPoset g = grothendieck(fam);
  auto mask_of = [&](int elem) -> std::uint32_t {
    auto [i, xx] = g.elems[elem];
    return xx == fam.fibers[i].cone ? 0u : static_cast<std::uint32_t>(xx + 1);
  };
  std::vector<ChainComplex<K>> vals;
  for (int e = 0; e < g.total.size(); ++e)
    vals.push_back(x.vals[std::popcount(mask_of(e))]);
  std::map<std::pair<int, int>, ChainMap<K>> edges;
  for (int a = 0; a < g.total.size(); ++a)
    for (int b = 0; b < g.total.size(); ++b) {
      if (!g.total.lt(a, b)) continue;
      std::uint32_t ma = mask_of(a), mb = mask_of(b);
      edges[{a, b}] = x.action(std::popcount(mb), std::popcount(ma),
                               subset_injection(ma, mb));
    }
  Diagram<K> d(g.total, std::move(vals), std::move(edges), false);
  return counit_cofiber_levels(d, g);
}

// Gradings of the graded totalization recomputed definitionally; fiber i
// carries the top-containing subsets of {0..i}, and cross-stage edges
// relabel the top element before taking position injections (the
// injections do not depend on the chosen stage).
template <class K>
std::vector<ChainComplex<K>> definitional_graded_levels(const OpFunctor<K>& y,
                                                        int j) {
  if (j + 1 > y.cat.size())
    throw std::invalid_argument("stage exceeds truncation");
  ConeFunctorFamily fam = stagewise_cube_family(j);
  GrothendieckPoset g = grothendieck(fam);
  auto low_of = [&](int elem) -> std::uint32_t {
    auto [i, xx] = g.elems[elem];
    return xx == fam.fibers[i].cone ? 0u : static_cast<std::uint32_t>(xx + 1);
  };
  std::vector<ChainComplex<K>> vals;
  for (int e = 0; e < g.total.size(); ++e)
    vals.push_back(y.vals[std::popcount(low_of(e))]);
  std::map<std::pair<int, int>, ChainMap<K>> edges;
  for (int a = 0; a < g.total.size(); ++a)
    for (int b = 0; b < g.total.size(); ++b) {
      if (!g.total.lt(a, b)) continue;
      std::uint32_t top = 1u << g.elems[b].first;
      std::uint32_t ma = low_of(a) | top, mb = low_of(b) | top;
      edges[{a, b}] = y.action(std::popcount(mb) - 1, std::popcount(ma) - 1,
                               subset_injection(ma, mb));
    }
  Diagram<K> d(g.total, std::move(vals), std::move(edges), false);
  return counit_cofiber_levels(d, g);
}

}  // namespace sph
