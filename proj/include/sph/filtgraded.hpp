#pragma once

// Windowed filtered and graded objects, maps between them that may
// commute with the structure maps only up to recorded homotopies, and
// the associated-graded / trivial-filtration functors with their built-in
// adjunctions.
//
// A filtered object is a Diagram over the chain poset [0..N-1] (element
// i = filtration level window.lo + i); a graded object is a Diagram over
// the antichain on the same elements.  Values outside the window are
// zero; every verification is restricted to the window interior, at
// distance >= margin from either edge.

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sph/diagrams.hpp"
#include "sph/gen.hpp"

namespace sph {

struct Window {
  int lo, hi, margin;

  int size() const { return hi - lo + 1; }
  int pos(int level) const { return level - lo; }
  int level(int pos) const { return lo + pos; }
  bool interior(int level) const {
    return level >= lo + margin && level <= hi - margin;
  }
  void validate() const {
    if (margin < 0 || lo + margin > hi - margin)
      throw std::invalid_argument("window too small for its margin");
  }
};

// ---------------------------------------------------------------------
// Maps of filtered/graded objects with per-edge homotopy witnesses.
//
// Witnesses live on consecutive edges only; diagrams over a chain are
// freely generated by those, and all constructions below consume
// consecutive data.

template <class K>
struct LMap {
  Diagram<K> src, tgt;            // same index poset (chain or antichain)
  std::vector<ChainMap<K>> comps;
  // wit[i] witnesses the square over the edge i -> i+1:
  //   d wit + wit d = tgt.edge(i,i+1) o comps[i] - comps[i+1] o src.edge(i,i+1)
  // Empty map = strict square.  Empty vector = fully strict.
  std::vector<Homotopy<K>> wit;

  bool is_strict() const {
    for (const auto& h : wit)
      if (!h.comps.empty()) return false;
    return true;
  }

  ChainMap<K> defect(int i) const {
    return tgt.edge(i, i + 1).compose_after(comps[i]) -
           comps[i + 1].compose_after(src.edge(i, i + 1));
  }

  void validate() const {
    int n = src.index().size();
    if (static_cast<int>(comps.size()) != n)
      throw std::invalid_argument("component count mismatch");
    bool linear = n > 1 && src.index().lt(0, 1);
    if (!linear) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (src.index().lt(i, j))
            throw std::invalid_argument("LMap index must be chain/antichain");
      return;  // antichain: componentwise chain maps suffice
    }
    if (!wit.empty() && static_cast<int>(wit.size()) != n - 1)
      throw std::invalid_argument("witness count mismatch");
    for (int i = 0; i + 1 < n; ++i) {
      ChainMap<K> dft = defect(i);
      if (wit.empty() || wit[i].comps.empty()) {
        if (!dft.is_zero_map())
          throw std::invalid_argument("non-strict square without witness");
      } else if (!homotopy_witnesses(wit[i], dft)) {
        throw std::invalid_argument("invalid edge witness");
      }
    }
  }

  static LMap identity(const Diagram<K>& d) {
    LMap m{d, d, {}, {}};
    for (int i = 0; i < d.index().size(); ++i)
      m.comps.push_back(ChainMap<K>::identity(d.value(i)));
    return m;
  }

  LMap compose_after(const LMap& g) const {  // this o g
    LMap out{g.src, tgt, {}, {}};
    int n = static_cast<int>(comps.size());
    for (int i = 0; i < n; ++i)
      out.comps.push_back(comps[i].compose_after(g.comps[i]));
    if (!is_strict() || !g.is_strict()) {
      out.wit.resize(n - 1);
      for (int i = 0; i + 1 < n; ++i) {
        // w = this_{i+1} o w_g + w_this o g_i
        Homotopy<K> w;
        const auto& a = g.src.value(i);
        const auto& b = tgt.value(i + 1);
        for (int d = a.lo() - 1; d <= a.hi(); ++d) {
          Mat<K> m = comps[i + 1].at(d + 1) *
                         (g.wit.empty() ? Mat<K>::zero(g.tgt.value(i + 1).dim(d + 1),
                                                       a.dim(d))
                                        : g.wit[i].at(d, a, g.tgt.value(i + 1))) +
                     (wit.empty() ? Mat<K>::zero(b.dim(d + 1),
                                                 g.tgt.value(i).dim(d))
                                  : wit[i].at(d, src.value(i), b)) *
                         g.comps[i].at(d);
          if (!m.is_zero()) w.comps[d] = m;
        }
        out.wit[i] = std::move(w);
      }
    }
    out.validate();
    return out;
  }

  LMap operator-(const LMap& o) const {
    LMap out{src, tgt, {}, {}};
    int n = static_cast<int>(comps.size());
    for (int i = 0; i < n; ++i) out.comps.push_back(comps[i] - o.comps[i]);
    if (!is_strict() || !o.is_strict()) {
      out.wit.resize(n - 1);
      for (int i = 0; i + 1 < n; ++i) {
        Homotopy<K> w;
        const auto& a = src.value(i);
        const auto& b = tgt.value(i + 1);
        for (int d = a.lo() - 1; d <= a.hi(); ++d) {
          Mat<K> m = (wit.empty() ? Mat<K>::zero(b.dim(d + 1), a.dim(d))
                                  : wit[i].at(d, a, b)) -
                     (o.wit.empty() ? Mat<K>::zero(b.dim(d + 1), a.dim(d))
                                    : o.wit[i].at(d, a, b));
          if (!m.is_zero()) w.comps[d] = m;
        }
        out.wit[i] = std::move(w);
      }
    }
    return out;
  }
};

// Levelwise quasi-isomorphism tests.
template <class K>
bool levelwise_quasi_iso(const LMap<K>& g) {
  for (const auto& c : g.comps)
    if (!is_quasi_iso(c)) return false;
  return true;
}

// Restricted to the window interior (positions at distance >= margin
// from both edges).
template <class K>
bool levelwise_quasi_iso_interior(const LMap<K>& g, const Window& w) {
  for (int i = 0; i < static_cast<int>(g.comps.size()); ++i) {
    if (!w.interior(w.level(i))) continue;
    if (!is_quasi_iso(g.comps[i])) return false;
  }
  return true;
}

// Builds an LMap from components, solving for edge witnesses where the
// squares fail to commute.  Returns nothing when some defect is not
// null-homotopic.
template <class K>
std::optional<LMap<K>> make_lmap(const Diagram<K>& src, const Diagram<K>& tgt,
                                 std::vector<ChainMap<K>> comps) {
  LMap<K> m{src, tgt, std::move(comps), {}};
  int n = src.index().size();
  bool linear = n > 1 && src.index().lt(0, 1);
  if (!linear) {
    m.validate();
    return m;
  }
  bool any = false;
  m.wit.resize(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    ChainMap<K> dft = m.defect(i);
    if (dft.is_zero_map()) continue;
    auto h = null_homotopy(dft);
    if (!h) return std::nullopt;
    m.wit[i] = std::move(*h);
    any = true;
  }
  if (!any) m.wit.clear();
  m.validate();
  return m;
}

// ---------------------------------------------------------------------
// Reindexing and shifting.

// Degree shift [k], objectwise.
template <class K>
Diagram<K> diagram_degree_shift(const Diagram<K>& d, int k) {
  const FinPoset& p = d.index();
  std::vector<ChainComplex<K>> vals;
  for (int x = 0; x < p.size(); ++x) vals.push_back(d.value(x).shift(k));
  std::map<std::pair<int, int>, ChainMap<K>> edges;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.lt(a, b)) edges[{a, b}] = d.edge(a, b).shift(k);
  return Diagram<K>(p, std::move(vals), std::move(edges), false);
}

template <class K>
LMap<K> lmap_degree_shift(const LMap<K>& f, int k) {
  LMap<K> out{diagram_degree_shift(f.src, k), diagram_degree_shift(f.tgt, k),
              {}, {}};
  for (const auto& c : f.comps) out.comps.push_back(c.shift(k));
  if (!f.is_strict()) {
    out.wit.resize(f.wit.size());
    for (size_t i = 0; i < f.wit.size(); ++i) {
      Homotopy<K> w;
      for (const auto& [n, m] : f.wit[i].comps)
        w.comps[n + k] = (k % 2 == 0) ? m : -m;
      out.wit[i] = std::move(w);
    }
  }
  out.validate();
  return out;
}

// Index shift <k>: value at position i becomes the old value at i + k,
// zero beyond the window (margin discipline keeps assertions away from
// the affected boundary).
template <class K>
Diagram<K> diagram_index_shift(const Diagram<K>& d, int k) {
  const FinPoset& p = d.index();
  int n = p.size();
  auto val = [&](int i) {
    int j = i + k;
    return (j >= 0 && j < n) ? d.value(j) : ChainComplex<K>::zero();
  };
  std::vector<ChainComplex<K>> vals;
  for (int i = 0; i < n; ++i) vals.push_back(val(i));
  std::map<std::pair<int, int>, ChainMap<K>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!p.lt(a, b)) continue;
      int ja = a + k, jb = b + k;
      if (ja >= 0 && jb < n && ja < n && jb >= 0)
        edges[{a, b}] = d.edge(ja, jb);
      else
        edges[{a, b}] = ChainMap<K>::zero(val(a), val(b));
    }
  return Diagram<K>(p, std::move(vals), std::move(edges), false);
}

template <class K>
LMap<K> lmap_index_shift(const LMap<K>& f, int k) {
  LMap<K> out{diagram_index_shift(f.src, k), diagram_index_shift(f.tgt, k),
              {}, {}};
  int n = f.src.index().size();
  auto comp = [&](int i) {
    int j = i + k;
    return (j >= 0 && j < n)
               ? f.comps[j]
               : ChainMap<K>::zero(ChainComplex<K>::zero(),
                                   ChainComplex<K>::zero());
  };
  for (int i = 0; i < n; ++i) out.comps.push_back(comp(i));
  if (!f.is_strict()) {
    out.wit.resize(n - 1);
    for (int i = 0; i + 1 < n; ++i) {
      int j = i + k;
      if (j >= 0 && j < static_cast<int>(f.wit.size())) out.wit[i] = f.wit[j];
    }
  }
  out.validate();
  return out;
}

// ---------------------------------------------------------------------
// gr and triv.

// gr(X)_n = cone(f_{n-1} : X_{n-1} -> X_n), with X at position -1 = 0.
template <class K>
Diagram<K> gr_ob(const Diagram<K>& x) {
  int n = x.index().size();
  std::vector<ChainComplex<K>> vals;
  for (int i = 0; i < n; ++i) {
    ChainMap<K> f = i == 0 ? ChainMap<K>::zero(ChainComplex<K>::zero(),
                                               x.value(0))
                           : x.edge(i - 1, i);
    vals.push_back(cone(f).complex);
  }
  return Diagram<K>(FinPoset::antichain(n), std::move(vals), {}, false);
}

// gr of a map: blockwise, the witness filling the corner.  The result is
// strict (the target is graded).
template <class K>
LMap<K> gr_mor(const LMap<K>& g) {
  int n = g.src.index().size();
  Diagram<K> gs = gr_ob(g.src), gt = gr_ob(g.tgt);
  std::vector<ChainMap<K>> comps;
  for (int i = 0; i < n; ++i) {
    const auto& a = gs.value(i);
    const auto& b = gt.value(i);
    std::map<int, Mat<K>> c;
    const auto& xprev = i == 0 ? ChainComplex<K>::zero() : g.src.value(i - 1);
    const auto& yprev = i == 0 ? ChainComplex<K>::zero() : g.tgt.value(i - 1);
    for (int d = a.lo(); d <= a.hi(); ++d) {
      // cone(f_{i-1})_d = Y-part g.tgt.value(i)_d (+) yprev_{d-1}
      // chain-map condition for [[u, s],[0, v]] between cones of the
      // structure maps: d s + s d = u o f - f' o v = -(edge witness defect)
      Mat<K> blk;
      if (i == 0) {
        blk = g.comps[0].at(d);  // no previous block at the window floor
      } else {
        Mat<K> corner =
            g.wit.empty()
                ? Mat<K>::zero(g.tgt.value(i).dim(d), xprev.dim(d - 1))
                : -g.wit[i - 1].at(d - 1, xprev, g.tgt.value(i));
        blk = Mat<K>::block2x2(
            g.comps[i].at(d), corner,
            Mat<K>::zero(yprev.dim(d - 1), g.src.value(i).dim(d)),
            g.comps[i - 1].at(d - 1));
      }
      if (!blk.is_zero()) c[d] = blk;
    }
    comps.push_back(ChainMap<K>(a, b, std::move(c)));
  }
  LMap<K> out{std::move(gs), std::move(gt), std::move(comps), {}};
  out.validate();
  return out;
}

// triv: same values, zero structure maps.
template <class K>
Diagram<K> triv_ob(const Diagram<K>& y) {
  int n = y.index().size();
  std::vector<ChainComplex<K>> vals;
  for (int i = 0; i < n; ++i) vals.push_back(y.value(i));
  std::map<std::pair<int, int>, ChainMap<K>> edges;
  FinPoset ch = FinPoset::chain(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (ch.lt(a, b))
        edges[{a, b}] = ChainMap<K>::zero(y.value(a), y.value(b));
  return Diagram<K>(ch, std::move(vals), std::move(edges), false);
}

template <class K>
LMap<K> triv_mor(const LMap<K>& g) {
  LMap<K> out{triv_ob(g.src), triv_ob(g.tgt), g.comps, {}};
  out.validate();  // zero edges: squares commute strictly
  return out;
}

// Forgets the structure maps of a filtered object (endofunctor of the
// filtered side; equals triv o (underlying graded)).
template <class K>
Diagram<K> zero_structure_ob(const Diagram<K>& x) {
  int n = x.index().size();
  std::vector<ChainComplex<K>> vals;
  for (int i = 0; i < n; ++i) vals.push_back(x.value(i));
  return triv_ob(Diagram<K>(FinPoset::antichain(n), std::move(vals), {}, false));
}

// Underlying graded of a filtered object (drops edges, keeps values).
template <class K>
Diagram<K> underlying_graded(const Diagram<K>& x) {
  int n = x.index().size();
  std::vector<ChainComplex<K>> vals;
  for (int i = 0; i < n; ++i) vals.push_back(x.value(i));
  return Diagram<K>(FinPoset::antichain(n), std::move(vals), {}, false);
}

// ---------------------------------------------------------------------
// Cones and fibers of filtered/graded maps.

template <class K>
struct LConeData {
  Diagram<K> complex;   // the cone, as a diagram over the same index
  LMap<K> from_target;  // tgt -> cone (strict)
  LMap<K> to_shifted_source;  // cone -> src[1] (strict)
};

template <class K>
LConeData<K> cone_lmap(const LMap<K>& f) {
  int n = f.src.index().size();
  const FinPoset& p = f.src.index();
  std::vector<ConeData<K>> pointwise;
  for (int i = 0; i < n; ++i) {
    ChainMap<K> fi = f.comps[i];
    pointwise.push_back(cone(fi));
  }
  std::vector<ChainComplex<K>> vals;
  for (int i = 0; i < n; ++i) vals.push_back(pointwise[i].complex);
  std::map<std::pair<int, int>, ChainMap<K>> edges;
  bool linear = n > 1 && p.lt(0, 1);
  if (linear) {
    // consecutive structure maps [[E, w],[0, D]]; composites generate
    std::vector<ChainMap<K>> step;
    for (int i = 0; i + 1 < n; ++i) {
      const auto& ca = pointwise[i].complex;
      const auto& cb = pointwise[i + 1].complex;
      std::map<int, Mat<K>> c;
      const auto& e = f.tgt.edge(i, i + 1);
      const auto& d = f.src.edge(i, i + 1);
      for (int m = ca.lo(); m <= ca.hi(); ++m) {
        Mat<K> w = f.wit.empty()
                       ? Mat<K>::zero(f.tgt.value(i + 1).dim(m),
                                      f.src.value(i).dim(m - 1))
                       : f.wit[i].at(m - 1, f.src.value(i), f.tgt.value(i + 1));
        Mat<K> blk = Mat<K>::block2x2(
            e.at(m), w,
            Mat<K>::zero(f.src.value(i + 1).dim(m - 1), f.tgt.value(i).dim(m)),
            d.at(m - 1));
        if (!blk.is_zero()) c[m] = blk;
      }
      step.push_back(ChainMap<K>(ca, cb, std::move(c)));
    }
    for (int a = 0; a < n; ++a) {
      ChainMap<K> acc = ChainMap<K>::identity(pointwise[a].complex);
      for (int b = a + 1; b < n; ++b) {
        acc = step[b - 1].compose_after(acc);
        edges[{a, b}] = acc;
      }
    }
  }
  Diagram<K> cd(p, std::move(vals), std::move(edges), false);
  LMap<K> incl{f.tgt, cd, {}, {}};
  LMap<K> proj{cd, diagram_degree_shift(f.src, 1), {}, {}};
  for (int i = 0; i < n; ++i) {
    incl.comps.push_back(ChainMap<K>(f.tgt.value(i), cd.value(i),
                                     cone_incl_comps(pointwise[i]), false));
    proj.comps.push_back(ChainMap<K>(cd.value(i), f.src.value(i).shift(1),
                                     cone_proj_comps(pointwise[i]), false));
  }
  incl.validate();
  proj.validate();
  return {std::move(cd), std::move(incl), std::move(proj)};
}

template <class K>
std::map<int, Mat<K>> cone_incl_comps(const ConeData<K>& c) {
  std::map<int, Mat<K>> out;
  const auto& src = c.from_target.src();
  for (int n = src.lo(); n <= src.hi(); ++n) {
    Mat<K> m = c.from_target.at(n);
    if (!m.is_zero()) out[n] = m;
  }
  return out;
}

template <class K>
std::map<int, Mat<K>> cone_proj_comps(const ConeData<K>& c) {
  std::map<int, Mat<K>> out;
  const auto& src = c.to_shifted_source.src();
  for (int n = src.lo(); n <= src.hi(); ++n) {
    Mat<K> m = c.to_shifted_source.at(n);
    if (!m.is_zero()) out[n] = m;
  }
  return out;
}

template <class K>
struct LFiberData {
  Diagram<K> complex;  // fiber(f) = cone(f)[-1]
  LMap<K> to_source;   // fiber -> src of f (strict)
  LMap<K> from_shifted_target;
};

template <class K>
LFiberData<K> fiber_lmap(const LMap<K>& f) {
  LConeData<K> c = cone_lmap(f);
  Diagram<K> fib = diagram_degree_shift(c.complex, -1);
  int n = f.src.index().size();
  LMap<K> to_src{fib, f.src, {}, {}};
  LMap<K> from_tgt{diagram_degree_shift(f.tgt, -1), fib, {}, {}};
  for (int i = 0; i < n; ++i) {
    FiberData<K> pf = fiber(f.comps[i]);
    to_src.comps.push_back(pf.to_source);
    from_tgt.comps.push_back(pf.from_shifted_target);
  }
  to_src.validate();
  from_tgt.validate();
  return {std::move(fib), std::move(to_src), std::move(from_tgt)};
}

// Functoriality of the cone in a square that commutes up to pointwise
// homotopy: given f : X -> E, f' : X' -> E' (the maps being coned) and a
// square (gx : X -> X', ge : E -> E'), produce cone(f) -> cone(f').
// Pointwise corners are solved; edge witnesses are solved afterwards.
template <class K>
std::optional<LMap<K>> cone_functorial(const LMap<K>& f, const LMap<K>& fp,
                                       const LMap<K>& gx, const LMap<K>& ge,
                                       const Diagram<K>& cone_f,
                                       const Diagram<K>& cone_fp) {
  int n = f.src.index().size();
  std::vector<ChainMap<K>> comps;
  for (int i = 0; i < n; ++i) {
    // corner condition: d s + s d = ge o f - fp o gx
    ChainMap<K> sq =
        ge.comps[i].compose_after(f.comps[i]) -
        fp.comps[i].compose_after(gx.comps[i]);
    std::optional<Homotopy<K>> s;
    if (sq.is_zero_map())
      s = Homotopy<K>{};
    else
      s = null_homotopy(sq);
    if (!s) return std::nullopt;
    const auto& ca = cone_f.value(i);
    const auto& cb = cone_fp.value(i);
    std::map<int, Mat<K>> c;
    for (int m = ca.lo(); m <= ca.hi(); ++m) {
      Mat<K> corner = s->at(m - 1, f.src.value(i), fp.tgt.value(i));
      Mat<K> blk = Mat<K>::block2x2(
          ge.comps[i].at(m), corner,
          Mat<K>::zero(fp.src.value(i).dim(m - 1), f.tgt.value(i).dim(m)),
          gx.comps[i].at(m - 1));
      if (!blk.is_zero()) c[m] = blk;
    }
    comps.push_back(ChainMap<K>(ca, cb, std::move(c)));
  }
  return make_lmap(cone_f, cone_fp, std::move(comps));
}

// ---------------------------------------------------------------------
// Generating families and random objects.

// Filtered skyscraper: value c at levels >= position p (identity maps),
// zero below.
template <class K>
Diagram<K> filtered_skyscraper(int n, int p, const ChainComplex<K>& c) {
  FinPoset ch = FinPoset::chain(n);
  std::vector<ChainComplex<K>> vals;
  for (int i = 0; i < n; ++i)
    vals.push_back(i >= p ? c : ChainComplex<K>::zero());
  std::map<std::pair<int, int>, ChainMap<K>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (ch.lt(a, b))
        edges[{a, b}] = a >= p ? ChainMap<K>::identity(c)
                               : ChainMap<K>::zero(vals[a], vals[b]);
  return Diagram<K>(ch, std::move(vals), std::move(edges), false);
}

// Filtered interval: value c on positions [p, q), zero elsewhere.
template <class K>
Diagram<K> filtered_interval(int n, int p, int q, const ChainComplex<K>& c) {
  FinPoset ch = FinPoset::chain(n);
  std::vector<ChainComplex<K>> vals;
  for (int i = 0; i < n; ++i)
    vals.push_back(i >= p && i < q ? c : ChainComplex<K>::zero());
  std::map<std::pair<int, int>, ChainMap<K>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (ch.lt(a, b))
        edges[{a, b}] = (a >= p && b < q)
                            ? ChainMap<K>::identity(c)
                            : ChainMap<K>::zero(vals[a], vals[b]);
  return Diagram<K>(ch, std::move(vals), std::move(edges), false);
}

template <class K>
Diagram<K> graded_skyscraper(int n, int p, const ChainComplex<K>& c) {
  std::vector<ChainComplex<K>> vals;
  for (int i = 0; i < n; ++i)
    vals.push_back(i == p ? c : ChainComplex<K>::zero());
  return Diagram<K>(FinPoset::antichain(n), std::move(vals), {}, false);
}

// The declared generating family for "natural quasi-iso" checks.
template <class K>
std::vector<Diagram<K>> filtered_family(const Window& w) {
  std::vector<Diagram<K>> out;
  int n = w.size();
  for (int p = 1; p + 1 < n; ++p) {
    out.push_back(filtered_skyscraper(n, p, ChainComplex<K>::point(0)));
    if (p + 2 < n)
      out.push_back(filtered_interval(n, p, p + 2, ChainComplex<K>::point(1)));
  }
  return out;
}

template <class K>
std::vector<Diagram<K>> graded_family(const Window& w) {
  std::vector<Diagram<K>> out;
  int n = w.size();
  for (int p = 1; p + 1 < n; ++p) {
    out.push_back(graded_skyscraper(n, p, ChainComplex<K>::point(0)));
    out.push_back(graded_skyscraper(n, p, ChainComplex<K>::point(-1)));
  }
  return out;
}

template <class K>
Diagram<K> random_filtered(Rng& rng, const Window& w, int deg_lo = 0,
                           int deg_hi = 2, int max_dim = 2) {
  return random_diagram<K>(rng, FinPoset::chain(w.size()), deg_lo, deg_hi,
                           max_dim);
}

template <class K>
Diagram<K> random_graded(Rng& rng, const Window& w, int deg_lo = 0,
                         int deg_hi = 2, int max_dim = 2) {
  return random_diagram<K>(rng, FinPoset::antichain(w.size()), deg_lo, deg_hi,
                           max_dim);
}

}  // namespace sph
