#pragma once

// Diagrams of chain complexes over finite posets and their homotopy
// (co)limits.  Homotopy colimits are computed as the total complex of the
// simplicial replacement over the nerve of the poset (normalized: only
// strict chains appear), homotopy limits by dualizing.  Pointwise
// homotopy Kan extensions along monotone maps are built from slice
// (co)limits, and total cofibers of cone-shaped diagrams from the
// augmentation.

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sph/complex.hpp"
#include "sph/poset.hpp"
#include "sph/simplexcat.hpp"

namespace sph {

template <class K>
class Diagram {
 public:
  Diagram() = default;
  Diagram(FinPoset index, std::vector<ChainComplex<K>> values,
          std::map<std::pair<int, int>, ChainMap<K>> edges, bool check = true)
      : index_(std::move(index)), values_(std::move(values)),
        edges_(std::move(edges)) {
    if (static_cast<int>(values_.size()) != index_.size())
      throw std::invalid_argument("value count mismatch");
    if (check) validate();
  }

  // Edge maps are stored for every strictly related pair a < b.
  void validate() const {
    for (int a = 0; a < index_.size(); ++a)
      for (int b = 0; b < index_.size(); ++b) {
        if (!index_.lt(a, b)) continue;
        auto it = edges_.find({a, b});
        if (it == edges_.end())
          throw std::invalid_argument("missing edge map");
        if (!(it->second.src() == values_[a] && it->second.tgt() == values_[b]))
          throw std::invalid_argument("edge endpoints mismatch");
        if (!it->second.commutes())
          throw std::invalid_argument("edge is not a chain map");
        for (int c = 0; c < index_.size(); ++c)
          if (index_.lt(b, c) &&
              !(edge(a, c) == edge(b, c).compose_after(edge(a, b))))
            throw std::invalid_argument("diagram not functorial");
      }
  }

  const FinPoset& index() const { return index_; }
  const ChainComplex<K>& value(int x) const { return values_[x]; }

  ChainMap<K> edge(int a, int b) const {
    if (a == b) return ChainMap<K>::identity(values_[a]);
    auto it = edges_.find({a, b});
    if (it == edges_.end()) throw std::out_of_range("no edge map");
    return it->second;
  }

  bool operator==(const Diagram& o) const {
    if (!(index_.leq_matrix() == o.index_.leq_matrix())) return false;
    for (int x = 0; x < index_.size(); ++x)
      if (!(values_[x] == o.values_[x])) return false;
    for (int a = 0; a < index_.size(); ++a)
      for (int b = 0; b < index_.size(); ++b)
        if (index_.lt(a, b) && !(edge(a, b) == o.edge(a, b))) return false;
    return true;
  }

  static Diagram constant(const FinPoset& p, const ChainComplex<K>& c) {
    std::vector<ChainComplex<K>> vals(p.size(), c);
    std::map<std::pair<int, int>, ChainMap<K>> edges;
    for (int a = 0; a < p.size(); ++a)
      for (int b = 0; b < p.size(); ++b)
        if (p.lt(a, b)) edges[{a, b}] = ChainMap<K>::identity(c);
    return Diagram(p, std::move(vals), std::move(edges), false);
  }

 private:
  FinPoset index_;
  std::vector<ChainComplex<K>> values_;
  std::map<std::pair<int, int>, ChainMap<K>> edges_;
};

// (f*D)(q) = D(f(q)); strict.
template <class K>
Diagram<K> restrict(const Diagram<K>& d, const PosetMap& f,
                    const FinPoset& q) {
  if (!f.monotone(q, d.index()))
    throw std::invalid_argument("restriction along a non-monotone map");
  std::vector<ChainComplex<K>> vals;
  for (int x = 0; x < q.size(); ++x) vals.push_back(d.value(f(x)));
  std::map<std::pair<int, int>, ChainMap<K>> edges;
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b)
      if (q.lt(a, b)) edges[{a, b}] = d.edge(f(a), f(b));
  return Diagram<K>(q, std::move(vals), std::move(edges), false);
}

// A map of diagrams.  Strict naturality is the default; over a linear
// order a component square may instead carry an explicit homotopy
// witness h with  d h + h d = edge_tgt o comp_a - comp_b o edge_src.
template <class K>
struct DiagMap {
  Diagram<K> src, tgt;                       // same index poset
  std::vector<ChainMap<K>> comps;            // per object
  std::map<std::pair<int, int>, Homotopy<K>> lax;  // optional witnesses

  bool natural() const {
    const FinPoset& p = src.index();
    for (int a = 0; a < p.size(); ++a)
      for (int b = 0; b < p.size(); ++b) {
        if (!p.lt(a, b)) continue;
        ChainMap<K> defect = tgt.edge(a, b).compose_after(comps[a]) -
                             comps[b].compose_after(src.edge(a, b));
        auto it = lax.find({a, b});
        if (it == lax.end()) {
          if (!defect.is_zero_map()) return false;
        } else if (!homotopy_witnesses(it->second, defect)) {
          return false;
        }
      }
    return true;
  }

  bool is_strict() const { return lax.empty(); }

  static DiagMap identity(const Diagram<K>& d) {
    DiagMap m{d, d, {}, {}};
    for (int x = 0; x < d.index().size(); ++x)
      m.comps.push_back(ChainMap<K>::identity(d.value(x)));
    return m;
  }

  DiagMap compose_after(const DiagMap& g) const {  // this o g, both strict
    if (!is_strict() || !g.is_strict())
      throw std::invalid_argument("composition of lax maps not supported");
    DiagMap m{g.src, tgt, {}, {}};
    for (size_t x = 0; x < comps.size(); ++x)
      m.comps.push_back(comps[x].compose_after(g.comps[x]));
    return m;
  }
};

// Tries to upgrade a componentwise map into a lax diagram map by solving
// for edge witnesses.  Returns nothing if some defect is not
// null-homotopic.
template <class K>
std::optional<DiagMap<K>> make_lax_map(const Diagram<K>& src,
                                       const Diagram<K>& tgt,
                                       std::vector<ChainMap<K>> comps) {
  DiagMap<K> m{src, tgt, std::move(comps), {}};
  const FinPoset& p = src.index();
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      if (!p.lt(a, b)) continue;
      ChainMap<K> defect = tgt.edge(a, b).compose_after(m.comps[a]) -
                           m.comps[b].compose_after(src.edge(a, b));
      if (defect.is_zero_map()) continue;
      auto h = null_homotopy(defect);
      if (!h) return std::nullopt;
      m.lax[{a, b}] = std::move(*h);
    }
  return m;
}

// ---------------------------------------------------------------------
// Homotopy colimit: total complex of the simplicial replacement.
//
// Degree-n part: sum over strict chains x_0 < ... < x_s of D(x_0)_{n-s}.
// Differential on a chain summand: (-1)^s internal differential; face 0
// applies the edge map D(x_0 -> x_1) into the truncated chain; face i
// drops x_i with sign (-1)^i.

template <class K>
struct Hocolim {
  ChainComplex<K> complex;
  FinPoset index;
  std::vector<std::vector<int>> chains;
  // offsets[n - complex.lo()][chain] = column offset of the chain's
  // summand in degree n (-1 when the summand vanishes there).
  std::vector<std::vector<int>> offsets;

  int offset(int n, int chain) const {
    if (n < complex.lo() || n > complex.hi()) return -1;
    return offsets[n - complex.lo()][chain];
  }
  int chain_id(const std::vector<int>& c) const {
    for (size_t i = 0; i < chains.size(); ++i)
      if (chains[i] == c) return static_cast<int>(i);
    return -1;
  }
};

template <class K>
Hocolim<K> hocolim(const Diagram<K>& d) {
  Hocolim<K> h;
  h.index = d.index();
  h.chains = d.index().strict_chains();
  if (h.chains.empty()) {
    h.complex = ChainComplex<K>::zero();
    return h;
  }
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& c : h.chains) {
    const auto& v = d.value(c[0]);
    if (v.empty_support()) continue;
    int s = static_cast<int>(c.size()) - 1;
    if (!any) {
      lo = v.lo() + s;
      hi = v.hi() + s;
      any = true;
    } else {
      lo = std::min(lo, v.lo() + s);
      hi = std::max(hi, v.hi() + s);
    }
  }
  if (!any) {
    h.complex = ChainComplex<K>::zero();
    return h;
  }
  std::vector<int> dims;
  h.offsets.assign(hi - lo + 1, std::vector<int>(h.chains.size(), -1));
  for (int n = lo; n <= hi; ++n) {
    int total = 0;
    for (size_t ci = 0; ci < h.chains.size(); ++ci) {
      const auto& c = h.chains[ci];
      int s = static_cast<int>(c.size()) - 1;
      int dim = d.value(c[0]).dim(n - s);
      if (dim > 0) {
        h.offsets[n - lo][ci] = total;
        total += dim;
      }
    }
    dims.push_back(total);
  }
  std::vector<Mat<K>> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    Mat<K> m(dims[n - 1 - lo], dims[n - lo]);
    for (size_t ci = 0; ci < h.chains.size(); ++ci) {
      const auto& c = h.chains[ci];
      int s = static_cast<int>(c.size()) - 1;
      int col = h.offsets[n - lo][ci];
      if (col < 0) continue;
      // internal differential
      {
        int row = h.offsets[n - 1 - lo][ci];
        if (row >= 0) {
          Mat<K> blk = d.value(c[0]).diff(n - s);
          if (s % 2 != 0) blk = -blk;
          m.place(blk, row, col);
        }
      }
      // faces
      for (int i = 0; i <= s; ++i) {
        if (s == 0) break;  // no faces land in chain length -1 here
        std::vector<int> cc = c;
        cc.erase(cc.begin() + i);
        int ti = -1;
        for (size_t k = 0; k < h.chains.size(); ++k)
          if (h.chains[k] == cc) {
            ti = static_cast<int>(k);
            break;
          }
        int row = h.offsets[n - 1 - lo][ti];
        if (row < 0) continue;
        Mat<K> blk = i == 0 ? d.edge(c[0], c[1]).at(n - s)
                            : Mat<K>::identity(d.value(c[0]).dim(n - s));
        if (i % 2 != 0) blk = -blk;
        m.place(blk, row, col);
      }
    }
    diffs.push_back(std::move(m));
  }
  h.complex = ChainComplex<K>(lo, std::move(dims), std::move(diffs));
  return h;
}

// Augmentation to a cocone: maps phi_x : D(x) -> e with
// phi_b o edge(a,b) = phi_a.  Only length-one chains contribute.
template <class K>
ChainMap<K> augmentation(const Hocolim<K>& h, const Diagram<K>& d,
                         const ChainComplex<K>& e,
                         const std::vector<ChainMap<K>>& phi) {
  for (int a = 0; a < d.index().size(); ++a)
    for (int b = 0; b < d.index().size(); ++b)
      if (d.index().lt(a, b) &&
          !(phi[b].compose_after(d.edge(a, b)) == phi[a]))
        throw std::invalid_argument("not a cocone");
  std::map<int, Mat<K>> comps;
  for (int n = h.complex.lo(); n <= h.complex.hi(); ++n) {
    Mat<K> m(e.dim(n), h.complex.dim(n));
    for (size_t ci = 0; ci < h.chains.size(); ++ci) {
      if (h.chains[ci].size() != 1) continue;
      int col = h.offset(n, static_cast<int>(ci));
      if (col < 0) continue;
      m.place(phi[h.chains[ci][0]].at(n), 0, col);
    }
    if (!m.is_zero()) comps[n] = m;
  }
  return ChainMap<K>(h.complex, e, std::move(comps));
}

// Functoriality in the diagram: a strict diagram map induces a map of
// homotopy colimits, blockwise by components.
template <class K>
ChainMap<K> hocolim_map(const Hocolim<K>& hs, const Hocolim<K>& ht,
                        const DiagMap<K>& f) {
  if (!f.is_strict()) throw std::invalid_argument("lax map on hocolim");
  std::map<int, Mat<K>> comps;
  int lo = std::min(hs.complex.lo(), ht.complex.lo());
  int hi = std::max(hs.complex.hi(), ht.complex.hi());
  for (int n = lo; n <= hi; ++n) {
    Mat<K> m(ht.complex.dim(n), hs.complex.dim(n));
    for (size_t ci = 0; ci < hs.chains.size(); ++ci) {
      const auto& c = hs.chains[ci];
      int s = static_cast<int>(c.size()) - 1;
      int col = hs.offset(n, static_cast<int>(ci));
      int row = ht.offset(n, ht.chain_id(c));
      if (col < 0 || row < 0) continue;
      m.place(f.comps[c[0]].at(n - s), row, col);
    }
    if (!m.is_zero()) comps[n] = m;
  }
  return ChainMap<K>(hs.complex, ht.complex, std::move(comps));
}

// Pushforward along a monotone map g : Q -> P, from hocolim of the
// restriction d (a diagram over Q with d(q) = D(g(q))) to hocolim of D.
// A chain whose image degenerates (adjacent equal values) dies, as in
// normalized nerve chains.
template <class K>
ChainMap<K> hocolim_pushforward(const Hocolim<K>& hq, const Hocolim<K>& hp,
                                const Diagram<K>& d, const PosetMap& g) {
  std::map<int, Mat<K>> comps;
  int lo = std::min(hq.complex.lo(), hp.complex.lo());
  int hi = std::max(hq.complex.hi(), hp.complex.hi());
  for (int n = lo; n <= hi; ++n) {
    Mat<K> m(hp.complex.dim(n), hq.complex.dim(n));
    for (size_t ci = 0; ci < hq.chains.size(); ++ci) {
      const auto& c = hq.chains[ci];
      int s = static_cast<int>(c.size()) - 1;
      int col = hq.offset(n, static_cast<int>(ci));
      if (col < 0) continue;
      std::vector<int> img;
      bool degenerate = false;
      for (int x : c) {
        int y = g(x);
        if (!img.empty() && img.back() == y) {
          degenerate = true;
          break;
        }
        img.push_back(y);
      }
      if (degenerate) continue;
      int row = hp.offset(n, hp.chain_id(img));
      if (row < 0) continue;
      m.place(Mat<K>::identity(d.value(c[0]).dim(n - s)), row, col);
    }
    if (!m.is_zero()) comps[n] = m;
  }
  return ChainMap<K>(hq.complex, hp.complex, std::move(comps));
}

// ---------------------------------------------------------------------
// Duality and homotopy limits.

// Linear dual: degrees flip, differentials transpose.
template <class K>
ChainComplex<K> dualize(const ChainComplex<K>& c) {
  if (c.empty_support()) return c;
  int lo = -c.hi(), hi = -c.lo();
  std::vector<int> dims;
  std::vector<Mat<K>> diffs;
  for (int n = lo; n <= hi; ++n) dims.push_back(c.dim(-n));
  for (int n = lo + 1; n <= hi; ++n) diffs.push_back(c.diff(-n + 1).transpose());
  return ChainComplex<K>(lo, std::move(dims), std::move(diffs));
}

template <class K>
ChainMap<K> dualize(const ChainMap<K>& f) {
  std::map<int, Mat<K>> comps;
  int lo = std::min(f.src().lo(), f.tgt().lo());
  int hi = std::max(f.src().hi(), f.tgt().hi());
  for (int n = lo; n <= hi; ++n) {
    Mat<K> m = f.at(n).transpose();
    if (!m.is_zero()) comps[-n] = m;
  }
  return ChainMap<K>(dualize(f.tgt()), dualize(f.src()), std::move(comps),
                     false);
}

// Dual diagram over the opposite poset.
template <class K>
Diagram<K> dualize(const Diagram<K>& d) {
  const FinPoset& p = d.index();
  FinPoset op = p.opposite();
  std::vector<ChainComplex<K>> vals;
  for (int x = 0; x < p.size(); ++x) vals.push_back(dualize(d.value(x)));
  std::map<std::pair<int, int>, ChainMap<K>> edges;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (op.lt(a, b)) edges[{a, b}] = dualize(d.edge(b, a));
  return Diagram<K>(op, std::move(vals), std::move(edges), false);
}

template <class K>
ChainComplex<K> holim(const Diagram<K>& d) {
  return dualize(hocolim(dualize(d)).complex);
}

// Coaugmentation e -> holim(D) from a cone psi_x : e -> D(x).
template <class K>
ChainMap<K> coaugmentation(const Diagram<K>& d, const ChainComplex<K>& e,
                           const std::vector<ChainMap<K>>& psi) {
  Diagram<K> dd = dualize(d);
  std::vector<ChainMap<K>> phi;
  for (const auto& f : psi) phi.push_back(dualize(f));
  Hocolim<K> h = hocolim(dd);
  ChainMap<K> aug = augmentation(h, dd, dualize(e), phi);
  return dualize(aug);
}

// ---------------------------------------------------------------------
// Pointwise homotopy Kan extensions along a monotone map f : Q -> P.

template <class K>
struct KanResult {
  Diagram<K> diagram;  // over the target (kan_left/right) poset
};

template <class K>
Diagram<K> kan_left(const Diagram<K>& d, const PosetMap& f, const FinPoset& q,
                    const FinPoset& p) {
  if (!f.monotone(q, p)) throw std::invalid_argument("kan_left: not monotone");
  // slice poset of x: elements of Q with f(q) <= x, plus inclusions
  std::vector<std::vector<int>> slice(p.size());
  for (int x = 0; x < p.size(); ++x)
    for (int a = 0; a < q.size(); ++a)
      if (p.leq(f(a), x)) slice[x].push_back(a);
  std::vector<Hocolim<K>> hs;
  std::vector<FinPoset> sub;
  for (int x = 0; x < p.size(); ++x) {
    sub.push_back(q.induced(slice[x]));
    PosetMap incl{slice[x]};
    hs.push_back(hocolim(restrict(d, incl, sub[x])));
  }
  std::vector<ChainComplex<K>> vals;
  for (int x = 0; x < p.size(); ++x) vals.push_back(hs[x].complex);
  std::map<std::pair<int, int>, ChainMap<K>> edges;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (!p.lt(x, y)) continue;
      // slice(x) includes into slice(y): position map
      PosetMap g;
      for (int a : slice[x]) {
        int pos = -1;
        for (size_t i = 0; i < slice[y].size(); ++i)
          if (slice[y][i] == a) pos = static_cast<int>(i);
        g.map.push_back(pos);
      }
      Diagram<K> dx = restrict(d, PosetMap{slice[x]}, sub[x]);
      edges[{x, y}] = hocolim_pushforward(hs[x], hs[y], dx, g);
    }
  return Diagram<K>(p, std::move(vals), std::move(edges), false);
}

template <class K>
Diagram<K> kan_right(const Diagram<K>& d, const PosetMap& f, const FinPoset& q,
                     const FinPoset& p) {
  // Dual of kan_left: dualize, extend over opposites, dualize back.
  Diagram<K> dd = dualize(d);
  Diagram<K> ext = kan_left(dd, f, q.opposite(), p.opposite());
  return dualize(ext);
}

// Unit X -> f* f_! X at q: include the singleton chain [q] into the slice
// colimit over f(q).  The unit is lax-natural: over q <= q' the square
// commutes up to the witness that includes X(q) into the summand of the
// chain [q < q'] inside the slice colimit over f(q').
template <class K>
DiagMap<K> kan_left_unit(const Diagram<K>& d, const Diagram<K>& extended,
                         const PosetMap& f, const FinPoset& q,
                         const FinPoset& p) {
  Diagram<K> pulled = restrict(extended, f, q);
  DiagMap<K> u{d, pulled, {}, {}};
  std::vector<std::vector<int>> slices(q.size());
  std::vector<Hocolim<K>> hs;
  for (int a = 0; a < q.size(); ++a) {
    for (int b = 0; b < q.size(); ++b)
      if (p.leq(f(b), f(a))) slices[a].push_back(b);
    FinPoset sp = q.induced(slices[a]);
    hs.push_back(hocolim(restrict(d, PosetMap{slices[a]}, sp)));
  }
  auto pos_in = [&](int a, int elem) {
    for (size_t i = 0; i < slices[a].size(); ++i)
      if (slices[a][i] == elem) return static_cast<int>(i);
    return -1;
  };
  for (int a = 0; a < q.size(); ++a) {
    const Hocolim<K>& h = hs[a];
    int pos = pos_in(a, a);
    std::map<int, Mat<K>> comps;
    const auto& v = d.value(a);
    for (int n = v.lo(); n <= v.hi(); ++n) {
      int row = h.offset(n, h.chain_id({pos}));
      if (row < 0 || v.dim(n) == 0) continue;
      Mat<K> m(h.complex.dim(n), v.dim(n));
      m.place(Mat<K>::identity(v.dim(n)), row, 0);
      comps[n] = m;
    }
    u.comps.push_back(ChainMap<K>(v, h.complex, std::move(comps)));
  }
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b) {
      if (!q.lt(a, b)) continue;
      const Hocolim<K>& hb = hs[b];
      int pa = pos_in(b, a), pb = pos_in(b, b);
      int cid = hb.chain_id({pa, pb});
      Homotopy<K> w;
      const auto& v = d.value(a);
      for (int n = v.lo(); n <= v.hi(); ++n) {
        int row = hb.offset(n + 1, cid);
        if (row < 0 || v.dim(n) == 0) continue;
        Mat<K> m(hb.complex.dim(n + 1), v.dim(n));
        m.place(-Mat<K>::identity(v.dim(n)), row, 0);
        w.comps[n] = m;
      }
      u.lax[{a, b}] = std::move(w);
    }
  if (!u.natural()) throw std::logic_error("kan_left unit not natural");
  return u;
}

// Counit f_! f* Y -> Y at x: augment the slice colimit through the edge
// maps into Y(x).
template <class K>
DiagMap<K> kan_left_counit(const Diagram<K>& y, const Diagram<K>& extended,
                           const PosetMap& f, const FinPoset& q,
                           const FinPoset& p) {
  Diagram<K> pulled = restrict(y, f, q);
  DiagMap<K> c{extended, y, {}, {}};
  for (int x = 0; x < p.size(); ++x) {
    std::vector<int> sl;
    for (int b = 0; b < q.size(); ++b)
      if (p.leq(f(b), x)) sl.push_back(b);
    FinPoset sp = q.induced(sl);
    Diagram<K> dx = restrict(pulled, PosetMap{sl}, sp);
    Hocolim<K> h = hocolim(dx);
    std::vector<ChainMap<K>> phi;
    for (int b : sl) phi.push_back(y.edge(f(b), x));
    c.comps.push_back(augmentation(h, dx, y.value(x), phi));
  }
  if (!c.natural()) throw std::logic_error("kan_left counit not natural");
  return c;
}

// ---------------------------------------------------------------------
// Total cofiber of a diagram over a cone poset.

// D is a diagram over cone.total; result is the cone of the augmentation
// hocolim(D|_base) -> D(cone point).
template <class K>
struct TotcofData {
  ChainComplex<K> complex;
  ChainMap<K> from_cone_value;  // D(cone point) -> totcof
};

template <class K>
TotcofData<K> totcof(const Diagram<K>& d, const ConeObject& k) {
  Diagram<K> base = restrict(d, PosetMap{k.incl}, k.base);
  Hocolim<K> h = hocolim(base);
  std::vector<ChainMap<K>> phi;
  for (int a = 0; a < k.base.size(); ++a)
    phi.push_back(d.edge(k.incl[a], k.cone));
  ChainMap<K> aug = augmentation(h, base, d.value(k.cone), phi);
  ConeData<K> c = cone(aug);
  return {std::move(c.complex), std::move(c.from_target)};
}

// ---------------------------------------------------------------------
// Cube diagrams and the iterated-cofiber oracle.

// The m-cube as a poset on subset masks 0..2^m-1, S <= T iff S subset T;
// the full mask is the terminal corner.
inline FinPoset cube_index(int m) {
  int n = 1 << m;
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) le[s][t] = ((s & t) == s);
  return FinPoset(std::move(le));
}

inline ConeObject cube_cone(int m) {
  FinPoset full = cube_index(m);
  std::vector<int> keep;
  int top = (1 << m) - 1;
  for (int s = 0; s < top; ++s) keep.push_back(s);
  ConeObject c;
  c.base = full.induced(keep);
  c.total = full;
  c.incl = keep;
  c.cone = top;
  return c;
}

// Iterated direction-wise cofiber: split along the last direction into
// two (m-1)-cubes and a map between them, replace by the cube of cones,
// recurse.
template <class K>
ChainComplex<K> totcof_cube_oracle(const Diagram<K>& d, int m) {
  if (d.index().size() != (1 << m))
    throw std::invalid_argument("not a cube diagram");
  if (m == 0) return d.value(0);
  int half = 1 << (m - 1);
  FinPoset sub = cube_index(m - 1);
  std::vector<ChainComplex<K>> vals;
  std::map<std::pair<int, int>, ChainMap<K>> edges;
  std::vector<ConeData<K>> cones;
  for (int s = 0; s < half; ++s)
    cones.push_back(cone(d.edge(s, s | half)));
  for (int s = 0; s < half; ++s) vals.push_back(cones[s].complex);
  for (int s = 0; s < half; ++s)
    for (int t = 0; t < half; ++t) {
      if (!sub.lt(s, t)) continue;
      // induced map on cones: block diagonal of the two edge maps
      const ChainMap<K>& u1 = d.edge(s | half, t | half);
      const ChainMap<K>& u0 = d.edge(s, t);
      std::map<int, Mat<K>> comps;
      for (int n = cones[s].complex.lo(); n <= cones[s].complex.hi(); ++n) {
        Mat<K> blk = Mat<K>::block2x2(
            u1.at(n), Mat<K>::zero(u1.tgt().dim(n), u0.src().dim(n - 1)),
            Mat<K>::zero(u0.tgt().dim(n - 1), u1.src().dim(n)),
            u0.at(n - 1));
        if (!blk.is_zero()) comps[n] = blk;
      }
      edges[{s, t}] =
          ChainMap<K>(cones[s].complex, cones[t].complex, std::move(comps));
    }
  Diagram<K> next(sub, std::move(vals), std::move(edges), false);
  return totcof_cube_oracle(next, m - 1);
}

}  // namespace sph
