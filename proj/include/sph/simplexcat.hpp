#pragma once

// Index-category combinatorics: truncated augmented simplex categories,
// the "add a top element" adjunction, cone posets K^|>, the cube posets
// J_n / J_n^max, and the Grothendieck construction of a cone-functor
// family over a finite linear order.
//
// All categories are concrete: objects carry a finite underlying set and
// morphisms are stored as explicit functions, so composition is function
// composition and categorical laws are checkable by enumeration.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sph/poset.hpp"

namespace sph {

using Fn = std::vector<int>;  // function on {0..m-1}, value list

inline Fn compose_fn(const Fn& g, const Fn& f) {  // g o f
  Fn out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

inline bool is_monotone_fn(const Fn& f) {
  for (size_t i = 0; i + 1 < f.size(); ++i)
    if (f[i] > f[i + 1]) return false;
  return true;
}

// All monotone maps {0..m-1} -> {0..n-1}.  m = 0 gives the single empty
// map; n = 0 with m > 0 gives none.
inline std::vector<Fn> monotone_maps(int m, int n) {
  std::vector<Fn> out;
  if (m == 0) {
    out.push_back({});
    return out;
  }
  if (n == 0) return out;
  Fn cur(m, 0);
  auto rec = [&](auto&& self, int i, int low) -> void {
    if (i == m) {
      out.push_back(cur);
      return;
    }
    for (int v = low; v < n; ++v) {
      cur[i] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

// A concrete finite category: object i has an underlying set of size
// obj_size[i]; hom-sets are explicit lists of functions.
struct FinCat {
  std::vector<int> obj_size;
  std::vector<std::string> labels;
  // hom[a][b] = list of morphisms a -> b
  std::vector<std::vector<std::vector<Fn>>> hom;

  int size() const { return static_cast<int>(obj_size.size()); }

  bool contains(int a, int b, const Fn& f) const {
    const auto& h = hom[a][b];
    return std::find(h.begin(), h.end(), f) != h.end();
  }

  Fn identity(int a) const {
    Fn id(obj_size[a]);
    for (int i = 0; i < obj_size[a]; ++i) id[i] = i;
    return id;
  }

  // Exhaustive sanity check: identities present, composition closed.
  bool well_formed() const {
    for (int a = 0; a < size(); ++a)
      if (!contains(a, a, identity(a))) return false;
    for (int a = 0; a < size(); ++a)
      for (int b = 0; b < size(); ++b)
        for (const auto& f : hom[a][b])
          for (int c = 0; c < size(); ++c)
            for (const auto& g : hom[b][c])
              if (!contains(a, c, compose_fn(g, f))) return false;
    return true;
  }
};

// Truncated augmented simplex category: objects [-1], [0], ..., [n]
// (object index i stands for [i-1], underlying set size i), morphisms all
// monotone maps.
inline FinCat delta_plus(int n) {
  FinCat c;
  for (int i = 0; i <= n + 1; ++i) {
    c.obj_size.push_back(i);
    c.labels.push_back("[" + std::to_string(i - 1) + "]");
  }
  c.hom.assign(c.size(), std::vector<std::vector<Fn>>(c.size()));
  for (int a = 0; a < c.size(); ++a)
    for (int b = 0; b < c.size(); ++b)
      c.hom[a][b] = monotone_maps(c.obj_size[a], c.obj_size[b]);
  return c;
}

// Objects [0..n] (index i stands for [i], size i+1), morphisms the
// monotone maps preserving the top element.
inline FinCat delta_infty(int n) {
  FinCat c;
  for (int i = 0; i <= n; ++i) {
    c.obj_size.push_back(i + 1);
    c.labels.push_back("[" + std::to_string(i) + "]");
  }
  c.hom.assign(c.size(), std::vector<std::vector<Fn>>(c.size()));
  for (int a = 0; a < c.size(); ++a)
    for (int b = 0; b < c.size(); ++b)
      for (const auto& f : monotone_maps(c.obj_size[a], c.obj_size[b]))
        if (f.back() == c.obj_size[b] - 1) c.hom[a][b].push_back(f);
  return c;
}

// t : Delta_+ -> Delta_infty adds a new top element; iota forgets the
// marking.  Truncation bookkeeping: on the object [k] of Delta_+ (index
// k+1), t gives [k+1] of Delta_infty (index k+1 there as well).
struct TIotaAdjunction {
  int n;  // t is defined on Delta_+ objects [-1..n-1] so t lands in [0..n]

  // t on a morphism f : [k] -> [l] of Delta_+.
  Fn t_mor(const Fn& f, int l) const {
    Fn out = f;
    (void)n;
    out.push_back(l + 1);  // new top of [l+1] is the element l+1
    return out;
  }

  // unit at [k] in Delta_+: the inclusion [k] -> iota t [k] = [k+1].
  Fn unit(int k) const {
    Fn f(k + 1);
    for (int i = 0; i <= k; ++i) f[i] = i;
    return f;
  }

  // counit at [l] in Delta_infty: the collapse t iota [l] = [l+1] -> [l],
  // i -> min(i, l).
  Fn counit(int l) const {
    Fn f(l + 2);
    for (int i = 0; i <= l + 1; ++i) f[i] = std::min(i, l);
    return f;
  }

  // Adjunction bijection Hom_infty(t[k], [l]) ~ Hom_+([k], iota[l]):
  // forward g -> iota(g) o unit, backward f -> counit o t(f).
  Fn forward(const Fn& g, int k) const {
    return compose_fn(g, unit(k));
  }
  Fn backward(const Fn& f, int k, int l) const {
    return compose_fn(counit(l), t_mor(f, l));
  }
};

struct ConeObject {
  FinPoset base;
  FinPoset total;           // base plus one terminal cone point
  std::vector<int> incl;    // base element i -> total element
  int cone;                 // index of the cone point in total
};

inline ConeObject cone_of(const FinPoset& k) {
  int n = k.size();
  std::vector<std::vector<bool>> le(n + 1, std::vector<bool>(n + 1, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) le[a][b] = k.leq(a, b);
  for (int a = 0; a <= n; ++a) le[a][n] = true;
  ConeObject c;
  c.base = k;
  c.total = FinPoset(std::move(le));
  c.incl.resize(n);
  for (int a = 0; a < n; ++a) c.incl[a] = a;
  c.cone = n;
  return c;
}

// ---------------------------------------------------------------------
// Cube posets J_n.

// Literal construction: objects are the injective monotone maps
// a : [k] -> [n] (k = -1..n) of Delta_+, i.e. the faces of [n]; there is
// a morphism a -> b exactly when b factors through a in Delta_+
// (equivalently im(b) is a subset of im(a)).  Objects are returned as
// image bitmasks in the order they are enumerated.
struct SlicePoset {
  FinPoset poset;
  std::vector<std::uint32_t> image_mask;  // per element
};

inline SlicePoset j_slice_poset(int n) {
  std::vector<Fn> objs;
  for (int k = -1; k <= n; ++k)
    for (const auto& f : monotone_maps(k + 1, n + 1)) {
      bool inj = true;
      for (size_t i = 0; i + 1 < f.size(); ++i)
        if (f[i] == f[i + 1]) inj = false;
      if (inj) objs.push_back(f);
    }
  int m = static_cast<int>(objs.size());
  std::vector<std::vector<bool>> le(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      // morphism a -> b iff exists monotone h with objs[a] o h = objs[b]
      bool found = false;
      for (const auto& h : monotone_maps(static_cast<int>(objs[b].size()),
                                         static_cast<int>(objs[a].size())))
        if (compose_fn(objs[a], h) == objs[b]) {
          found = true;
          break;
        }
      le[a][b] = found;
    }
  SlicePoset out;
  out.poset = FinPoset(std::move(le));
  for (const auto& f : objs) {
    std::uint32_t mask = 0;
    for (int v : f) mask |= (1u << v);
    out.image_mask.push_back(mask);
  }
  return out;
}

inline std::string subset_label(std::uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
  return s + "}";
}

// Lattice form used downstream: element index = subset bitmask of
// {0..n}; S <= T iff T is a subset of S (reverse inclusion), so the empty
// set is the unique maximum.
inline FinPoset j_poset(int n) {
  int m = 1 << (n + 1);
  std::vector<std::vector<bool>> le(m, std::vector<bool>(m, false));
  std::vector<std::string> labels;
  for (int s = 0; s < m; ++s) {
    labels.push_back(subset_label(static_cast<std::uint32_t>(s)));
    for (int t = 0; t < m; ++t) le[s][t] = ((t & s) == t);
  }
  return FinPoset(std::move(le), std::move(labels));
}

// Subsets of {0..n} containing n, same order; element index = the lower n
// bits of the subset mask.
struct JMaxPoset {
  FinPoset poset;
  int n;
  std::uint32_t mask_of(int idx) const {
    return static_cast<std::uint32_t>(idx) | (1u << n);
  }
  int index_of(std::uint32_t mask) const {
    return static_cast<int>(mask & ~(1u << n));
  }
};

inline JMaxPoset j_max_poset(int n) {
  int m = 1 << n;
  std::vector<std::vector<bool>> le(m, std::vector<bool>(m, false));
  std::vector<std::string> labels;
  std::uint32_t top = 1u << n;
  for (int s = 0; s < m; ++s) {
    std::uint32_t ms = static_cast<std::uint32_t>(s) | top;
    labels.push_back(subset_label(ms));
    for (int t = 0; t < m; ++t) {
      std::uint32_t mt = static_cast<std::uint32_t>(t) | top;
      le[s][t] = ((mt & ms) == mt);
    }
  }
  return {FinPoset(std::move(le), std::move(labels)), n};
}

// For T a subset of S (bitmasks), the monotone injection
// [|T|-1] -> [|S|-1] giving the position of each element of T inside the
// sorted listing of S.
inline Fn subset_injection(std::uint32_t s, std::uint32_t t) {
  if ((t & s) != t) throw std::invalid_argument("not a subset");
  Fn out;
  int pos = 0;
  for (int i = 0; i < 32; ++i) {
    if (s & (1u << i)) {
      if (t & (1u << i)) out.push_back(pos);
      ++pos;
    }
  }
  return out;
}

// ---------------------------------------------------------------------
// Cone-functor families over a finite linear order and their
// Grothendieck construction.

struct ConeFunctorFamily {
  // Fiber j sits over element j of the linear order [0..fibers.size()-1].
  std::vector<ConeObject> fibers;
  // transitions[j] : fibers[j].total -> fibers[j+1].total
  std::vector<PosetMap> transitions;

  void validate() const {
    if (transitions.size() + 1 != fibers.size() && !fibers.empty() &&
        !(fibers.size() == 1 && transitions.empty()))
      throw std::invalid_argument("transition count mismatch");
    for (size_t j = 0; j < transitions.size(); ++j) {
      const auto& t = transitions[j];
      if (!t.monotone(fibers[j].total, fibers[j + 1].total))
        throw std::invalid_argument("transition not monotone");
      // cone point goes to the cone point, and nothing else does
      for (int x = 0; x < fibers[j].total.size(); ++x) {
        bool is_cone = (x == fibers[j].cone);
        if ((t(x) == fibers[j + 1].cone) != is_cone)
          throw std::invalid_argument(
              "transition violates the cone-point pullback condition");
      }
    }
  }

  // Composite transition fiber a -> fiber b, a <= b.
  PosetMap transition(int a, int b) const {
    PosetMap t;
    t.map.resize(fibers[a].total.size());
    for (size_t i = 0; i < t.map.size(); ++i) t.map[i] = static_cast<int>(i);
    for (int j = a; j < b; ++j) t.map = compose_fn(transitions[j].map, t.map);
    return t;
  }
};

struct GrothendieckPoset {
  FinPoset total;
  std::vector<std::pair<int, int>> elems;  // (j, x in fiber total)
  PosetMap p;                              // projection to the linear order
  std::vector<int> section;                // s(j) = index of (j, cone_j)
  std::vector<int> base_elems;             // indices with x != cone point
  FinPoset base_total;                     // induced subposet X_{F^x}

  int index_of(int j, int x) const {
    for (size_t i = 0; i < elems.size(); ++i)
      if (elems[i].first == j && elems[i].second == x)
        return static_cast<int>(i);
    throw std::out_of_range("no such element");
  }
};

inline GrothendieckPoset grothendieck(const ConeFunctorFamily& f) {
  f.validate();
  GrothendieckPoset g;
  int jn = static_cast<int>(f.fibers.size());
  for (int j = 0; j < jn; ++j)
    for (int x = 0; x < f.fibers[j].total.size(); ++x)
      g.elems.push_back({j, x});
  int m = static_cast<int>(g.elems.size());
  std::vector<std::vector<bool>> le(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      auto [ja, xa] = g.elems[i];
      auto [jb, xb] = g.elems[k];
      // hom is empty whenever ja > jb; otherwise compare after pushing
      // x along the composite transition
      le[i][k] = ja <= jb &&
                 f.fibers[jb].total.leq(f.transition(ja, jb)(xa), xb);
    }
  g.total = FinPoset(std::move(le));
  g.p.map.resize(m);
  for (int i = 0; i < m; ++i) g.p.map[i] = g.elems[i].first;
  g.section.resize(jn);
  for (int j = 0; j < jn; ++j) g.section[j] = g.index_of(j, f.fibers[j].cone);
  for (int i = 0; i < m; ++i)
    if (g.elems[i].second != f.fibers[g.elems[i].first].cone)
      g.base_elems.push_back(i);
  g.base_total = g.total.induced(g.base_elems);
  return g;
}

}  // namespace sph
