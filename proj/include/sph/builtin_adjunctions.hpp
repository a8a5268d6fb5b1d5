#pragma once

// The catalog of concrete adjunctions: gr -| triv between filtered and
// graded objects on a window (full or half-bounded), its shifted partner
// triv[-1]<1> -| gr, and Kan-extension adjunctions along monotone maps of
// chains.  Units, counits and the twist/cotwist comparison maps are given
// by explicit block matrices and then re-verified by the LMap validators.

#include "sph/adjcalc.hpp"

namespace sph {

namespace detail_adj {

// Assemble a chain map from per-degree block rows: f(n) returns the
// component matrix at degree n (possibly zero-sized).
template <class K>
ChainMap<K> from_blocks(const ChainComplex<K>& src, const ChainComplex<K>& tgt,
                        const std::function<Mat<K>(int)>& f) {
  std::map<int, Mat<K>> comps;
  int lo = std::min(src.lo(), tgt.lo());
  int hi = std::max(src.hi(), tgt.hi());
  for (int n = lo; n <= hi; ++n) {
    Mat<K> m = f(n);
    if (!m.is_zero()) comps[n] = m;
  }
  return ChainMap<K>(src, tgt, std::move(comps));
}

}  // namespace detail_adj

// gr -| triv.  Unit at level p is the cone inclusion
//   X_p -> cone(f_{p-1}) = X_p (+) X_{p-1}[1],
// with edge witness (0, -id); counit at grading p is the projection
//   cone(0) = Y_p (+) Y_{p-1}[1] -> Y_p.
// Twist candidate T_C ~ <-1>[1] (inverse <1>[-1]); likewise the cotwist.
template <class K>
Adjunction<K> grtriv_adjunction(Window w) {
  w.validate();
  Adjunction<K> a;
  a.name = w.lo == 0 ? "gr-triv-halfbounded" : "gr-triv";
  a.w = w;
  a.L = FTerm::gr();
  a.R = FTerm::triv();
  a.has_candidates = true;
  a.tc_inv_is = 1;
  a.tc_inv_ds = -1;
  a.td_inv_is = 1;
  a.td_inv_ds = -1;

  a.unit = [](const Diagram<K>& x) {
    Diagram<K> rl = triv_ob(gr_ob(x));
    int n = x.index().size();
    LMap<K> u{x, rl, {}, {}};
    for (int p = 0; p < n; ++p) {
      const auto& xp = x.value(p);
      const auto& cp = rl.value(p);
      u.comps.push_back(detail_adj::from_blocks<K>(xp, cp, [&](int d) {
        Mat<K> m = Mat<K>::zero(cp.dim(d), xp.dim(d));
        m.place(Mat<K>::identity(xp.dim(d)), 0, 0);
        return m;
      }));
    }
    u.wit.resize(n - 1);
    for (int p = 0; p + 1 < n; ++p) {
      // witness X_{p,d} -> cone(f_p)_{d+1} = X_{p+1,d+1} (+) X_{p,d},
      // value (0, -id)
      const auto& xp = x.value(p);
      const auto& cq = rl.value(p + 1);
      Homotopy<K> h;
      for (int d = xp.lo(); d <= xp.hi(); ++d) {
        if (xp.dim(d) == 0) continue;
        Mat<K> m = Mat<K>::zero(cq.dim(d + 1), xp.dim(d));
        m.place(Mat<K>::identity(xp.dim(d)).scaled(-K::one()),
                x.value(p + 1).dim(d + 1), 0);
        if (!m.is_zero()) h.comps[d] = m;
      }
      u.wit[p] = std::move(h);
    }
    u.validate();
    return u;
  };

  a.counit = [](const Diagram<K>& y) {
    Diagram<K> lr = gr_ob(triv_ob(y));
    int n = y.index().size();
    LMap<K> e{lr, y, {}, {}};
    for (int p = 0; p < n; ++p) {
      const auto& cp = lr.value(p);
      const auto& yp = y.value(p);
      e.comps.push_back(detail_adj::from_blocks<K>(cp, yp, [&](int d) {
        Mat<K> m = Mat<K>::zero(yp.dim(d), cp.dim(d));
        m.place(Mat<K>::identity(yp.dim(d)), 0, 0);
        return m;
      }));
    }
    e.validate();
    return e;
  };

  // T_C X at level p is cone(eta_p), with blocks
  //   [ X_p | X_{p-1}[1] | X_p[1] ];
  // project onto the middle block, landing in (X<-1>[1])_p.
  a.twist_comp = [a](const Diagram<K>& x) {
    LConeData<K> c = cone_lmap(a.unit(x));
    Diagram<K> tgt = diagram_index_shift(diagram_degree_shift(x, 1), -1);
    int n = x.index().size();
    std::vector<ChainMap<K>> comps;
    for (int p = 0; p < n; ++p) {
      const auto& cp = c.complex.value(p);
      const auto& tp = tgt.value(p);
      comps.push_back(detail_adj::from_blocks<K>(cp, tp, [&](int d) {
        Mat<K> m = Mat<K>::zero(tp.dim(d), cp.dim(d));
        if (p > 0)
          m.place(Mat<K>::identity(x.value(p - 1).dim(d - 1)),
                  0, x.value(p).dim(d));
        return m;
      }));
    }
    auto out = make_lmap(c.complex, tgt, std::move(comps));
    if (!out) throw std::logic_error("twist comparison witnesses unsolvable");
    return *out;
  };

  // T_D Y at grading p is fiber(eps_p), blocks
  //   [ Y_p[-1] | Y_p | Y_{p-1}[1] ];
  // project onto the last block, landing in (Y<-1>[1])_p.
  a.cotwist_comp = [a](const Diagram<K>& y) {
    LFiberData<K> f = fiber_lmap(a.counit(y));
    Diagram<K> tgt = diagram_index_shift(diagram_degree_shift(y, 1), -1);
    int n = y.index().size();
    LMap<K> cmp{f.complex, tgt, {}, {}};
    for (int p = 0; p < n; ++p) {
      const auto& fp = f.complex.value(p);
      const auto& tp = tgt.value(p);
      cmp.comps.push_back(detail_adj::from_blocks<K>(fp, tp, [&](int d) {
        Mat<K> m = Mat<K>::zero(tp.dim(d), fp.dim(d));
        if (p > 0)
          m.place(Mat<K>::identity(y.value(p - 1).dim(d - 1)), 0,
                  y.value(p).dim(d + 1) + y.value(p).dim(d));
        return m;
      }));
    }
    cmp.validate();  // antichain: componentwise
    return cmp;
  };

  return a;
}

// triv[-1]<1> -| gr.  The left adjoint sends a graded Y to the filtered
// object with value Y_{p+1}[-1] at level p and zero structure maps.
// Unit at grading p: Y_p -> Y_{p+1}[-1] (+) Y_p, inclusion of the second
// block.  Counit at level p: cone(f_p)[-1] = X_{p+1}[-1] (+) X_p -> X_p,
// projection onto the second block, edge witness (-id, 0).
// Twist and cotwist candidates ~ <1>[-1] (inverse <-1>[1]).
template <class K>
Adjunction<K> trivshiftgr_adjunction(Window w) {
  w.validate();
  Adjunction<K> a;
  a.name = w.lo == 0 ? "shifted-triv-gr-halfbounded" : "shifted-triv-gr";
  a.w = w;
  a.L = FTerm::compose(
      FTerm::index_shift(1),
      FTerm::compose(FTerm::degree_shift(-1), FTerm::triv()));
  a.R = FTerm::gr();
  a.has_candidates = true;
  a.tc_inv_is = -1;
  a.tc_inv_ds = 1;
  a.td_inv_is = -1;
  a.td_inv_ds = 1;

  auto l_ob = [L = a.L](const Diagram<K>& y) { return apply_ob<K>(L, y); };

  a.unit = [l_ob](const Diagram<K>& y) {
    Diagram<K> rl = gr_ob(l_ob(y));
    int n = y.index().size();
    LMap<K> u{y, rl, {}, {}};
    for (int p = 0; p < n; ++p) {
      const auto& yp = y.value(p);
      const auto& cp = rl.value(p);
      u.comps.push_back(detail_adj::from_blocks<K>(yp, cp, [&](int d) {
        Mat<K> m = Mat<K>::zero(cp.dim(d), yp.dim(d));
        if (p > 0)
          m.place(Mat<K>::identity(yp.dim(d)),
                  p + 1 < n ? y.value(p + 1).dim(d + 1) : 0, 0);
        return m;
      }));
    }
    u.validate();  // antichain
    return u;
  };

  a.counit = [l_ob](const Diagram<K>& x) {
    Diagram<K> lr = l_ob(gr_ob(x));
    int n = x.index().size();
    LMap<K> e{lr, x, {}, {}};
    for (int p = 0; p < n; ++p) {
      const auto& cp = lr.value(p);
      const auto& xp = x.value(p);
      e.comps.push_back(detail_adj::from_blocks<K>(cp, xp, [&](int d) {
        Mat<K> m = Mat<K>::zero(xp.dim(d), cp.dim(d));
        if (p + 1 < n)
          m.place(Mat<K>::identity(xp.dim(d)), 0,
                  x.value(p + 1).dim(d + 1));
        return m;
      }));
    }
    e.wit.resize(n - 1);
    for (int p = 0; p + 1 < n; ++p) {
      // witness cone(f_p)[-1]_d = X_{p+1,d+1} (+) X_{p,d} -> X_{p+1,d+1},
      // value (-id, 0)
      const auto& cp = lr.value(p);
      const auto& xq = x.value(p + 1);
      Homotopy<K> h;
      for (int d = cp.lo(); d <= cp.hi(); ++d) {
        if (cp.dim(d) == 0 || xq.dim(d + 1) == 0) continue;
        Mat<K> m = Mat<K>::zero(xq.dim(d + 1), cp.dim(d));
        m.place(Mat<K>::identity(xq.dim(d + 1)).scaled(-K::one()), 0, 0);
        if (!m.is_zero()) h.comps[d] = m;
      }
      e.wit[p] = std::move(h);
    }
    e.validate();
    return e;
  };

  // T_C Y at grading p is cone(eta_p), blocks
  //   [ Y_{p+1}[-1] | Y_p | Y_p[1] ];
  // project onto the first block, landing in (Y<1>[-1])_p.
  a.twist_comp = [a](const Diagram<K>& y) {
    LConeData<K> c = cone_lmap(a.unit(y));
    Diagram<K> tgt = diagram_index_shift(diagram_degree_shift(y, -1), 1);
    int n = y.index().size();
    LMap<K> cmp{c.complex, tgt, {}, {}};
    for (int p = 0; p < n; ++p) {
      const auto& cp = c.complex.value(p);
      const auto& tp = tgt.value(p);
      cmp.comps.push_back(detail_adj::from_blocks<K>(cp, tp, [&](int d) {
        Mat<K> m = Mat<K>::zero(tp.dim(d), cp.dim(d));
        if (p + 1 < n)
          m.place(Mat<K>::identity(y.value(p + 1).dim(d + 1)), 0, 0);
        return m;
      }));
    }
    cmp.validate();  // antichain
    return cmp;
  };

  // T_D X at level p is fiber(eps_p), blocks
  //   [ X_p[-1] | X_{p+1}[-1] | X_p ];
  // comparison (a, b, c) |-> b - f_p a, landing in (X<1>[-1])_p.
  a.cotwist_comp = [a](const Diagram<K>& x) {
    LFiberData<K> f = fiber_lmap(a.counit(x));
    Diagram<K> tgt = diagram_index_shift(diagram_degree_shift(x, -1), 1);
    int n = x.index().size();
    std::vector<ChainMap<K>> comps;
    for (int p = 0; p < n; ++p) {
      const auto& fp = f.complex.value(p);
      const auto& tp = tgt.value(p);
      comps.push_back(detail_adj::from_blocks<K>(fp, tp, [&](int d) {
        Mat<K> m = Mat<K>::zero(tp.dim(d), fp.dim(d));
        if (p + 1 < n) {
          int w1 = x.value(p).dim(d + 1);
          Mat<K> fpm = x.edge(p, p + 1).at(d + 1);
          m.place(fpm.scaled(-K::one()), 0, 0);
          m.place(Mat<K>::identity(x.value(p + 1).dim(d + 1)), 0, w1);
        }
        return m;
      }));
    }
    auto out = make_lmap(f.complex, tgt, std::move(comps));
    if (!out) throw std::logic_error("cotwist comparison witnesses unsolvable");
    return *out;
  };

  return a;
}

// Kan-extension adjunction kan_left(f) -| restrict(f) for a monotone map
// f : Q -> P of chains.
template <class K>
Adjunction<K> kan_adjunction(const std::string& name, PosetMap f, FinPoset q,
                             FinPoset p) {
  Adjunction<K> a;
  a.name = name;
  a.w = Window{0, p.size() - 1, 0};
  a.L = FTerm::kan_left_along(f, q, p);
  a.R = FTerm::restrict_along(f, q, p);
  a.unit = [f, q, p, L = a.L](const Diagram<K>& x) {
    Diagram<K> ext = apply_ob<K>(L, x);
    DiagMap<K> u = kan_left_unit(x, ext, f, q, p);
    LMap<K> out{u.src, u.tgt, u.comps, {}};
    if (!u.lax.empty()) {
      out.wit.resize(q.size() - 1);
      for (int i = 0; i + 1 < q.size(); ++i) {
        auto it = u.lax.find({i, i + 1});
        if (it != u.lax.end()) out.wit[i] = it->second;
      }
    }
    out.validate();
    return out;
  };
  a.counit = [f, q, p, L = a.L](const Diagram<K>& y) {
    Diagram<K> ext = apply_ob<K>(L, restrict(y, f, q));
    DiagMap<K> c = kan_left_counit(y, ext, f, q, p);
    LMap<K> out{c.src, c.tgt, c.comps, {}};
    if (!c.lax.empty()) {
      out.wit.resize(p.size() - 1);
      for (int i = 0; i + 1 < p.size(); ++i) {
        auto it = c.lax.find({i, i + 1});
        if (it != c.lax.end()) out.wit[i] = it->second;
      }
    }
    out.validate();
    return out;
  };
  return a;
}

// The five Kan-extension adjunctions used by the verification corpus:
// monotone maps between chains of size <= 6.
template <class K>
std::vector<Adjunction<K>> kan_corpus() {
  std::vector<Adjunction<K>> out;
  out.push_back(kan_adjunction<K>("kan-point-into-pair", PosetMap{{0}},
                                  FinPoset::chain(1), FinPoset::chain(2)));
  out.push_back(kan_adjunction<K>("kan-bottom-of-three", PosetMap{{0, 1}},
                                  FinPoset::chain(2), FinPoset::chain(3)));
  out.push_back(kan_adjunction<K>("kan-top-of-four", PosetMap{{2, 3}},
                                  FinPoset::chain(2), FinPoset::chain(4)));
  out.push_back(kan_adjunction<K>("kan-spread-in-five", PosetMap{{0, 2, 4}},
                                  FinPoset::chain(3), FinPoset::chain(5)));
  out.push_back(kan_adjunction<K>("kan-collapse-six", PosetMap{{0, 0, 1, 1, 2, 2}},
                                  FinPoset::chain(6), FinPoset::chain(3)));
  return out;
}

}  // namespace sph
