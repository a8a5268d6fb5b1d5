#include "doctest.h"
#include "sph/diagrams.hpp"
#include "sph/field.hpp"
#include "sph/gen.hpp"

using namespace sph;
using C = ChainComplex<Rat>;
using M = ChainMap<Rat>;

namespace {

Mat<Rat> dense(int rows, int cols, const std::vector<int>& vals) {
  Mat<Rat> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (vals[i * cols + j] != 0) m.set(i, j, Rat(vals[i * cols + j]));
  return m;
}

}  // namespace

TEST_CASE("random generators produce valid diagrams") {
  Rng rng(2026);
  for (int t = 0; t < 10; ++t) {
    auto c = random_complex<Rat>(rng, -1, 2);
    auto f = random_chain_map(rng, c, random_complex<Rat>(rng, -1, 2));
    CHECK(f.commutes());
  }
  for (const FinPoset& p :
       {FinPoset::chain(3), cube_index(2), FinPoset::antichain(2)}) {
    for (int t = 0; t < 5; ++t) {
      auto d = random_diagram<Rat>(rng, p, 0, 2);
      CHECK_NOTHROW(d.validate());
    }
  }
}

TEST_CASE("hocolim of a one-point diagram is the value") {
  Rng rng(7);
  auto c = random_complex<Rat>(rng, 0, 3);
  Diagram<Rat> d(FinPoset::chain(1), {c}, {}, false);
  CHECK(hocolim(d).complex == c);
}

TEST_CASE("hocolim over a span of constant k has H_0 = k") {
  // a <- c -> b: antichain {a, b} plus bottom c
  std::vector<std::vector<bool>> le = {
      {true, false, false}, {false, true, false}, {true, true, true}};
  FinPoset span(le);
  auto d = Diagram<Rat>::constant(span, C::point(0));
  auto h = hocolim(d).complex.homology();
  CHECK(h.size() == 1);
  CHECK(h.at(0) == 1);
}

TEST_CASE("augmentation to a terminal object is a quasi-isomorphism") {
  Rng rng(11);
  for (const FinPoset& p : {FinPoset::chain(3), cube_index(2)}) {
    REQUIRE(p.terminal().has_value());
    int t = *p.terminal();
    for (int trial = 0; trial < 5; ++trial) {
      auto d = random_diagram<Rat>(rng, p, 0, 2);
      auto h = hocolim(d);
      std::vector<M> phi;
      for (int x = 0; x < p.size(); ++x) phi.push_back(d.edge(x, t));
      auto aug = augmentation(h, d, d.value(t), phi);
      CHECK(is_quasi_iso(aug));
    }
  }
}

TEST_CASE("hocolim is functorial in the diagram") {
  Rng rng(13);
  FinPoset p = FinPoset::chain(2);
  auto d = random_diagram<Rat>(rng, p, 0, 2);
  auto id = DiagMap<Rat>::identity(d);
  auto h = hocolim(d);
  CHECK(hocolim_map(h, h, id) == M::identity(h.complex));
}

TEST_CASE("pushforward along a poset inclusion is a chain map") {
  Rng rng(17);
  FinPoset p = FinPoset::chain(3);
  auto d = random_diagram<Rat>(rng, p, 0, 2);
  // include the bottom 2-chain
  FinPoset q = FinPoset::chain(2);
  PosetMap g{{0, 1}};
  auto dq = restrict(d, g, q);
  auto push = hocolim_pushforward(hocolim(dq), hocolim(d), dq, g);
  CHECK(push.commutes());

  // a non-injective map kills degenerate chains but stays a chain map
  PosetMap collapse{{0, 0, 1}};
  FinPoset q2 = FinPoset::chain(2);
  auto d2 = random_diagram<Rat>(rng, q2, 0, 2);
  auto dp = restrict(d2, collapse, p);
  auto push2 = hocolim_pushforward(hocolim(dp), hocolim(d2), dp, collapse);
  CHECK(push2.commutes());
}

TEST_CASE("holim dualizes hocolim") {
  Rng rng(19);
  FinPoset p = FinPoset::chain(2);
  auto d = random_diagram<Rat>(rng, p, 0, 2);
  // holim over a poset with an initial object is the value there
  auto hl = holim(d);
  auto cmp = d.value(0);
  CHECK(hl.homology() == cmp.homology());
  // coaugmentation from the initial value is a quasi-iso
  std::vector<M> psi;
  for (int x = 0; x < p.size(); ++x) psi.push_back(d.edge(0, x));
  auto co = coaugmentation(d, d.value(0), psi);
  CHECK(co.commutes());
  CHECK(is_quasi_iso(co));
}

TEST_CASE("kan extension along the identity returns the diagram") {
  Rng rng(23);
  FinPoset p = FinPoset::chain(2);
  auto d = random_diagram<Rat>(rng, p, 0, 2);
  PosetMap id{{0, 1}};
  auto e = kan_left(d, id, p, p);
  for (int x = 0; x < p.size(); ++x)
    CHECK(e.value(x).homology() == d.value(x).homology());
  auto unit = kan_left_unit(d, e, id, p, p);
  CHECK(unit.natural());
  for (int x = 0; x < p.size(); ++x) CHECK(is_quasi_iso(unit.comps[x]));
}

TEST_CASE("kan_left along point -> [1] at 0") {
  Rng rng(29);
  auto c = random_complex<Rat>(rng, 0, 2);
  FinPoset pt = FinPoset::chain(1), arr = FinPoset::chain(2);
  Diagram<Rat> d(pt, {c}, {}, false);
  PosetMap f{{0}};
  auto e = kan_left(d, f, pt, arr);
  CHECK(e.value(0) == c);
  CHECK(e.value(1) == c);
  CHECK(e.edge(0, 1) == M::identity(c));
  // unit at the point is an isomorphism (fully faithful inclusion)
  auto unit = kan_left_unit(d, e, f, pt, arr);
  CHECK(is_quasi_iso(unit.comps[0]));
  // counit of the adjunction at a random target diagram
  auto y = random_diagram<Rat>(rng, arr, 0, 2);
  auto ct = kan_left_counit(y, kan_left(restrict(y, f, pt), f, pt, arr), f,
                            pt, arr);
  CHECK(ct.natural());
}

TEST_CASE("kan_left and kan_right along discrete pair -> point") {
  Rng rng(31);
  FinPoset two = FinPoset::antichain(2), pt = FinPoset::chain(1);
  auto d = random_diagram<Rat>(rng, two, 0, 2);
  PosetMap f{{0, 0}};
  auto l = kan_left(d, f, two, pt);
  auto r = kan_right(d, f, two, pt);
  auto ds = direct_sum(d.value(0), d.value(1));
  CHECK(l.value(0).homology() == ds.homology());
  CHECK(r.value(0).homology() == ds.homology());
}

TEST_CASE("kan triangle identities hold up to homotopy") {
  Rng rng(37);
  FinPoset pt = FinPoset::chain(1), arr = FinPoset::chain(2);
  PosetMap f{{0}};
  auto x = random_diagram<Rat>(rng, pt, 0, 2);
  auto lx = kan_left(x, f, pt, arr);
  auto unit = kan_left_unit(x, lx, f, pt, arr);
  auto counit_at_lx = kan_left_counit(lx, kan_left(restrict(lx, f, pt), f, pt, arr),
                                      f, pt, arr);
  // (eps L)(L eta) = id_L: evaluate the composite at each object of [1].
  // L eta is the hocolim-functoriality image of eta over each slice; for
  // this inclusion the slices are points and [1], so check at object 0
  // where everything is the identity slice:
  auto composite0 =
      counit_at_lx.comps[0].compose_after(unit.comps[0]);
  auto diff0 = composite0 - M::identity(x.value(0));
  CHECK(null_homotopy(diff0).has_value());
  // (R eps)(eta R): restriction of the counit composed with the unit of
  // the restriction, at a random [1]-diagram
  auto y = random_diagram<Rat>(rng, arr, 0, 2);
  auto ry = restrict(y, f, pt);
  auto ly = kan_left(ry, f, pt, arr);
  auto u2 = kan_left_unit(ry, ly, f, pt, arr);
  auto c2 = kan_left_counit(y, ly, f, pt, arr);
  auto comp = c2.comps[0].compose_after(u2.comps[0]);
  auto diff = comp - M::identity(ry.value(0));
  CHECK(null_homotopy(diff).has_value());
}

TEST_CASE("totcof basics") {
  Rng rng(41);
  // empty base: totcof = value at the cone point
  ConeObject c0 = cone_of(FinPoset(std::vector<std::vector<bool>>{}));
  auto v = random_complex<Rat>(rng, 0, 2);
  Diagram<Rat> d0(c0.total, {v}, {}, false);
  CHECK(totcof(d0, c0).complex == v);

  // one-point base: totcof = cone(f)
  ConeObject c1 = cone_of(FinPoset::chain(1));
  auto a = random_complex<Rat>(rng, 0, 2);
  auto b = random_complex<Rat>(rng, 0, 2);
  auto f = random_chain_map(rng, a, b);
  Diagram<Rat> d1(c1.total, {a, b}, {{{0, 1}, f}}, false);
  auto t1 = totcof(d1, c1);
  CHECK(t1.complex == cone(f).complex);
  CHECK(t1.from_cone_value.commutes());

  // constant identity square: acyclic
  auto sq = Diagram<Rat>::constant(cube_index(2), C::point(0));
  ConeObject c2 = cube_cone(2);
  CHECK(totcof(sq, c2).complex.is_acyclic());
}

TEST_CASE("cube oracle agrees with totcof") {
  Rng rng(43);
  for (int m = 1; m <= 3; ++m) {
    for (int t = 0; t < (m == 3 ? 4 : 12); ++t) {
      auto d = random_diagram<Rat>(rng, cube_index(m), 0, 2);
      auto tc = totcof(d, cube_cone(m)).complex;
      auto oracle = totcof_cube_oracle(d, m);
      CHECK(tc.homology() == oracle.homology());
    }
  }
}

TEST_CASE("cocartesian squares have acyclic total cofiber") {
  Rng rng(47);
  // square A -> A+B, A -> A+C, A+B -> A+B+C <- A+C with inclusions:
  // the strict pushout of injective maps, hence a homotopy pushout
  auto a = random_complex<Rat>(rng, 0, 2);
  auto b = random_complex<Rat>(rng, 0, 2);
  auto c = random_complex<Rat>(rng, 0, 2);
  auto ab = direct_sum(a, b);
  auto ac = direct_sum(a, c);
  auto abc = direct_sum(ab, c);
  auto incl = [&](const C& src, const C& tgt, int roff_deg_independent) {
    std::map<int, Mat<Rat>> comps;
    for (int n = tgt.lo(); n <= tgt.hi(); ++n) {
      Mat<Rat> m(tgt.dim(n), src.dim(n));
      m.place(Mat<Rat>::identity(src.dim(n)), 0, 0);
      (void)roff_deg_independent;
      if (!m.is_zero()) comps[n] = m;
    }
    return M(tgt.empty_support() ? tgt : src, tgt, std::move(comps));
  };
  // A+C -> A+B+C must send C past the B block; build it explicitly
  std::map<int, Mat<Rat>> acm;
  for (int n = abc.lo(); n <= abc.hi(); ++n) {
    Mat<Rat> m(abc.dim(n), ac.dim(n));
    m.place(Mat<Rat>::identity(a.dim(n)), 0, 0);
    m.place(Mat<Rat>::identity(c.dim(n)), a.dim(n) + b.dim(n), a.dim(n));
    if (!m.is_zero()) acm[n] = m;
  }
  M iac(ac, abc, std::move(acm));
  Diagram<Rat> d(cube_index(2), {a, ab, ac, abc},
                 {{{0, 1}, incl(a, ab, 0)},
                  {{0, 2}, incl(a, ac, 0)},
                  {{1, 3}, incl(ab, abc, 0)},
                  {{2, 3}, iac},
                  {{0, 3}, incl(a, abc, 0)}},
                 true);
  CHECK(totcof(d, cube_cone(2)).complex.is_acyclic());
}

TEST_CASE("lax diagram maps: solver finds edge witnesses") {
  // source: interval 0 -> 0 with identity; target: same; component maps
  // chosen so the square misses by a boundary
  C iv(0, {1, 1}, {dense(1, 1, {1})});
  FinPoset arr = FinPoset::chain(2);
  Diagram<Rat> d(arr, {iv, iv}, {{{0, 1}, M::identity(iv)}}, false);
  // comps: identity at 0, zero at 1 -- defect is the identity of an
  // acyclic complex, hence null-homotopic
  auto lax = make_lax_map<Rat>(d, d, {M::identity(iv), M::zero(iv, iv)});
  REQUIRE(lax.has_value());
  CHECK(lax->natural());
  CHECK_FALSE(lax->is_strict());

  // with a point instead: no witness exists
  C kpt = C::point(0);
  Diagram<Rat> dp(arr, {kpt, kpt}, {{{0, 1}, M::identity(kpt)}}, false);
  auto bad = make_lax_map<Rat>(dp, dp, {M::identity(kpt), M::zero(kpt, kpt)});
  CHECK_FALSE(bad.has_value());
}
