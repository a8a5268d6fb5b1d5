#include <doctest.h>

#include "sph/builtin_adjunctions.hpp"
#include "sph/field.hpp"

using namespace sph;

namespace {

const Window kW{0, 6, 2};

std::vector<Diagram<Rat>> small_filtered() {
  std::vector<Diagram<Rat>> out;
  out.push_back(filtered_skyscraper(kW.size(), 3, ChainComplex<Rat>::point(0)));
  out.push_back(
      filtered_interval(kW.size(), 2, 4, ChainComplex<Rat>::point(1)));
  Rng rng(7);
  out.push_back(random_filtered<Rat>(rng, kW, 0, 1, 1));
  return out;
}

std::vector<Diagram<Rat>> small_graded() {
  std::vector<Diagram<Rat>> out;
  out.push_back(graded_skyscraper(kW.size(), 3, ChainComplex<Rat>::point(0)));
  out.push_back(graded_skyscraper(kW.size(), 2, ChainComplex<Rat>::point(-1)));
  Rng rng(9);
  out.push_back(random_graded<Rat>(rng, kW, 0, 1, 1));
  return out;
}

}  // namespace

TEST_CASE("functor term evaluation matches the direct constructions") {
  Rng rng(3);
  Diagram<Rat> x = random_filtered<Rat>(rng, kW, 0, 1, 1);
  CHECK(apply_ob<Rat>(FTerm::gr(), x) == gr_ob(x));
  CHECK(apply_ob<Rat>(FTerm::identity(), x) == x);
  FTerm c = FTerm::compose(FTerm::degree_shift(1), FTerm::degree_shift(-1));
  CHECK(apply_ob<Rat>(c, x) == x);
  CHECK(c.sexpr() == "(compose (deg-shift 1) (deg-shift -1))");
}

TEST_CASE("restrict_mor keeps witnesses coherent along composed edges") {
  ChainComplex<Rat> acyc(0, {1, 1}, {Mat<Rat>::identity(1)});
  Diagram<Rat> src = filtered_skyscraper(5, 2, acyc);
  Diagram<Rat> tgt = zero_structure_ob(src);
  std::vector<ChainMap<Rat>> comps;
  for (int i = 0; i < 5; ++i)
    comps.push_back(ChainMap<Rat>::identity(src.value(i)));
  auto m = make_lmap(src, tgt, comps);
  REQUIRE(m.has_value());
  // restrict along 0 < 2 < 4: the path-composed witnesses must validate
  LMap<Rat> r = restrict_mor(*m, PosetMap{{0, 2, 4}}, FinPoset::chain(3));
  r.validate();
}

TEST_CASE("built-in units and counits validate on the corpus") {
  Adjunction<Rat> gt = grtriv_adjunction<Rat>(kW);
  Adjunction<Rat> ts = trivshiftgr_adjunction<Rat>(kW);
  for (const auto& x : small_filtered()) {
    gt.unit(x).validate();
    ts.counit(x).validate();
  }
  for (const auto& y : small_graded()) {
    gt.counit(y).validate();
    ts.unit(y).validate();
  }
}

TEST_CASE("built-in adjunctions satisfy the triangle identities") {
  Adjunction<Rat> gt = grtriv_adjunction<Rat>(kW);
  Adjunction<Rat> ts = trivshiftgr_adjunction<Rat>(kW);
  auto xs = small_filtered();
  auto ys = small_graded();
  CHECK(triangle_identities_ok(gt, xs[0], ys[0]));
  CHECK(triangle_identities_ok(gt, xs[2], ys[2]));
  CHECK(triangle_identities_ok(ts, ys[0], xs[0]));
  CHECK(triangle_identities_ok(ts, ys[2], xs[2]));
}

TEST_CASE("twist of gr-triv is the shift <-1>[1] via the comparison map") {
  Adjunction<Rat> gt = grtriv_adjunction<Rat>(kW);
  for (const auto& x : small_filtered()) {
    LMap<Rat> cmp = gt.twist_comp(x);
    cmp.validate();
    CHECK(levelwise_quasi_iso_interior(cmp, kW));
  }
  for (const auto& y : small_graded()) {
    LMap<Rat> cmp = gt.cotwist_comp(y);
    CHECK(levelwise_quasi_iso_interior(cmp, kW));
  }
}

TEST_CASE("twist of the shifted adjunction is <1>[-1]") {
  Adjunction<Rat> ts = trivshiftgr_adjunction<Rat>(kW);
  for (const auto& y : small_graded()) {
    LMap<Rat> cmp = ts.twist_comp(y);
    CHECK(levelwise_quasi_iso_interior(cmp, kW));
  }
  for (const auto& x : small_filtered()) {
    LMap<Rat> cmp = ts.cotwist_comp(x);
    cmp.validate();
    CHECK(levelwise_quasi_iso_interior(cmp, kW));
  }
}

TEST_CASE("sphericality certificates for the built-ins") {
  Adjunction<Rat> gt = grtriv_adjunction<Rat>(kW);
  auto cert = certify_spherical(gt, small_filtered(), small_graded());
  CHECK(cert.pass);
  Adjunction<Rat> ts = trivshiftgr_adjunction<Rat>(kW);
  auto cert2 = certify_spherical(ts, small_graded(), small_filtered());
  CHECK(cert2.pass);
  // a Kan adjunction carries no candidates and is rejected
  Adjunction<Rat> kan = kan_corpus<Rat>()[0];
  CHECK(!certify_spherical(kan, {}, {}).pass);
}

TEST_CASE("intertwiners are levelwise quasi-isos for the built-ins") {
  Adjunction<Rat> gt = grtriv_adjunction<Rat>(kW);
  TwistData<Rat> t = twist_cotwist(gt);
  for (const auto& x : small_filtered())
    CHECK(levelwise_quasi_iso_interior(alpha(gt, t, x), kW));
  for (const auto& y : small_graded())
    CHECK(levelwise_quasi_iso_interior(beta(gt, t, y), kW));
  Adjunction<Rat> ts = trivshiftgr_adjunction<Rat>(kW);
  TwistData<Rat> t2 = twist_cotwist(ts);
  for (const auto& y : small_graded())
    CHECK(levelwise_quasi_iso_interior(alpha(ts, t2, y), kW));
  for (const auto& x : small_filtered())
    CHECK(levelwise_quasi_iso_interior(beta(ts, t2, x), kW));
}

TEST_CASE("Kan adjunctions: units, counits, intertwiners") {
  for (auto& a : kan_corpus<Rat>()) {
    Rng rng(17);
    Diagram<Rat> x = random_diagram<Rat>(rng, a.L.q, 0, 1, 1);
    Diagram<Rat> y = random_diagram<Rat>(rng, a.L.p, 0, 1, 1);
    a.unit(x).validate();
    a.counit(y).validate();
    CHECK(a.counit(y).is_strict());
    TwistData<Rat> t = twist_cotwist(a);
    CHECK(levelwise_quasi_iso(alpha(a, t, x)));
    CHECK(levelwise_quasi_iso(beta(a, t, y)));
  }
}

TEST_CASE("morphism-of-adjunctions composite for a small Kan adjunction") {
  Adjunction<Rat> a = kan_corpus<Rat>()[1];  // chain(2) into chain(3)
  Rng rng(19);
  Diagram<Rat> y = random_diagram<Rat>(rng, a.L.p, 0, 1, 1);
  CHECK(tmorphadjs_composite(a, y).pass);
}

TEST_CASE("morphism-of-adjunctions composite is a quasi-iso") {
  Adjunction<Rat> gt = grtriv_adjunction<Rat>(kW);
  CHECK(tmorphadjs_composite(gt, small_graded()[0]).pass);
  CHECK(tmorphadjs_composite(gt, small_graded()[2]).pass);
  Adjunction<Rat> ts = trivshiftgr_adjunction<Rat>(kW);
  CHECK(tmorphadjs_composite(ts, small_filtered()[0]).pass);
}

TEST_CASE("mutated unit breaks the composite (non-vacuity)") {
  Adjunction<Rat> gt = grtriv_adjunction<Rat>(kW);
  Adjunction<Rat> bad = mutate_unit(gt);
  CHECK(!tmorphadjs_composite(bad, small_graded()[0]).pass);
}

TEST_CASE("stage-wise sphericalization agrees with the shifted window") {
  Window half{0, 6, 1};
  Adjunction<Rat> gt = grtriv_adjunction<Rat>(half);
  auto ys = std::vector<Diagram<Rat>>{
      graded_skyscraper(half.size(), 3, ChainComplex<Rat>::point(0))};
  for (int k = 1; k <= 2; ++k) {
    SphericalizeStage<Rat> st = sphericalize_stage(gt, k, ys);
    for (bool ok : st.connecting_adjointable) CHECK(ok);
    Diagram<Rat> x =
        filtered_skyscraper(half.size(), 3, ChainComplex<Rat>::point(0));
    LMap<Rat> cmp = st.comparison(x);
    // safe positions: interior shifted k steps away from the low edge
    Window safe{half.lo + k + half.margin, half.hi - half.margin, 0};
    for (int i = 0; i < half.size(); ++i) {
      int lvl = half.level(i);
      if (lvl < safe.lo || lvl > safe.hi) continue;
      CHECK(is_quasi_iso(cmp.comps[i]));
    }
    // the stage left adjoint value agrees with gr of the shifted object
    Diagram<Rat> lhs = st.stage_L_ob(x);
    Diagram<Rat> rhs = gr_ob(shift_ob(x, -k, k));
    for (int i = 0; i < half.size(); ++i) {
      int lvl = half.level(i);
      if (lvl < safe.lo || lvl > safe.hi) continue;
      CHECK(lhs.value(i).homology() == rhs.value(i).homology());
    }
  }
}

TEST_CASE("fourier transform satisfies the triangle identities") {
  Adjunction<Rat> gt = grtriv_adjunction<Rat>(kW);
  auto cert = certify_spherical(gt, small_filtered(), small_graded());
  REQUIRE(cert.pass);
  FourierData<Rat> f = fourier(gt, cert);
  // F's left adjoint starts on the graded side
  CHECK(fourier_triangles_ok(f, small_graded()[0], small_filtered()[0], kW));
  CHECK(fourier_triangles_ok(f, small_graded()[2], small_filtered()[2], kW));
  Adjunction<Rat> ts = trivshiftgr_adjunction<Rat>(kW);
  auto cert2 = certify_spherical(ts, small_graded(), small_filtered());
  REQUIRE(cert2.pass);
  FourierData<Rat> f2 = fourier(ts, cert2);
  CHECK(fourier_triangles_ok(f2, small_filtered()[0], small_graded()[0], kW));
}

TEST_CASE("fourier round trip recovers the original adjunction") {
  Adjunction<Rat> gt = grtriv_adjunction<Rat>(kW);
  auto cert = certify_spherical(gt, small_filtered(), small_graded());
  REQUIRE(cert.pass);
  CHECK(fourier_round_trip(gt, cert, small_filtered()[0], small_graded()[0]));
}
