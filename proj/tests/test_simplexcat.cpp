#include <cstdint>

#include "doctest.h"
#include "sph/simplexcat.hpp"

using namespace sph;

TEST_CASE("poset validation and basic constructions") {
  CHECK(FinPoset::chain(3).terminal() == 2);
  CHECK(FinPoset::chain(3).initial() == 0);
  CHECK_FALSE(FinPoset::antichain(2).terminal().has_value());
  CHECK(FinPoset::product(FinPoset::chain(2), FinPoset::chain(2)).size() == 4);
  // non-transitive relation rejected
  std::vector<std::vector<bool>> bad = {
      {true, true, false}, {false, true, true}, {false, false, true}};
  CHECK_THROWS(FinPoset(bad));

  // strict chains of the 2-chain: {0}, {0,1}, {1}
  auto ch = FinPoset::chain(2).strict_chains();
  CHECK(ch.size() == 3);
}

TEST_CASE("hom-set counts in the truncated simplex categories") {
  FinCat dp = delta_plus(4);
  // object index k+1 stands for [k]
  for (int k = -1; k <= 4; ++k) CHECK(dp.hom[0][k + 1].size() == 1);
  CHECK(dp.hom[2][2].size() == 3);
  CHECK(dp.hom[2][1].size() == 1);
  CHECK(dp.hom[3][2].size() == 4);  // monotone maps 3-chain -> 2-chain

  FinCat di = delta_infty(4);
  CHECK(di.hom[1][0].size() == 1);  // only the collapse preserves the top
  CHECK(di.hom[0][1].size() == 1);  // must send 0 to the top of [1]
  CHECK(di.hom[1][1].size() == 2);
}

TEST_CASE("concrete categories are closed under composition") {
  CHECK(delta_plus(4).well_formed());
  CHECK(delta_infty(4).well_formed());
}

TEST_CASE("top-element adjunction: triangles and the hom bijection") {
  TIotaAdjunction adj{5};
  for (int k = -1; k <= 4; ++k) {
    // counit at t[k] composed with t(unit at [k]) is the identity
    Fn lhs = compose_fn(adj.counit(k + 1), adj.t_mor(adj.unit(k), k + 1));
    Fn id(k + 2);
    for (int i = 0; i <= k + 1; ++i) id[i] = i;
    CHECK(lhs == id);
  }
  for (int l = 0; l <= 4; ++l) {
    Fn lhs = compose_fn(adj.counit(l), adj.unit(l));
    Fn id(l + 1);
    for (int i = 0; i <= l; ++i) id[i] = i;
    CHECK(lhs == id);
  }
  // forward/backward are mutually inverse bijections on hom-sets
  for (int k = -1; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l) {
      for (const auto& g : monotone_maps(k + 2, l + 1)) {
        if (g.back() != l) continue;  // not in Delta_infty
        CHECK(adj.forward(adj.backward(adj.forward(g, k), k, l), k) ==
              adj.forward(g, k));
        CHECK(adj.backward(adj.forward(g, k), k, l) == g);
      }
      for (const auto& f : monotone_maps(k + 1, l + 1))
        CHECK(adj.forward(adj.backward(f, k, l), k) == f);
    }
}

TEST_CASE("cone poset has the added point as its terminal object") {
  auto c0 = cone_of(FinPoset(std::vector<std::vector<bool>>{}));
  CHECK(c0.total.size() == 1);

  auto c1 = cone_of(FinPoset::chain(1));
  CHECK(c1.total == FinPoset::chain(2));

  auto c2 = cone_of(FinPoset::antichain(2));
  CHECK(c2.total.terminal() == c2.cone);
  CHECK_FALSE(c2.total.leq(0, 1));
  CHECK(c2.total.leq(0, c2.cone));
  CHECK(c2.total.leq(1, c2.cone));
}

TEST_CASE("cube posets: size, slice agreement, maximal element") {
  CHECK(j_poset(0).size() == 2);
  for (int n = 0; n <= 4; ++n) {
    FinPoset jb = j_poset(n);
    CHECK(jb.size() == (1 << (n + 1)));
    CHECK(jb.terminal() == 0);  // the empty subset is the maximum

    SlicePoset sl = j_slice_poset(n);
    CHECK(sl.poset.size() == jb.size());
    std::vector<int> f;
    for (std::uint32_t mask : sl.image_mask)
      f.push_back(static_cast<int>(mask));
    CHECK(is_order_iso(sl.poset, jb, f));
  }
}

TEST_CASE("J_max has a final object and splits J as a product") {
  for (int n = 0; n <= 4; ++n) {
    JMaxPoset jm = j_max_poset(n);
    auto fin = jm.poset.terminal();
    REQUIRE(fin.has_value());
    CHECK(jm.mask_of(*fin) == (1u << n));  // the singleton {n}

    // J_n ~ J_n^max x [1] via S -> (S u {n}, 0 if n in S else 1)
    FinPoset jb = j_poset(n);
    FinPoset prod = FinPoset::product(jm.poset, FinPoset::chain(2));
    std::vector<int> f(jb.size());
    for (int s = 0; s < jb.size(); ++s) {
      std::uint32_t mask = static_cast<std::uint32_t>(s);
      int a = jm.index_of(mask | (1u << n));
      int b = (mask >> n) & 1 ? 0 : 1;
      f[s] = a * 2 + b;
    }
    CHECK(is_order_iso(jb, prod, f));
  }
}

TEST_CASE("subset injections compose like face inclusions") {
  // T = {0,2} inside S = {0,1,2}: positions 0 and 2
  CHECK(subset_injection(0b111, 0b101) == Fn{0, 2});
  // {2} inside {0,2}: position 1
  CHECK(subset_injection(0b101, 0b100) == Fn{1});
  CHECK(compose_fn(subset_injection(0b111, 0b101),
                   subset_injection(0b101, 0b100)) ==
        subset_injection(0b111, 0b100));
  CHECK_THROWS(subset_injection(0b011, 0b100));
}

TEST_CASE("grothendieck construction") {
  // constant family at the point over a 2-element linear order
  ConeObject pt = cone_of(FinPoset(std::vector<std::vector<bool>>{}));
  ConeFunctorFamily f;
  f.fibers = {pt, pt};
  f.transitions = {PosetMap{{0}}};
  auto g = grothendieck(f);
  CHECK(g.total == FinPoset::chain(2));
  CHECK(g.base_total.size() == 0);

  // single fiber: total is the fiber itself, section picks the cone point
  ConeObject c2 = cone_of(FinPoset::antichain(2));
  ConeFunctorFamily f1;
  f1.fibers = {c2};
  auto g1 = grothendieck(f1);
  CHECK(g1.total == c2.total);
  CHECK(g1.elems[g1.section[0]].second == c2.cone);
  CHECK(g1.base_total == FinPoset::antichain(2));

  // two-step family: no morphisms backwards along the linear order
  ConeFunctorFamily f2;
  f2.fibers = {cone_of(FinPoset::chain(1)), c2};
  f2.transitions = {PosetMap{{0, c2.cone}}};
  f2.validate();
  auto g2 = grothendieck(f2);
  for (size_t i = 0; i < g2.elems.size(); ++i)
    for (size_t k = 0; k < g2.elems.size(); ++k)
      if (g2.elems[i].first > g2.elems[k].first)
        CHECK_FALSE(g2.total.leq(static_cast<int>(i), static_cast<int>(k)));
  // the section lands terminally in each fiber
  for (int j = 0; j < 2; ++j)
    for (size_t i = 0; i < g2.elems.size(); ++i)
      if (g2.elems[i].first == j)
        CHECK(g2.total.leq(static_cast<int>(i), g2.section[j]));

  // a transition sending a base point to the cone point is rejected
  ConeFunctorFamily bad;
  bad.fibers = {cone_of(FinPoset::chain(1)), pt};
  bad.transitions = {PosetMap{{0, 0}}};
  CHECK_THROWS(grothendieck(bad));
}
