#include <map>

#include "doctest.h"
#include "sph/complex.hpp"
#include "sph/field.hpp"

using sph::ChainComplex;
using sph::ChainMap;
using sph::Mat;
using sph::Rat;

namespace {

Mat<Rat> dense(int rows, int cols, const std::vector<int>& vals) {
  Mat<Rat> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (vals[i * cols + j] != 0) m.set(i, j, Rat(vals[i * cols + j]));
  return m;
}

// Circle: two vertices, two edges glued head-to-head and tail-to-tail.
ChainComplex<Rat> circle() {
  return ChainComplex<Rat>(0, {2, 2}, {dense(2, 2, {-1, -1, 1, 1})});
}

// Triangle boundary (homotopy equivalent to the circle).
ChainComplex<Rat> triangle() {
  return ChainComplex<Rat>(0, {3, 3},
                           {dense(3, 3, {-1, -1, 0, 1, 0, -1, 0, 1, 1})});
}

// Interval [a, a+1]: identity differential, acyclic.
ChainComplex<Rat> interval(int a) {
  return ChainComplex<Rat>(a, {1, 1}, {Mat<Rat>::identity(1)});
}

}  // namespace

TEST_CASE("construction rejects bad differentials") {
  CHECK_THROWS(ChainComplex<Rat>(0, {1, 1, 1},
                                 {dense(1, 1, {1}), dense(1, 1, {1})}));
  CHECK_THROWS(ChainComplex<Rat>(0, {2, 1}, {dense(1, 1, {1})}));
}

TEST_CASE("homology of the circle and the triangle boundary") {
  for (const auto& c : {circle(), triangle()}) {
    auto h = c.homology();
    CHECK(h.size() == 2);
    CHECK(h.at(0) == 1);
    CHECK(h.at(1) == 1);
    CHECK(c.euler_char() == 0);
  }
  CHECK(interval(3).is_acyclic());
  CHECK(ChainComplex<Rat>::point(5).homology() == std::map<int, int>{{5, 1}});
}

TEST_CASE("shift moves degrees and flips the differential sign") {
  auto c = circle();
  auto s = c.shift(1);
  CHECK(s.dim(1) == 2);
  CHECK(s.dim(2) == 2);
  CHECK(s.diff(2) == -c.diff(1));
  CHECK(s.shift(-1) == c);
  CHECK(c.shift(2).diff(3) == c.diff(1));
  auto h = s.homology();
  CHECK(h.at(1) == 1);
  CHECK(h.at(2) == 1);
}

TEST_CASE("cone of the identity is acyclic, cone of zero splits") {
  auto c = circle();
  auto id = ChainMap<Rat>::identity(c);
  auto cn = sph::cone(id);
  CHECK(cn.complex.is_acyclic());
  CHECK(cn.from_target.commutes());
  CHECK(cn.to_shifted_source.commutes());
  // target -> cone -> source[1] composes to zero
  CHECK(cn.to_shifted_source.compose_after(cn.from_target).is_zero_map());

  auto z = ChainMap<Rat>::zero(c, c);
  auto cz = sph::cone(z);
  auto h = cz.complex.homology();
  CHECK(h.at(0) == 1);
  CHECK(h.at(1) == 2);  // H_1(C) + H_0(C)[1]
  CHECK(h.at(2) == 1);
}

TEST_CASE("fiber is the shifted cone with a chain projection to the source") {
  auto c = circle();
  auto id = ChainMap<Rat>::identity(c);
  auto fb = sph::fiber(id);
  CHECK(fb.complex.is_acyclic());
  CHECK(fb.to_source.commutes());
  CHECK(fb.from_shifted_target.commutes());
  CHECK(fb.complex == sph::cone(id).complex.shift(-1));
}

TEST_CASE("quasi-isomorphism detection agrees with the homology oracle") {
  // Collapse the triangle onto the circle: vertices 0,1 -> 0,1 with 2 -> 1,
  // edges 01 -> e0, 02 -> e0 (path 0..2 through vertex labels), 12 -> 0... we
  // instead take the standard simplicial approximation sending edge 12 to the
  // degenerate edge, realized here as the zero chain.
  auto t = triangle();
  auto c = circle();
  std::map<int, Mat<Rat>> comps;
  comps[0] = dense(2, 3, {1, 0, 0, 0, 1, 1});
  comps[1] = dense(2, 3, {1, 0, 0, 0, 1, 0});
  ChainMap<Rat> f(t, c, comps);
  CHECK(f.commutes());
  CHECK(sph::is_quasi_iso(f));
  CHECK(sph::homology_iso_oracle(f));

  auto z = ChainMap<Rat>::zero(t, c);
  CHECK_FALSE(sph::is_quasi_iso(z));
  CHECK_FALSE(sph::homology_iso_oracle(z));

  // A quasi-iso between complexes of different size in each degree.
  auto pt = ChainComplex<Rat>::point(0);
  auto iv = sph::direct_sum(pt, interval(0));
  std::map<int, Mat<Rat>> pcomp;
  pcomp[0] = dense(1, 2, {1, 0});
  ChainMap<Rat> p(iv, pt, pcomp);
  CHECK(sph::is_quasi_iso(p));
  CHECK(sph::homology_iso_oracle(p));
}

TEST_CASE("null homotopy solving") {
  auto c = circle();
  auto id = ChainMap<Rat>::identity(c);

  // The identity of a non-acyclic complex is not null-homotopic.
  CHECK_FALSE(sph::null_homotopy(id).has_value());

  // The identity of an acyclic complex is.
  auto iv = interval(0);
  auto idv = ChainMap<Rat>::identity(iv);
  auto h = sph::null_homotopy(idv);
  REQUIRE(h.has_value());
  CHECK(sph::homotopy_witnesses(*h, idv));

  // d itself, viewed through a degree shift, is null-homotopic: take the map
  // 2*id on the interval.
  auto two = idv + idv;
  auto h2 = sph::null_homotopy(two);
  REQUIRE(h2.has_value());
  CHECK(sph::homotopy_witnesses(*h2, two));

  CHECK(sph::null_homotopy(ChainMap<Rat>::zero(c, c)).has_value());
}

TEST_CASE("homotopy inverse of a quasi-isomorphism") {
  auto t = triangle();
  auto c = circle();
  std::map<int, Mat<Rat>> comps;
  comps[0] = dense(2, 3, {1, 0, 0, 0, 1, 1});
  comps[1] = dense(2, 3, {1, 0, 0, 0, 1, 0});
  ChainMap<Rat> f(t, c, comps);
  auto inv = sph::homotopy_inverse(f);
  CHECK(inv.inverse.commutes());
  auto fg = f.compose_after(inv.inverse) - ChainMap<Rat>::identity(c);
  auto gf = inv.inverse.compose_after(f) - ChainMap<Rat>::identity(t);
  CHECK(sph::homotopy_witnesses(inv.fg_witness, fg));
  CHECK(sph::homotopy_witnesses(inv.gf_witness, gf));

  CHECK_THROWS(sph::homotopy_inverse(ChainMap<Rat>::zero(t, c)));
}

TEST_CASE("direct sum and euler characteristic") {
  auto s = sph::direct_sum(circle(), interval(4));
  CHECK(s.dim(0) == 2);
  CHECK(s.dim(4) == 1);
  CHECK(s.euler_char() == 0);
  auto h = s.homology();
  CHECK(h.size() == 2);
}
