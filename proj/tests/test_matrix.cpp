#include <vector>

#include "doctest.h"
#include "sph/field.hpp"
#include "sph/matrix.hpp"

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

}  // namespace

TEST_CASE("product and transpose") {
  Mat<Rat> a = dense(2, 3, {1, 2, 0, 0, -1, 3});
  Mat<Rat> b = dense(3, 2, {1, 0, 2, 1, 0, 4});
  Mat<Rat> ab = dense(2, 2, {5, 2, -2, 11});
  CHECK(a * b == ab);
  CHECK(a.transpose().transpose() == a);
  CHECK((a - a).is_zero());
  CHECK(Mat<Rat>::identity(3) * b == b);
}

TEST_CASE("rank on boundary of a triangle") {
  // Incidence matrix of the boundary of a 2-simplex skeleton:
  // edges 01, 02, 12 against vertices 0, 1, 2.
  Mat<Rat> d1 = dense(3, 3, {-1, -1, 0, 1, 0, -1, 0, 1, 1});
  CHECK(rank(d1) == 2);
  Mat<Rat> z = kernel_basis(d1);
  CHECK(z.cols() == 1);
  CHECK((d1 * z).is_zero());
}

TEST_CASE("kernel basis solves the defining equations") {
  Mat<Rat> a = dense(2, 4, {1, 2, 3, 4, 2, 4, 6, 8});
  CHECK(rank(a) == 1);
  Mat<Rat> z = kernel_basis(a);
  CHECK(z.cols() == 3);
  CHECK((a * z).is_zero());
  CHECK(rank(z) == 3);
}

TEST_CASE("solve: consistent and inconsistent systems") {
  Mat<Rat> a = dense(3, 2, {1, 1, 0, 1, 1, 2});
  Mat<Rat> b = dense(3, 1, {3, 1, 4});
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);

  Mat<Rat> bad = dense(3, 1, {3, 1, 5});
  CHECK_FALSE(solve(a, bad).has_value());
}

TEST_CASE("solve with matrix right-hand side and rational pivots") {
  Mat<Rat> a(2, 2);
  a.set(0, 0, Rat::from_string("1/2"));
  a.set(0, 1, Rat::from_string("1/3"));
  a.set(1, 0, Rat::from_string("1/4"));
  a.set(1, 1, Rat::from_string("1/5"));
  Mat<Rat> b = Mat<Rat>::identity(2);
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);
  CHECK(*x * a == b);
}

TEST_CASE("block assembly") {
  Mat<Rat> a = dense(1, 1, {2});
  Mat<Rat> b = dense(1, 2, {3, 4});
  Mat<Rat> c = Mat<Rat>::zero(2, 1);
  Mat<Rat> d = dense(2, 2, {5, 0, 0, 6});
  Mat<Rat> m = Mat<Rat>::block2x2(a, b, c, d);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 3);
  CHECK(m.get(0, 2) == Rat(4));
  CHECK(m.get(2, 2) == Rat(6));
  Mat<Rat> s = Mat<Rat>::dsum(a, d);
  CHECK(s.get(0, 0) == Rat(2));
  CHECK(s.get(1, 1) == Rat(5));
  CHECK(s.get(0, 1).is_zero());
}

TEST_CASE("prime field elimination") {
  sph::Fp::set_modulus(5);
  Mat<sph::Fp> a(2, 2);
  a.set(0, 0, sph::Fp(2));
  a.set(0, 1, sph::Fp(1));
  a.set(1, 0, sph::Fp(4));
  a.set(1, 1, sph::Fp(2));
  CHECK(rank(a) == 1);  // second row is twice the first mod 5
  Mat<sph::Fp> z = kernel_basis(a);
  CHECK(z.cols() == 1);
  CHECK((a * z).is_zero());
}
