#include "doctest.h"
#include "sph/field.hpp"

using sph::Fp;
using sph::Rat;

TEST_CASE("rational arithmetic and string round-trip") {
  Rat a = Rat::from_string("3/4");
  Rat b = Rat::from_string("-5/6");
  CHECK((a + b).to_string() == "-1/12");
  CHECK((a * b).to_string() == "-5/8");
  CHECK((a - a).is_zero());
  CHECK((a / b).to_string() == "-9/10");
  CHECK(a.inv().to_string() == "4/3");
  CHECK(Rat::from_string("6/4").to_string() == "3/2");
  CHECK(Rat::from_string("-0").is_zero());
  CHECK(Rat::one().to_string() == "1");
}

TEST_CASE("prime field arithmetic") {
  Fp::set_modulus(7);
  Fp a = Fp::from_string("3");
  Fp b = Fp::from_string("5");
  CHECK((a + b).to_string() == "1");
  CHECK((a * b).to_string() == "1");
  CHECK((-a).to_string() == "4");
  CHECK(a.inv().to_string() == "5");
  CHECK((a / b).to_string() == "2");  // 3 * 5^{-1} = 3 * 3 = 2
  CHECK(Fp::from_string("1/2").to_string() == "4");
  CHECK(Fp::from_string("-1").to_string() == "6");

  Fp::set_modulus(2147483647);  // largest prime below 2^31
  Fp big = Fp::from_string("2147483646");
  CHECK((big * big).to_string() == "1");
}

TEST_CASE("modulus validation") {
  CHECK_THROWS(Fp::set_modulus(4));
  CHECK_THROWS(Fp::set_modulus(1));
  CHECK_NOTHROW(Fp::set_modulus(101));
}
