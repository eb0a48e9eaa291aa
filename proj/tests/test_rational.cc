#include <stdexcept>

#include "doctest.h"
#include "wef/rational.h"

using wef::ParseRational;
using wef::Rational;

TEST_CASE("rationals parse into canonical form") {
  CHECK(ParseRational("6/4") == Rational(3, 2));
  CHECK(wef::ToString(ParseRational("6/4")) == "3/2");
  CHECK(wef::ToString(ParseRational("-10/5")) == "-2");
  CHECK(wef::ToString(ParseRational("+7")) == "7");
  CHECK(wef::ToString(ParseRational("0/9")) == "0");
  CHECK(ParseRational("123456789012345678901234567890") * 2 ==
        ParseRational("246913578024691357802469135780"));
}

TEST_CASE("malformed rationals are rejected") {
  for (const char* bad : {"", "1/0", "1/-2", "a", "1.5", "1/", "/2", " 1",
                          "1/2/3", "--1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(ParseRational(bad), std::invalid_argument);
  }
}

TEST_CASE("decimal rendering keeps six significant digits") {
  CHECK(wef::ToDecimal(Rational(8)) == "8");
  CHECK(wef::ToDecimal(Rational(4, 3)) == "1.33333");
  CHECK(wef::ToDecimal(Rational(-2, 3)) == "-0.666667");
  CHECK(wef::ToDecimal(Rational(1, 2)) == "0.5");
}
