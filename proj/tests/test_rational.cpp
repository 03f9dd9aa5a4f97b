#include <doctest.h>

#include <limits>
#include <sstream>

#include "maxtoll/error.hpp"
#include "maxtoll/rational.hpp"

using maxtoll::Error;
using maxtoll::ErrorCode;
using maxtoll::Rational;

TEST_CASE("rationals normalize sign and common factors") {
  Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(0, -7) == Rational(0));
  CHECK(Rational(0, -7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("arithmetic is exact") {
  Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(7, 2) - Rational(1, 2) == Rational(3));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(5, 7) == Rational(-5, 7));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("ordering compares values") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(4, 8) == Rational(1, 2));
  CHECK(maxtoll::min(Rational(3), Rational(2, 3)) == Rational(2, 3));
  CHECK(maxtoll::max(Rational(3), Rational(2, 3)) == Rational(3));
}

TEST_CASE("ordering survives products beyond 128 bits") {
  const Rational::Int big = Rational::Int{1} << 100;
  Rational a(big + 1, big);
  Rational b(big + 3, big + 2);
  CHECK(a > b);
  CHECK(b < a);
  CHECK(a != b);
}

TEST_CASE("overflow is reported, never wrapped") {
  const Rational::Int huge = std::numeric_limits<Rational::Int>::max() / 2 + 1;
  Rational r = Rational::from_int128(huge);
  CHECK_THROWS_WITH_AS(r + r, doctest::Contains("128-bit"), Error);
  try {
    (void)(r * Rational(3));
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Overflow);
  }
}

TEST_CASE("text round trip") {
  CHECK(Rational(9).to_string() == "9");
  CHECK(Rational(-7, 2).to_string() == "-7/2");
  CHECK(Rational::parse("7/2") == Rational(7, 2));
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "abc", "2/-3", "+-1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), Error);
  }
  std::ostringstream os;
  os << Rational(3, 4);
  CHECK(os.str() == "3/4");
}

TEST_CASE("conversions") {
  CHECK(Rational(42).to_int64() == 42);
  CHECK_THROWS_AS(Rational(1, 2).to_int64(), Error);
  CHECK(Rational(1, 4).to_double() == doctest::Approx(0.25));
  CHECK(maxtoll::int128_to_string(-(Rational::Int{1} << 100)) == "-1267650600228229401496703205376");
}
