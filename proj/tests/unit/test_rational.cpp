#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unordered_set>

#include "simplefold/rational.hpp"

using simplefold::Rational;

TEST_CASE("parsing integers, fractions and decimals") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("2.75") == Rational(11, 4));
  CHECK(Rational::parse("0.1") == Rational(1, 10));
}

TEST_CASE("malformed numbers are rejected") {
  for (const char* bad : {"", "x", "1/0", "1.2.3", "3/", "/4", "1e5", " 2"}) {
    CHECK_THROWS(Rational::parse(bad));
  }
}

TEST_CASE("canonical form and printing") {
  CHECK(Rational(6, 4).to_string() == "3/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(1, -3).to_string() == "-1/3");
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(6, 4).hash() == Rational(3, 2).hash());
}

TEST_CASE("exact arithmetic and order") {
  Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(-Rational(1, 2) < Rational(0));
  CHECK(abs(Rational(-5, 2)) == Rational(5, 2));
  CHECK(Rational(7, 2).is_integer() == false);
  CHECK(Rational(8, 2).is_integer());
  std::unordered_set<Rational> s{Rational(1, 2), Rational(2, 4), Rational(1)};
  CHECK(s.size() == 2);
}
