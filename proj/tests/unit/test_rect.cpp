#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "simplefold/rect.hpp"

using namespace simplefold;
using namespace simplefold::test;

TEST_CASE("rect validation") {
  CHECK_THROWS_AS(RectPattern(Rational(2), Rational(2), {vline(3, 0, 2, V)}), std::invalid_argument);
  CHECK_THROWS_AS(RectPattern(Rational(2), Rational(2), {vline(1, 1, 1, V)}), std::invalid_argument);
  CHECK_THROWS_AS(RectPattern(Rational(2), Rational(2), {vline(1, 0, 3, V)}), std::invalid_argument);
}

TEST_CASE("both directions are never one-layer foldable") {
  RectPattern p(Rational(4), Rational(2), {vline(2, 0, 2, U), hline(1, 0, 4, U)});
  auto v = decide_rect_one_layer(p);
  CHECK_FALSE(v.foldable);
  CHECK(v.reason == RectVerdict::Reason::BothDirections);
}

TEST_CASE("single direction reduces to 1D") {
  RectPattern p(Rational(8), Rational(1), {vline(3, 0, 1, M), vline(5, 0, 1, U)});
  auto v = decide_rect_one_layer(p);
  CHECK(v.foldable);
  REQUIRE(v.projected.has_value());
  CHECK(*v.projected == pat("8", "M3 U5"));

  RectPattern h(Rational(1), Rational(8), {hline(3, 0, 1, M), hline(5, 0, 1, M)});
  CHECK_FALSE(decide_rect_one_layer(h).foldable);

  CHECK(decide_rect_one_layer(RectPattern(Rational(3), Rational(2), {})).foldable);
}

TEST_CASE("partial and conflicting lines") {
  RectPattern partial(Rational(4), Rational(2), {vline(2, 0, 1, V)});
  auto a = decide_rect_one_layer(partial);
  CHECK_FALSE(a.foldable);
  CHECK(a.reason == RectVerdict::Reason::PartialSpan);

  RectPattern split(Rational(4), Rational(2), {vline(2, 0, 1, V), vline(2, 1, 2, M)});
  auto b = decide_rect_one_layer(split);
  CHECK_FALSE(b.foldable);
  CHECK(b.reason == RectVerdict::Reason::ConflictingLine);

  RectPattern pieces(Rational(4), Rational(2), {vline(2, 0, 1, V), vline(2, 1, 2, U)});
  CHECK(decide_rect_one_layer(pieces).foldable);
}

TEST_CASE("embedding keeps the 1D verdict") {
  auto p = pat("8", "M3 V5");
  auto r = embed_as_vertical_lines(p, Rational(2));
  CHECK(r.width() == Rational(8));
  CHECK(r.creases().size() == 2);
  CHECK(decide_rect_one_layer(r).foldable);
}
