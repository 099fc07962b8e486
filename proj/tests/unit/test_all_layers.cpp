#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "simplefold/all_layers.hpp"
#include "simplefold/errors.hpp"

using namespace simplefold;
using test::pat;

TEST_CASE("is_valid_all_layers_fold") {
  CHECK(is_valid_all_layers_fold(pat("6", "V2 M4"), 0).valid);

  auto r = is_valid_all_layers_fold(pat("4", "M1 M2 M3"), 1);
  CHECK_FALSE(r.valid);
  REQUIRE(r.conflict.has_value());
  CHECK(r.conflict->kind == FoldConflict::Kind::EqualAssignments);

  auto s = is_valid_all_layers_fold(pat("6", "V2 M3"), 0);
  CHECK_FALSE(s.valid);
  REQUIRE(s.conflict.has_value());
  CHECK(s.conflict->kind == FoldConflict::Kind::NonCreasePoint);
  CHECK(s.conflict->mirror == Rational(1));
}

TEST_CASE("reduce_at") {
  CHECK(reduce_at(pat("6", "V2 M4"), 0) == pat("4", "M2"));
  CHECK(reduce_at(pat("4", "M1 M2 M3"), 0) == pat("3", "M1 M2"));
  CHECK(reduce_at(pat("8", "V2 U4"), 0) == pat("6", "U2"));
  CHECK_THROWS_AS(reduce_at(pat("4", "M1 M2 M3"), 1), InvalidOperation);
}

TEST_CASE("plausible_creases") {
  auto a = plausible_creases(pat("6", "V2 M4"));
  REQUIRE(a.size() == 2);
  CHECK(a[0].crease == 0);
  CHECK(a[0].distance == Rational(2));
  CHECK(a[1].crease == 1);
  CHECK(a[1].distance == Rational(2));
  CHECK(plausible_creases(pat("6", "V2 M3")).empty());
  CHECK(plausible_creases(pat("4", "M1 M2 M3")).size() == 3);
}

TEST_CASE("decide_all_layers_mixed") {
  auto a = decide_all_layers_mixed(pat("6", "V2 M4"));
  CHECK(a.foldable);
  CHECK(a.sequence == std::vector<Rational>{Rational(2), Rational(2)});
  CHECK(a.original_positions == std::vector<Rational>{Rational(2), Rational(4)});

  auto b = decide_all_layers_mixed(pat("6", "V2 M3"));
  CHECK_FALSE(b.foldable);
  CHECK_FALSE(b.reason.empty());

  auto c = decide_all_layers_mixed(pat("4", "M1 M2 M3"));
  CHECK(c.foldable);
  CHECK(c.sequence == std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
}

TEST_CASE("valid implies plausible") {
  for (const char* spec : {"V2 M4", "M1 M2 M3", "V1 U3 M4", "U2 U4 U5", "M1 V3 M5 V6"}) {
    auto p = pat("7", spec);
    const auto plausible = plausible_creases(p);
    for (std::size_t i = 0; i < p.crease_count(); ++i) {
      if (!is_valid_all_layers_fold(p, i).valid) continue;
      bool found = false;
      for (const auto& q : plausible) found = found || q.crease == i;
      CHECK_MESSAGE(found, p.to_string() << " crease " << i);
    }
  }
}

TEST_CASE("reductions shrink the paper") {
  auto p = pat("4", "M1 M2 M3");
  auto q = reduce_at(p, 0);
  CHECK(q.length() < p.length());
  CHECK(q.crease_count() <= p.crease_count());
}
