#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "simplefold/oracle.hpp"

using namespace simplefold;

namespace {

CreasePattern1D p1(int length, std::vector<std::pair<int, char>> cs) {
  std::vector<Crease> out;
  for (auto [pos, mv] : cs) out.push_back({Rational(pos), assignment_from_string(std::string(1, mv))});
  return CreasePattern1D(Rational(length), std::move(out));
}

RectCrease vline(int x, int from, int to, Assignment a) {
  return {Axis::Vertical, Rational(x), Rational(from), Rational(to), a};
}
RectCrease hline(int y, int from, int to, Assignment a) {
  return {Axis::Horizontal, Rational(y), Rational(from), Rational(to), a};
}

constexpr auto M = Assignment::Mountain;
constexpr auto V = Assignment::Valley;
constexpr auto U = Assignment::Unassigned;

}  // namespace

TEST_CASE("one-layer successors of a crimpable pair") {
  auto p = p1(8, {{3, 'M'}, {5, 'V'}});
  auto moves = enumerate_successors_1d(p, initial_state_1d(p), LayerModel::OneLayer);
  CHECK(moves.size() == 4);
  int at3 = 0, at5 = 0;
  for (const auto& s : moves) {
    if (s.move.position == Rational(3)) ++at3;
    if (s.move.position == Rational(5)) ++at5;
    CHECK_FALSE(check_state(Sheet::from_1d(p), s.state).has_value());
  }
  CHECK(at3 == 2);
  CHECK(at5 == 2);
}

TEST_CASE("all-layers middle fold is legal but strands the outer creases") {
  auto p = p1(4, {{1, 'M'}, {2, 'M'}, {3, 'M'}});
  const Sheet sheet = Sheet::from_1d(p);
  auto moves = enumerate_successors(sheet, initial_state(sheet), LayerModel::AllLayers);
  REQUIRE(moves.size() == 3);
  CHECK(moves[0].move.position == Rational(1));
  CHECK(moves[1].move.position == Rational(2));
  CHECK(moves[2].move.position == Rational(3));
  // 1 and 3 now coincide and need opposite senses.
  CHECK(enumerate_successors(sheet, moves[1].state, LayerModel::AllLayers).empty());
  CHECK_FALSE(all_creases_folded(sheet, moves[1].state));
  CHECK(search_1d(p, LayerModel::AllLayers).outcome == SearchOutcome::Foldable);
}

TEST_CASE("fully folded state has no successors") {
  auto p = p1(8, {{3, 'M'}, {5, 'V'}});
  auto r = search_1d(p, LayerModel::OneLayer);
  REQUIRE(r.outcome == SearchOutcome::Foldable);
  const Sheet sheet = Sheet::from_1d(p);
  FoldedSheet s = initial_state(sheet);
  for (const auto& m : r.trace) {
    auto next = enumerate_successors(sheet, s, LayerModel::OneLayer);
    bool found = false;
    for (auto& n : next) {
      if (n.move.position == m.position && n.move.folded_edges == m.folded_edges &&
          n.move.moved_side == m.moved_side && n.move.over == m.over) {
        s = n.state;
        found = true;
        break;
      }
    }
    REQUIRE(found);
  }
  CHECK(all_creases_folded(sheet, s));
  CHECK(enumerate_successors(sheet, s, LayerModel::SomeLayers).empty());
}

TEST_CASE("1D search verdicts") {
  CHECK(search_1d(p1(8, {{3, 'M'}, {5, 'M'}}), LayerModel::SomeLayers).outcome ==
        SearchOutcome::Unfoldable);
  CHECK(search_1d(p1(8, {{3, 'M'}, {5, 'M'}}), LayerModel::OneLayer).outcome ==
        SearchOutcome::Unfoldable);
  CHECK(search_1d(p1(8, {{3, 'M'}, {5, 'M'}}), LayerModel::AllLayers).outcome ==
        SearchOutcome::Unfoldable);
  for (auto m : {LayerModel::OneLayer, LayerModel::SomeLayers, LayerModel::AllLayers}) {
    CHECK(search_1d(p1(4, {{1, 'M'}, {2, 'M'}, {3, 'M'}}), m).outcome == SearchOutcome::Foldable);
  }
  CHECK(search_1d(p1(6, {{2, 'V'}, {3, 'M'}}), LayerModel::SomeLayers).outcome ==
        SearchOutcome::Foldable);
  CHECK(search_1d(p1(6, {{2, 'V'}, {3, 'M'}}), LayerModel::AllLayers).outcome ==
        SearchOutcome::Unfoldable);
  CHECK(search_1d(CreasePattern1D(Rational(3), {}), LayerModel::OneLayer).outcome ==
        SearchOutcome::Foldable);
}

TEST_CASE("budget exhaustion is reported as inconclusive") {
  SearchOptions opt;
  opt.max_nodes = 1;
  auto r = search_1d(p1(8, {{1, 'M'}, {2, 'V'}, {3, 'M'}, {5, 'V'}}), LayerModel::SomeLayers, opt);
  CHECK(r.outcome == SearchOutcome::Inconclusive);
}

TEST_CASE("successor order does not change verdicts") {
  auto p = p1(8, {{1, 'V'}, {2, 'M'}, {4, 'M'}, {6, 'V'}, {7, 'M'}});
  const auto base = search_1d(p, LayerModel::SomeLayers).outcome;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SearchOptions opt;
    opt.shuffle_seed = seed;
    CHECK(search_1d(p, LayerModel::SomeLayers, opt).outcome == base);
  }
}

TEST_CASE("rect successors and verdicts") {
  RectPattern one(Rational(2), Rational(1), {vline(1, 0, 1, U)});
  auto moves = enumerate_successors_rect(one, initial_state_rect(one), LayerModel::AllLayers);
  CHECK(moves.size() == 2);
  CHECK(search_rect(one, LayerModel::SomeLayers).outcome == SearchOutcome::Foldable);

  RectPattern cross(Rational(2), Rational(2), {vline(1, 0, 2, V), hline(1, 0, 2, V)});
  CHECK(search_rect(cross, LayerModel::SomeLayers).outcome == SearchOutcome::Unfoldable);
  CHECK(search_rect(cross, LayerModel::AllLayers).outcome == SearchOutcome::Unfoldable);

  RectPattern mixed(Rational(2), Rational(2),
                    {vline(1, 0, 2, V), hline(1, 0, 1, M), hline(1, 1, 2, V)});
  CHECK(search_rect(mixed, LayerModel::SomeLayers).outcome == SearchOutcome::Foldable);
  CHECK(search_rect(mixed, LayerModel::AllLayers).outcome == SearchOutcome::Foldable);

  CHECK_THROWS_AS(search_rect(one, LayerModel::OneLayer), std::invalid_argument);
}

TEST_CASE("after the vertical valley fold the horizontal valley line cannot fold") {
  RectPattern cross(Rational(2), Rational(2), {vline(1, 0, 2, V), hline(1, 0, 2, V)});
  const Sheet sheet = Sheet::from_rect(cross);
  auto first = enumerate_successors(sheet, initial_state(sheet), LayerModel::SomeLayers);
  for (const auto& s : first) {
    if (s.move.axis != Axis::Vertical || s.move.extent != ExtentKind::AllLayers) continue;
    for (const auto& t : enumerate_successors(sheet, s.state, LayerModel::SomeLayers)) {
      CHECK(t.move.axis != Axis::Horizontal);
    }
  }
}

// An earlier dead-state prune rejected this; x=1, y=1, x=2 folds it.
TEST_CASE("dead-state prune keeps the late-merging order") {
  RectPattern p(Rational(3), Rational(2),
                {vline(1, 0, 1, V), vline(1, 1, 2, V), vline(2, 0, 1, M), vline(2, 1, 2, V),
                 hline(1, 0, 1, M), hline(1, 1, 2, V), hline(1, 2, 3, V)});
  CHECK(search_rect(p, LayerModel::AllLayers).outcome == SearchOutcome::Foldable);
  CHECK(search_rect(p, LayerModel::SomeLayers).outcome == SearchOutcome::Foldable);
}
