#pragma once

// Exhaustive simple-fold simulation on orthogonal paper.
//
// The paper is cut by every crease coordinate into rectangular cells. A
// folded state places each cell in the image plane by an axis-aligned
// isometry and keeps, for every image pixel (cell of the overlay of all cell
// images), the bottom-to-top order of the cells covering it. 1D paper is the
// special case of a single row of cells with only vertical fold lines.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "simplefold/characterize.hpp"
#include "simplefold/model.hpp"
#include "simplefold/rect.hpp"

namespace simplefold {

inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// Coordinates inside the engine are integers: paper coordinates multiplied by
/// Sheet::scale, which is even so every pixel midpoint is an integer too.
using Coord = std::int64_t;

/// Shared boundary between two paper cells. `low` is the left (vertical
/// edge) or bottom (horizontal edge) cell. Joints are not creases and can
/// never fold.
struct SheetEdge {
  std::size_t low = 0;
  std::size_t high = 0;
  Axis axis = Axis::Vertical;  ///< Vertical edges lie on a line x = const
  bool is_crease = false;
  Assignment mv = Assignment::Unassigned;
  std::size_t crease = kNone;  ///< index of the originating pattern crease
  Coord coord = 0;             ///< x (vertical) or y (horizontal) on the paper
  Coord from = 0;              ///< extent along the edge
  Coord to = 0;
};

struct SheetCell {
  Coord x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};

/// Static geometry of a piece of paper cut into cells.
struct Sheet {
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<SheetCell> cells;  ///< row-major, id = row * nx + column
  std::vector<SheetEdge> edges;
  std::vector<std::vector<std::size_t>> cell_edges;
  bool one_dimensional = false;
  Coord scale = 2;  ///< engine units per paper unit

  Rational to_paper(Coord c) const { return Rational(c, scale); }

  /// Throw std::overflow_error when the coordinates need more than about
  /// 40 bits once scaled.
  static Sheet from_1d(const CreasePattern1D& pattern);
  static Sheet from_rect(const RectPattern& pattern);
};

/// image = sign * source + offset, per axis. Face up iff x_sign * y_sign > 0.
struct Placement {
  Coord x_offset = 0;
  Coord y_offset = 0;
  std::int8_t x_sign = 1;
  std::int8_t y_sign = 1;

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct FoldedSheet {
  std::vector<Placement> place;
  std::vector<std::uint8_t> folded;  ///< per edge
  std::vector<Coord> breaks_x;       ///< sorted image breakpoints
  std::vector<Coord> breaks_y;
  /// Pixel (column, row) at stacks[row * columns + column], bottom to top.
  std::vector<std::vector<std::uint32_t>> stacks;

  std::size_t columns() const { return breaks_x.size() - 1; }
  std::size_t rows() const { return breaks_y.size() - 1; }
  const std::vector<std::uint32_t>& stack(std::size_t column, std::size_t row) const {
    return stacks[row * columns() + column];
  }
};

FoldedSheet initial_state(const Sheet& sheet);

/// Image extent of a cell along an axis, in engine units.
struct Span {
  Coord lo = 0;
  Coord hi = 0;
};
Span image_span_x(const Sheet& sheet, const FoldedSheet& s, std::size_t cell);
Span image_span_y(const Sheet& sheet, const FoldedSheet& s, std::size_t cell);

enum class ExtentKind : std::uint8_t { OneLayer, TopK, BottomK, AllLayers };

std::string to_string(ExtentKind e);  ///< "one" / "top" / "bottom" / "all"

struct FoldMove {
  Axis axis = Axis::Vertical;  ///< Vertical: fold line x = position
  Rational position;           ///< image coordinate of the fold line, paper units
  Side moved_side = Side::Left;  ///< Left also means "below" for horizontal lines
  bool over = true;            ///< moved block swings over the top (else under)
  ExtentKind extent = ExtentKind::AllLayers;
  std::size_t layers = 0;      ///< moved cells touching the fold line
  std::size_t piece = kNone;   ///< lowest cell id of the moved piece (one-layer)
  std::vector<std::size_t> folded_edges;
  /// Sense each newly folded edge took (Mountain / Valley).
  std::vector<Assignment> senses;
};

struct Successor {
  FoldMove move;
  FoldedSheet state;
};

struct EngineOptions {
  /// Re-verify non-penetration after every move; a violation throws
  /// std::logic_error because legal moves must never produce one.
  bool check_invariants = true;
};

/// All legal simple folds from `state` under `model`.
///
/// Candidate lines are images of unfolded crease edges. The moved set is a
/// union of flaps (connected pieces lying wholly on one side) attached to the
/// rest only through unfolded creases on the line. Some-layers: the moved
/// cells form the top (or bottom) block of every pixel on that side.
/// One-layer: a single such flap attached by exactly one crease edge.
/// All-layers: every cell on one side, nothing straddling the line; the side
/// with the smaller reach is moved (the mirror move gives the same state up
/// to a rigid motion) and states in which some unfolded crease can no longer
/// be folded together with the layers glued to it are dropped.
std::vector<Successor> enumerate_successors(const Sheet& sheet, const FoldedSheet& state,
                                            LayerModel model, const EngineOptions& options = {});

/// Empty when the state is a valid flat folding; otherwise a description of
/// the first penetration or order inconsistency found.
std::optional<std::string> check_state(const Sheet& sheet, const FoldedSheet& state);

/// Images translated to start at 0; cell order is the source order. Without
/// `with_stacks` the layer order is left out, which is enough to tell
/// all-layers states apart: over and under folds there lead to the same moves.
std::string canonical_key(const Sheet& sheet, const FoldedSheet& state, bool with_stacks = true);

bool all_creases_folded(const Sheet& sheet, const FoldedSheet& state);

enum class SearchOutcome : std::uint8_t { Foldable, Unfoldable, Inconclusive };

std::string to_string(SearchOutcome o);

struct SearchOptions {
  std::size_t max_nodes = 2'000'000;
  std::size_t max_depth = 256;
  /// Shuffle successor order with this seed (verdicts must not change).
  std::optional<std::uint64_t> shuffle_seed;
  bool check_invariants = true;
};

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::Inconclusive;
  std::vector<FoldMove> trace;  ///< witness when Foldable
  std::size_t nodes = 0;        ///< states expanded
};

/// Depth-first search with memoization on canonical states.
SearchResult search(const Sheet& sheet, LayerModel model, const SearchOptions& options = {});

}  // namespace simplefold
