#pragma once

// Generators for the hardness instances: the 3SAT rectangle pattern and the
// 3-Partition polygons (assigned with Arm 2, and the unassigned Cactus
// variant), plus structural validation and FOLD export.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "simplefold/model.hpp"
#include "simplefold/rect.hpp"

namespace simplefold {

// ---------------------------------------------------------------- 3SAT --

/// Literals are +v / -v for variable v in [1, variables].
struct ThreeSatFormula {
  std::size_t variables = 0;
  std::vector<std::array<int, 3>> clauses;

  /// "1 -2 3; 1 -2 -3". Throws std::invalid_argument.
  static ThreeSatFormula parse(const std::string& text);
  /// Throws std::invalid_argument unless every literal names a declared variable.
  void validate() const;
  bool satisfiable() const;  ///< brute force over 2^variables
};

/// Spacing of the 3SAT pattern. The spaced preset keeps lines that must fold
/// at different times from landing on one image while the intended sequence
/// runs, which matters when coincident lines can only fold together
/// (all-layers). The compact preset drops those gaps; it is the smallest
/// layout and is meant for the some-layers model.
struct ThreeSatConfig {
  std::int64_t first_variable = 2;   ///< y of t_1
  std::int64_t variable_step = 5;    ///< y from t_i to t_(i+1), grows by variable_growth
  std::int64_t variable_growth = 2;
  std::int64_t clause_step = 7;      ///< x between literal triples, grows by clause_growth
  std::int64_t clause_growth = 6;
  std::int64_t flag_step = 4;        ///< x between flag lines, grows by flag_growth
  std::int64_t flag_growth = 4;
  bool merge_gaps = true;            ///< pad below the clause rows and left of the flags

  static ThreeSatConfig spaced() { return {}; }
  static ThreeSatConfig compact() { return {1, 3, 0, 3, 0, 2, 0, false}; }
  /// Throws std::invalid_argument when steps are too small to keep lines apart.
  void validate() const;
};

/// Coordinates chosen by gen_3sat_rect, exposed for inspection and tests.
/// The pattern is a unit grid: every integer x in (0, width) and y in
/// (0, height) carries a crease line, unassigned wherever nothing below says
/// otherwise.
struct ThreeSatLayout {
  Rational width;
  Rational height;
  std::vector<Rational> t_lines;        ///< y of t_i, i = 1..n
  std::vector<Rational> f_lines;        ///< y of f_i = t_i + 1
  std::vector<Rational> flag_lines;     ///< x of the flag line e_i of variable i
  std::vector<Rational> release_lines;  ///< x of the release line r_i = e_i + 1
  std::vector<Rational> clause_lines;   ///< y of the check line of each clause (top rows)
  std::vector<Rational> literal_lines;  ///< x of the three literal lines of each clause
  std::size_t variable_sections = 0;
};

ThreeSatLayout layout_3sat(const ThreeSatFormula& formula,
                           const ThreeSatConfig& config = ThreeSatConfig::spaced());

/// Mixed pattern on the layout above. A crease line folds only when its
/// assigned segments agree, i.e. when the perpendicular lines between them
/// have the right fold parity:
///   - literal line: its variable line (t_i or f_i) is folded;
///   - flag e_i: exactly one of t_i, f_i is folded;
///   - t_i and f_i: e_i and r_i are both folded or both not;
///   - clause line: an odd number of its three literal lines are folded;
///   - release r_i: every clause line is folded.
/// Folding both t_i and f_i before e_i strands e_i for good, and after e_i
/// the second one waits for r_i, so before the first release at most one of
/// each pair is folded. A line always folds whole and the face of a segment
/// depends only on which perpendicular lines are folded, so this holds in
/// every layer model. Unfoldable unless the formula is satisfiable; the
/// converse is what the spacing is for (see ThreeSatConfig).
RectPattern gen_3sat_rect(const ThreeSatFormula& formula,
                          const ThreeSatConfig& config = ThreeSatConfig::spaced());

// --------------------------------------------------------- 3-Partition --

struct ThreePartitionInstance {
  std::vector<std::int64_t> numbers;

  std::size_t m() const { return numbers.size() / 3; }
  /// Cage parameter t = total / 3 (steps are 2t high). Equals the common
  /// triple sum total / m only when m = 3.
  std::int64_t target() const;
  /// Throws std::invalid_argument: count not a positive multiple of 3,
  /// non-positive numbers, or total not divisible by m or by 3.
  void validate() const;
  static ThreePartitionInstance parse(const std::string& text);  ///< "1,2,3"
};

struct Point2 {
  Rational x;
  Rational y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Closed axis-aligned rectangle [x0, x1] x [y0, y1].
struct Box {
  Rational x0, y0, x1, y1;
};

struct PolyCrease {
  Point2 a;
  Point2 b;
  Assignment mv = Assignment::Unassigned;
};

struct GadgetPart {
  std::string name;
  std::vector<Box> boxes;
  std::vector<std::size_t> creases;  ///< indices into PolyPattern::creases
};

/// L-shaped branch hanging below the Cactus: a stem attached to the strip
/// just beside crease `crease` and an arm crossing that crease's line.
struct CactusBranch {
  std::size_t crease = 0;  ///< index within the Cactus creases, c_0 rightmost
  Box stem;
  Box arm;
};

/// Every dimension of the 3-Partition layout, in grid units.
struct GadgetConfig {
  std::int64_t column_width = 6;       ///< also the Wrapper crease spacing
  std::int64_t wrapper_height = 2;
  std::int64_t wrapper_tail = 5;       ///< strip beyond the last crease
  std::int64_t staircase_width = 2;
  std::int64_t staircase_gap = 2;      ///< from the last crease to the Staircase
  std::int64_t unit = 1;               ///< Staircase height per unit of a_i
  std::int64_t bar_thickness = 1;
  std::int64_t bar_extra = 8;          ///< Bar reach beyond the Wrapper
  std::int64_t arm1_thickness = 1;
  std::int64_t arm1_drop = 5;          ///< Wrapper bottom to Arm 1 top
  std::int64_t arm2_length = 3;
  std::int64_t cage_wall = 1;
  std::int64_t cage_inset = 1;         ///< step-to-step wall growth
  std::int64_t cage_opening = 4;       ///< minimum gap between the walls
  std::int64_t cage_clearance = 2;     ///< Bar top to Cage bottom
  std::int64_t branch_offset = 1;      ///< crease to stem
  std::int64_t branch_width = 1;
  std::int64_t branch_drop = 1;
  std::int64_t branch_reach = 2;       ///< arm extent past the crease line
  std::int64_t branch_thickness = 1;
  std::size_t staircase_attachment_creases = 0;
};

struct PartitionFacts {
  std::vector<std::int64_t> numbers;
  std::size_t m = 0;
  std::int64_t t = 0;
  bool cactus = false;
  bool arm2 = true;
  GadgetConfig config;
};

struct PolyPattern {
  std::vector<Point2> vertices;  ///< counterclockwise
  std::vector<PolyCrease> creases;
  std::vector<GadgetPart> parts;
  std::vector<CactusBranch> branches;
  PartitionFacts facts;

  const GadgetPart* part(const std::string& name) const;
};

/// Assigned reduction: Bar, Staircase (alternating M/V), Wrapper (2m valley
/// creases), Column, Cage (two walls of m steps of height 2t), Arm 1 and,
/// unless `with_arm2` is false, Arm 2. Without Arm 2 the construction admits
/// the unintended folding that skips aligning the Bar with the Cage (one
/// Wrapper crease, then a Staircase valley fold that lifts the Bar clear);
/// the flag exists only to study that case.
PolyPattern gen_3partition_assigned(const ThreePartitionInstance& inst, bool with_arm2 = true,
                                    const GadgetConfig& config = {});

/// Unassigned reduction: every crease Unassigned and the Wrapper replaced by
/// the Cactus, whose branches force the creases to fold from c_0 leftwards.
PolyPattern gen_3partition_unassigned(const ThreePartitionInstance& inst,
                                      const GadgetConfig& config = {});

/// Boundary of a union of boxes with pairwise disjoint interiors, as a
/// counterclockwise orthogonal polygon. Throws std::invalid_argument if the
/// union is not a single simply connected region with a simple boundary.
std::vector<Point2> trace_union_boundary(const std::vector<Box>& boxes);

struct ValidationIssue {
  std::string check;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Polygon simplicity, orthogonality and orientation, crease containment,
/// part-count formulas and Cactus branch alignment.
ValidationReport validate_polypattern(const PolyPattern& p);

/// FOLD format: boundary and crease edges split at every shared vertex.
nlohmann::json to_fold(const PolyPattern& p);

}  // namespace simplefold
