#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simplefold/model.hpp"

namespace simplefold {

/// Why folding a crease with all layers fails.
struct FoldConflict {
  enum class Kind : std::uint8_t {
    EqualAssignments,  ///< crease lands on a crease with the same assignment
    NonCreasePoint,    ///< crease lands on an interior point that is not a crease
  };
  Kind kind = Kind::EqualAssignments;
  Rational position;         ///< the offending crease
  Rational mirror;           ///< where it lands
  Assignment assignment = Assignment::Unassigned;
  Assignment mirror_assignment = Assignment::Unassigned;  ///< meaningful for EqualAssignments
};

struct ValidityReport {
  std::size_t crease = 0;
  bool valid = false;
  std::optional<FoldConflict> conflict;
};

/// All-layers first-fold check at `crease` (0-based index). Every crease
/// within distance d of it, d being the distance to the nearest paper end,
/// must reflect onto a crease of opposite or unassigned assignment, or onto a
/// paper end.
ValidityReport is_valid_all_layers_fold(const CreasePattern1D& pattern, std::size_t crease);

/// Folds at `crease` and discards the shorter side (the left side on a tie).
/// The result is re-anchored at 0. An Unassigned crease receiving an assigned
/// one takes the opposite assignment. Throws InvalidOperation if the fold is
/// not valid.
CreasePattern1D reduce_at(const CreasePattern1D& pattern, std::size_t crease);

struct PlausibleCrease {
  std::size_t crease = 0;
  Rational distance;  ///< to the nearest paper end
};

/// Creases around which crease locations are mirror-symmetric up to, not
/// including, the nearest paper end.
std::vector<PlausibleCrease> plausible_creases(const CreasePattern1D& pattern);

struct AllLayersVerdict {
  bool foldable = false;
  /// Fold positions, each in the frame of the pattern it was made on.
  std::vector<Rational> sequence;
  /// The same folds located in the input pattern's frame.
  std::vector<Rational> original_positions;
  /// Set when not foldable: no plausible crease, or the nearest one is invalid.
  std::string reason;
  std::optional<FoldConflict> conflict;
};

/// Greedy: fold the plausible crease nearest an end (leftmost on ties) while
/// it is valid. Cubic time.
AllLayersVerdict decide_all_layers_mixed(const CreasePattern1D& pattern);

}  // namespace simplefold
