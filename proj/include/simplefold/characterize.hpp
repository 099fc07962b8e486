#pragma once

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "simplefold/model.hpp"

namespace simplefold {

enum class Side : std::uint8_t { Left, Right };

/// Fold the left crease and then the right crease of a segment that is no
/// longer than either flap, the two creases having opposite assignments.
struct Crimp {
  Rational left;
  Rational right;
  friend bool operator==(const Crimp&, const Crimp&) = default;
};

/// Fold the crease next to a paper end whose end segment is no longer than
/// its single flap. `side` names the end being folded over.
struct EndFold {
  Rational crease;
  Side side = Side::Left;
  friend bool operator==(const EndFold&, const EndFold&) = default;
};

/// Positions are expressed in the frame of the pattern the op applies to.
using ReductionOp = std::variant<Crimp, EndFold>;

std::string to_string(const ReductionOp& op);

/// Thrown when a reduction is requested on a pattern that has a suspicious
/// interval which is not innocent.
class CharacterizationViolation : public std::runtime_error {
 public:
  CharacterizationViolation(const std::string& what, Interval guilty)
      : std::runtime_error(what), guilty_(guilty) {}
  const Interval& guilty() const { return guilty_; }

 private:
  Interval guilty_;
};

struct AssignedVerdict {
  bool foldable = false;
  std::vector<ReductionOp> sequence;  ///< when foldable
  std::optional<Interval> guilty;     ///< when not foldable
};

/// Shortest (then leftmost) suspicious interval that is not innocent.
/// Precondition: pattern fully assigned.
std::optional<Interval> find_guilty_interval(const CreasePattern1D& pattern);

/// Foldable iff every suspicious interval is innocent; the witness is either
/// a full crimp/end-fold sequence or a guilty interval.
AssignedVerdict decide_assigned(const CreasePattern1D& pattern);

/// Picks the next crimp or end fold: leftmost shortest segment, grown to its
/// maximal run of equal-length segments; end fold if the run reaches a paper
/// end (left end preferred), else crimp at the leftmost adjacent M/V pair.
ReductionOp find_reducible_segment(const CreasePattern1D& pattern);

/// Performs the op and returns the glued result, re-anchored at 0.
/// Throws InvalidOperation with the reason when the op is not legal.
CreasePattern1D apply_reduction(const CreasePattern1D& pattern, const ReductionOp& op);

/// Every crimp and end fold that is legal on the pattern.
std::vector<ReductionOp> legal_reductions(const CreasePattern1D& pattern);

/// Full reduction sequence, or the guilty interval if there is none.
std::variant<std::vector<ReductionOp>, Interval> synthesize_sequence(const CreasePattern1D& pattern);

/// Number of creases an op consumes (2 for a crimp, 1 for an end fold).
std::size_t creases_consumed(const ReductionOp& op);

}  // namespace simplefold
