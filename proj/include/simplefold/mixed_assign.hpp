#pragma once

#include <map>
#include <optional>
#include <vector>

#include "simplefold/characterize.hpp"
#include "simplefold/model.hpp"

namespace simplefold {

/// Mountain/valley choices for creases that are Unassigned in the input,
/// keyed by crease index. Pre-assigned creases never appear here.
struct PartialAssignment {
  std::map<std::size_t, Assignment> values;

  friend bool operator==(const PartialAssignment&, const PartialAssignment&) = default;
};

/// The pattern with `decided` applied on top of its own assignments.
CreasePattern1D apply_assignment(const CreasePattern1D& pattern, const PartialAssignment& decided);

/// Order in which equal-length suspicious intervals are processed.
enum class TieBreak : std::uint8_t { Leftmost, Rightmost };

struct AssignOptions {
  TieBreak tie_break = TieBreak::Leftmost;
  WorkCounter* counter = nullptr;
};

/// Balances one minimal suspicious interval.
///
/// Even crease count 2k: fill Unassigned creases so the interval has k of each
/// sign (mountains first, left to right). Odd count 2k+1: leave the leftmost
/// Unassigned crease open and balance the rest k/k; if k+1 creases of one
/// sign are already fixed, complete the rest with the other sign. Returns
/// nullopt when neither is possible, which means no valid assignment exists.
std::optional<PartialAssignment> process_interval(const PartialAssignment& state,
                                                  const CreasePattern1D& pattern,
                                                  const Interval& iv,
                                                  WorkCounter* counter = nullptr);

/// Completion of every Unassigned crease whose result is flat-foldable, or
/// nullopt if there is none. Creases left free by every suspicious interval
/// become Mountain.
std::optional<PartialAssignment> find_valid_assignment(const CreasePattern1D& pattern,
                                                       const AssignOptions& options = {});

struct MixedVerdict {
  bool foldable = false;
  PartialAssignment assignment;
  std::optional<CreasePattern1D> completed;
  std::vector<ReductionOp> sequence;
};

/// One-layer and some-layers foldability of a mixed 1D pattern (the two
/// models agree). Throws std::invalid_argument for LayerModel::AllLayers.
MixedVerdict decide_mixed(const CreasePattern1D& pattern, LayerModel model);

}  // namespace simplefold
