#pragma once

// Exhaustive enumeration of small 1D patterns and brute-force reference
// checks, shared by the acceptance suite and the fuzz command.

#include <functional>
#include <random>
#include <vector>

#include "simplefold/model.hpp"

namespace simplefold {

struct EnvelopeConfig {
  int min_length = 1;
  int max_length = 8;
  std::size_t max_creases = 5;
  /// Upper bound on Unassigned creases; 0 gives assigned patterns only.
  std::size_t max_unassigned = 0;
};

/// Every pattern with integer crease positions in [1, L-1], L in
/// [min_length, max_length], in a fixed deterministic order.
std::vector<CreasePattern1D> envelope_patterns(const EnvelopeConfig& config);

struct RandomConfig {
  int max_length = 8;
  int max_denominator = 4;
  std::size_t max_creases = 5;
  double unassigned_rate = 0.3;
};

/// Random pattern with rational positions k/d, d <= max_denominator.
CreasePattern1D random_pattern(std::mt19937_64& rng, const RandomConfig& config);

/// Tries all 2^u completions of the Unassigned creases with decide_assigned.
bool completion_exists(const CreasePattern1D& pattern);

}  // namespace simplefold
