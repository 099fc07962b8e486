#pragma once

// Brute-force foldability by explicit simulation: the reference every
// decider is checked against.

#include <vector>

#include "simplefold/fold_engine.hpp"

namespace simplefold {

FoldedSheet initial_state_1d(const CreasePattern1D& pattern);

/// Moves from `state`, a state of `pattern`'s sheet. Edge ids in the moves
/// are crease indices.
std::vector<Successor> enumerate_successors_1d(const CreasePattern1D& pattern,
                                               const FoldedSheet& state, LayerModel model);

SearchResult search_1d(const CreasePattern1D& pattern, LayerModel model,
                       const SearchOptions& options = {});

FoldedSheet initial_state_rect(const RectPattern& pattern);

/// Full-line folds only. Throws std::invalid_argument for the one-layer
/// model, which the rectangle oracle does not simulate.
std::vector<Successor> enumerate_successors_rect(const RectPattern& pattern,
                                                 const FoldedSheet& state, LayerModel model);

SearchResult search_rect(const RectPattern& pattern, LayerModel model,
                         const SearchOptions& options = {});

/// A 1D pattern is foldable when its search says so; Inconclusive is left
/// to the caller.
inline bool is_foldable(const SearchResult& r) { return r.outcome == SearchOutcome::Foldable; }

}  // namespace simplefold
