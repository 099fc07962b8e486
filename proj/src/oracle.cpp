#include "simplefold/oracle.hpp"

#include <stdexcept>

namespace simplefold {

namespace {

void require_rect_model(LayerModel model) {
  if (model == LayerModel::OneLayer) {
    throw std::invalid_argument("the rectangle oracle simulates some-layers and all-layers folds only");
  }
}

}  // namespace

FoldedSheet initial_state_1d(const CreasePattern1D& pattern) {
  return initial_state(Sheet::from_1d(pattern));
}

std::vector<Successor> enumerate_successors_1d(const CreasePattern1D& pattern,
                                               const FoldedSheet& state, LayerModel model) {
  return enumerate_successors(Sheet::from_1d(pattern), state, model);
}

SearchResult search_1d(const CreasePattern1D& pattern, LayerModel model,
                       const SearchOptions& options) {
  return search(Sheet::from_1d(pattern), model, options);
}

FoldedSheet initial_state_rect(const RectPattern& pattern) {
  return initial_state(Sheet::from_rect(pattern));
}

std::vector<Successor> enumerate_successors_rect(const RectPattern& pattern,
                                                 const FoldedSheet& state, LayerModel model) {
  require_rect_model(model);
  return enumerate_successors(Sheet::from_rect(pattern), state, model);
}

SearchResult search_rect(const RectPattern& pattern, LayerModel model,
                         const SearchOptions& options) {
  require_rect_model(model);
  return search(Sheet::from_rect(pattern), model, options);
}

}  // namespace simplefold
