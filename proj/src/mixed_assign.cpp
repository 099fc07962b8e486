#include "simplefold/mixed_assign.hpp"

#include <algorithm>
#include <stdexcept>

namespace simplefold {

namespace {

Assignment current(const CreasePattern1D& pattern, const PartialAssignment& state, std::size_t k) {
  const Assignment given = pattern.creases()[k].mv;
  if (given != Assignment::Unassigned) return given;
  auto it = state.values.find(k);
  return it == state.values.end() ? Assignment::Unassigned : it->second;
}

}  // namespace

CreasePattern1D apply_assignment(const CreasePattern1D& pattern, const PartialAssignment& decided) {
  std::vector<Crease> cs = pattern.creases();
  for (const auto& [k, mv] : decided.values) {
    if (cs.at(k).mv == Assignment::Unassigned) cs[k].mv = mv;
  }
  return CreasePattern1D(pattern.length(), std::move(cs));
}

std::optional<PartialAssignment> process_interval(const PartialAssignment& state,
                                                  const CreasePattern1D& pattern,
                                                  const Interval& iv, WorkCounter* counter) {
  std::size_t mountains = 0;
  std::size_t valleys = 0;
  std::vector<std::size_t> open;
  for (std::size_t k = iv.first_crease(); k <= iv.last_crease(); ++k) {
    switch (current(pattern, state, k)) {
      case Assignment::Mountain: ++mountains; break;
      case Assignment::Valley: ++valleys; break;
      case Assignment::Unassigned: open.push_back(k); break;
    }
  }
  if (counter != nullptr) counter->steps += 2 * iv.crease_span();

  const std::size_t total = iv.crease_span();
  const std::size_t k = total / 2;
  PartialAssignment next = state;

  auto balance = [&](std::vector<std::size_t>::const_iterator first,
                     std::vector<std::size_t>::const_iterator last) {
    std::size_t m = mountains;
    for (auto it = first; it != last; ++it) {
      next.values[*it] = m < k ? Assignment::Mountain : Assignment::Valley;
      if (m < k) ++m;
    }
  };

  if (total % 2 == 0) {
    if (mountains > k || valleys > k) return std::nullopt;
    balance(open.begin(), open.end());
    return next;
  }
  if (mountains <= k && valleys <= k) {
    // open is non-empty here because mountains + valleys <= 2k < total.
    balance(open.begin() + 1, open.end());
    return next;
  }
  if (mountains == k + 1 && valleys <= k) {
    for (auto c : open) next.values[c] = Assignment::Valley;
    return next;
  }
  if (valleys == k + 1 && mountains <= k) {
    for (auto c : open) next.values[c] = Assignment::Mountain;
    return next;
  }
  return std::nullopt;
}

std::optional<PartialAssignment> find_valid_assignment(const CreasePattern1D& pattern,
                                                       const AssignOptions& options) {
  std::vector<Interval> order = suspicious_intervals(pattern, options.counter);
  std::sort(order.begin(), order.end(), [&](const Interval& a, const Interval& b) {
    if (options.tie_break == TieBreak::Leftmost) return shorter_interval(pattern, a, b);
    const Rational la = pattern.vertex_position(a.right_vertex) - pattern.vertex_position(a.left_vertex);
    const Rational lb = pattern.vertex_position(b.right_vertex) - pattern.vertex_position(b.left_vertex);
    if (la != lb) return la < lb;
    return a.left_vertex > b.left_vertex;
  });

  PartialAssignment state;
  for (const auto& iv : order) {
    auto next = process_interval(state, pattern, iv, options.counter);
    if (!next) return std::nullopt;
    state = std::move(*next);
  }
  for (std::size_t c = 0; c < pattern.crease_count(); ++c) {
    if (current(pattern, state, c) == Assignment::Unassigned) state.values[c] = Assignment::Mountain;
  }
  if (options.counter != nullptr) options.counter->steps += pattern.crease_count();
  return state;
}

MixedVerdict decide_mixed(const CreasePattern1D& pattern, LayerModel model) {
  if (model == LayerModel::AllLayers) {
    throw std::invalid_argument("decide_mixed covers the one-layer and some-layers models");
  }
  MixedVerdict v;
  auto assignment = find_valid_assignment(pattern);
  if (!assignment) return v;
  v.assignment = std::move(*assignment);
  CreasePattern1D completed = apply_assignment(pattern, v.assignment);
  AssignedVerdict inner = decide_assigned(completed);
  if (!inner.foldable) {
    throw std::logic_error("completed assignment failed the assigned characterization: " +
                           completed.to_string());
  }
  v.foldable = true;
  v.sequence = std::move(inner.sequence);
  v.completed = std::move(completed);
  return v;
}

}  // namespace simplefold
