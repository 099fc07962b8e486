#include "simplefold/rect.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace simplefold {

char to_char(Axis a) { return a == Axis::Vertical ? 'v' : 'h'; }

RectPattern::RectPattern(Rational width, Rational height, std::vector<RectCrease> creases)
    : width_(std::move(width)), height_(std::move(height)), creases_(std::move(creases)) {
  if (width_ <= Rational(0) || height_ <= Rational(0)) {
    throw std::invalid_argument("rectangle dimensions must be positive");
  }
  for (const auto& c : creases_) {
    const Rational& across = span_of(c.axis);
    const Rational& along = length_of(c.axis);
    if (c.coord <= Rational(0) || c.coord >= across) {
      throw std::invalid_argument(std::string("crease line ") + to_char(c.axis) + "=" +
                                  c.coord.to_string() + " is not strictly inside the paper");
    }
    if (c.from >= c.to) throw std::invalid_argument("crease segment must have positive length");
    if (c.from < Rational(0) || c.to > along) {
      throw std::invalid_argument("crease segment leaves the rectangle");
    }
  }
  for (std::size_t i = 0; i < creases_.size(); ++i) {
    for (std::size_t j = i + 1; j < creases_.size(); ++j) {
      const auto& a = creases_[i];
      const auto& b = creases_[j];
      if (a.axis == b.axis && a.coord == b.coord && a.from < b.to && b.from < a.to) {
        throw std::invalid_argument("overlapping crease segments on line " +
                                    std::string(1, to_char(a.axis)) + "=" + a.coord.to_string());
      }
    }
  }
}

RectPattern embed_as_vertical_lines(const CreasePattern1D& p, const Rational& height) {
  std::vector<RectCrease> out;
  for (const auto& c : p.creases()) {
    out.push_back({Axis::Vertical, c.position, Rational(0), height, c.mv});
  }
  return RectPattern(p.length(), height, std::move(out));
}

std::string to_string(RectVerdict::Reason r) {
  switch (r) {
    case RectVerdict::Reason::None: return "none";
    case RectVerdict::Reason::BothDirections: return "both-directions";
    case RectVerdict::Reason::PartialSpan: return "partial-span";
    case RectVerdict::Reason::ConflictingLine: return "conflicting-line";
    case RectVerdict::Reason::NoValidAssignment: return "no-valid-assignment";
  }
  return "?";
}

RectVerdict decide_rect_one_layer(const RectPattern& pattern) {
  RectVerdict v;
  const auto& cs = pattern.creases();
  if (cs.empty()) {
    v.foldable = true;
    v.projected = CreasePattern1D(pattern.width(), {});
    return v;
  }
  const Axis axis = cs.front().axis;
  if (std::any_of(cs.begin(), cs.end(), [&](const RectCrease& c) { return c.axis != axis; })) {
    v.reason = RectVerdict::Reason::BothDirections;
    v.detail = "vertical and horizontal creases cannot both be folded one layer at a time";
    return v;
  }

  std::map<Rational, std::vector<const RectCrease*>> lines;
  for (const auto& c : cs) lines[c.coord].push_back(&c);

  std::vector<Crease> projected;
  for (auto& [coord, pieces] : lines) {
    std::sort(pieces.begin(), pieces.end(),
              [](const RectCrease* a, const RectCrease* b) { return a->from < b->from; });
    Rational covered(0);
    Assignment mv = Assignment::Unassigned;
    for (const RectCrease* piece : pieces) {
      if (piece->from != covered) break;
      covered = piece->to;
      if (piece->mv == Assignment::Unassigned) continue;
      if (mv != Assignment::Unassigned && mv != piece->mv) {
        v.reason = RectVerdict::Reason::ConflictingLine;
        v.detail = "line " + std::string(1, to_char(axis)) + "=" + coord.to_string() +
                   " mixes mountain and valley pieces";
        return v;
      }
      mv = piece->mv;
    }
    if (covered != pattern.length_of(axis)) {
      v.reason = RectVerdict::Reason::PartialSpan;
      v.detail = "crease line " + std::string(1, to_char(axis)) + "=" + coord.to_string() +
                 " does not cross the whole rectangle";
      return v;
    }
    projected.push_back({coord, mv});
  }

  v.projected = CreasePattern1D(pattern.span_of(axis), std::move(projected));
  v.mixed = decide_mixed(*v.projected, LayerModel::OneLayer);
  v.foldable = v.mixed.foldable;
  if (!v.foldable) v.reason = RectVerdict::Reason::NoValidAssignment;
  return v;
}

}  // namespace simplefold
