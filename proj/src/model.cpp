#include "simplefold/model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "simplefold/errors.hpp"

namespace simplefold {

char to_char(Assignment a) {
  switch (a) {
    case Assignment::Mountain: return 'M';
    case Assignment::Valley: return 'V';
    case Assignment::Unassigned: return 'U';
  }
  return '?';
}

Assignment assignment_from_string(std::string_view s) {
  if (s == "M" || s == "m") return Assignment::Mountain;
  if (s == "V" || s == "v") return Assignment::Valley;
  if (s == "U" || s == "u") return Assignment::Unassigned;
  throw std::invalid_argument("unknown assignment \"" + std::string(s) + "\" (expected M, V or U)");
}

std::string to_string(LayerModel m) {
  switch (m) {
    case LayerModel::OneLayer: return "one";
    case LayerModel::SomeLayers: return "some";
    case LayerModel::AllLayers: return "all";
  }
  return "?";
}

LayerModel layer_model_from_string(std::string_view s) {
  if (s == "one") return LayerModel::OneLayer;
  if (s == "some") return LayerModel::SomeLayers;
  if (s == "all") return LayerModel::AllLayers;
  throw std::invalid_argument("unknown model \"" + std::string(s) + "\" (expected one, some or all)");
}

Assignment opposite(Assignment a) {
  switch (a) {
    case Assignment::Mountain: return Assignment::Valley;
    case Assignment::Valley: return Assignment::Mountain;
    case Assignment::Unassigned: return Assignment::Unassigned;
  }
  return a;
}

CreasePattern1D::CreasePattern1D(Rational length, std::vector<Crease> creases)
    : length_(std::move(length)), creases_(std::move(creases)) {
  if (length_ <= Rational(0)) throw std::invalid_argument("paper length must be positive");
  for (std::size_t i = 0; i < creases_.size(); ++i) {
    const auto& x = creases_[i].position;
    if (x <= Rational(0) || x >= length_) {
      throw std::invalid_argument("crease at " + x.to_string() + " is not strictly inside [0, " +
                                  length_.to_string() + "]");
    }
    if (i > 0 && creases_[i - 1].position >= x) {
      throw std::invalid_argument(creases_[i - 1].position == x
                                      ? "coincident creases at " + x.to_string()
                                      : "crease positions must be strictly increasing");
    }
  }
}

const Rational& CreasePattern1D::vertex_position(std::size_t v) const {
  static const Rational zero(0);
  if (v == 0) return zero;
  if (v <= creases_.size()) return creases_[v - 1].position;
  if (v == creases_.size() + 1) return length_;
  throw std::out_of_range("vertex index out of range");
}

Rational CreasePattern1D::segment_length(std::size_t s) const {
  return vertex_position(s + 1) - vertex_position(s);
}

bool CreasePattern1D::is_assigned() const {
  return std::none_of(creases_.begin(), creases_.end(),
                      [](const Crease& c) { return c.mv == Assignment::Unassigned; });
}

bool CreasePattern1D::is_unassigned() const {
  return std::all_of(creases_.begin(), creases_.end(),
                     [](const Crease& c) { return c.mv == Assignment::Unassigned; });
}

CreasePattern1D CreasePattern1D::with_assignment(std::size_t crease, Assignment mv) const {
  CreasePattern1D out = *this;
  out.creases_.at(crease).mv = mv;
  return out;
}

CreasePattern1D CreasePattern1D::mirrored() const {
  std::vector<Crease> out;
  out.reserve(creases_.size());
  for (auto it = creases_.rbegin(); it != creases_.rend(); ++it) {
    out.push_back({length_ - it->position, it->mv});
  }
  return CreasePattern1D(length_, std::move(out));
}

std::string CreasePattern1D::to_string() const {
  std::ostringstream os;
  os << "[0," << length_ << "]";
  for (const auto& c : creases_) os << ' ' << to_char(c.mv) << '@' << c.position;
  return os.str();
}

Rational FoldedImage::at_segment(std::size_t s, const Rational& x) const {
  return direction.at(s) > 0 ? x + offset[s] : offset[s] - x;
}

FoldedImage folded_image_map(const CreasePattern1D& pattern) {
  FoldedImage img;
  const std::size_t n = pattern.segment_count();
  img.offset.reserve(n);
  img.direction.reserve(n);
  img.offset.emplace_back(0);
  img.direction.push_back(1);
  for (std::size_t s = 1; s < n; ++s) {
    // Continuity at the crease between s-1 and s, with the direction flipped.
    const Rational& c = pattern.vertex_position(s);
    const Rational at_crease = img.at_segment(s - 1, c);
    const int dir = -img.direction.back();
    img.direction.push_back(dir);
    img.offset.push_back(dir > 0 ? at_crease - c : at_crease + c);
  }
  return img;
}

std::vector<Rational> vertex_images(const CreasePattern1D& pattern) {
  const FoldedImage img = folded_image_map(pattern);
  std::vector<Rational> out;
  out.reserve(pattern.vertex_count());
  for (std::size_t v = 0; v < pattern.vertex_count(); ++v) {
    const std::size_t seg = v == 0 ? 0 : v - 1;
    out.push_back(img.at_segment(seg, pattern.vertex_position(v)));
  }
  return out;
}

Rational folded_image(const CreasePattern1D& pattern, const Rational& x) {
  if (x < Rational(0) || x > pattern.length()) {
    throw std::domain_error("point " + x.to_string() + " lies outside the paper");
  }
  const FoldedImage img = folded_image_map(pattern);
  std::size_t seg = 0;
  while (seg + 1 < pattern.segment_count() && pattern.vertex_position(seg + 1) < x) ++seg;
  return img.at_segment(seg, x);
}

ImageExtent image_extent(const std::vector<Rational>& images, const Interval& iv) {
  ImageExtent e{images.at(iv.left_vertex), images.at(iv.left_vertex)};
  for (std::size_t v = iv.left_vertex + 1; v <= iv.right_vertex; ++v) {
    if (images[v] < e.lo) e.lo = images[v];
    if (images[v] > e.hi) e.hi = images[v];
  }
  return e;
}

namespace {

bool strictly_outside(const Rational& x, const ImageExtent& e) { return x < e.lo || x > e.hi; }

bool suspicious_with_images(const CreasePattern1D& pattern, const std::vector<Rational>& images,
                            const Interval& iv, WorkCounter* counter) {
  if (!iv.is_interior(pattern) || iv.left_vertex >= iv.right_vertex) return false;
  if (counter != nullptr) counter->steps += iv.right_vertex - iv.left_vertex + 1;
  const ImageExtent e = image_extent(images, iv);
  return strictly_outside(images[iv.left_vertex - 1], e) &&
         strictly_outside(images[iv.right_vertex + 1], e);
}

}  // namespace

bool is_suspicious(const CreasePattern1D& pattern, const Interval& iv) {
  return suspicious_with_images(pattern, vertex_images(pattern), iv, nullptr);
}

std::vector<Interval> suspicious_intervals(const CreasePattern1D& pattern, WorkCounter* counter) {
  const auto images = vertex_images(pattern);
  std::vector<Interval> out;
  const std::size_t n = pattern.crease_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto iv = Interval::between_creases(i, j);
      if (suspicious_with_images(pattern, images, iv, counter)) out.push_back(iv);
    }
  }
  return out;
}

CreaseCounts crease_counts(const CreasePattern1D& pattern, const Interval& iv) {
  if (!iv.is_interior(pattern) || iv.left_vertex > iv.right_vertex) {
    throw std::domain_error("interval endpoints must be creases");
  }
  CreaseCounts c;
  for (std::size_t k = iv.first_crease(); k <= iv.last_crease(); ++k) {
    switch (pattern.creases()[k].mv) {
      case Assignment::Mountain: ++c.mountains; break;
      case Assignment::Valley: ++c.valleys; break;
      case Assignment::Unassigned: ++c.unassigned; break;
    }
  }
  return c;
}

bool is_innocent(const CreasePattern1D& pattern, const Interval& iv) {
  const CreaseCounts c = crease_counts(pattern, iv);
  if (c.unassigned != 0) {
    throw PreconditionError("innocence is only defined for fully assigned intervals");
  }
  const auto diff = c.mountains > c.valleys ? c.mountains - c.valleys : c.valleys - c.mountains;
  return diff <= 1;
}

bool shorter_interval(const CreasePattern1D& pattern, const Interval& a, const Interval& b) {
  const Rational la = pattern.vertex_position(a.right_vertex) - pattern.vertex_position(a.left_vertex);
  const Rational lb = pattern.vertex_position(b.right_vertex) - pattern.vertex_position(b.left_vertex);
  if (la != lb) return la < lb;
  return a.left_vertex < b.left_vertex;
}

}  // namespace simplefold
