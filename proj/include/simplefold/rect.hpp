#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simplefold/mixed_assign.hpp"
#include "simplefold/model.hpp"

namespace simplefold {

enum class Axis : std::uint8_t { Vertical, Horizontal };

char to_char(Axis a);  ///< 'v' / 'h'

/// Axis-aligned crease segment. A vertical crease lies on x = coord for
/// y in [from, to]; a horizontal one on y = coord for x in [from, to].
struct RectCrease {
  Axis axis = Axis::Vertical;
  Rational coord;
  Rational from;
  Rational to;
  Assignment mv = Assignment::Unassigned;

  friend bool operator==(const RectCrease&, const RectCrease&) = default;
};

/// Orthogonal crease pattern on the rectangle [0, width] x [0, height].
class RectPattern {
 public:
  RectPattern() : width_(1), height_(1) {}
  /// Throws std::invalid_argument for segments outside the rectangle, on its
  /// boundary, of zero length, or overlapping another segment on the same line.
  RectPattern(Rational width, Rational height, std::vector<RectCrease> creases);

  const Rational& width() const { return width_; }
  const Rational& height() const { return height_; }
  const std::vector<RectCrease>& creases() const { return creases_; }

  /// Extent of the paper across the given crease axis (width for vertical creases).
  const Rational& span_of(Axis a) const { return a == Axis::Vertical ? width_ : height_; }
  /// Extent along the given crease axis (height for vertical creases).
  const Rational& length_of(Axis a) const { return a == Axis::Vertical ? height_ : width_; }

  friend bool operator==(const RectPattern&, const RectPattern&) = default;

 private:
  Rational width_;
  Rational height_;
  std::vector<RectCrease> creases_;
};

/// Creases of `p` as full vertical lines on a width x height rectangle.
RectPattern embed_as_vertical_lines(const CreasePattern1D& p, const Rational& height);

struct RectVerdict {
  enum class Reason : std::uint8_t {
    None,
    BothDirections,   ///< vertical and horizontal creases present
    PartialSpan,      ///< a crease line does not cross the whole rectangle
    ConflictingLine,  ///< one line carries both a mountain and a valley piece
    NoValidAssignment,
  };
  bool foldable = false;
  Reason reason = Reason::None;
  std::string detail;
  std::optional<CreasePattern1D> projected;
  MixedVerdict mixed;
};

std::string to_string(RectVerdict::Reason r);

/// One-layer foldability of a mixed rectangular pattern: creases in both
/// directions can never be folded; creases in one direction reduce to a 1D
/// mixed pattern.
RectVerdict decide_rect_one_layer(const RectPattern& pattern);

}  // namespace simplefold
