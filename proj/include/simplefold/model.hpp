#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simplefold/rational.hpp"

namespace simplefold {

enum class Assignment : std::uint8_t { Mountain, Valley, Unassigned };

/// How many layers a simple fold may move.
enum class LayerModel : std::uint8_t { OneLayer, SomeLayers, AllLayers };

std::string to_string(LayerModel m);           ///< "one" / "some" / "all"
LayerModel layer_model_from_string(std::string_view s);

char to_char(Assignment a);
Assignment assignment_from_string(std::string_view s);  ///< "M" / "V" / "U"
Assignment opposite(Assignment a);                      ///< U stays U

struct Crease {
  Rational position;
  Assignment mv = Assignment::Unassigned;

  friend bool operator==(const Crease&, const Crease&) = default;
};

/// 1D paper [0, length] with strictly increasing interior creases.
///
/// Vertices are numbered 0 (left end), 1..n (creases in order), n+1 (right
/// end). Segment i runs from vertex i to vertex i+1.
class CreasePattern1D {
 public:
  CreasePattern1D() : length_(1) {}
  /// Throws std::invalid_argument unless 0 < position < length for every
  /// crease and positions are strictly increasing (coincident creases are
  /// rejected).
  CreasePattern1D(Rational length, std::vector<Crease> creases);

  const Rational& length() const { return length_; }
  const std::vector<Crease>& creases() const { return creases_; }
  std::size_t crease_count() const { return creases_.size(); }
  std::size_t vertex_count() const { return creases_.size() + 2; }
  std::size_t segment_count() const { return creases_.size() + 1; }

  const Rational& vertex_position(std::size_t v) const;
  Rational segment_length(std::size_t s) const;
  bool is_crease_vertex(std::size_t v) const { return v >= 1 && v <= creases_.size(); }

  /// No Unassigned crease.
  bool is_assigned() const;
  /// Every crease Unassigned.
  bool is_unassigned() const;

  CreasePattern1D with_assignment(std::size_t crease, Assignment mv) const;
  /// position -> length - position; assignments travel with their creases.
  CreasePattern1D mirrored() const;

  std::string to_string() const;  ///< compact "[0,8] M@3 V@5"

  friend bool operator==(const CreasePattern1D&, const CreasePattern1D&) = default;

 private:
  Rational length_;
  std::vector<Crease> creases_;
};

/// Closed interval between two vertices, left_vertex < right_vertex.
struct Interval {
  std::size_t left_vertex = 0;
  std::size_t right_vertex = 0;

  /// Interval whose endpoints are the given crease indices (0-based).
  static Interval between_creases(std::size_t first, std::size_t last) {
    return Interval{first + 1, last + 1};
  }
  bool is_interior(const CreasePattern1D& p) const {
    return left_vertex >= 1 && right_vertex <= p.crease_count();
  }
  /// 0-based crease indices of the endpoints; only meaningful when interior.
  std::size_t first_crease() const { return left_vertex - 1; }
  std::size_t last_crease() const { return right_vertex - 1; }
  std::size_t crease_span() const { return right_vertex - left_vertex + 1; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Piecewise isometry realizing the folded image f of a 1D pattern with the
/// first segment stationary: on segment s, f(x) = direction[s] * x + offset[s].
struct FoldedImage {
  std::vector<Rational> offset;
  std::vector<int> direction;

  Rational at_segment(std::size_t s, const Rational& x) const;
};

FoldedImage folded_image_map(const CreasePattern1D& pattern);

/// f(v) for every vertex v.
std::vector<Rational> vertex_images(const CreasePattern1D& pattern);

/// Throws std::domain_error when x is outside [0, length].
Rational folded_image(const CreasePattern1D& pattern, const Rational& x);

/// Optional basic-operation tally used for complexity sanity checks.
struct WorkCounter {
  std::uint64_t steps = 0;
};

struct ImageExtent {
  Rational lo;
  Rational hi;
};

ImageExtent image_extent(const std::vector<Rational>& images, const Interval& iv);

/// Interior interval whose flaps' far endpoints both land strictly outside
/// the image of the interval. Non-interior intervals are never suspicious.
bool is_suspicious(const CreasePattern1D& pattern, const Interval& iv);

/// All suspicious intervals, ordered by (left_vertex, right_vertex).
/// Quadratically many candidates, linear work each.
std::vector<Interval> suspicious_intervals(const CreasePattern1D& pattern,
                                           WorkCounter* counter = nullptr);

struct CreaseCounts {
  std::size_t mountains = 0;
  std::size_t valleys = 0;
  std::size_t unassigned = 0;

  friend bool operator==(const CreaseCounts&, const CreaseCounts&) = default;
};

/// Counts over the closed interval, endpoints included. Throws
/// std::domain_error if an endpoint is a paper end.
CreaseCounts crease_counts(const CreasePattern1D& pattern, const Interval& iv);

/// |mountains - valleys| <= 1 on the closed interval. Throws
/// PreconditionError if the interval holds an Unassigned crease.
bool is_innocent(const CreasePattern1D& pattern, const Interval& iv);

/// Smaller paper length first, then leftmost left endpoint.
bool shorter_interval(const CreasePattern1D& pattern, const Interval& a, const Interval& b);

}  // namespace simplefold
