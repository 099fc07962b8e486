#include "simplefold/fold_engine.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace simplefold {

namespace {

constexpr Coord kCoordLimit = Coord{1} << 40;

template <class T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::size_t index_of(const std::vector<Coord>& v, Coord x) {
  return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
}

/// Interval of `breaks` strictly containing m, or kNone.
std::size_t interval_of(const std::vector<Coord>& breaks, Coord m) {
  if (breaks.empty() || m <= breaks.front() || m >= breaks.back()) return kNone;
  return static_cast<std::size_t>(std::upper_bound(breaks.begin(), breaks.end(), m) -
                                  breaks.begin()) -
         1;
}

// Every image coordinate is even, so this is exact.
Coord midpoint(Coord a, Coord b) { return (a + b) / 2; }

Coord scale_for(const std::vector<Rational>& values) {
  Coord l = 1;
  for (const auto& v : values) {
    const auto d = v.denominator().to_int64();
    if (!d) throw std::overflow_error("coordinate denominator too large");
    const __int128 next = static_cast<__int128>(l / std::gcd(l, *d)) * *d;
    if (next > kCoordLimit) throw std::overflow_error("coordinates need too fine a common denominator");
    l = static_cast<Coord>(next);
  }
  return 2 * l;
}

Coord scaled(const Rational& v, Coord scale) {
  const auto r = (v * Rational(scale)).to_int64();
  if (!r || *r > kCoordLimit || *r < -kCoordLimit) {
    throw std::overflow_error("coordinate " + v.to_string() + " out of range");
  }
  return *r;
}

bool face_up(const Placement& p) { return p.x_sign * p.y_sign > 0; }

Span span_along(const Sheet& sheet, const FoldedSheet& s, std::size_t cell, Axis line_axis) {
  return line_axis == Axis::Vertical ? image_span_x(sheet, s, cell) : image_span_y(sheet, s, cell);
}

Span span_across(const Sheet& sheet, const FoldedSheet& s, std::size_t cell, Axis line_axis) {
  return line_axis == Axis::Vertical ? image_span_y(sheet, s, cell) : image_span_x(sheet, s, cell);
}

/// Image coordinate of an edge's line.
Coord edge_image(const FoldedSheet& s, const SheetEdge& e) {
  const Placement& p = s.place[e.low];
  return e.axis == Axis::Vertical ? p.x_sign * e.coord + p.x_offset
                                  : p.y_sign * e.coord + p.y_offset;
}

void rebuild_breaks(const Sheet& sheet, FoldedSheet& s) {
  std::vector<Coord> xs, ys;
  xs.reserve(2 * sheet.cells.size());
  ys.reserve(2 * sheet.cells.size());
  for (std::size_t c = 0; c < sheet.cells.size(); ++c) {
    const auto sx = image_span_x(sheet, s, c);
    const auto sy = image_span_y(sheet, s, c);
    xs.push_back(sx.lo);
    xs.push_back(sx.hi);
    ys.push_back(sy.lo);
    ys.push_back(sy.hi);
  }
  s.breaks_x = sorted_unique(std::move(xs));
  s.breaks_y = sorted_unique(std::move(ys));
}

const std::vector<std::uint32_t>* stack_at(const FoldedSheet& s, Coord mx, Coord my) {
  const std::size_t cx = interval_of(s.breaks_x, mx);
  const std::size_t cy = interval_of(s.breaks_y, my);
  if (cx == kNone || cy == kNone) return nullptr;
  return &s.stack(cx, cy);
}

/// Order constraints at one line inside one strip of pixels. Levels are
/// positions in the pixel stacks on the low (L) and high (R) side.
struct LineStrip {
  std::vector<std::pair<int, int>> through;  // (level in L, level in R)
  std::vector<std::pair<int, int>> loops_low;
  std::vector<std::pair<int, int>> loops_high;
};

bool interleave(std::pair<int, int> a, std::pair<int, int> b) {
  if (a.first > a.second) std::swap(a.first, a.second);
  if (b.first > b.second) std::swap(b.first, b.second);
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

std::optional<std::string> check_strip(LineStrip& strip) {
  std::sort(strip.through.begin(), strip.through.end());
  for (std::size_t i = 1; i < strip.through.size(); ++i) {
    if (strip.through[i - 1].second >= strip.through[i].second) {
      return "layers crossing the line change order";
    }
  }
  auto check_loops = [&](const std::vector<std::pair<int, int>>& loops,
                         bool low) -> std::optional<std::string> {
    for (std::size_t i = 0; i < loops.size(); ++i) {
      for (std::size_t j = i + 1; j < loops.size(); ++j) {
        if (interleave(loops[i], loops[j])) return "two folds on the same side interleave";
      }
      const int a = std::min(loops[i].first, loops[i].second);
      const int b = std::max(loops[i].first, loops[i].second);
      for (const auto& t : strip.through) {
        const int level = low ? t.first : t.second;
        if (a < level && level < b) return "a layer passes through a fold";
      }
    }
    return std::nullopt;
  };
  if (auto e = check_loops(strip.loops_low, true)) return e;
  return check_loops(strip.loops_high, false);
}

int level_in(const std::vector<std::uint32_t>* st, std::size_t cell) {
  if (st == nullptr) return -1;
  auto it = std::find(st->begin(), st->end(), static_cast<std::uint32_t>(cell));
  return it == st->end() ? -1 : static_cast<int>(it - st->begin());
}

/// Both axes of a 1D sheet are folded only along vertical lines.
std::vector<Axis> fold_axes(const Sheet& sheet) {
  if (sheet.one_dimensional) return {Axis::Vertical};
  return {Axis::Vertical, Axis::Horizontal};
}

/// True when some unfolded crease can never be folded again. A line always
/// folds whole, and folding a line flips the relative face of the segments on
/// either side of it, so the fixpoint below over-approximates the lines that
/// can ever fold; anything left outside it is stuck. With `by_image` (the
/// all-layers model) coincident lines form one group that must fold together,
/// and a straddling layer or a joint on the line is also fatal.
bool has_glued_dead_end(const Sheet& sheet, const FoldedSheet& s, bool by_image) {
  struct Class {
    std::size_t axis = 0;
    std::vector<Coord> lines;
    std::vector<std::pair<Coord, Coord>> gaps;  // need a foldable cross line in [first, second]
    bool live = false;
  };
  std::vector<Class> classes;
  std::vector<Span> spans;
  struct Seg {
    Coord from, to;
    int need;
  };
  std::vector<Seg> segs;
  for (Axis axis : fold_axes(sheet)) {
    std::vector<std::pair<Coord, std::size_t>> unfolded;
    for (std::size_t id = 0; id < sheet.edges.size(); ++id) {
      const auto& e = sheet.edges[id];
      if (e.axis == axis && !s.folded[id]) {
        unfolded.emplace_back(by_image ? edge_image(s, e) : e.coord, id);
      }
    }
    std::sort(unfolded.begin(), unfolded.end());
    spans.clear();
    for (std::size_t c = 0; c < sheet.cells.size(); ++c) spans.push_back(span_along(sheet, s, c, axis));
    for (std::size_t i = 0; i < unfolded.size();) {
      const Coord key = unfolded[i].first;
      bool has_crease = false;
      bool blocked = false;
      Class cls;
      cls.axis = axis == Axis::Vertical ? 0 : 1;
      segs.clear();
      for (; i < unfolded.size() && unfolded[i].first == key; ++i) {
        const auto& e = sheet.edges[unfolded[i].second];
        const Coord q = edge_image(s, e);
        if (!e.is_crease) {
          blocked = true;
          continue;
        }
        has_crease = true;
        cls.lines.push_back(e.coord);
        if (e.mv == Assignment::Unassigned) continue;
        // The cell staying put (low side in the image) ends up below.
        const std::size_t staying = spans[e.low].hi == q ? e.low : e.high;
        const int n = ((e.mv == Assignment::Valley) == face_up(s.place[staying])) ? 1 : -1;
        segs.push_back({e.from, e.to, n});
      }
      if (!has_crease) continue;
      if (by_image) {
        if (blocked) return true;
        for (const auto& sp : spans) {
          if (sp.lo < key && key < sp.hi) return true;
        }
      }
      std::sort(segs.begin(), segs.end(), [](const Seg& a, const Seg& b) { return a.from < b.from; });
      for (std::size_t k = 1; k < segs.size(); ++k) {
        if (segs[k].need == segs[k - 1].need) continue;
        if (segs[k].from == segs[k - 1].from) return true;  // same column: faces never change
        cls.gaps.emplace_back(segs[k - 1].to, segs[k].from);
      }
      cls.lines = sorted_unique(std::move(cls.lines));
      classes.push_back(std::move(cls));
    }
  }
  std::set<Coord> live_lines[2];
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& c : classes) {
      if (c.live) continue;
      const auto& across = live_lines[1 - c.axis];
      const bool ok = std::all_of(c.gaps.begin(), c.gaps.end(), [&](const auto& g) {
        auto it = across.lower_bound(g.first);
        return it != across.end() && *it <= g.second;
      });
      if (!ok) continue;
      c.live = changed = true;
      live_lines[c.axis].insert(c.lines.begin(), c.lines.end());
    }
  }
  return std::any_of(classes.begin(), classes.end(), [](const Class& c) { return !c.live; });
}

class MoveBuilder {
 public:
  MoveBuilder(const Sheet& sheet, const FoldedSheet& state, LayerModel model,
              const EngineOptions& options)
      : sheet_(sheet), state_(state), model_(model), options_(options) {}

  std::vector<Successor> run() {
    for (Axis axis : fold_axes(sheet_)) {
      std::vector<Coord> lines;
      for (std::size_t id = 0; id < sheet_.edges.size(); ++id) {
        const auto& e = sheet_.edges[id];
        if (e.axis == axis && e.is_crease && !state_.folded[id]) {
          lines.push_back(edge_image(state_, e));
        }
      }
      for (Coord p : sorted_unique(std::move(lines))) fold_line(axis, p);
    }
    return std::move(out_);
  }

 private:
  enum : std::uint8_t { kLow = 0, kHigh = 1, kStraddle = 2 };

  struct Flap {
    std::vector<std::size_t> cells;
    std::vector<std::size_t> attachments;
    bool movable = true;
  };

  void fold_line(Axis axis, Coord p) {
    const std::size_t n = sheet_.cells.size();
    side_.assign(n, kStraddle);
    bool straddlers = false;
    Coord reach_low = 0, reach_high = 0;
    for (std::size_t c = 0; c < n; ++c) {
      auto sp = span_along(sheet_, state_, c, axis);
      if (sp.hi <= p) {
        side_[c] = kLow;
        reach_low = std::max(reach_low, p - sp.lo);
      } else if (sp.lo >= p) {
        side_[c] = kHigh;
        reach_high = std::max(reach_high, sp.hi - p);
      } else {
        straddlers = true;
      }
    }
    if (model_ == LayerModel::AllLayers) {
      if (straddlers) return;
      fold_side(axis, p, reach_high < reach_low ? kHigh : kLow);
      return;
    }
    fold_side(axis, p, kLow);
    fold_side(axis, p, kHigh);
  }

  void fold_side(Axis axis, Coord p, std::uint8_t side) {
    const std::size_t n = sheet_.cells.size();
    flap_of_.assign(n, -1);
    flaps_.clear();
    for (std::size_t c = 0; c < n; ++c) {
      if (side_[c] != side || flap_of_[c] >= 0) continue;
      Flap f;
      const int id = static_cast<int>(flaps_.size());
      std::vector<std::size_t> todo{c};
      flap_of_[c] = id;
      while (!todo.empty()) {
        const std::size_t u = todo.back();
        todo.pop_back();
        f.cells.push_back(u);
        for (std::size_t eid : sheet_.cell_edges[u]) {
          const auto& e = sheet_.edges[eid];
          const std::size_t v = e.low == u ? e.high : e.low;
          if (side_[v] == side) {
            if (flap_of_[v] < 0) {
              flap_of_[v] = id;
              todo.push_back(v);
            }
            continue;
          }
          f.attachments.push_back(eid);
          const bool clean = e.axis == axis && e.is_crease && !state_.folded[eid] &&
                             side_[v] != kStraddle;
          if (!clean) f.movable = false;
        }
      }
      std::sort(f.cells.begin(), f.cells.end());
      std::sort(f.attachments.begin(), f.attachments.end());
      f.attachments.erase(std::unique(f.attachments.begin(), f.attachments.end()),
                          f.attachments.end());
      if (f.attachments.empty()) f.movable = false;  // the whole sheet; nothing to fold
      flaps_.push_back(std::move(f));
    }
    if (flaps_.empty()) return;

    // Pixels on this side of the line.
    side_pixels_.clear();
    const auto& breaks = axis == Axis::Vertical ? state_.breaks_x : state_.breaks_y;
    const std::size_t at = index_of(breaks, p);
    const std::size_t count = breaks.size() - 1;
    const std::size_t across = axis == Axis::Vertical ? state_.rows() : state_.columns();
    for (std::size_t k = side == kLow ? 0 : at; k < (side == kLow ? at : count); ++k) {
      for (std::size_t r = 0; r < across; ++r) {
        side_pixels_.push_back(axis == Axis::Vertical ? &state_.stack(k, r) : &state_.stack(r, k));
      }
    }

    const std::size_t nf = flaps_.size();
    if (model_ == LayerModel::AllLayers) {
      for (const auto& f : flaps_) {
        if (!f.movable) return;
      }
      std::vector<char> all(nf, 1);
      emit(axis, p, side, all, true);
      emit(axis, p, side, all, false);
      return;
    }

    for (bool over : {true, false}) {
      std::vector<std::vector<char>> bases;
      for (std::size_t f = 0; f < nf; ++f) {
        if (!flaps_[f].movable) continue;
        auto closed = closure(f, over);
        if (!closed) continue;
        if (model_ == LayerModel::OneLayer) {
          const auto moved = std::count(closed->begin(), closed->end(), 1);
          if (moved == 1 && flaps_[f].attachments.size() == 1) emit(axis, p, side, *closed, over);
          continue;
        }
        bases.push_back(std::move(*closed));
      }
      if (model_ == LayerModel::OneLayer) continue;
      // Unions of closed sets are closed; collect every distinct union.
      std::set<std::vector<char>> family(bases.begin(), bases.end());
      std::vector<std::vector<char>> frontier(family.begin(), family.end());
      while (!frontier.empty()) {
        std::vector<std::vector<char>> next;
        for (const auto& a : frontier) {
          for (const auto& b : bases) {
            std::vector<char> u(nf);
            for (std::size_t i = 0; i < nf; ++i) u[i] = static_cast<char>(a[i] | b[i]);
            if (family.insert(u).second) next.push_back(std::move(u));
          }
        }
        frontier = std::move(next);
      }
      for (const auto& set : family) emit(axis, p, side, set, over);
    }
  }

  /// Smallest set of flaps containing `f` that forms a top (over) or bottom
  /// block in every pixel on the moving side.
  std::optional<std::vector<char>> closure(std::size_t f, bool over) const {
    std::vector<char> in(flaps_.size(), 0);
    in[f] = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto* st : side_pixels_) {
        const int sz = static_cast<int>(st->size());
        int edge = -1;
        if (over) {
          for (int i = 0; i < sz && edge < 0; ++i) {
            const int fl = flap_of_[(*st)[i]];
            if (fl >= 0 && in[fl]) edge = i;
          }
          if (edge < 0) continue;
          for (int j = edge + 1; j < sz; ++j) {
            const int fl = flap_of_[(*st)[j]];
            if (fl < 0 || !flaps_[fl].movable) return std::nullopt;
            if (!in[fl]) in[fl] = 1, changed = true;
          }
        } else {
          for (int i = sz - 1; i >= 0 && edge < 0; --i) {
            const int fl = flap_of_[(*st)[i]];
            if (fl >= 0 && in[fl]) edge = i;
          }
          if (edge < 0) continue;
          for (int j = edge - 1; j >= 0; --j) {
            const int fl = flap_of_[(*st)[j]];
            if (fl < 0 || !flaps_[fl].movable) return std::nullopt;
            if (!in[fl]) in[fl] = 1, changed = true;
          }
        }
      }
    }
    return in;
  }

  void emit(Axis axis, Coord p, std::uint8_t side, const std::vector<char>& flap_set,
            bool over) {
    const std::size_t n = sheet_.cells.size();
    std::vector<char> moved(n, 0);
    FoldMove move;
    move.axis = axis;
    move.position = sheet_.to_paper(p);
    move.moved_side = side == kLow ? Side::Left : Side::Right;
    move.over = over;
    std::size_t moved_count = 0;
    for (std::size_t f = 0; f < flaps_.size(); ++f) {
      if (!flap_set[f]) continue;
      for (std::size_t c : flaps_[f].cells) moved[c] = 1, ++moved_count;
      for (std::size_t e : flaps_[f].attachments) move.folded_edges.push_back(e);
      if (move.piece == kNone || flaps_[f].cells.front() < move.piece) {
        move.piece = flaps_[f].cells.front();
      }
    }
    std::sort(move.folded_edges.begin(), move.folded_edges.end());
    std::size_t on_side = 0;
    bool straddlers = false;
    for (std::size_t c = 0; c < n; ++c) {
      on_side += side_[c] == side;
      straddlers = straddlers || side_[c] == kStraddle;
    }
    if (moved_count == on_side && !straddlers) {
      move.extent = ExtentKind::AllLayers;
    } else if (model_ == LayerModel::OneLayer) {
      move.extent = ExtentKind::OneLayer;
    } else {
      move.extent = over ? ExtentKind::TopK : ExtentKind::BottomK;
    }
    {
      std::set<std::size_t> touching;
      for (std::size_t e : move.folded_edges) {
        touching.insert(moved[sheet_.edges[e].low] ? sheet_.edges[e].low : sheet_.edges[e].high);
      }
      move.layers = touching.size();
    }

    FoldedSheet next;
    next.place = state_.place;
    next.folded = state_.folded;
    const Coord twice = p + p;
    for (std::size_t c = 0; c < n; ++c) {
      if (!moved[c]) continue;
      Placement& pl = next.place[c];
      if (axis == Axis::Vertical) {
        pl.x_sign = static_cast<std::int8_t>(-pl.x_sign);
        pl.x_offset = twice - pl.x_offset;
      } else {
        pl.y_sign = static_cast<std::int8_t>(-pl.y_sign);
        pl.y_offset = twice - pl.y_offset;
      }
    }
    for (std::size_t e : move.folded_edges) next.folded[e] = 1;
    rebuild_breaks(sheet_, next);

    const std::size_t cols = next.columns();
    const std::size_t rows = next.rows();
    next.stacks.assign(cols * rows, {});
    for (std::size_t r = 0; r < rows; ++r) {
      const Coord my = midpoint(next.breaks_y[r], next.breaks_y[r + 1]);
      for (std::size_t k = 0; k < cols; ++k) {
        const Coord mx = midpoint(next.breaks_x[k], next.breaks_x[k + 1]);
        auto& dst = next.stacks[r * cols + k];
        std::vector<std::uint32_t> base;
        if (const auto* old = stack_at(state_, mx, my)) {
          for (auto c : *old) {
            if (!moved[c]) base.push_back(c);
          }
        }
        const Coord m = axis == Axis::Vertical ? mx : my;
        const bool destination = side == kLow ? m > p : m < p;
        std::vector<std::uint32_t> arriving;
        if (destination) {
          const auto* old = axis == Axis::Vertical ? stack_at(state_, twice - mx, my)
                                                   : stack_at(state_, mx, twice - my);
          if (old != nullptr) {
            for (auto it = old->rbegin(); it != old->rend(); ++it) {
              if (moved[*it]) arriving.push_back(*it);
            }
          }
        }
        if (over) {
          dst = std::move(base);
          dst.insert(dst.end(), arriving.begin(), arriving.end());
        } else {
          dst = std::move(arriving);
          dst.insert(dst.end(), base.begin(), base.end());
        }
      }
    }

    // Sense of each new fold: valley iff the lower of its two layers is face up.
    const auto& nb = axis == Axis::Vertical ? next.breaks_x : next.breaks_y;
    const std::size_t at = index_of(nb, p);
    const std::size_t dest_strip = side == kLow ? at : at - 1;
    for (std::size_t eid : move.folded_edges) {
      const auto& e = sheet_.edges[eid];
      const std::size_t w = moved[e.low] ? e.low : e.high;
      const std::size_t u = moved[e.low] ? e.high : e.low;
      const auto across = span_across(sheet_, next, u, axis);
      const Coord mid = midpoint(across.lo, across.hi);
      const auto& ob = axis == Axis::Vertical ? next.breaks_y : next.breaks_x;
      const std::size_t strip = interval_of(ob, mid);
      const auto& st = axis == Axis::Vertical ? next.stack(dest_strip, strip)
                                              : next.stack(strip, dest_strip);
      const int lu = level_in(&st, u);
      const int lw = level_in(&st, w);
      if (lu < 0 || lw < 0) throw std::logic_error("fold joins layers that do not meet");
      const std::size_t lower = lu < lw ? u : w;
      const Assignment sense = face_up(next.place[lower]) ? Assignment::Valley : Assignment::Mountain;
      if (e.mv != Assignment::Unassigned && e.mv != sense) return;
      move.senses.push_back(sense);
    }

    if (options_.check_invariants) {
      if (auto err = check_state(sheet_, next)) {
        throw std::logic_error("fold produced an invalid state: " + *err);
      }
    }
    out_.push_back({std::move(move), std::move(next)});
  }

  const Sheet& sheet_;
  const FoldedSheet& state_;
  LayerModel model_;
  EngineOptions options_;
  std::vector<Successor> out_;
  std::vector<std::uint8_t> side_;
  std::vector<int> flap_of_;
  std::vector<Flap> flaps_;
  std::vector<const std::vector<std::uint32_t>*> side_pixels_;
};

}  // namespace

Sheet Sheet::from_1d(const CreasePattern1D& pattern) {
  Sheet s;
  s.one_dimensional = true;
  s.nx = pattern.segment_count();
  s.ny = 1;
  std::vector<Rational> xs;
  for (std::size_t i = 0; i <= s.nx; ++i) xs.push_back(pattern.vertex_position(i));
  s.scale = scale_for(xs);
  const Coord one = s.scale;
  for (std::size_t i = 0; i < s.nx; ++i) {
    s.cells.push_back({scaled(xs[i], s.scale), scaled(xs[i + 1], s.scale), 0, one});
  }
  s.cell_edges.resize(s.nx);
  for (std::size_t k = 0; k < pattern.crease_count(); ++k) {
    const auto& c = pattern.creases()[k];
    s.edges.push_back({k, k + 1, Axis::Vertical, true, c.mv, k, scaled(c.position, s.scale), 0, one});
    s.cell_edges[k].push_back(k);
    s.cell_edges[k + 1].push_back(k);
  }
  return s;
}

Sheet Sheet::from_rect(const RectPattern& pattern) {
  std::vector<Rational> xs{Rational(0), pattern.width()};
  std::vector<Rational> ys{Rational(0), pattern.height()};
  for (const auto& c : pattern.creases()) {
    auto& across = c.axis == Axis::Vertical ? xs : ys;
    auto& along = c.axis == Axis::Vertical ? ys : xs;
    across.push_back(c.coord);
    along.push_back(c.from);
    along.push_back(c.to);
  }
  xs = sorted_unique(std::move(xs));
  ys = sorted_unique(std::move(ys));

  Sheet s;
  std::vector<Rational> all = xs;
  all.insert(all.end(), ys.begin(), ys.end());
  s.scale = scale_for(all);
  std::vector<Coord> ix, iy;
  for (const auto& x : xs) ix.push_back(scaled(x, s.scale));
  for (const auto& y : ys) iy.push_back(scaled(y, s.scale));
  s.nx = xs.size() - 1;
  s.ny = ys.size() - 1;
  for (std::size_t j = 0; j < s.ny; ++j) {
    for (std::size_t i = 0; i < s.nx; ++i) s.cells.push_back({ix[i], ix[i + 1], iy[j], iy[j + 1]});
  }
  s.cell_edges.resize(s.cells.size());
  auto crease_covering = [&](Axis axis, const Rational& coord, const Rational& a,
                             const Rational& b) -> std::size_t {
    const auto& cs = pattern.creases();
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (cs[k].axis == axis && cs[k].coord == coord && cs[k].from <= a && b <= cs[k].to) return k;
    }
    return kNone;
  };
  auto add = [&](std::size_t lo, std::size_t hi, Axis axis, const Rational& coord,
                 const Rational& from, const Rational& to) {
    const std::size_t k = crease_covering(axis, coord, from, to);
    SheetEdge e{lo,
                hi,
                axis,
                k != kNone,
                k != kNone ? pattern.creases()[k].mv : Assignment::Unassigned,
                k,
                scaled(coord, s.scale),
                scaled(from, s.scale),
                scaled(to, s.scale)};
    s.cell_edges[lo].push_back(s.edges.size());
    s.cell_edges[hi].push_back(s.edges.size());
    s.edges.push_back(e);
  };
  for (std::size_t j = 0; j < s.ny; ++j) {
    for (std::size_t i = 1; i < s.nx; ++i) {
      add(j * s.nx + i - 1, j * s.nx + i, Axis::Vertical, xs[i], ys[j], ys[j + 1]);
    }
  }
  for (std::size_t j = 1; j < s.ny; ++j) {
    for (std::size_t i = 0; i < s.nx; ++i) {
      add((j - 1) * s.nx + i, j * s.nx + i, Axis::Horizontal, ys[j], xs[i], xs[i + 1]);
    }
  }
  return s;
}

FoldedSheet initial_state(const Sheet& sheet) {
  FoldedSheet s;
  s.place.assign(sheet.cells.size(), Placement{});
  s.folded.assign(sheet.edges.size(), 0);
  rebuild_breaks(sheet, s);
  s.stacks.resize(sheet.cells.size());
  for (std::size_t c = 0; c < sheet.cells.size(); ++c) {
    s.stacks[c] = {static_cast<std::uint32_t>(c)};
  }
  return s;
}

Span image_span_x(const Sheet& sheet, const FoldedSheet& s, std::size_t cell) {
  const auto& p = s.place[cell];
  const auto& c = sheet.cells[cell];
  const Coord a = p.x_sign * c.x0 + p.x_offset;
  const Coord b = p.x_sign * c.x1 + p.x_offset;
  return b < a ? Span{b, a} : Span{a, b};
}

Span image_span_y(const Sheet& sheet, const FoldedSheet& s, std::size_t cell) {
  const auto& p = s.place[cell];
  const auto& c = sheet.cells[cell];
  const Coord a = p.y_sign * c.y0 + p.y_offset;
  const Coord b = p.y_sign * c.y1 + p.y_offset;
  return b < a ? Span{b, a} : Span{a, b};
}

std::string to_string(ExtentKind e) {
  switch (e) {
    case ExtentKind::OneLayer: return "one";
    case ExtentKind::TopK: return "top";
    case ExtentKind::BottomK: return "bottom";
    case ExtentKind::AllLayers: return "all";
  }
  return "?";
}

std::string to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Foldable: return "foldable";
    case SearchOutcome::Unfoldable: return "unfoldable";
    case SearchOutcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<Successor> enumerate_successors(const Sheet& sheet, const FoldedSheet& state,
                                            LayerModel model, const EngineOptions& options) {
  return MoveBuilder(sheet, state, model, options).run();
}

std::optional<std::string> check_state(const Sheet& sheet, const FoldedSheet& s) {
  const std::size_t n = sheet.cells.size();
  const std::size_t cols = s.columns();
  const std::size_t rows = s.rows();
  std::size_t expected = 0;
  for (std::size_t c = 0; c < n; ++c) {
    const auto sx = image_span_x(sheet, s, c);
    const auto sy = image_span_y(sheet, s, c);
    expected += (index_of(s.breaks_x, sx.hi) - index_of(s.breaks_x, sx.lo)) *
                (index_of(s.breaks_y, sy.hi) - index_of(s.breaks_y, sy.lo));
  }
  // level[pixel * n + cell]: position of the cell in that pixel's stack.
  std::vector<int> level(cols * rows * n, -1);
  std::size_t seen = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    const Coord my = midpoint(s.breaks_y[r], s.breaks_y[r + 1]);
    for (std::size_t k = 0; k < cols; ++k) {
      const Coord mx = midpoint(s.breaks_x[k], s.breaks_x[k + 1]);
      const auto& st = s.stack(k, r);
      for (std::size_t i = 0; i < st.size(); ++i) {
        const auto c = st[i];
        const auto sx = image_span_x(sheet, s, c);
        const auto sy = image_span_y(sheet, s, c);
        if (!(sx.lo < mx && mx < sx.hi && sy.lo < my && my < sy.hi)) {
          return "stack lists a cell that does not cover the pixel";
        }
        int& slot = level[(r * cols + k) * n + c];
        if (slot >= 0) return "a cell appears twice in one stack";
        slot = static_cast<int>(i);
        ++seen;
      }
    }
  }
  if (seen != expected) return "stacks do not account for every covered pixel";

  for (Axis axis : {Axis::Vertical, Axis::Horizontal}) {
    const auto& breaks = axis == Axis::Vertical ? s.breaks_x : s.breaks_y;
    const auto& other = axis == Axis::Vertical ? s.breaks_y : s.breaks_x;
    const std::size_t strips = other.size() - 1;
    // Edges of this axis grouped by image line.
    std::vector<std::pair<Coord, std::size_t>> on_line;
    for (std::size_t id = 0; id < sheet.edges.size(); ++id) {
      if (sheet.edges[id].axis == axis) on_line.emplace_back(edge_image(s, sheet.edges[id]), id);
    }
    std::sort(on_line.begin(), on_line.end());
    for (std::size_t bi = 0; bi < breaks.size(); ++bi) {
      const Coord q = breaks[bi];
      const auto first = std::lower_bound(on_line.begin(), on_line.end(), std::make_pair(q, std::size_t{0}));
      auto last = first;
      while (last != on_line.end() && last->first == q) ++last;
      for (std::size_t r = 0; r < strips; ++r) {
        const Coord mid = midpoint(other[r], other[r + 1]);
        auto pixel = [&](std::size_t strip) -> std::size_t {
          if (strip >= breaks.size() - 1) return kNone;
          return axis == Axis::Vertical ? r * cols + strip : strip * cols + r;
        };
        const std::size_t lo = bi == 0 ? kNone : pixel(bi - 1);
        const std::size_t hi = pixel(bi);
        auto lvl = [&](std::size_t px, std::size_t cell) {
          return px == kNone ? -1 : level[px * n + cell];
        };
        LineStrip strip;
        if (lo != kNone && hi != kNone) {
          const auto& st = s.stacks[lo];
          for (std::size_t i = 0; i < st.size(); ++i) {
            const int j = lvl(hi, st[i]);
            if (j >= 0) strip.through.emplace_back(static_cast<int>(i), j);
          }
        }
        for (auto it = first; it != last; ++it) {
          const std::size_t id = it->second;
          const auto& e = sheet.edges[id];
          const auto across = span_across(sheet, s, e.low, axis);
          if (!(across.lo < mid && mid < across.hi)) continue;
          const int a_lo = lvl(lo, e.low), a_hi = lvl(hi, e.low);
          const int b_lo = lvl(lo, e.high), b_hi = lvl(hi, e.high);
          if (s.folded[id]) {
            if (a_lo >= 0 && b_lo >= 0) {
              strip.loops_low.emplace_back(a_lo, b_lo);
            } else if (a_hi >= 0 && b_hi >= 0) {
              strip.loops_high.emplace_back(a_hi, b_hi);
            } else {
              return "folded edge with its layers on opposite sides";
            }
          } else if (a_lo >= 0 && b_hi >= 0) {
            strip.through.emplace_back(a_lo, b_hi);
          } else if (b_lo >= 0 && a_hi >= 0) {
            strip.through.emplace_back(b_lo, a_hi);
          } else {
            return "unfolded edge with its layers on one side";
          }
        }
        if (auto err = check_strip(strip)) {
          return *err + " at " + std::string(1, to_char(axis)) + "=" + sheet.to_paper(q).to_string();
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

template <class T>
void put(std::string& key, T v) {
  key.append(reinterpret_cast<const char*>(&v), sizeof v);
}

}  // namespace

std::string canonical_key(const Sheet& sheet, const FoldedSheet& s, bool with_stacks) {
  std::string key;
  const Coord x0 = s.breaks_x.front();
  const Coord y0 = s.breaks_y.front();
  for (const auto& p : s.place) {
    put(key, p.x_offset - x0);
    put(key, p.x_sign);
    if (!sheet.one_dimensional) {
      put(key, p.y_offset - y0);
      put(key, p.y_sign);
    }
  }
  std::uint8_t bits = 0;
  for (std::size_t i = 0; i < s.folded.size(); ++i) {
    bits = static_cast<std::uint8_t>(bits | (s.folded[i] ? 1u << (i % 8) : 0u));
    if (i % 8 == 7 || i + 1 == s.folded.size()) {
      put(key, bits);
      bits = 0;
    }
  }
  if (!with_stacks) return key;
  for (const auto& st : s.stacks) {
    put(key, static_cast<std::uint32_t>(st.size()));
    for (auto c : st) put(key, c);
  }
  return key;
}

bool all_creases_folded(const Sheet& sheet, const FoldedSheet& s) {
  for (std::size_t id = 0; id < sheet.edges.size(); ++id) {
    if (sheet.edges[id].is_crease && !s.folded[id]) return false;
  }
  return true;
}

namespace {

struct SearchContext {
  const Sheet& sheet;
  LayerModel model;
  const SearchOptions& options;
  std::unordered_set<std::string> dead;
  std::size_t nodes = 0;
  bool exhausted = false;
  std::mt19937_64 rng;
  std::vector<FoldMove> trace;

  bool dfs(const FoldedSheet& state, std::size_t depth) {
    if (all_creases_folded(sheet, state)) return true;
    std::string key = canonical_key(sheet, state, model != LayerModel::AllLayers);
    if (dead.count(key)) return false;
    if (has_glued_dead_end(sheet, state, model == LayerModel::AllLayers)) {
      dead.insert(std::move(key));
      return false;
    }
    if (nodes >= options.max_nodes || depth >= options.max_depth) {
      exhausted = true;
      return false;
    }
    ++nodes;
    auto next = enumerate_successors(sheet, state, model, {options.check_invariants});
    if (options.shuffle_seed) std::shuffle(next.begin(), next.end(), rng);
    for (auto& s : next) {
      trace.push_back(s.move);
      if (dfs(s.state, depth + 1)) return true;
      trace.pop_back();
      if (exhausted) return false;
    }
    dead.insert(std::move(key));
    return false;
  }
};

}  // namespace

SearchResult search(const Sheet& sheet, LayerModel model, const SearchOptions& options) {
  SearchContext ctx{sheet, model, options, {}, 0, false,
                    std::mt19937_64(options.shuffle_seed.value_or(0)), {}};
  SearchResult result;
  const bool found = ctx.dfs(initial_state(sheet), 0);
  result.nodes = ctx.nodes;
  if (found) {
    result.outcome = SearchOutcome::Foldable;
    result.trace = std::move(ctx.trace);
  } else {
    result.outcome = ctx.exhausted ? SearchOutcome::Inconclusive : SearchOutcome::Unfoldable;
  }
  return result;
}

}  // namespace simplefold
