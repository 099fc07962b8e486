#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "simplefold/gadgets.hpp"

namespace simplefold {

namespace {

Rational R(std::int64_t v) { return Rational(v); }

Box box(std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1) {
  return Box{R(x0), R(y0), R(x1), R(y1)};
}

std::string fmt(const Point2& p) { return "(" + p.x.to_string() + "," + p.y.to_string() + ")"; }

bool interiors_overlap(const Box& a, const Box& b) {
  return a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1;
}

PolyPattern build(const ThreePartitionInstance& inst, bool cactus, bool arm2,
                  const GadgetConfig& c) {
  inst.validate();
  const std::int64_t m = static_cast<std::int64_t>(inst.m());
  const std::int64_t t = inst.target();
  const std::int64_t total =
      std::accumulate(inst.numbers.begin(), inst.numbers.end(), std::int64_t{0}) * c.unit;
  const std::int64_t cw = c.column_width;
  const std::int64_t wh = c.wrapper_height;

  PolyPattern p;
  p.facts = {inst.numbers, inst.m(), t, cactus, arm2, c};
  auto add_part = [&](std::string name) -> GadgetPart& {
    p.parts.push_back({std::move(name), {}, {}});
    return p.parts.back();
  };
  auto add_crease = [&](GadgetPart& part, Point2 a, Point2 b, Assignment mv) {
    part.creases.push_back(p.creases.size());
    p.creases.push_back({std::move(a), std::move(b), mv});
  };
  const Assignment wrap_mv = cactus ? Assignment::Unassigned : Assignment::Valley;

  // Wrapper / Cactus: strip to the right of the Column; c_0 is the rightmost crease.
  const std::int64_t last_crease = cw * (2 * m + 1);
  const std::int64_t xs = last_crease + c.staircase_gap;
  const std::int64_t xe = std::max(xs + c.staircase_width, last_crease + c.wrapper_tail);
  {
    GadgetPart& w = add_part(cactus ? "cactus" : "wrapper");
    w.boxes.push_back(box(cw, 0, xe, wh));
    for (std::int64_t i = 0; i < 2 * m; ++i) {
      const std::int64_t x = cw * (2 * m + 1 - i);
      add_crease(w, {R(x), R(0)}, {R(x), R(wh)}, wrap_mv);
    }
    if (cactus) {
      for (std::int64_t i = 0; i < 2 * m; ++i) {
        const std::int64_t x = cw * (2 * m + 1 - i);
        const std::int64_t s0 = x + c.branch_offset;
        const std::int64_t s1 = s0 + c.branch_width;
        CactusBranch b{static_cast<std::size_t>(i), box(s0, -c.branch_drop, s1, 0),
                       box(x - c.branch_reach, -c.branch_drop - c.branch_thickness, s1,
                           -c.branch_drop)};
        p.branches.push_back(b);
        GadgetPart& part = add_part("branch_a" + std::to_string(i));
        part.boxes = {b.stem, b.arm};
      }
    }
  }

  // Staircase on top of the strip, segments of height a_i separated by
  // horizontal creases alternating M/V.
  const std::int64_t top = wh + total;
  {
    GadgetPart& s = add_part("staircase");
    s.boxes.push_back(box(xs, wh, xs + c.staircase_width, top));
    std::int64_t y = wh;
    for (std::size_t i = 0; i + 1 < inst.numbers.size(); ++i) {
      y += inst.numbers[i] * c.unit;
      const Assignment mv = cactus        ? Assignment::Unassigned
                            : i % 2 == 0 ? Assignment::Mountain
                                         : Assignment::Valley;
      add_crease(s, {R(xs), R(y)}, {R(xs + c.staircase_width), R(y)}, mv);
    }
  }

  // Bar across the top of the Staircase; Arm 2 continues it to the left,
  // above the Wrapper.
  const std::int64_t xr = xe + c.bar_extra;
  add_part("bar").boxes.push_back(box(xs, top, xr, top + c.bar_thickness));
  if (arm2) add_part("arm2").boxes.push_back(box(xs - c.arm2_length, top, xs, top + c.bar_thickness));

  // Arm 1: hangs from the far end of the Bar and runs left below the Wrapper.
  {
    const std::int64_t below = cactus ? c.branch_drop + c.branch_thickness : 0;
    const std::int64_t y1 = -(below + c.arm1_drop);
    const std::int64_t y0 = y1 - c.arm1_thickness;
    GadgetPart& a = add_part("arm1");
    a.boxes.push_back(box(xr - c.arm1_thickness, y0, xr, top));
    a.boxes.push_back(box(cw, y0, xr - c.arm1_thickness, y1));
  }

  // Column rising from the strip's left end; the Cage sits on top of it.
  const std::int64_t col_top = top + c.bar_thickness + c.cage_clearance;
  add_part("column").boxes.push_back(box(0, 0, cw, col_top));
  {
    GadgetPart& g = add_part("cage");
    const std::int64_t wall_max = c.cage_wall + (m - 1) * c.cage_inset;
    const std::int64_t width = std::max(cw, 2 * wall_max + c.cage_opening);
    g.boxes.push_back(box(0, col_top, width, col_top + c.cage_wall));
    for (std::int64_t k = 0; k < m; ++k) {
      const std::int64_t y0 = col_top + c.cage_wall + 2 * t * k;
      const std::int64_t wall = c.cage_wall + k * c.cage_inset;
      g.boxes.push_back(box(0, y0, wall, y0 + 2 * t));
      g.boxes.push_back(box(width - wall, y0, width, y0 + 2 * t));
    }
  }

  std::vector<Box> all;
  for (const auto& part : p.parts) all.insert(all.end(), part.boxes.begin(), part.boxes.end());
  p.vertices = trace_union_boundary(all);
  return p;
}

/// Ray casting against an orthogonal polygon. 1 inside, 0 on the boundary, -1 outside.
int locate(const std::vector<Point2>& poly, const Point2& q) {
  const std::size_t n = poly.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % n];
    if (a.x == b.x) {
      if (q.x == a.x && min(a.y, b.y) <= q.y && q.y <= max(a.y, b.y)) return 0;
      // Half-open in y so vertices are counted once.
      const Rational lo = min(a.y, b.y), hi = max(a.y, b.y);
      if (lo <= q.y && q.y < hi && a.x > q.x) inside = !inside;
    } else if (q.y == a.y && min(a.x, b.x) <= q.x && q.x <= max(a.x, b.x)) {
      return 0;
    }
  }
  return inside ? 1 : -1;
}

bool segments_touch(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  // Axis-parallel segments: overlap of bounding boxes is exact intersection.
  return max(min(a.x, b.x), min(c.x, d.x)) <= min(max(a.x, b.x), max(c.x, d.x)) &&
         max(min(a.y, b.y), min(c.y, d.y)) <= min(max(a.y, b.y), max(c.y, d.y));
}

}  // namespace

std::int64_t ThreePartitionInstance::target() const {
  if (m() == 0) return 0;
  return std::accumulate(numbers.begin(), numbers.end(), std::int64_t{0}) / 3;
}

void ThreePartitionInstance::validate() const {
  if (numbers.empty() || numbers.size() % 3 != 0) {
    throw std::invalid_argument("3-Partition needs 3m numbers, m >= 1");
  }
  for (auto a : numbers) {
    if (a <= 0) throw std::invalid_argument("3-Partition numbers must be positive");
  }
  const auto total = std::accumulate(numbers.begin(), numbers.end(), std::int64_t{0});
  if (total % static_cast<std::int64_t>(m()) != 0) {
    throw std::invalid_argument("sum " + std::to_string(total) + " is not divisible by m = " +
                                std::to_string(m()));
  }
  if (total % 3 != 0) {
    throw std::invalid_argument("sum " + std::to_string(total) + " is not divisible by 3");
  }
}

ThreePartitionInstance ThreePartitionInstance::parse(const std::string& text) {
  ThreePartitionInstance inst;
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw std::invalid_argument("not an integer: '" + tok + "'");
    inst.numbers.push_back(v);
  }
  inst.validate();
  return inst;
}

const GadgetPart* PolyPattern::part(const std::string& name) const {
  for (const auto& p : parts) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

PolyPattern gen_3partition_assigned(const ThreePartitionInstance& inst, bool with_arm2,
                                    const GadgetConfig& config) {
  return build(inst, false, with_arm2, config);
}

PolyPattern gen_3partition_unassigned(const ThreePartitionInstance& inst,
                                      const GadgetConfig& config) {
  return build(inst, true, true, config);
}

std::vector<Point2> trace_union_boundary(const std::vector<Box>& boxes) {
  if (boxes.empty()) throw std::invalid_argument("no boxes");
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (boxes[i].x0 >= boxes[i].x1 || boxes[i].y0 >= boxes[i].y1) {
      throw std::invalid_argument("degenerate box");
    }
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      if (interiors_overlap(boxes[i], boxes[j])) throw std::invalid_argument("boxes overlap");
    }
  }
  std::vector<Rational> xs, ys;
  for (const auto& b : boxes) {
    xs.insert(xs.end(), {b.x0, b.x1});
    ys.insert(ys.end(), {b.y0, b.y1});
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  const std::size_t nx = xs.size() - 1, ny = ys.size() - 1;
  std::vector<char> filled(nx * ny, 0);
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      for (const auto& b : boxes) {
        if (b.x0 <= xs[i] && xs[i + 1] <= b.x1 && b.y0 <= ys[j] && ys[j + 1] <= b.y1) {
          filled[j * nx + i] = 1;
          break;
        }
      }
    }
  }
  auto at = [&](std::ptrdiff_t i, std::ptrdiff_t j) {
    if (i < 0 || j < 0 || i >= static_cast<std::ptrdiff_t>(nx) || j >= static_cast<std::ptrdiff_t>(ny)) {
      return false;
    }
    return filled[j * nx + i] != 0;
  };
  // Directed unit edges with the interior on the left, keyed by grid start point.
  using Node = std::pair<std::size_t, std::size_t>;
  std::map<Node, std::vector<Node>> next;
  std::size_t edges = 0;
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      if (!at(i, j)) continue;
      const auto si = static_cast<std::ptrdiff_t>(i), sj = static_cast<std::ptrdiff_t>(j);
      if (!at(si, sj - 1)) next[{i, j}].push_back({i + 1, j}), ++edges;
      if (!at(si + 1, sj)) next[{i + 1, j}].push_back({i + 1, j + 1}), ++edges;
      if (!at(si, sj + 1)) next[{i + 1, j + 1}].push_back({i, j + 1}), ++edges;
      if (!at(si - 1, sj)) next[{i, j + 1}].push_back({i, j}), ++edges;
    }
  }
  for (const auto& [node, outs] : next) {
    if (outs.size() != 1) throw std::invalid_argument("boundary touches itself at a vertex");
  }
  const Node start = next.begin()->first;  // lowest x, then lowest y
  std::vector<Node> loop{start};
  Node cur = next[start].front();
  while (cur != start) {
    loop.push_back(cur);
    cur = next[cur].front();
    if (loop.size() > edges) break;
  }
  if (loop.size() != edges) {
    throw std::invalid_argument("region has holes or several components");
  }
  std::vector<Point2> out;
  const std::size_t n = loop.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Node& a = loop[(k + n - 1) % n];
    const Node& b = loop[k];
    const Node& c = loop[(k + 1) % n];
    const bool straight = (a.first == b.first && b.first == c.first) ||
                          (a.second == b.second && b.second == c.second);
    if (!straight) out.push_back({xs[b.first], ys[b.second]});
  }
  // Start at the lowest, then leftmost vertex.
  auto lowest = std::min_element(out.begin(), out.end(), [](const Point2& a, const Point2& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  std::rotate(out.begin(), lowest, out.end());
  return out;
}

ValidationReport validate_polypattern(const PolyPattern& p) {
  ValidationReport r;
  auto issue = [&](std::string check, std::string detail) {
    r.issues.push_back({std::move(check), std::move(detail)});
  };
  const auto& v = p.vertices;
  const std::size_t n = v.size();
  if (n < 4) {
    issue("polygon", "fewer than 4 vertices");
    return r;
  }
  // Orthogonality.
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % n];
    const Point2& c = v[(i + 2) % n];
    if (a == b || (a.x != b.x && a.y != b.y)) {
      issue("orthogonal", "edge " + fmt(a) + "-" + fmt(b) + " is not axis-parallel");
    } else if ((a.x == b.x) == (b.x == c.x)) {
      issue("orthogonal", "edges meeting at " + fmt(b) + " are not perpendicular");
    }
  }
  // Orientation.
  Rational area2(0);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % n];
    area2 += a.x * b.y - b.x * a.y;
  }
  if (area2 <= Rational(0)) issue("orientation", "vertices are not counterclockwise");
  // Simplicity: non-adjacent edges must not meet, adjacent ones only at their vertex.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_touch(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) {
        issue("simple", "edges from " + fmt(v[i]) + " and " + fmt(v[j]) + " intersect");
      }
    }
  }
  // Creases inside the paper.
  std::vector<Rational> cuts_x, cuts_y;
  for (const auto& q : v) cuts_x.push_back(q.x), cuts_y.push_back(q.y);
  for (const auto& c : p.creases) {
    if (c.a == c.b || (c.a.x != c.b.x && c.a.y != c.b.y)) {
      issue("crease", "crease " + fmt(c.a) + "-" + fmt(c.b) + " is not a positive axis-parallel segment");
      continue;
    }
    const bool vertical = c.a.x == c.b.x;
    const Rational lo = vertical ? min(c.a.y, c.b.y) : min(c.a.x, c.b.x);
    const Rational hi = vertical ? max(c.a.y, c.b.y) : max(c.a.x, c.b.x);
    std::vector<Rational> stops{lo, hi};
    for (const auto& s : vertical ? cuts_y : cuts_x) {
      if (lo < s && s < hi) stops.push_back(s);
    }
    std::sort(stops.begin(), stops.end());
    for (std::size_t k = 0; k + 1 < stops.size(); ++k) {
      const Rational mid = (stops[k] + stops[k + 1]) / Rational(2);
      const Point2 q = vertical ? Point2{c.a.x, mid} : Point2{mid, c.a.y};
      if (locate(v, q) != 1) {
        issue("crease", "crease " + fmt(c.a) + "-" + fmt(c.b) + " leaves the paper near " + fmt(q));
        break;
      }
    }
  }
  // Part formulas.
  const auto& f = p.facts;
  const std::size_t m = f.m;
  const std::size_t n_numbers = f.numbers.size();
  const char* strip_name = f.cactus ? "cactus" : "wrapper";
  for (const char* name : {"bar", "staircase", "column", "cage", "arm1"}) {
    if (p.part(name) == nullptr) issue("parts", std::string("missing part ") + name);
  }
  if (p.part(f.cactus ? "wrapper" : "cactus") != nullptr) {
    issue("parts", "both Wrapper and Cactus present");
  }
  if (f.arm2 != (p.part("arm2") != nullptr)) issue("parts", "Arm 2 presence does not match the flag");
  if (const auto* s = p.part("staircase")) {
    const std::size_t want = (n_numbers == 0 ? 0 : n_numbers - 1) + f.config.staircase_attachment_creases;
    if (s->creases.size() != want) {
      issue("staircase", "has " + std::to_string(s->creases.size()) + " creases, expected " +
                             std::to_string(want));
    }
    for (std::size_t k = 0; k < s->creases.size(); ++k) {
      const Assignment mv = p.creases[s->creases[k]].mv;
      const Assignment want_mv = f.cactus     ? Assignment::Unassigned
                                 : k % 2 == 0 ? Assignment::Mountain
                                              : Assignment::Valley;
      if (mv != want_mv) issue("staircase", "crease " + std::to_string(k) + " has the wrong assignment");
    }
  }
  const GadgetPart* strip = p.part(strip_name);
  if (strip == nullptr) {
    issue("parts", std::string("missing part ") + strip_name);
  } else {
    if (strip->creases.size() != 2 * m) {
      issue(strip_name, "has " + std::to_string(strip->creases.size()) + " creases, expected 2m = " +
                            std::to_string(2 * m));
    }
    for (std::size_t k = 0; k < strip->creases.size(); ++k) {
      const auto& c = p.creases[strip->creases[k]];
      const Assignment want_mv = f.cactus ? Assignment::Unassigned : Assignment::Valley;
      if (c.mv != want_mv) issue(strip_name, "crease " + std::to_string(k) + " has the wrong assignment");
      if (k > 0) {
        const auto& prev = p.creases[strip->creases[k - 1]];
        if (prev.a.x - c.a.x != Rational(f.config.column_width)) {
          issue(strip_name, "crease spacing differs from the Column width at " + fmt(c.a));
        }
      }
    }
  }
  if (const auto* cage = p.part("cage")) {
    // Base plus two walls of m steps each.
    std::size_t steps = 0;
    for (std::size_t k = 1; k < cage->boxes.size(); ++k) {
      ++steps;
      const Rational h = cage->boxes[k].y1 - cage->boxes[k].y0;
      if (h != Rational(2 * f.t)) issue("cage", "step height " + h.to_string() + " is not 2t");
    }
    if (steps != 2 * m) {
      issue("cage", "has " + std::to_string(steps / 2) + " steps per wall, expected m = " +
                        std::to_string(m));
    }
  }
  if (f.cactus) {
    if (p.branches.size() != 2 * m) {
      issue("branches", "has " + std::to_string(p.branches.size()) + " branches, expected " +
                            std::to_string(2 * m));
    }
    std::vector<const CactusBranch*> by_crease(2 * m, nullptr);
    for (const auto& b : p.branches) {
      if (b.crease < by_crease.size()) by_crease[b.crease] = &b;
    }
    for (std::size_t i = 0; i < by_crease.size() && strip != nullptr && i < strip->creases.size(); ++i) {
      const auto* b = by_crease[i];
      if (b == nullptr) {
        issue("branches", "crease c_" + std::to_string(i) + " has no branch");
        continue;
      }
      const Rational& x = p.creases[strip->creases[i]].a.x;
      if (!(b->arm.x0 < x && x < b->arm.x1)) {
        issue("branches", "branch a_" + std::to_string(i) + " does not cross the line of c_" +
                              std::to_string(i));
      }
      if (!(b->stem.x0 > x)) {
        issue("branches", "branch a_" + std::to_string(i) + " is not attached beside c_" + std::to_string(i));
      }
    }
    // Folding c_i must lay a_{i-1} onto a_{i+1}.
    for (std::size_t i = 1; i + 1 < by_crease.size() && strip != nullptr; ++i) {
      const auto* prev = by_crease[i - 1];
      const auto* nextb = by_crease[i + 1];
      if (prev == nullptr || nextb == nullptr) continue;
      const Rational& x = p.creases[strip->creases[i]].a.x;
      const Rational lo = x + x - prev->arm.x1, hi = x + x - prev->arm.x0;
      const bool overlap = lo < nextb->arm.x1 && nextb->arm.x0 < hi && prev->arm.y0 == nextb->arm.y0 &&
                           prev->arm.y1 == nextb->arm.y1;
      if (!overlap) {
        issue("branches", "folding c_" + std::to_string(i) + " does not align a_" +
                              std::to_string(i - 1) + " with a_" + std::to_string(i + 1));
      }
    }
  } else if (!p.branches.empty()) {
    issue("branches", "assigned pattern carries Cactus branches");
  }
  return r;
}

nlohmann::json to_fold(const PolyPattern& p) {
  std::vector<Point2> points = p.vertices;
  for (const auto& c : p.creases) points.push_back(c.a), points.push_back(c.b);
  // Crossing points of perpendicular creases.
  for (std::size_t i = 0; i < p.creases.size(); ++i) {
    for (std::size_t j = i + 1; j < p.creases.size(); ++j) {
      const auto& a = p.creases[i];
      const auto& b = p.creases[j];
      if ((a.a.x == a.b.x) == (b.a.x == b.b.x)) continue;
      const auto& vert = a.a.x == a.b.x ? a : b;
      const auto& hor = a.a.x == a.b.x ? b : a;
      const Point2 q{vert.a.x, hor.a.y};
      if (min(hor.a.x, hor.b.x) <= q.x && q.x <= max(hor.a.x, hor.b.x) &&
          min(vert.a.y, vert.b.y) <= q.y && q.y <= max(vert.a.y, vert.b.y)) {
        points.push_back(q);
      }
    }
  }
  std::map<std::pair<Rational, Rational>, std::size_t> index;
  std::vector<Point2> coords;
  auto id = [&](const Point2& q) {
    auto [it, fresh] = index.emplace(std::make_pair(q.x, q.y), coords.size());
    if (fresh) coords.push_back(q);
    return it->second;
  };
  nlohmann::json edges = nlohmann::json::array(), kinds = nlohmann::json::array();
  auto emit = [&](const Point2& a, const Point2& b, const std::string& kind) {
    const bool vertical = a.x == b.x;
    std::vector<Point2> on;
    for (const auto& q : points) {
      const bool inside = vertical ? q.x == a.x && min(a.y, b.y) <= q.y && q.y <= max(a.y, b.y)
                                   : q.y == a.y && min(a.x, b.x) <= q.x && q.x <= max(a.x, b.x);
      if (inside) on.push_back(q);
    }
    std::sort(on.begin(), on.end(), [&](const Point2& u, const Point2& w) {
      return vertical ? u.y < w.y : u.x < w.x;
    });
    on.erase(std::unique(on.begin(), on.end()), on.end());
    for (std::size_t k = 0; k + 1 < on.size(); ++k) {
      edges.push_back({id(on[k]), id(on[k + 1])});
      kinds.push_back(kind);
    }
  };
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    emit(p.vertices[i], p.vertices[(i + 1) % p.vertices.size()], "B");
  }
  for (const auto& c : p.creases) emit(c.a, c.b, std::string(1, to_char(c.mv)));
  nlohmann::json vc = nlohmann::json::array();
  for (const auto& q : coords) vc.push_back({q.x.to_double(), q.y.to_double()});
  return {{"file_spec", 1.1},
          {"file_creator", "simplefold"},
          {"frame_classes", {"creasePattern"}},
          {"vertices_coords", vc},
          {"edges_vertices", edges},
          {"edges_assignment", kinds}};
}

}  // namespace simplefold
