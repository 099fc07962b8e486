#include "simplefold/json_io.hpp"

namespace simplefold {

namespace {

std::string str(const Rational& r) { return r.to_string(); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

Assignment mv_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("mv must be \"M\", \"V\" or \"U\"");
  try {
    return assignment_from_string(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

std::string side_name(Side s, Axis axis) {
  if (axis == Axis::Horizontal) return s == Side::Left ? "bottom" : "top";
  return s == Side::Left ? "left" : "right";
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw ParseError("expected an exact-number string, got " + j.dump());
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

json to_json(const CreasePattern1D& p) {
  json cs = json::array();
  for (const auto& c : p.creases()) {
    cs.push_back({{"pos", str(c.position)}, {"mv", std::string(1, to_char(c.mv))}});
  }
  return {{"type", "1d"}, {"length", str(p.length())}, {"creases", cs}};
}

json to_json(const RectPattern& p) {
  json cs = json::array();
  for (const auto& c : p.creases()) {
    cs.push_back({{"axis", std::string(1, to_char(c.axis))},
                  {"coord", str(c.coord)},
                  {"from", str(c.from)},
                  {"to", str(c.to)},
                  {"mv", std::string(1, to_char(c.mv))}});
  }
  return {{"type", "rect"}, {"width", str(p.width())}, {"height", str(p.height())}, {"creases", cs}};
}

json to_json(const PolyPattern& p) {
  auto point = [](const Point2& q) { return json::array({str(q.x), str(q.y)}); };
  auto box = [](const Box& b) { return json::array({str(b.x0), str(b.y0), str(b.x1), str(b.y1)}); };
  json vertices = json::array();
  for (const auto& q : p.vertices) vertices.push_back(point(q));
  json creases = json::array();
  for (const auto& c : p.creases) {
    creases.push_back({{"from", point(c.a)}, {"to", point(c.b)}, {"mv", std::string(1, to_char(c.mv))}});
  }
  json parts = json::object();
  for (const auto& part : p.parts) {
    json boxes = json::array();
    for (const auto& b : part.boxes) boxes.push_back(box(b));
    parts[part.name] = {{"boxes", boxes}, {"creases", part.creases}};
  }
  json branches = json::array();
  for (const auto& b : p.branches) {
    branches.push_back({{"crease", b.crease}, {"stem", box(b.stem)}, {"arm", box(b.arm)}});
  }
  const auto& f = p.facts;
  return {{"type", "poly"},
          {"vertices", vertices},
          {"creases", creases},
          {"parts", parts},
          {"branches", branches},
          {"instance",
           {{"numbers", f.numbers}, {"m", f.m}, {"t", f.t}, {"cactus", f.cactus}, {"arm2", f.arm2}}}};
}

CreasePattern1D pattern_1d_from_json(const json& j) {
  if (field(j, "type") != "1d") throw ParseError("expected type \"1d\"");
  const Rational length = rational_from_json(field(j, "length"));
  const json& cs = field(j, "creases");
  if (!cs.is_array()) throw ParseError("creases must be an array");
  std::vector<Crease> out;
  for (const auto& c : cs) out.push_back({rational_from_json(field(c, "pos")), mv_from_json(field(c, "mv"))});
  try {
    return CreasePattern1D(length, std::move(out));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

RectPattern rect_from_json(const json& j) {
  if (field(j, "type") != "rect") throw ParseError("expected type \"rect\"");
  const Rational w = rational_from_json(field(j, "width"));
  const Rational h = rational_from_json(field(j, "height"));
  const json& cs = field(j, "creases");
  if (!cs.is_array()) throw ParseError("creases must be an array");
  std::vector<RectCrease> out;
  for (const auto& c : cs) {
    const json& axis = field(c, "axis");
    if (axis != "v" && axis != "h") throw ParseError("axis must be \"v\" or \"h\"");
    out.push_back({axis == "v" ? Axis::Vertical : Axis::Horizontal, rational_from_json(field(c, "coord")),
                   rational_from_json(field(c, "from")), rational_from_json(field(c, "to")),
                   mv_from_json(field(c, "mv"))});
  }
  try {
    return RectPattern(w, h, std::move(out));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::variant<CreasePattern1D, RectPattern> pattern_from_json(const json& j) {
  const json& type = field(j, "type");
  if (type == "1d") return pattern_1d_from_json(j);
  if (type == "rect") return rect_from_json(j);
  throw ParseError("unknown pattern type " + type.dump());
}

std::variant<CreasePattern1D, RectPattern> pattern_from_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return pattern_from_json(j);
}

json to_json(const ReductionOp& op) {
  if (const auto* c = std::get_if<Crimp>(&op)) {
    return {{"op", "crimp"}, {"left", str(c->left)}, {"right", str(c->right)}};
  }
  const auto& e = std::get<EndFold>(op);
  return {{"op", "endfold"}, {"crease", str(e.crease)}, {"side", e.side == Side::Left ? "left" : "right"}};
}

json to_json(const CreasePattern1D& p, const AssignedVerdict& v) {
  if (v.foldable) {
    json seq = json::array();
    for (const auto& op : v.sequence) seq.push_back(to_json(op));
    return {{"foldable", true}, {"sequence", seq}};
  }
  json out = {{"foldable", false}};
  if (v.guilty) {
    out["guilty"] = {str(p.vertex_position(v.guilty->left_vertex)),
                     str(p.vertex_position(v.guilty->right_vertex))};
  }
  return out;
}

json assignment_to_json(const CreasePattern1D& p, const PartialAssignment& a) {
  json values = json::object();
  for (const auto& [idx, mv] : a.values) {
    values[str(p.creases().at(idx).position)] = std::string(1, to_char(mv));
  }
  return {{"assignment", values}, {"completed_pattern", to_json(apply_assignment(p, a))}};
}

json to_json(const CreasePattern1D& p, const MixedVerdict& v) {
  json out = {{"foldable", v.foldable}};
  if (v.foldable) {
    out.update(assignment_to_json(p, v.assignment));
    json seq = json::array();
    for (const auto& op : v.sequence) seq.push_back(to_json(op));
    out["sequence"] = seq;
  }
  return out;
}

json to_json(const AllLayersVerdict& v) {
  json seq = json::array(), orig = json::array();
  for (const auto& x : v.sequence) seq.push_back(str(x));
  for (const auto& x : v.original_positions) orig.push_back(str(x));
  json out = {{"foldable", v.foldable},
              {"sequence", seq},
              {"coordinates", "reduced"},
              {"original_positions", orig}};
  if (!v.foldable) out["reason"] = v.reason;
  return out;
}

json to_json(const RectVerdict& v) {
  json out = {{"foldable", v.foldable}, {"reason", to_string(v.reason)}};
  if (!v.detail.empty()) out["detail"] = v.detail;
  if (v.projected) out["projected"] = to_json(*v.projected);
  if (v.foldable && v.projected) {
    json seq = json::array();
    for (const auto& op : v.mixed.sequence) seq.push_back(to_json(op));
    out["sequence"] = seq;
  }
  return out;
}

json to_json(const FoldMove& m) {
  json senses = json::array();
  for (auto s : m.senses) senses.push_back(std::string(1, to_char(s)));
  return {{"axis", std::string(1, to_char(m.axis))},
          {"coord", str(m.position)},
          {"side", side_name(m.moved_side, m.axis)},
          {"extent", to_string(m.extent)},
          {"direction", m.over ? "over" : "under"},
          {"layers", m.layers},
          {"senses", senses}};
}

json to_json(const SearchResult& r) {
  json trace = json::array();
  for (const auto& m : r.trace) trace.push_back(to_json(m));
  json out = {{"outcome", to_string(r.outcome)}, {"nodes", r.nodes}, {"trace", trace}};
  if (r.outcome != SearchOutcome::Inconclusive) out["foldable"] = r.outcome == SearchOutcome::Foldable;
  return out;
}

}  // namespace simplefold
