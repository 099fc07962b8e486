#include "simplefold/characterize.hpp"

#include <algorithm>

#include "simplefold/errors.hpp"

namespace simplefold {

namespace {

void require_assigned(const CreasePattern1D& p, const char* who) {
  if (!p.is_assigned()) {
    throw PreconditionError(std::string(who) + " requires a fully assigned pattern");
  }
}

std::size_t crease_index_at(const CreasePattern1D& p, const Rational& x) {
  const auto& cs = p.creases();
  auto it = std::lower_bound(cs.begin(), cs.end(), x,
                             [](const Crease& c, const Rational& v) { return c.position < v; });
  if (it == cs.end() || it->position != x) {
    throw InvalidOperation("no crease at " + x.to_string());
  }
  return static_cast<std::size_t>(it - cs.begin());
}

bool opposite_signs(Assignment a, Assignment b) {
  return (a == Assignment::Mountain && b == Assignment::Valley) ||
         (a == Assignment::Valley && b == Assignment::Mountain);
}

CreasePattern1D apply_crimp(const CreasePattern1D& p, const Crimp& op) {
  const std::size_t i = crease_index_at(p, op.left);
  const std::size_t j = crease_index_at(p, op.right);
  if (j != i + 1) throw InvalidOperation("crimp creases must be adjacent");
  const auto& cs = p.creases();
  if (!opposite_signs(cs[i].mv, cs[j].mv)) {
    throw InvalidOperation("crimp needs one mountain and one valley crease");
  }
  // Vertex of crease i is i+1.
  const Rational middle = p.segment_length(i + 1);
  if (middle > p.segment_length(i)) {
    throw InvalidOperation("crimped segment is longer than its left flap");
  }
  if (middle > p.segment_length(i + 2)) {
    throw InvalidOperation("crimped segment is longer than its right flap");
  }
  const Rational shift = middle + middle;
  std::vector<Crease> out;
  out.reserve(cs.size() - 2);
  for (std::size_t k = 0; k < i; ++k) out.push_back(cs[k]);
  for (std::size_t k = j + 1; k < cs.size(); ++k) out.push_back({cs[k].position - shift, cs[k].mv});
  return CreasePattern1D(p.length() - shift, std::move(out));
}

CreasePattern1D apply_end_fold(const CreasePattern1D& p, const EndFold& op) {
  const std::size_t i = crease_index_at(p, op.crease);
  const auto& cs = p.creases();
  if (op.side == Side::Left) {
    if (i != 0) throw InvalidOperation("left end fold must use the leftmost crease");
    if (p.segment_length(0) > p.segment_length(1)) {
      throw InvalidOperation("end segment is longer than its flap");
    }
    std::vector<Crease> out;
    out.reserve(cs.size() - 1);
    for (std::size_t k = 1; k < cs.size(); ++k) out.push_back({cs[k].position - op.crease, cs[k].mv});
    return CreasePattern1D(p.length() - op.crease, std::move(out));
  }
  if (i + 1 != cs.size()) throw InvalidOperation("right end fold must use the rightmost crease");
  const std::size_t last = p.segment_count() - 1;
  if (p.segment_length(last) > p.segment_length(last - 1)) {
    throw InvalidOperation("end segment is longer than its flap");
  }
  std::vector<Crease> out(cs.begin(), cs.end() - 1);
  return CreasePattern1D(op.crease, std::move(out));
}

}  // namespace

std::string to_string(const ReductionOp& op) {
  if (const auto* c = std::get_if<Crimp>(&op)) {
    return "crimp(" + c->left.to_string() + "," + c->right.to_string() + ")";
  }
  const auto& e = std::get<EndFold>(op);
  return "endfold(" + e.crease.to_string() + (e.side == Side::Left ? ",left)" : ",right)");
}

std::size_t creases_consumed(const ReductionOp& op) {
  return std::holds_alternative<Crimp>(op) ? 2 : 1;
}

std::optional<Interval> find_guilty_interval(const CreasePattern1D& pattern) {
  require_assigned(pattern, "find_guilty_interval");
  std::optional<Interval> best;
  for (const auto& iv : suspicious_intervals(pattern)) {
    if (is_innocent(pattern, iv)) continue;
    if (!best || shorter_interval(pattern, iv, *best)) best = iv;
  }
  return best;
}

ReductionOp find_reducible_segment(const CreasePattern1D& pattern) {
  require_assigned(pattern, "find_reducible_segment");
  if (pattern.crease_count() == 0) throw std::domain_error("pattern has no creases to reduce");
  if (auto guilty = find_guilty_interval(pattern)) {
    throw CharacterizationViolation("suspicious interval is not innocent", *guilty);
  }
  const std::size_t segs = pattern.segment_count();
  std::size_t first = 0;
  Rational shortest = pattern.segment_length(0);
  for (std::size_t s = 1; s < segs; ++s) {
    const Rational len = pattern.segment_length(s);
    if (len < shortest) {
      shortest = len;
      first = s;
    }
  }
  std::size_t last = first;
  while (last + 1 < segs && pattern.segment_length(last + 1) == shortest) ++last;

  const auto& cs = pattern.creases();
  if (first == 0) return EndFold{cs.front().position, Side::Left};
  if (last == segs - 1) return EndFold{cs.back().position, Side::Right};

  // Run of equal segments spans vertices first..last+1, all creases.
  for (std::size_t v = first; v <= last; ++v) {
    const auto& a = cs[v - 1];
    const auto& b = cs[v];
    if (opposite_signs(a.mv, b.mv)) return Crimp{a.position, b.position};
  }
  throw CharacterizationViolation("run of shortest segments has no mountain/valley pair",
                                  Interval{first, last + 1});
}

CreasePattern1D apply_reduction(const CreasePattern1D& pattern, const ReductionOp& op) {
  if (const auto* c = std::get_if<Crimp>(&op)) return apply_crimp(pattern, *c);
  return apply_end_fold(pattern, std::get<EndFold>(op));
}

std::vector<ReductionOp> legal_reductions(const CreasePattern1D& pattern) {
  std::vector<ReductionOp> out;
  const auto& cs = pattern.creases();
  if (cs.empty()) return out;
  auto try_push = [&](ReductionOp op) {
    try {
      (void)apply_reduction(pattern, op);
      out.push_back(std::move(op));
    } catch (const InvalidOperation&) {
    }
  };
  try_push(EndFold{cs.front().position, Side::Left});
  for (std::size_t i = 0; i + 1 < cs.size(); ++i) try_push(Crimp{cs[i].position, cs[i + 1].position});
  try_push(EndFold{cs.back().position, Side::Right});
  return out;
}

std::variant<std::vector<ReductionOp>, Interval> synthesize_sequence(const CreasePattern1D& pattern) {
  require_assigned(pattern, "synthesize_sequence");
  if (auto guilty = find_guilty_interval(pattern)) return *guilty;
  std::vector<ReductionOp> seq;
  CreasePattern1D current = pattern;
  while (current.crease_count() > 0) {
    ReductionOp op = find_reducible_segment(current);
    current = apply_reduction(current, op);
    seq.push_back(std::move(op));
  }
  return seq;
}

AssignedVerdict decide_assigned(const CreasePattern1D& pattern) {
  require_assigned(pattern, "decide_assigned");
  AssignedVerdict v;
  auto result = synthesize_sequence(pattern);
  if (auto* guilty = std::get_if<Interval>(&result)) {
    v.guilty = *guilty;
    return v;
  }
  v.foldable = true;
  v.sequence = std::move(std::get<std::vector<ReductionOp>>(result));
  return v;
}

}  // namespace simplefold
