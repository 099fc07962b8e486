#include "simplefold/all_layers.hpp"

#include <algorithm>

#include "simplefold/errors.hpp"

namespace simplefold {

namespace {

std::optional<std::size_t> crease_at(const CreasePattern1D& p, const Rational& x) {
  const auto& cs = p.creases();
  auto it = std::lower_bound(cs.begin(), cs.end(), x,
                             [](const Crease& c, const Rational& v) { return c.position < v; });
  if (it == cs.end() || it->position != x) return std::nullopt;
  return static_cast<std::size_t>(it - cs.begin());
}

Rational reach(const CreasePattern1D& p, std::size_t crease) {
  const Rational& c = p.creases()[crease].position;
  return min(c, p.length() - c);
}

bool compatible(Assignment a, Assignment b) {
  return a == Assignment::Unassigned || b == Assignment::Unassigned || a != b;
}

}  // namespace

ValidityReport is_valid_all_layers_fold(const CreasePattern1D& pattern, std::size_t crease) {
  ValidityReport report;
  report.crease = crease;
  const auto& cs = pattern.creases();
  const Rational& c = cs.at(crease).position;
  const Rational d = reach(pattern, crease);
  for (std::size_t q = 0; q < cs.size(); ++q) {
    if (q == crease || abs(cs[q].position - c) >= d) continue;
    const Rational mirror = c + c - cs[q].position;
    auto hit = crease_at(pattern, mirror);
    if (!hit) {
      report.conflict = FoldConflict{FoldConflict::Kind::NonCreasePoint, cs[q].position, mirror,
                                     cs[q].mv, Assignment::Unassigned};
      return report;
    }
    if (!compatible(cs[q].mv, cs[*hit].mv)) {
      report.conflict = FoldConflict{FoldConflict::Kind::EqualAssignments, cs[q].position, mirror,
                                     cs[q].mv, cs[*hit].mv};
      return report;
    }
  }
  report.valid = true;
  return report;
}

CreasePattern1D reduce_at(const CreasePattern1D& pattern, std::size_t crease) {
  const ValidityReport report = is_valid_all_layers_fold(pattern, crease);
  if (!report.valid) {
    const auto& k = *report.conflict;
    throw InvalidOperation("fold at " + pattern.creases().at(crease).position.to_string() +
                           " sends crease " + k.position.to_string() + " onto " +
                           (k.kind == FoldConflict::Kind::NonCreasePoint ? "a non-crease point "
                                                                         : "an equal crease ") +
                           k.mirror.to_string());
  }
  const auto& cs = pattern.creases();
  const Rational& c = cs[crease].position;
  const bool keep_right = c <= pattern.length() - c;
  std::vector<Crease> out;
  for (std::size_t q = 0; q < cs.size(); ++q) {
    if (q == crease || (keep_right ? q < crease : q > crease)) continue;
    Crease kept = cs[q];
    if (kept.mv == Assignment::Unassigned) {
      if (auto arriving = crease_at(pattern, c + c - kept.position)) {
        kept.mv = opposite(cs[*arriving].mv);
      }
    }
    if (keep_right) kept.position -= c;
    out.push_back(std::move(kept));
  }
  return CreasePattern1D(keep_right ? pattern.length() - c : c, std::move(out));
}

std::vector<PlausibleCrease> plausible_creases(const CreasePattern1D& pattern) {
  std::vector<PlausibleCrease> out;
  const auto& cs = pattern.creases();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Rational& c = cs[i].position;
    const Rational d = reach(pattern, i);
    bool symmetric = true;
    for (std::size_t q = 0; q < cs.size() && symmetric; ++q) {
      if (q == i || abs(cs[q].position - c) >= d) continue;
      symmetric = crease_at(pattern, c + c - cs[q].position).has_value();
    }
    if (symmetric) out.push_back({i, d});
  }
  return out;
}

AllLayersVerdict decide_all_layers_mixed(const CreasePattern1D& pattern) {
  AllLayersVerdict v;
  CreasePattern1D current = pattern;
  Rational shift(0);
  while (current.crease_count() > 0) {
    const auto plausible = plausible_creases(current);
    if (plausible.empty()) {
      v.reason = "no plausible crease in " + current.to_string();
      return v;
    }
    // Strict < keeps the leftmost among equally near creases.
    const PlausibleCrease* best = &plausible.front();
    for (const auto& p : plausible) {
      if (p.distance < best->distance) best = &p;
    }
    const ValidityReport report = is_valid_all_layers_fold(current, best->crease);
    const Rational& at = current.creases()[best->crease].position;
    if (!report.valid) {
      v.reason = "nearest plausible crease " + at.to_string() + " is not a valid fold in " +
                 current.to_string();
      v.conflict = report.conflict;
      return v;
    }
    v.sequence.push_back(at);
    v.original_positions.push_back(at + shift);
    if (at <= current.length() - at) shift += at;
    current = reduce_at(current, best->crease);
  }
  v.foldable = true;
  return v;
}

}  // namespace simplefold
