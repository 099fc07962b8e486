// Acceptance suite: one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <unordered_set>
#include <sstream>
#include <string>
#include <vector>

#include "simplefold/all_layers.hpp"
#include "simplefold/characterize.hpp"
#include "simplefold/cli.hpp"
#include "simplefold/envelope.hpp"
#include "simplefold/gadgets.hpp"
#include "simplefold/json_io.hpp"
#include "simplefold/mixed_assign.hpp"
#include "simplefold/oracle.hpp"
#include "simplefold/rect.hpp"

using namespace simplefold;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Collects failures, keeping the first few for the report.
class Tally {
 public:
  void fail(const std::string& what) {
    ++failures_;
    if (examples_.size() < 3) examples_.push_back(what);
  }
  Outcome outcome(const std::string& summary) const {
    Outcome o;
    o.pass = failures_ == 0;
    std::ostringstream s;
    s << summary;
    if (failures_ > 0) {
      s << "; " << failures_ << " failure(s), e.g.";
      for (const auto& e : examples_) s << " {" << e << "}";
    }
    o.detail = s.str();
    return o;
  }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> examples_;
};

CreasePattern1D parse_1d(int length, const std::string& spec) {
  std::vector<Crease> cs;
  std::istringstream in(spec);
  std::string tok;
  while (in >> tok) {
    cs.push_back({Rational::parse(tok.substr(1)), assignment_from_string(tok.substr(0, 1))});
  }
  return CreasePattern1D(Rational(length), std::move(cs));
}

std::string verdict(SearchOutcome o) { return to_string(o); }

Outcome criterion_1() {
  Tally t;
  const auto patterns = envelope_patterns({1, 8, 5, 0});
  for (const auto& p : patterns) {
    const bool d = decide_assigned(p).foldable;
    const auto one = search_1d(p, LayerModel::OneLayer).outcome;
    const auto some = search_1d(p, LayerModel::SomeLayers).outcome;
    const auto want = d ? SearchOutcome::Foldable : SearchOutcome::Unfoldable;
    if (one != want || some != want) {
      t.fail(p.to_string() + " decider=" + (d ? "foldable" : "unfoldable") +
             " one=" + verdict(one) + " some=" + verdict(some));
    }
  }
  return t.outcome(std::to_string(patterns.size()) + " assigned patterns compared");
}

Outcome criterion_2() {
  Tally t;
  const auto patterns = envelope_patterns({1, 8, 5, 3});
  std::size_t mixed = 0;
  for (const auto& p : patterns) {
    const bool brute = completion_exists(p);
    for (TieBreak tb : {TieBreak::Leftmost, TieBreak::Rightmost}) {
      const auto found = find_valid_assignment(p, {tb, nullptr});
      if (found.has_value() != brute) {
        t.fail(p.to_string() + (tb == TieBreak::Leftmost ? " leftmost" : " rightmost") +
               " algorithm=" + (found ? "assignment" : "none") +
               " brute=" + (brute ? "exists" : "none"));
        continue;
      }
      if (found && !decide_assigned(apply_assignment(p, *found)).foldable) {
        t.fail(p.to_string() + " returned assignment is not foldable");
      }
    }
    for (const auto& c : p.creases()) {
      if (c.mv == Assignment::Unassigned) {
        ++mixed;
        break;
      }
    }
  }
  return t.outcome(std::to_string(patterns.size()) + " patterns (" + std::to_string(mixed) +
                   " with unassigned creases), both tie-breaks");
}

Outcome criterion_3() {
  Tally t;
  const auto patterns = envelope_patterns({1, 8, 5, 3});
  for (const auto& p : patterns) {
    const bool d = decide_all_layers_mixed(p).foldable;
    const auto o = search_1d(p, LayerModel::AllLayers).outcome;
    if (o != (d ? SearchOutcome::Foldable : SearchOutcome::Unfoldable)) {
      t.fail(p.to_string() + " greedy=" + (d ? "foldable" : "unfoldable") + " oracle=" + verdict(o));
    }
  }
  struct Named {
    CreasePattern1D p;
    bool one, some, all;
  };
  const std::vector<Named> named = {
      {parse_1d(8, "M3 M5"), false, false, false},
      {parse_1d(6, "V2 M3"), true, true, false},
      {parse_1d(4, "M1 M2 M3"), true, true, true},
  };
  for (const auto& n : named) {
    const bool one = search_1d(n.p, LayerModel::OneLayer).outcome == SearchOutcome::Foldable;
    const bool some = search_1d(n.p, LayerModel::SomeLayers).outcome == SearchOutcome::Foldable;
    const bool all = search_1d(n.p, LayerModel::AllLayers).outcome == SearchOutcome::Foldable;
    const bool d_one = decide_mixed(n.p, LayerModel::OneLayer).foldable;
    const bool d_some = decide_mixed(n.p, LayerModel::SomeLayers).foldable;
    const bool d_all = decide_all_layers_mixed(n.p).foldable;
    if (one != n.one || some != n.some || all != n.all || d_one != n.one || d_some != n.some ||
        d_all != n.all) {
      t.fail("named witness " + n.p.to_string());
    }
  }
  return t.outcome(std::to_string(patterns.size()) + " mixed patterns plus 3 named witnesses");
}

Outcome criterion_4() {
  Tally t;
  const auto patterns = envelope_patterns({1, 8, 5, 3});
  std::size_t pairs = 0, prefixes = 0, creases = 0;
  for (const auto& p : patterns) {
    // (a) intersections of suspicious intervals
    const auto sus = suspicious_intervals(p);
    for (std::size_t i = 0; i < sus.size(); ++i) {
      for (std::size_t j = i + 1; j < sus.size(); ++j) {
        const Interval cut{std::max(sus[i].left_vertex, sus[j].left_vertex),
                           std::min(sus[i].right_vertex, sus[j].right_vertex)};
        if (cut.left_vertex >= cut.right_vertex) continue;
        ++pairs;
        if (!is_suspicious(p, cut)) t.fail("intersection not suspicious in " + p.to_string());
      }
    }
    // (c) valid implies plausible
    const auto plausible = plausible_creases(p);
    for (std::size_t k = 0; k < p.crease_count(); ++k) {
      ++creases;
      if (!is_valid_all_layers_fold(p, k).valid) continue;
      bool listed = false;
      for (const auto& q : plausible) listed = listed || q.crease == k;
      if (!listed) t.fail("valid but not plausible: crease " + std::to_string(k) + " of " + p.to_string());
    }
  }
  // (b) every legal crimp / end fold along every synthesized sequence keeps
  // every suspicious interval innocent.
  for (const auto& p : envelope_patterns({1, 8, 5, 0})) {
    if (!decide_assigned(p).foldable) continue;
    const auto seq = std::get<std::vector<ReductionOp>>(synthesize_sequence(p));
    CreasePattern1D cur = p;
    for (std::size_t step = 0; step <= seq.size(); ++step) {
      for (const auto& op : legal_reductions(cur)) {
        ++prefixes;
        if (find_guilty_interval(apply_reduction(cur, op)).has_value()) {
          t.fail(to_string(op) + " on " + cur.to_string() + " creates a guilty interval");
        }
      }
      if (step < seq.size()) cur = apply_reduction(cur, seq[step]);
    }
    if (cur.crease_count() != 0) t.fail("sequence leaves creases in " + p.to_string());
  }
  return t.outcome(std::to_string(pairs) + " interval pairs, " + std::to_string(prefixes) +
                   " reductions along sequences, " + std::to_string(creases) + " creases");
}

RectPattern random_rect(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> w(2, 4), h(1, 4);
  std::uniform_real_distribution<double> u(0, 1);
  const int width = w(rng), height = h(rng);
  auto pick = [&]() {
    const double r = u(rng);
    return r < 0.4 ? Assignment::Valley : r < 0.8 ? Assignment::Mountain : Assignment::Unassigned;
  };
  std::vector<RectCrease> cs;
  auto lines = [&](Axis axis, int across, int along) {
    for (int c = 1; c < across; ++c) {
      if (u(rng) < 0.3) continue;
      if (u(rng) < 0.85) {
        cs.push_back({axis, Rational(c), Rational(0), Rational(along), pick()});
        continue;
      }
      for (int k = 0; k < along; ++k) {
        if (u(rng) < 0.15) continue;
        cs.push_back({axis, Rational(c), Rational(k), Rational(k + 1), pick()});
      }
    }
  };
  lines(Axis::Vertical, width, height);
  lines(Axis::Horizontal, height, width);
  return RectPattern(Rational(width), Rational(height), std::move(cs));
}

/// Visits every (state, previous fold direction) reachable by legal moves and
/// checks that each direction change moves every layer on its side of the line.
struct TraceWalker {
  const Sheet& sheet;
  LayerModel model;
  Tally& tally;
  std::unordered_set<std::string> seen;
  std::size_t transitions = 0;

  void walk(const FoldedSheet& s, int last_axis) {
    std::string key = canonical_key(sheet, s) + "#" + std::to_string(last_axis);
    if (!seen.insert(std::move(key)).second) return;
    for (const auto& next : enumerate_successors(sheet, s, model)) {
      ++transitions;
      const int axis = static_cast<int>(next.move.axis);
      if (last_axis >= 0 && axis != last_axis && next.move.extent != ExtentKind::AllLayers) {
        tally.fail("direction change with extent " + to_string(next.move.extent));
      }
      walk(next.state, axis);
    }
  }
};

Outcome criterion_5() {
  Tally t;
  std::mt19937_64 rng(20240501);
  const std::size_t embedded = 300;
  for (std::size_t i = 0; i < embedded; ++i) {
    const auto p = random_pattern(rng, {8, 3, 6, 0.35});
    const Rational height = Rational(1 + static_cast<int>(i % 3), 1 + static_cast<int>(i % 2));
    const bool rect = decide_rect_one_layer(embed_as_vertical_lines(p, height)).foldable;
    const bool line = decide_mixed(p, LayerModel::OneLayer).foldable;
    if (rect != line) t.fail("embedding of " + p.to_string());
  }
  const RectPattern both(Rational(4), Rational(2),
                         {{Axis::Vertical, Rational(2), Rational(0), Rational(2), Assignment::Unassigned},
                          {Axis::Horizontal, Rational(1), Rational(0), Rational(4), Assignment::Unassigned}});
  if (decide_rect_one_layer(both).foldable) t.fail("4x2 cross reported one-layer foldable");

  const RectPattern cross(Rational(2), Rational(2),
                          {{Axis::Vertical, Rational(1), Rational(0), Rational(2), Assignment::Valley},
                           {Axis::Horizontal, Rational(1), Rational(0), Rational(2), Assignment::Valley}});
  const RectPattern mixed(Rational(2), Rational(2),
                          {{Axis::Vertical, Rational(1), Rational(0), Rational(2), Assignment::Valley},
                           {Axis::Horizontal, Rational(1), Rational(0), Rational(1), Assignment::Mountain},
                           {Axis::Horizontal, Rational(1), Rational(1), Rational(2), Assignment::Valley}});
  if (search_rect(cross, LayerModel::SomeLayers).outcome != SearchOutcome::Unfoldable) {
    t.fail("2x2 all-valley cross not unfoldable");
  }
  if (search_rect(mixed, LayerModel::SomeLayers).outcome != SearchOutcome::Foldable) {
    t.fail("2x2 mixed-sign cross not foldable");
  }

  std::size_t transitions = 0, instances = 0;
  std::vector<RectPattern> rects = {cross, mixed};
  for (int i = 0; i < 200; ++i) rects.push_back(random_rect(rng));
  for (const auto& r : rects) {
    const Sheet sheet = Sheet::from_rect(r);
    for (LayerModel m : {LayerModel::SomeLayers, LayerModel::AllLayers}) {
      TraceWalker walker{sheet, m, t, {}, 0};
      walker.walk(initial_state(sheet), -1);
      transitions += walker.transitions;
      ++instances;
      const auto res = search(sheet, m);
      if (res.outcome == SearchOutcome::Inconclusive) t.fail("rect search inconclusive");
    }
  }
  return t.outcome(std::to_string(embedded) + " embedded 1D instances; " +
                   std::to_string(instances) + " rect searches, " + std::to_string(transitions) +
                   " legal rect moves checked for the direction-change property");
}

bool has_check(const ValidationReport& r, const std::string& check) {
  for (const auto& i : r.issues) {
    if (i.check == check) return true;
  }
  return false;
}

std::size_t coordinate_count(const RectPattern& p) { return 2 + 3 * p.creases().size(); }
std::size_t coordinate_count(const PolyPattern& p) {
  return 2 * (p.vertices.size() + 2 * p.creases.size());
}

// Bounded 3SAT check: each model gets the smallest preset valid in it.
void bounded_3sat(Tally& t, std::ostringstream& note) {
  const std::size_t budget = 4000;
  const std::vector<std::string> formulas = {
      "1 1 1", "-1 -1 -1", "1 -1 1", "1 1 1; 1 -1 -1", "-1 1 -1; -1 -1 -1", "1 1 -1; -1 -1 -1",
      "1 1 1; -1 -1 -1"};
  const std::pair<LayerModel, ThreeSatConfig> runs[] = {
      {LayerModel::SomeLayers, ThreeSatConfig::compact()},
      {LayerModel::AllLayers, ThreeSatConfig::spaced()}};
  SearchOptions o;
  o.max_nodes = budget;
  o.check_invariants = false;
  for (const auto& [model, config] : runs) {
    std::size_t agree = 0, sat = 0, unsat = 0, max_nodes = 0;
    std::vector<std::string> inconclusive;
    for (const auto& text : formulas) {
      const auto f = ThreeSatFormula::parse(text);
      const auto r = search_rect(gen_3sat_rect(f, config), model, o);
      if (r.outcome == SearchOutcome::Inconclusive) {
        inconclusive.push_back(text);
        continue;
      }
      max_nodes = std::max(max_nodes, r.nodes);
      if (is_foldable(r) != f.satisfiable()) {
        t.fail("3SAT " + to_string(model) + " [" + text + "] foldable=" + std::to_string(is_foldable(r)));
        continue;
      }
      ++agree;
      (f.satisfiable() ? sat : unsat) += 1;
    }
    note << "; bounded 3SAT " << to_string(model) << " (" << (config.merge_gaps ? "spaced" : "compact")
         << ", budget " << budget << "): " << agree << " agree (" << sat << " sat, " << unsat
         << " unsat, max " << max_nodes << " nodes)";
    if (agree == 0) note << ", nothing fits: inconclusive";
    for (const auto& text : inconclusive) note << ", inconclusive [" << text << "]";
  }
}

Outcome criterion_6() {
  Tally t;
  std::ostringstream note;

  // Determinism: byte-identical JSON from repeated generation.
  for (const char* text : {"1 1 1", "1 -2 3; -1 2 3"}) {
    const auto f = ThreeSatFormula::parse(text);
    for (const auto& c : {ThreeSatConfig::spaced(), ThreeSatConfig::compact()}) {
      if (to_json(gen_3sat_rect(f, c)).dump() != to_json(gen_3sat_rect(f, c)).dump()) {
        t.fail(std::string("3SAT output differs between runs: ") + text);
      }
    }
  }

  std::size_t validated = 0;
  for (const char* nums : {"1,1,1", "1,2,3", "1,2,3,1,2,3", "1,2,3,1,2,3,1,2,3", "1,2,3,1,2,3,1,2,3,1,2,3"}) {
    const auto inst = ThreePartitionInstance::parse(nums);
    const std::size_t m = inst.m();
    const auto tt = inst.target();
    for (const bool cactus : {false, true}) {
      const std::string tag = std::string(nums) + (cactus ? " cactus" : " assigned");
      const auto gen = [&] { return cactus ? gen_3partition_unassigned(inst) : gen_3partition_assigned(inst); };
      const auto p = gen();
      if (to_json(p).dump() != to_json(gen()).dump()) t.fail("output differs between runs: " + tag);
      const auto report = validate_polypattern(p);
      if (!report.ok()) {
        t.fail("validation: " + tag + ": " + report.issues.front().check);
        continue;
      }
      ++validated;
      const auto* gadget = p.part(cactus ? "cactus" : "wrapper");
      if (gadget == nullptr || gadget->creases.size() != 2 * m) t.fail("crease count: " + tag);
      if (cactus && p.branches.size() != 2 * m) t.fail("branch count: " + tag);
      const auto* cage = p.part("cage");
      if (cage == nullptr || cage->boxes.size() != 1 + 2 * m) {
        t.fail("cage step count: " + tag);
      } else {
        for (std::size_t k = 1; k < cage->boxes.size(); ++k) {
          if (cage->boxes[k].y1 - cage->boxes[k].y0 != Rational(2 * tt)) t.fail("cage step height: " + tag);
        }
      }
      // Linear in m; the 64 covers the fixed parts.
      if (coordinate_count(p) > 64 + 64 * m) {
        t.fail("coordinate count " + std::to_string(coordinate_count(p)) + ": " + tag);
      }
    }
  }
  note << validated << " 3-Partition patterns validated with 2m Wrapper/Cactus creases, 2m branches, 2m Cage steps of height 2t";

  // Scaling of the 3SAT grid: quadratic side lengths, so crease count is O(s^2) with s = n + m.
  std::size_t largest = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    ThreeSatFormula f;
    f.variables = n;
    for (std::size_t j = 0; j < 2 * n; ++j) {
      const int v = static_cast<int>(j % n) + 1;
      f.clauses.push_back({v, -(static_cast<int>((j + 1) % n) + 1), j % 2 ? v : -v});
    }
    const auto s = n + f.clauses.size();
    const auto p = gen_3sat_rect(f);
    const auto L = layout_3sat(f);
    largest = std::max(largest, coordinate_count(p));
    if (L.width > Rational(static_cast<std::int64_t>(4 * s * s + 32)) ||
        L.height > Rational(static_cast<std::int64_t>(2 * s * s + 32)) ||
        coordinate_count(p) > 3 * (4 * s * s + 32) * (2 * s * s + 32)) {
      t.fail("3SAT size not within the quadratic bound at n=" + std::to_string(n));
    }
  }
  note << "; 3SAT coordinate counts within the polynomial bound up to n=8, m=16 (" << largest << " coordinates)";

  // Negative controls.
  auto p = gen_3partition_assigned(ThreePartitionInstance::parse("1,1,1"));
  auto crossing = p;
  crossing.vertices = {{Rational(0), Rational(0)}, {Rational(4), Rational(0)}, {Rational(4), Rational(2)},
                       {Rational(1), Rational(2)}, {Rational(1), Rational(-1)}, {Rational(3), Rational(-1)},
                       {Rational(3), Rational(3)}, {Rational(0), Rational(3)}};
  if (!has_check(validate_polypattern(crossing), "simple")) t.fail("self-crossing boundary accepted");
  auto cw = p;
  std::reverse(cw.vertices.begin(), cw.vertices.end());
  if (!has_check(validate_polypattern(cw), "orientation")) t.fail("clockwise boundary accepted");
  auto stray = p;
  stray.creases.push_back({{Rational(-5), Rational(-5)}, {Rational(-5), Rational(-1)}, Assignment::Valley});
  if (!has_check(validate_polypattern(stray), "crease")) t.fail("crease outside the polygon accepted");
  auto cactus = gen_3partition_unassigned(ThreePartitionInstance::parse("1,1,1"));
  cactus.branches.pop_back();
  if (!has_check(validate_polypattern(cactus), "branches")) t.fail("missing Cactus branch accepted");
  auto wrapper = p;
  for (auto& g : wrapper.parts) {
    if (g.name == "wrapper") g.creases.pop_back();
  }
  if (validate_polypattern(wrapper).ok()) t.fail("short Wrapper accepted");
  note << "; 5 negative controls rejected";

  bounded_3sat(t, note);
  return t.outcome(note.str());
}

// Golden CLI cases: exit code, single JSON document, and for reports the
// exact document recorded under tests/golden/expected.
Outcome criterion_7() {
  namespace fs = std::filesystem;
  Tally t;
  const fs::path dir = SIMPLEFOLD_GOLDEN_DIR;
  std::ifstream in(dir / "cases.json");
  const auto cases = nlohmann::json::parse(in);
  std::size_t by_code[4] = {0, 0, 0, 0};
  for (const auto& c : cases) {
    const std::string name = c["name"];
    std::vector<std::string> args;
    for (const std::string a : c["args"]) args.push_back(a.starts_with("@") ? (dir / "inputs" / a.substr(1)).string() : a);
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    if (code != c["exit"].get<int>()) {
      t.fail(name + ": exit " + std::to_string(code));
      continue;
    }
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(out.str());
    } catch (const nlohmann::json::exception&) {
      t.fail(name + ": output is not one JSON document");
      continue;
    }
    if (c.value("error", false) && !doc.contains("error")) t.fail(name + ": no error field");
    if (c.value("golden", false)) {
      std::ifstream g(dir / "expected" / (name + ".json"));
      if (!g || nlohmann::json::parse(g) != doc) t.fail(name + ": report differs from golden");
    }
    if (c.contains("fields")) {
      for (const auto& [k, v] : c["fields"].items()) {
        if (doc.value(k, nlohmann::json()) != v) t.fail(name + ": field " + k);
      }
    }
    ++by_code[code];
  }
  std::ostringstream s;
  s << cases.size() << " golden cases (exit 0: " << by_code[0] << ", 1: " << by_code[1] << ", 2: " << by_code[2]
    << ", 3: " << by_code[3] << ")";
  return t.outcome(s.str());
}

}  // namespace

// Optional arguments select criteria by number; default runs all.
int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1D assigned: decider == one-layer oracle == some-layers oracle", criterion_1},
      {"1D mixed: assignment algorithm == brute-force completion", criterion_2},
      {"1D all-layers: greedy == all-layers oracle", criterion_3},
      {"lemma properties: intersections, crimp/end-fold preservation, valid => plausible", criterion_4},
      {"rectangles: 1D embedding, 2x2 crosses, direction changes fold all layers", criterion_5},
      {"gadgets: determinism, validation, structural counts, scaling, bounded 3SAT check", criterion_6},
      {"CLI exit codes and JSON reports match the golden cases", criterion_7},
  };
  bool all = true;
  std::vector<bool> selected(criteria.size(), argc <= 1);
  for (int a = 1; a < argc; ++a) {
    const auto k = static_cast<std::size_t>(std::atoi(argv[a]));
    if (k >= 1 && k <= criteria.size()) selected[k - 1] = true;
  }
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!selected[i]) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s [%zu] %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
