#include "simplefold/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "simplefold/envelope.hpp"
#include "simplefold/json_io.hpp"
#include "simplefold/oracle.hpp"
#include "simplefold/parallel.hpp"

namespace simplefold::cli {

namespace {

struct Options {
  std::string model;
  std::string input;
  std::string format = "json";
  std::size_t budget = SearchOptions{}.max_nodes;
  std::optional<std::uint64_t> seed;

  // fuzz
  std::string models = "one,some,all";
  std::size_t creases = 4;
  int max_length = 8;
  std::size_t unassigned = 0;
  std::string limit = "exhaustive";
  std::size_t random = 200;
  std::size_t workers = 0;
  std::string repro = "fuzz-repro.json";

  // gadget
  std::string gadget;
  std::string formula;
  std::string numbers;
  bool no_arm2 = false;
  bool compact = false;
  std::string out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path.empty()) throw UsageError("--input is required");
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

LayerModel require_model(const Options& o) {
  if (o.model.empty()) throw UsageError("--model one|some|all is required");
  return layer_model_from_string(o.model);
}

SearchOptions search_options(const Options& o) {
  SearchOptions s;
  s.max_nodes = o.budget;
  s.shuffle_seed = o.seed;
  return s;
}

int verdict_code(bool foldable) { return foldable ? kOk : kNegative; }

int search_code(const SearchResult& r) {
  switch (r.outcome) {
    case SearchOutcome::Foldable: return kOk;
    case SearchOutcome::Unfoldable: return kNegative;
    case SearchOutcome::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

struct Report {
  json doc;
  int code = kOk;
};

Report cmd_decide(const Options& o) {
  const LayerModel model = require_model(o);
  const auto pattern = pattern_from_text(read_input(o.input));
  Report r;
  if (const auto* p = std::get_if<CreasePattern1D>(&pattern)) {
    if (model == LayerModel::AllLayers) {
      const auto v = decide_all_layers_mixed(*p);
      r = {to_json(v), verdict_code(v.foldable)};
    } else {
      const auto v = decide_mixed(*p, model);
      r = {to_json(*p, v), verdict_code(v.foldable)};
    }
  } else {
    const auto& rect = std::get<RectPattern>(pattern);
    if (model == LayerModel::OneLayer) {
      const auto v = decide_rect_one_layer(rect);
      r = {to_json(v), verdict_code(v.foldable)};
    } else {
      const auto s = search_rect(rect, model, search_options(o));
      r = {to_json(s), search_code(s)};
    }
  }
  r.doc["model"] = to_string(model);
  return r;
}

const CreasePattern1D& require_1d(const std::variant<CreasePattern1D, RectPattern>& pattern,
                                  const char* command) {
  const auto* p = std::get_if<CreasePattern1D>(&pattern);
  if (p == nullptr) throw UsageError(std::string(command) + " takes a 1d pattern");
  return *p;
}

Report cmd_assign(const Options& o) {
  const auto pattern = pattern_from_text(read_input(o.input));
  const auto& p = require_1d(pattern, "assign");
  const auto found = find_valid_assignment(p);
  if (!found) return {{{"foldable", false}, {"assignment", nullptr}}, kNegative};
  json doc = assignment_to_json(p, *found);
  doc["foldable"] = true;
  return {doc, kOk};
}

Report cmd_sequence(const Options& o) {
  const LayerModel model = o.model.empty() ? LayerModel::OneLayer : layer_model_from_string(o.model);
  const auto pattern = pattern_from_text(read_input(o.input));
  const auto& p = require_1d(pattern, "sequence");
  Report r;
  if (model == LayerModel::AllLayers) {
    const auto v = decide_all_layers_mixed(p);
    r = {to_json(v), verdict_code(v.foldable)};
  } else if (p.is_assigned()) {
    const auto v = decide_assigned(p);
    r = {to_json(p, v), verdict_code(v.foldable)};
  } else {
    const auto v = decide_mixed(p, model);
    r = {to_json(p, v), verdict_code(v.foldable)};
  }
  r.doc["model"] = to_string(model);
  return r;
}

Report cmd_oracle(const Options& o) {
  const LayerModel model = require_model(o);
  const auto pattern = pattern_from_text(read_input(o.input));
  SearchResult s;
  if (const auto* p = std::get_if<CreasePattern1D>(&pattern)) {
    s = search_1d(*p, model, search_options(o));
  } else {
    if (model == LayerModel::OneLayer) {
      throw UsageError("the rectangle oracle simulates some/all layers; use decide --model one");
    }
    s = search_rect(std::get<RectPattern>(pattern), model, search_options(o));
  }
  Report r{to_json(s), search_code(s)};
  r.doc["model"] = to_string(model);
  return r;
}

// ------------------------------------------------------------------ fuzz --

struct Check {
  bool decider = false;
  SearchOutcome oracle = SearchOutcome::Inconclusive;
  bool agrees() const {
    return oracle != SearchOutcome::Inconclusive && decider == (oracle == SearchOutcome::Foldable);
  }
};

Check check(const CreasePattern1D& p, LayerModel model, const SearchOptions& so) {
  Check c;
  c.decider = model == LayerModel::AllLayers ? decide_all_layers_mixed(p).foldable
                                             : decide_mixed(p, model).foldable;
  c.oracle = search_1d(p, model, so).outcome;
  return c;
}

bool disagrees(const CreasePattern1D& p, LayerModel model, const SearchOptions& so) {
  const Check c = check(p, model, so);
  return c.oracle != SearchOutcome::Inconclusive && !c.agrees();
}

/// Greedy shrink: drop creases, then pin unassigned ones, while the
/// disagreement persists.
CreasePattern1D minimize(CreasePattern1D p, LayerModel model, const SearchOptions& so) {
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t i = 0; i < p.crease_count() && !progress; ++i) {
      auto cs = p.creases();
      cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(i));
      CreasePattern1D q(p.length(), cs);
      if (disagrees(q, model, so)) p = std::move(q), progress = true;
    }
    for (std::size_t i = 0; i < p.crease_count() && !progress; ++i) {
      if (p.creases()[i].mv != Assignment::Unassigned) continue;
      for (Assignment a : {Assignment::Mountain, Assignment::Valley}) {
        CreasePattern1D q = p.with_assignment(i, a);
        if (disagrees(q, model, so)) {
          p = std::move(q), progress = true;
          break;
        }
      }
    }
  }
  return p;
}

std::vector<LayerModel> parse_models(const std::string& text) {
  std::vector<LayerModel> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(layer_model_from_string(tok));
    } catch (const std::invalid_argument&) {
      throw UsageError("unknown model '" + tok + "'");
    }
  }
  if (out.empty()) throw UsageError("--models needs at least one of one,some,all");
  return out;
}

Report cmd_fuzz(const Options& o, std::ostream& err) {
  const auto models = parse_models(o.models);
  std::optional<std::size_t> cap;
  if (o.limit != "exhaustive") {
    try {
      std::size_t used = 0;
      cap = std::stoul(o.limit, &used);
      if (used != o.limit.size()) throw std::invalid_argument(o.limit);
    } catch (const std::exception&) {
      throw UsageError("--limit takes 'exhaustive' or a count");
    }
  }
  if (o.max_length < 1) throw UsageError("--max-length must be positive");

  EnvelopeConfig env;
  env.max_length = o.max_length;
  env.max_creases = o.creases;
  env.max_unassigned = o.unassigned;
  auto instances = envelope_patterns(env);
  const std::size_t exhaustive = cap ? std::min(*cap, instances.size()) : instances.size();
  instances.resize(exhaustive);
  std::mt19937_64 rng(o.seed.value_or(1));
  RandomConfig rc;
  rc.max_length = o.max_length;
  rc.max_creases = o.creases;
  rc.unassigned_rate = o.unassigned > 0 ? 0.3 : 0.0;
  for (std::size_t i = 0; i < o.random; ++i) instances.push_back(random_pattern(rng, rc));

  SearchOptions so;
  so.max_nodes = o.budget;
  const std::size_t n = instances.size();
  std::vector<std::vector<Check>> results(n, std::vector<Check>(models.size()));
  parallel_for(n, o.workers, [&](std::size_t i) {
    for (std::size_t m = 0; m < models.size(); ++m) results[i][m] = check(instances[i], models[m], so);
  });

  std::size_t disagreements = 0, inconclusive = 0;
  std::optional<std::pair<std::size_t, std::size_t>> first;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < models.size(); ++m) {
      const Check& c = results[i][m];
      if (c.oracle == SearchOutcome::Inconclusive) {
        ++inconclusive;
      } else if (!c.agrees()) {
        ++disagreements;
        if (!first) first = {i, m};
      }
    }
  }
  json models_json = json::array();
  for (auto m : models) models_json.push_back(to_string(m));
  Report r;
  r.doc = {{"instances", n},
           {"exhaustive_instances", exhaustive},
           {"random_instances", n - exhaustive},
           {"models", models_json},
           {"disagreements", disagreements},
           {"inconclusive", inconclusive}};
  if (first) {
    const LayerModel model = models[first->second];
    const CreasePattern1D small = minimize(instances[first->first], model, so);
    const Check c = check(small, model, so);
    const json repro = {{"pattern", to_json(small)},
                        {"original", to_json(instances[first->first])},
                        {"model", to_string(model)},
                        {"decider", c.decider ? "foldable" : "unfoldable"},
                        {"oracle", to_string(c.oracle)}};
    std::ofstream f(o.repro);
    if (f) {
      f << repro.dump(2) << '\n';
      r.doc["reproducer"] = o.repro;
    } else {
      err << "cannot write reproducer to " << o.repro << '\n';
    }
    r.doc["first_disagreement"] = repro;
    r.code = kNegative;
  } else if (inconclusive > 0) {
    r.code = kInconclusive;
  }
  return r;
}

// ---------------------------------------------------------------- gadget --

PolyPattern rect_as_poly(const RectPattern& p) {
  PolyPattern out;
  const Rational z(0);
  out.vertices = {{z, z}, {p.width(), z}, {p.width(), p.height()}, {z, p.height()}};
  for (const auto& c : p.creases()) {
    if (c.axis == Axis::Vertical) {
      out.creases.push_back({{c.coord, c.from}, {c.coord, c.to}, c.mv});
    } else {
      out.creases.push_back({{c.from, c.coord}, {c.to, c.coord}, c.mv});
    }
  }
  return out;
}

std::string fold_path(const std::string& out) {
  const auto slash = out.find_last_of('/');
  const auto dot = out.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
    return out.substr(0, dot) + ".fold";
  }
  return out + ".fold";
}

void write_file(const std::string& path, const json& doc) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << doc.dump(2) << '\n';
}

Report cmd_gadget(const Options& o) {
  json pattern, fold;
  Report r;
  r.doc = {{"gadget", o.gadget}};
  if (o.gadget == "3sat") {
    if (o.formula.empty()) throw UsageError("3sat needs --formula, e.g. \"1 -2 3; -1 2 3\"");
    ThreeSatFormula f;
    try {
      f = ThreeSatFormula::parse(o.formula);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const ThreeSatConfig cfg = o.compact ? ThreeSatConfig::compact() : ThreeSatConfig::spaced();
    const RectPattern rect = gen_3sat_rect(f, cfg);
    const ThreeSatLayout l = layout_3sat(f, cfg);
    pattern = to_json(rect);
    fold = to_fold(rect_as_poly(rect));
    r.doc["counts"] = {{"variables", f.variables},
                       {"clauses", f.clauses.size()},
                       {"creases", rect.creases().size()},
                       {"variable_sections", l.variable_sections},
                       {"width", l.width.to_string()},
                       {"height", l.height.to_string()}};
    r.doc["layout"] = o.compact ? "compact" : "spaced";
  } else {
    if (o.numbers.empty()) throw UsageError(o.gadget + " needs --numbers, e.g. 1,1,1");
    ThreePartitionInstance inst;
    try {
      inst = ThreePartitionInstance::parse(o.numbers);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const PolyPattern p = o.gadget == "3p-assigned" ? gen_3partition_assigned(inst, !o.no_arm2)
                                                    : gen_3partition_unassigned(inst);
    pattern = to_json(p);
    fold = to_fold(p);
    const ValidationReport report = validate_polypattern(p);
    json issues = json::array();
    for (const auto& i : report.issues) issues.push_back({{"check", i.check}, {"detail", i.detail}});
    r.doc["validation"] = {{"ok", report.ok()}, {"issues", issues}};
    r.doc["counts"] = {{"vertices", p.vertices.size()},
                       {"creases", p.creases.size()},
                       {"parts", p.parts.size()},
                       {"m", p.facts.m},
                       {"t", p.facts.t}};
    if (!report.ok()) r.code = kNegative;
  }
  if (o.out.empty()) {
    r.doc["pattern"] = pattern;
  } else {
    write_file(o.out, pattern);
    write_file(fold_path(o.out), fold);
    r.doc["pattern_file"] = o.out;
    r.doc["fold_file"] = fold_path(o.out);
  }
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simple-fold flat foldability: deciders, oracles, fuzzing and gadgets", "simplefold"};
  app.require_subcommand(1);
  Options o;

  const auto models = CLI::IsMember({"one", "some", "all"});
  auto add_common = [&](CLI::App* sub, bool budget) {
    sub->add_option("--input", o.input, "pattern JSON file, '-' for stdin");
    sub->add_option("--format", o.format, "json (indented) or compact")
        ->check(CLI::IsMember({"json", "compact"}));
    if (budget) {
      sub->add_option("--budget", o.budget, "search node budget");
      sub->add_option("--seed", o.seed, "shuffle successor order");
    }
  };
  auto* decide = app.add_subcommand("decide", "foldability verdict from the deciders");
  decide->add_option("--model", o.model, "one|some|all")->check(models);
  add_common(decide, true);
  auto* assign = app.add_subcommand("assign", "complete the unassigned creases of a 1d pattern");
  add_common(assign, false);
  auto* sequence = app.add_subcommand("sequence", "fold sequence for a 1d pattern");
  sequence->add_option("--model", o.model, "one|some|all (default one)")->check(models);
  add_common(sequence, false);
  auto* oracle = app.add_subcommand("oracle", "brute-force simulation with witness trace");
  oracle->add_option("--model", o.model, "one|some|all")->check(models);
  add_common(oracle, true);
  auto* fuzz = app.add_subcommand("fuzz", "compare deciders against the oracle");
  fuzz->add_option("--models", o.models, "comma-separated subset of one,some,all");
  fuzz->add_option("--creases", o.creases, "maximum creases per pattern");
  fuzz->add_option("--max-length", o.max_length, "maximum paper length");
  fuzz->add_option("--unassigned", o.unassigned, "maximum unassigned creases");
  fuzz->add_option("--limit", o.limit, "'exhaustive' or a cap on enumerated patterns");
  fuzz->add_option("--random", o.random, "extra seeded random rational patterns");
  fuzz->add_option("--seed", o.seed, "random instance seed (default 1)");
  fuzz->add_option("--budget", o.budget, "oracle node budget per instance");
  fuzz->add_option("--workers", o.workers, "worker threads (0 = hardware)");
  fuzz->add_option("--repro", o.repro, "where to write a minimized reproducer");
  fuzz->add_option("--format", o.format, "json or compact")->check(CLI::IsMember({"json", "compact"}));
  auto* gadget = app.add_subcommand("gadget", "generate a hardness gadget");
  gadget->add_option("kind", o.gadget, "3sat | 3p-assigned | 3p-cactus")
      ->required()
      ->check(CLI::IsMember({"3sat", "3p-assigned", "3p-cactus"}));
  gadget->add_option("--formula", o.formula, "3sat clauses, e.g. \"1 -2 3; -1 2 3\"");
  gadget->add_option("--numbers", o.numbers, "3-Partition numbers, e.g. 1,2,3");
  gadget->add_flag("--no-arm2", o.no_arm2, "omit Arm 2 (3p-assigned only)");
  gadget->add_flag("--compact", o.compact, "3sat without merge gaps (some-layers only)");
  gadget->add_option("--out", o.out, "pattern JSON path; FOLD goes next to it as .fold");
  gadget->add_option("--format", o.format, "json or compact")->check(CLI::IsMember({"json", "compact"}));

  auto fail = [&](int code, const std::string& msg) {
    err << "error: " << msg << '\n';
    out << json{{"error", msg}}.dump() << '\n';
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail(kUsage, e.what());
  }

  try {
    Report r;
    if (decide->parsed()) r = cmd_decide(o);
    else if (assign->parsed()) r = cmd_assign(o);
    else if (sequence->parsed()) r = cmd_sequence(o);
    else if (oracle->parsed()) r = cmd_oracle(o);
    else if (fuzz->parsed()) r = cmd_fuzz(o, err);
    else r = cmd_gadget(o);
    out << (o.format == "compact" ? r.doc.dump() : r.doc.dump(2)) << '\n';
    return r.code;
  } catch (const UsageError& e) {
    return fail(kUsage, e.what());
  } catch (const ParseError& e) {
    return fail(kUsage, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kUsage, e.what());
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace simplefold::cli
