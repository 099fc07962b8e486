#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "simplefold/gadgets.hpp"

namespace simplefold {

namespace {

Rational R(long long v) { return Rational(static_cast<std::int64_t>(v)); }

// Grid positions, all integers. Variable i (0-based) owns rows t_i - 1 .. t_i + 1;
// clause lines are the top rows. Literal triples start at x = 1 and the
// flag/release pairs sit right of them, e_1 rightmost. With merge gaps each
// mirror fold of the intended sequence reaches less far than the next gap.
struct Grid {
  std::vector<long long> t;       // y of t_i
  long long clause0 = 0;
  long long height = 0;
  std::vector<long long> triple;  // x of the first literal line of clause j
  std::vector<long long> flag;    // x of e_i
  long long width = 0;
};

Grid grid_for(const ThreeSatFormula& formula, const ThreeSatConfig& c) {
  c.validate();
  const long long n = static_cast<long long>(formula.variables);
  const long long m = static_cast<long long>(formula.clauses.size());
  Grid g;
  long long step = c.variable_step;
  long long reach = c.first_variable + 1;
  g.t.push_back(c.first_variable);
  for (long long i = 1; i < n; ++i) {
    g.t.push_back(g.t.back() + step);
    reach = step;
    step += c.variable_growth;
  }
  g.clause0 = g.t.back() + 2 + (c.merge_gaps ? reach : 1);
  g.height = g.clause0 + m;
  long long spacing = c.clause_step;
  g.triple.push_back(1);
  for (long long j = 1; j < m; ++j) {
    g.triple.push_back(g.triple.back() + spacing);
    spacing += c.clause_growth;
  }
  g.flag.assign(static_cast<std::size_t>(n), 0);
  long long x = g.triple.back() + 3;
  if (c.merge_gaps) x += spacing + c.flag_step + c.flag_growth * n;
  for (long long i = n - 1; i >= 0; --i) {
    if (i != n - 1) x += c.flag_step + c.flag_growth * i;
    g.flag[static_cast<std::size_t>(i)] = x;
  }
  g.width = g.flag.front() + 2 + (c.merge_gaps ? 1 : 0);
  return g;
}

}  // namespace

ThreeSatFormula ThreeSatFormula::parse(const std::string& text) {
  ThreeSatFormula f;
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream clauses(s);
  std::string clause;
  while (std::getline(clauses, clause, ';')) {
    std::istringstream in(clause);
    std::vector<int> lits;
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v == 0) throw std::invalid_argument("bad literal '" + tok + "'");
      lits.push_back(v);
      f.variables = std::max<std::size_t>(f.variables, static_cast<std::size_t>(std::abs(v)));
    }
    if (lits.empty()) continue;
    if (lits.size() != 3) throw std::invalid_argument("every clause needs exactly 3 literals");
    f.clauses.push_back({lits[0], lits[1], lits[2]});
  }
  f.validate();
  return f;
}

void ThreeSatFormula::validate() const {
  if (variables == 0 || clauses.empty()) {
    throw std::invalid_argument("formula needs at least one variable and one clause");
  }
  for (const auto& c : clauses) {
    for (int lit : c) {
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > variables) {
        throw std::invalid_argument("literal " + std::to_string(lit) + " names no declared variable");
      }
    }
  }
}

bool ThreeSatFormula::satisfiable() const {
  validate();
  if (variables > 24) throw std::invalid_argument("too many variables for brute force");
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << variables); ++bits) {
    bool all = true;
    for (const auto& c : clauses) {
      bool any = false;
      for (int lit : c) {
        const bool value = (bits >> (std::abs(lit) - 1)) & 1;
        any = any || (lit > 0 ? value : !value);
      }
      all = all && any;
      if (!all) break;
    }
    if (all) return true;
  }
  return false;
}

void ThreeSatConfig::validate() const {
  if (first_variable < 1 || variable_step < 2 || clause_step < 3 || flag_step < 2 ||
      variable_growth < 0 || clause_growth < 0 || flag_growth < 0) {
    throw std::invalid_argument("3SAT spacing too small to keep the gadget lines apart");
  }
}

ThreeSatLayout layout_3sat(const ThreeSatFormula& formula, const ThreeSatConfig& config) {
  formula.validate();
  const Grid g = grid_for(formula, config);
  ThreeSatLayout l;
  l.width = R(g.width);
  l.height = R(g.height);
  for (long long y : g.t) {
    l.t_lines.push_back(R(y));
    l.f_lines.push_back(R(y + 1));
  }
  for (long long x : g.flag) {
    l.flag_lines.push_back(R(x));
    l.release_lines.push_back(R(x + 1));
  }
  for (std::size_t j = 0; j < formula.clauses.size(); ++j) {
    l.clause_lines.push_back(R(g.clause0 + static_cast<long long>(j)));
    for (long long k = 0; k < 3; ++k) l.literal_lines.push_back(R(g.triple[j] + k));
  }
  l.variable_sections = formula.variables;
  return l;
}

RectPattern gen_3sat_rect(const ThreeSatFormula& formula, const ThreeSatConfig& config) {
  formula.validate();
  const Grid g = grid_for(formula, config);
  constexpr char M = 'M', V = 'V', U = 'U';
  // Segment k of vertical line x spans rows [k, k + 1]; of horizontal line y, columns.
  std::vector<std::string> vertical(static_cast<std::size_t>(g.width), std::string(g.height, U));
  std::vector<std::string> horizontal(static_cast<std::size_t>(g.height), std::string(g.width, U));
  auto flip = [](char c) { return c == M ? V : M; };
  // Parity gate on the single perpendicular line at `at`: segments on both
  // sides of it disagree, so the line folds only once `at` is folded.
  auto needs_folded = [&](std::string& line, long long at, char low) {
    line[at - 1] = low;
    line[at] = flip(low);
  };

  const auto variable_line = [&](int lit) {
    const long long y = g.t[std::abs(lit) - 1];
    return lit > 0 ? y : y + 1;
  };
  for (std::size_t j = 0; j < formula.clauses.size(); ++j) {
    const auto& c = formula.clauses[j];
    const long long x0 = g.triple[j];
    // When the middle literal folds first the outer two coincide and must
    // fold in the same direction once every horizontal line is down.
    const char outer = (variable_line(c[0]) - variable_line(c[2])) % 2 == 0 ? V : M;
    const char low[3] = {M, M, outer};
    for (long long k = 0; k < 3; ++k) needs_folded(vertical[x0 + k], variable_line(c[k]), low[k]);
    // Columns left of the first and right of the third literal line.
    auto& check = horizontal[g.clause0 + static_cast<long long>(j)];
    check[x0 - 1] = M;
    check[x0 + 2] = V;
  }
  for (std::size_t i = 0; i < g.flag.size(); ++i) {
    const long long t = g.t[i];
    const long long e = g.flag[i];
    // e_i: rows below t_i and above f_i disagree, so exactly one of them is folded.
    vertical[e][t - 1] = M;
    vertical[e][t + 1] = V;
    // t_i, f_i: columns left of e_i and right of r_i agree.
    for (long long y : {t, t + 1}) {
      horizontal[y][e - 1] = M;
      horizontal[y][e + 1] = M;
    }
    auto& release = vertical[e + 1];
    char a = M;
    for (long long r = g.clause0 - 1; r < g.height; ++r, a = flip(a)) release[r] = a;
  }

  std::vector<RectCrease> cs;
  auto emit = [&](Axis axis, long long at, const std::string& segs) {
    for (std::size_t k = 0; k < segs.size();) {
      std::size_t e = k;
      while (e < segs.size() && segs[e] == segs[k]) ++e;
      const Assignment mv = segs[k] == M ? Assignment::Mountain
                            : segs[k] == V ? Assignment::Valley
                                           : Assignment::Unassigned;
      cs.push_back({axis, R(at), R(static_cast<long long>(k)), R(static_cast<long long>(e)), mv});
      k = e;
    }
  };
  for (long long x = 1; x < g.width; ++x) emit(Axis::Vertical, x, vertical[x]);
  for (long long y = 1; y < g.height; ++y) emit(Axis::Horizontal, y, horizontal[y]);
  return RectPattern(R(g.width), R(g.height), std::move(cs));
}

}  // namespace simplefold
