#pragma once

#include <sstream>
#include <string>

#include "simplefold/model.hpp"
#include "simplefold/rect.hpp"

namespace simplefold::test {

/// "M3 U5 V11/2" on [0, length].
inline CreasePattern1D pat(const std::string& length, const std::string& creases) {
  std::vector<Crease> cs;
  std::istringstream in(creases);
  std::string tok;
  while (in >> tok) cs.push_back({Rational::parse(tok.substr(1)), assignment_from_string(tok.substr(0, 1))});
  return CreasePattern1D(Rational::parse(length), std::move(cs));
}

inline RectCrease vline(int x, int from, int to, Assignment a) {
  return {Axis::Vertical, Rational(x), Rational(from), Rational(to), a};
}
inline RectCrease hline(int y, int from, int to, Assignment a) {
  return {Axis::Horizontal, Rational(y), Rational(from), Rational(to), a};
}

inline constexpr auto M = Assignment::Mountain;
inline constexpr auto V = Assignment::Valley;
inline constexpr auto U = Assignment::Unassigned;

}  // namespace simplefold::test
