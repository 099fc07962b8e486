#include "simplefold/envelope.hpp"

#include <set>

#include "simplefold/characterize.hpp"

namespace simplefold {

std::vector<CreasePattern1D> envelope_patterns(const EnvelopeConfig& config) {
  std::vector<CreasePattern1D> out;
  constexpr Assignment kLabels[] = {Assignment::Mountain, Assignment::Valley,
                                    Assignment::Unassigned};
  const int labels = config.max_unassigned > 0 ? 3 : 2;
  for (int length = config.min_length; length <= config.max_length; ++length) {
    const int slots = length - 1;
    for (unsigned mask = 0; mask < (1u << slots); ++mask) {
      std::vector<int> positions;
      for (int b = 0; b < slots; ++b) {
        if (mask & (1u << b)) positions.push_back(b + 1);
      }
      if (positions.size() > config.max_creases) continue;
      std::size_t combos = 1;
      for (std::size_t i = 0; i < positions.size(); ++i) combos *= labels;
      for (std::size_t code = 0; code < combos; ++code) {
        std::vector<Crease> cs;
        std::size_t rest = code;
        std::size_t unassigned = 0;
        for (int pos : positions) {
          const Assignment a = kLabels[rest % labels];
          rest /= labels;
          unassigned += a == Assignment::Unassigned;
          cs.push_back({Rational(pos), a});
        }
        if (unassigned > config.max_unassigned) continue;
        out.emplace_back(Rational(length), std::move(cs));
      }
    }
  }
  return out;
}

CreasePattern1D random_pattern(std::mt19937_64& rng, const RandomConfig& config) {
  std::uniform_int_distribution<int> len(1, config.max_length);
  std::uniform_int_distribution<int> den(1, config.max_denominator);
  const int length = len(rng);
  const int d = den(rng);
  const int slots = length * d - 1;
  std::uniform_int_distribution<std::size_t> count(
      0, std::min<std::size_t>(config.max_creases, static_cast<std::size_t>(std::max(slots, 0))));
  const std::size_t n = count(rng);
  std::set<int> picked;
  std::uniform_int_distribution<int> pos(1, std::max(slots, 1));
  while (picked.size() < n) picked.insert(pos(rng));
  std::bernoulli_distribution unassigned(config.unassigned_rate);
  std::bernoulli_distribution valley(0.5);
  std::vector<Crease> cs;
  for (int k : picked) {
    Assignment a = unassigned(rng) ? Assignment::Unassigned
                   : valley(rng)   ? Assignment::Valley
                                   : Assignment::Mountain;
    cs.push_back({Rational(k, d), a});
  }
  return CreasePattern1D(Rational(length), std::move(cs));
}

bool completion_exists(const CreasePattern1D& pattern) {
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < pattern.crease_count(); ++i) {
    if (pattern.creases()[i].mv == Assignment::Unassigned) free.push_back(i);
  }
  for (std::size_t bits = 0; bits < (std::size_t{1} << free.size()); ++bits) {
    std::vector<Crease> cs = pattern.creases();
    for (std::size_t k = 0; k < free.size(); ++k) {
      cs[free[k]].mv = (bits >> k) & 1 ? Assignment::Valley : Assignment::Mountain;
    }
    if (decide_assigned(CreasePattern1D(pattern.length(), std::move(cs))).foldable) return true;
  }
  return false;
}

}  // namespace simplefold
