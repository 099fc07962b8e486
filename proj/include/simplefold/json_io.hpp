#pragma once

// JSON encodings of patterns, verdicts and traces. Every number is an
// exact-number string ("3", "5/2", "2.75").

#include <stdexcept>
#include <variant>

#include <nlohmann/json.hpp>

#include "simplefold/all_layers.hpp"
#include "simplefold/characterize.hpp"
#include "simplefold/fold_engine.hpp"
#include "simplefold/gadgets.hpp"
#include "simplefold/mixed_assign.hpp"
#include "simplefold/rect.hpp"

namespace simplefold {

using nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Accepts exact-number strings and JSON integers.
Rational rational_from_json(const json& j);

json to_json(const CreasePattern1D& p);
json to_json(const RectPattern& p);
json to_json(const PolyPattern& p);

/// Throws ParseError on schema violations or invalid geometry.
CreasePattern1D pattern_1d_from_json(const json& j);
RectPattern rect_from_json(const json& j);
std::variant<CreasePattern1D, RectPattern> pattern_from_json(const json& j);
/// Parses text first; malformed JSON also raises ParseError.
std::variant<CreasePattern1D, RectPattern> pattern_from_text(const std::string& text);

json to_json(const ReductionOp& op);
/// {"foldable":true,"sequence":[...]} or {"foldable":false,"guilty":["3","5"]}
json to_json(const CreasePattern1D& p, const AssignedVerdict& v);
/// {"assignment":{"5":"V"},"completed_pattern":{...}}, keyed by crease position.
json assignment_to_json(const CreasePattern1D& p, const PartialAssignment& a);
json to_json(const CreasePattern1D& p, const MixedVerdict& v);
json to_json(const AllLayersVerdict& v);
json to_json(const RectVerdict& v);
/// {"axis":"v","coord":"1","side":"left","extent":"all",...}
json to_json(const FoldMove& m);
json to_json(const SearchResult& r);

}  // namespace simplefold
