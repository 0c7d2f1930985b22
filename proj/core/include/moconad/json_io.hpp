// json_io.hpp -- canonical JSON forms for every public object.
//
// Keys are emitted sorted and no floating point numbers appear, so equal
// objects serialise to identical strings. Payload elements:
//   {"sym": "a"} {"int": 3} {"pair": [x, y]} {"seq": [x, ...]}
//   {"fn": [[in, out], ...]} (sorted by input)   {"wrapped": <value>}
// Values carry their shape:
//   {"functor": "prefix-list", "items": [...]}
//   {"functor": "pointed-list", "items": [...], "focus": 2}
//   {"functor": "pointed-term", "root": <node>, "focusPath": [2, 1]}
// where a node is {"leaf": <element>} or {"symbol": "b", "children": [...]}.
// Malformed documents raise SchemaError.
#pragma once

#include <json.hpp>

#include "moconad/lawcheck.hpp"
#include "moconad/mealy.hpp"

namespace moconad {

nlohmann::json toJson(const Elem& e);
Elem elemFromJson(const nlohmann::json& j);

nlohmann::json toJson(const MVal& v);
MVal valueFromJson(const nlohmann::json& j);

nlohmann::json toJson(const MoconadInstance& inst);
MoconadInstance instanceFromJson(const nlohmann::json& j);

// {"instance": ..., "carrier": [...], "kind": "semigroup" |
//  "pointed-presentation" | "term-automaton", "presentation": ...}
// Multiplication tables are row-major index matrices; the two-sided action
// is indexed g[left][carrier][right]; term actions give one flat row per
// focused slot, the last child index varying fastest.
nlohmann::json toJson(const FiniteAlgebra& alg);
FiniteAlgebra algebraFromJson(const nlohmann::json& j);

nlohmann::json toJson(const Transduction& t);
Transduction transductionFromJson(const nlohmann::json& j);

nlohmann::json toJson(const MealyMachine& m);
MealyMachine mealyFromJson(const nlohmann::json& j);

nlohmann::json toJson(const UnambiguousMealy& m);
UnambiguousMealy unambiguousFromJson(const nlohmann::json& j);

nlohmann::json toJson(const LawReport& r);

}  // namespace moconad
