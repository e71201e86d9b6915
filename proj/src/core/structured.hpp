#pragma once

#include "core/case_model.hpp"

#include "json.hpp"

namespace avrc {

// Lossless JSON mirror of a Case. Enumerations serialize as lowercase
// strings and the prevention formula as a prefix-notation tree.
nlohmann::json to_structured(const Case& c);

// Inverse of to_structured. Throws Error{MalformedDocument} when the
// document does not describe a Case; the result is not re-validated.
Case case_from_structured(const nlohmann::json& document);

nlohmann::json formula_to_json(const Formula& formula);
FormulaPtr formula_from_json(const nlohmann::json& node);

} // namespace avrc
