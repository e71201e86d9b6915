#pragma once

#include "core/case_model.hpp"

#include <string>

namespace avrc {

// Deterministic canonical source for a valid Case. Parsing the emission
// yields a semantically equal Case; identical Cases emit identical bytes.
std::string emit_canonical(const Case& c);

std::string escape_string(std::string_view text);

} // namespace avrc
