#pragma once

#include <string>

#include "cca/polynomial.hpp"
#include "cca/ring.hpp"

namespace cca {

// Parses the textual expression grammar: terms joined by + or -, each term an
// optional coefficient (integer or integer/integer) followed by *-separated
// powers VAR or VAR^k. Whitespace is ignored; no parentheses. Throws Error on
// unknown variables, malformed syntax, or coefficients that do not exist in
// the ring's field.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

}  // namespace cca
