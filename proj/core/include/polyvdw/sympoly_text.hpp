#pragma once

#include <string>
#include <string_view>

#include "polyvdw/sympoly.hpp"

namespace polyvdw {

// Grammar:  expr     := term ('+' term)*
//           term     := rational '*' '[' rational (',' rational)* ']'
//           rational := integer | integer '/' positive-integer
// Whitespace is free between tokens. Tails longer than k are rejected with
// DegreeExceedsK; anything off-grammar raises SyntaxError with its offset.
SymPoly parse_sympoly(std::string_view text, int k);

// As above with k taken as the longest tail appearing in the text.
SymPoly parse_sympoly(std::string_view text);

// Canonical form: normalized, sorted, heads and slots printed as "p/q".
// parse(to_text(g), k) == g.
std::string to_text(const SymPoly& g);

// Wire form: a JSON array of {"head": "p/q", "tail": ["p/q", ...]}.
std::string to_json_string(const SymPoly& g);
SymPoly sympoly_from_json(std::string_view json_text, int k);

}  // namespace polyvdw
