#pragma once

#include <string>
#include <string_view>

#include "urr/order.hpp"
#include "urr/poly.hpp"

namespace urr {

// Grammar:
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*          division only by constants
//   unary   := '-' unary | power
//   power   := primary ['^' natural]
//   primary := natural | identifier | '(' expr ')'
// Throws SyntaxError (column is 1-based) and Error(UnknownVariable).
Poly parse_poly(std::string_view text, const RingPtr& ring);

// Canonical text: terms descending under `order`, coefficients as a/b,
// explicit '*' and '^'. parse_poly(to_string(f)) == f.
std::string to_string(const Poly& f, const OrderSpec& order);
// Uses global degree reverse lexicographic order on the ring variables.
std::string to_string(const Poly& f);

}  // namespace urr
