#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace urr {

// Exact rationals; GMP keeps them in lowest terms with a positive denominator.
using Rat = mpq_class;
using Point = std::vector<Rat>;

std::string to_string(const Rat& value);

// Accepts "a" or "a/b" with optional leading sign.
Rat parse_rat(std::string_view text);

Point zero_point(std::size_t arity);

}  // namespace urr
