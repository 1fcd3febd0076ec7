#pragma once

#include <string>

namespace hmnc::detail {

// Shortest decimal form that parses back to exactly the same double.
std::string shortest(double x);

// Like shortest(), but padded with trailing zeros so at least `min_sig`
// significant digits are shown. Still parses back exactly.
std::string decimal(double x, int min_sig);

// Fixed-point display form, rounded half away from zero.
std::string fixed(double x, int decimals);

double round_to(double x, int decimals);

double parse_double(const std::string& token);  // throws InputError on junk

}  // namespace hmnc::detail
