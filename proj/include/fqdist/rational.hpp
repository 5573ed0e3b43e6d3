#pragma once

// Exact rationals for identity and bound arithmetic.

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fqdist {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// q^e for any integer e, as an exact rational.
Rat rat_pow(std::int64_t base, int exponent);

// "num/den" with den > 0 and gcd 1; integers still carry "/1".
std::string to_string(const Rat& r);
// Inverse of to_string; also accepts a bare integer. Throws ParseError.
Rat parse_rat(std::string_view text);

bool is_integer(const Rat& r);
double to_double(const Rat& r);

}  // namespace fqdist
