#include "fqdist/rational.hpp"

#include <cstdlib>

#include "fqdist/error.hpp"

namespace fqdist {

Rat rat_pow(std::int64_t base, int exponent) {
  BigInt p = 1;
  const int n = exponent < 0 ? -exponent : exponent;
  for (int i = 0; i < n; ++i) p *= base;
  if (exponent >= 0) return Rat(p);
  return Rat(BigInt(1), p);
}

std::string to_string(const Rat& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

Rat parse_rat(std::string_view text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(BigInt(std::string(text)));
    BigInt num(std::string(text.substr(0, slash)));
    BigInt den(std::string(text.substr(slash + 1)));
    if (den == 0) throw Error(Errc::ParseError, "zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    throw Error(Errc::ParseError, "bad rational '" + std::string(text) + "'");
  }
}

bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace fqdist
