#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pinnacle {

/// Exact integer used for every count and every signed intermediate sum.
using Count = boost::multiprecision::cpp_int;
/// Exact rational, used where a polynomial is evaluated off the lattice.
using Rational = boost::multiprecision::cpp_rational;

Count factorial(unsigned n);
Count binomial(std::int64_t n, std::int64_t k);  // 0 outside 0 <= k <= n
Count power(std::int64_t base, unsigned exponent);  // power(0, 0) == 1
Count pow2(unsigned exponent);

/// Decimal rendering with no exponent notation, however long.
std::string to_decimal(const Count& value);
std::string to_decimal(const Rational& value);

}  // namespace pinnacle
