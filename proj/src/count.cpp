#include "pinnacle/count.hpp"

#include <algorithm>

namespace pinnacle {

Count factorial(unsigned n) {
  Count result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

Count binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Count power(std::int64_t base, unsigned exponent) {
  return boost::multiprecision::pow(Count(base), exponent);
}

Count pow2(unsigned exponent) {
  Count result = 1;
  result <<= exponent;
  return result;
}

std::string to_decimal(const Count& value) { return value.str(); }

std::string to_decimal(const Rational& value) {
  if (boost::multiprecision::denominator(value) == 1)
    return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

}  // namespace pinnacle
