#include "p2flis/leaf_function.hpp"

#include <numeric>
#include <ostream>

#include "p2flis/error.hpp"

namespace p2flis {

std::int64_t leaf_function(std::int64_t n) {
  if (n < 0) fail(ErrorKind::Invalid, "leaf function needs n >= 0");
  if (n <= 1) return 0;
  if (n <= 18) return n / 2 + 1;
  const std::int64_t r = n % 17;
  return 8 * (n / 17) + r / 2 + 1 + (r == 1 ? 1 : 0);
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(ErrorKind::Invalid, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return {num / (g ? g : 1), den / (g ? g : 1)};
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  if (r.den == 1) return os << r.num;
  return os << r.num << '/' << r.den;
}

Rational leaf_function_upper_line(std::int64_t n) {
  if (n < 0) fail(ErrorKind::Invalid, "leaf function needs n >= 0");
  return Rational::make(8 * n + 26, 17);
}

bool is_saturated(std::int64_t n) { return 17 * leaf_function(n) == 8 * n + 26; }

}  // namespace p2flis
