#pragma once

#include <cstdint>
#include <iosfwd>

namespace p2flis {

/// Maximum number of leaves of an induced subtree of order n in a P2 graph:
///   0                                            n <= 1
///   floor(n/2) + 1                               2 <= n <= 18
///   8 floor(n/17) + floor((n mod 17)/2) + 1 + [n mod 17 == 1]   n >= 19
std::int64_t leaf_function(std::int64_t n);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& x, const Rational& y) { return x.num * y.den < y.num * x.den; }
  friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
};
std::ostream& operator<<(std::ostream& os, const Rational& r);

/// The least linear function bounding leaf_function from above: (8n + 26) / 17.
Rational leaf_function_upper_line(std::int64_t n);

/// leaf_function(n) meets the upper line: n = 18, 35, 52, ...
bool is_saturated(std::int64_t n);

}  // namespace p2flis
