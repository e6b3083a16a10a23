#pragma once

// Exact arithmetic in Z[zeta], zeta = exp(i*pi/5), and in its real subring Z[phi].

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace p2flis {

/// Element a + b*phi of Z[phi], phi = (1 + sqrt 5) / 2.
///
/// Every real element of Z[zeta] lives here, so squared lengths, twice-areas
/// and the sines of cross products can be compared exactly.
struct GoldenInt {
  std::int64_t a = 0;
  std::int64_t b = 0;

  constexpr GoldenInt() = default;
  constexpr GoldenInt(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {}

  static constexpr GoldenInt phi() { return {0, 1}; }

  friend constexpr GoldenInt operator+(GoldenInt x, GoldenInt y) { return {x.a + y.a, x.b + y.b}; }
  friend constexpr GoldenInt operator-(GoldenInt x, GoldenInt y) { return {x.a - y.a, x.b - y.b}; }
  friend constexpr GoldenInt operator-(GoldenInt x) { return {-x.a, -x.b}; }
  // phi^2 = phi + 1
  friend constexpr GoldenInt operator*(GoldenInt x, GoldenInt y) {
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  GoldenInt& operator+=(GoldenInt o) { return *this = *this + o; }
  GoldenInt& operator-=(GoldenInt o) { return *this = *this - o; }

  friend constexpr bool operator==(GoldenInt, GoldenInt) = default;

  /// -1, 0 or +1, computed without floating point.
  int sign() const;
  double value() const;
};

/// Total order on Z[phi] by real value.
int compare(GoldenInt x, GoldenInt y);
inline bool operator<(GoldenInt x, GoldenInt y) { return compare(x, y) < 0; }

/// Element c0 + c1*z + c2*z^2 + c3*z^3 of Z[zeta].
///
/// The basis is canonical: z^4 is always folded back with
/// z^4 = z^3 - z^2 + z - 1, so equality is coefficient equality.
struct Cyclo10 {
  std::array<std::int64_t, 4> c{0, 0, 0, 0};

  constexpr Cyclo10() = default;
  constexpr Cyclo10(std::int64_t c0, std::int64_t c1, std::int64_t c2, std::int64_t c3)
      : c{c0, c1, c2, c3} {}

  static constexpr Cyclo10 one() { return {1, 0, 0, 0}; }
  static constexpr Cyclo10 zeta() { return {0, 1, 0, 0}; }
  static constexpr Cyclo10 phi() { return {1, 0, 1, -1}; }
  static constexpr Cyclo10 phi_inverse() { return {0, 0, 1, -1}; }
  /// zeta^k for any integer k.
  static Cyclo10 zeta_pow(int k);
  static Cyclo10 from_golden(GoldenInt g) { return {g.a + g.b, 0, g.b, -g.b}; }

  friend Cyclo10 operator+(const Cyclo10& x, const Cyclo10& y) {
    return {x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2], x.c[3] + y.c[3]};
  }
  friend Cyclo10 operator-(const Cyclo10& x, const Cyclo10& y) {
    return {x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2], x.c[3] - y.c[3]};
  }
  friend Cyclo10 operator-(const Cyclo10& x) { return {-x.c[0], -x.c[1], -x.c[2], -x.c[3]}; }
  friend Cyclo10 operator*(const Cyclo10& x, const Cyclo10& y);
  friend Cyclo10 operator*(std::int64_t k, const Cyclo10& x) {
    return {k * x.c[0], k * x.c[1], k * x.c[2], k * x.c[3]};
  }
  Cyclo10& operator+=(const Cyclo10& o) { return *this = *this + o; }
  Cyclo10& operator-=(const Cyclo10& o) { return *this = *this - o; }
  Cyclo10& operator*=(const Cyclo10& o) { return *this = *this * o; }

  friend bool operator==(const Cyclo10&, const Cyclo10&) = default;
  /// Lexicographic on coefficients; translation invariant, used for canonical forms.
  friend auto operator<=>(const Cyclo10& x, const Cyclo10& y) { return x.c <=> y.c; }

  Cyclo10 rotated(int k) const { return *this * zeta_pow(k); }
  Cyclo10 times_phi() const { return *this * phi(); }
  /// Complex conjugate (the mirror in the real axis).
  Cyclo10 conj() const { return {c[0] + c[1], -c[1], c[1] - c[3], -c[1] - c[2]}; }
  bool is_real() const { return c[1] == 0 && c[2] + c[3] == 0; }
  /// Requires is_real().
  GoldenInt to_golden() const;

  /// 2 * Re(x) as an element of Z[phi].
  GoldenInt twice_real() const {
    return {2 * c[0] - c[2] + c[3], c[1] + c[2] - c[3]};
  }
  /// Im(x) / sin(36 deg); same sign as Im(x).
  GoldenInt imag_over_sin36() const { return {c[1], c[2] + c[3]}; }
  /// |x|^2, exact.
  GoldenInt norm2() const;

  /// Floating embedding zeta -> e^{i pi/5}; for rendering and diagnostics only.
  std::complex<double> embed() const;
  std::string str() const;
};

/// Sign of the cross product u x v (positive when v is counter-clockwise of u).
int cross_sign(const Cyclo10& u, const Cyclo10& v);
/// Sign of the dot product u . v.
int dot_sign(const Cyclo10& u, const Cyclo10& v);
/// Twice the signed area of triangle (p, q, r), divided by sin(36 deg).
GoldenInt twice_area_over_sin36(const Cyclo10& p, const Cyclo10& q, const Cyclo10& r);
/// phi^k for any integer k (negative powers use the unit phi - 1).
Cyclo10 phi_pow(int k);
/// The k in 0..9 with v == zeta^k * unit, if any; -1 otherwise.
int direction_index(const Cyclo10& v, const Cyclo10& unit);

std::ostream& operator<<(std::ostream& os, const Cyclo10& x);

struct Cyclo10Hash {
  std::size_t operator()(const Cyclo10& x) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto v : x.c) h = (h ^ std::hash<std::int64_t>{}(v)) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

}  // namespace p2flis
