#include "p2flis/cyclo.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace p2flis {

int GoldenInt::sign() const {
  // 2x = (2a + b) + b*sqrt(5)
  __extension__ typedef __int128 i128;
  const i128 p = 2 * static_cast<i128>(a) + b;
  const i128 q = b;
  if (p >= 0 && q >= 0) return (p == 0 && q == 0) ? 0 : 1;
  if (p <= 0 && q <= 0) return -1;
  const i128 lhs = p * p;
  const i128 rhs = 5 * q * q;
  if (p > 0) return lhs > rhs ? 1 : (lhs == rhs ? 0 : -1);
  return rhs > lhs ? 1 : (lhs == rhs ? 0 : -1);
}

double GoldenInt::value() const {
  return static_cast<double>(a) + static_cast<double>(b) * std::numbers::phi;
}

int compare(GoldenInt x, GoldenInt y) { return (x - y).sign(); }

Cyclo10 operator*(const Cyclo10& x, const Cyclo10& y) {
  std::array<std::int64_t, 7> p{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) p[i + j] += x.c[i] * y.c[j];
  // fold z^k = z^(k-1) - z^(k-2) + z^(k-3) - z^(k-4) for k = 6, 5, 4
  for (int k = 6; k >= 4; --k) {
    const auto v = p[k];
    p[k] = 0;
    p[k - 1] += v;
    p[k - 2] -= v;
    p[k - 3] += v;
    p[k - 4] -= v;
  }
  return {p[0], p[1], p[2], p[3]};
}

Cyclo10 Cyclo10::zeta_pow(int k) {
  static const std::array<Cyclo10, 10> table = [] {
    std::array<Cyclo10, 10> t{};
    t[0] = one();
    for (int i = 1; i < 10; ++i) t[i] = t[i - 1] * zeta();
    return t;
  }();
  return table[((k % 10) + 10) % 10];
}

GoldenInt Cyclo10::to_golden() const {
  assert(is_real());
  return {c[0] - c[2], c[2]};
}

GoldenInt Cyclo10::norm2() const { return (*this * conj()).to_golden(); }

std::complex<double> Cyclo10::embed() const {
  const std::complex<double> z = std::polar(1.0, std::numbers::pi / 5.0);
  std::complex<double> acc{0.0, 0.0};
  std::complex<double> p{1.0, 0.0};
  for (auto v : c) {
    acc += static_cast<double>(v) * p;
    p *= z;
  }
  return acc;
}

std::string Cyclo10::str() const {
  std::ostringstream os;
  os << c[0] << ' ' << c[1] << ' ' << c[2] << ' ' << c[3];
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclo10& x) { return os << '(' << x.str() << ')'; }

int cross_sign(const Cyclo10& u, const Cyclo10& v) {
  return (u.conj() * v).imag_over_sin36().sign();
}

int dot_sign(const Cyclo10& u, const Cyclo10& v) { return (u.conj() * v).twice_real().sign(); }

GoldenInt twice_area_over_sin36(const Cyclo10& p, const Cyclo10& q, const Cyclo10& r) {
  return ((q - p).conj() * (r - p)).imag_over_sin36();
}

Cyclo10 phi_pow(int k) {
  Cyclo10 r = Cyclo10::one();
  const Cyclo10 f = k >= 0 ? Cyclo10::phi() : Cyclo10::phi_inverse();
  for (int i = 0; i < std::abs(k); ++i) r *= f;
  return r;
}

int direction_index(const Cyclo10& v, const Cyclo10& unit) {
  for (int k = 0; k < 10; ++k)
    if (unit.rotated(k) == v) return k;
  return -1;
}

}  // namespace p2flis
