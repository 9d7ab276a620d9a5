#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>

namespace scalemap {

using Complex = std::complex<double>;

/// Compensated (Kahan) accumulator. Sequential and order-fixed, so results
/// are bitwise reproducible for identical inputs.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

class KahanSumComplex {
 public:
  void add(Complex z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  KahanSum re_;
  KahanSum im_;
};

/// cos(sqrt(z)) continued to all real z: cosh(sqrt(-z)) for z < 0.
/// Entire in z; series near zero avoids the sqrt branch point.
inline double cos_sqrt(double z) {
  const double az = std::abs(z);
  if (az < 1e-6) {
    // 1 - z/2 + z^2/24 - z^3/720, remainder ~ z^4/8! < 1e-29
    return 1.0 + z * (-0.5 + z * (1.0 / 24.0 + z * (-1.0 / 720.0)));
  }
  const double r = std::sqrt(az);
  return z > 0 ? std::cos(r) : std::cosh(r);
}

/// sin(sqrt(z))/sqrt(z) continued to all real z: sinh(sqrt(-z))/sqrt(-z)
/// for z < 0. Entire in z.
inline double sinc_sqrt(double z) {
  const double az = std::abs(z);
  if (az < 1e-6) {
    return 1.0 + z * (-1.0 / 6.0 + z * (1.0 / 120.0 + z * (-1.0 / 5040.0)));
  }
  const double r = std::sqrt(az);
  return z > 0 ? std::sin(r) / r : std::sinh(r) / r;
}

inline double sqr(double x) { return x * x; }

}  // namespace scalemap
