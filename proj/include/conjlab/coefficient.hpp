#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace conjlab {

using Rational = mpq_class;

/// Always "p/q" with q > 0, e.g. "5/6", "-1/2", "3/1", "0/1".
std::string format_rational(const Rational& r);
/// Accepts "p/q" or "p"; the result is canonicalised. Throws UsageError.
Rational parse_rational(std::string_view text);

/// Exact Gaussian rational re + i*im.
struct Coefficient {
  Rational re;
  Rational im;

  Coefficient() = default;
  Coefficient(Rational real) : re(std::move(real)) {}  // NOLINT: implicit by design of the algebra
  Coefficient(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
  Coefficient(long value) : re(value) {}  // NOLINT

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  /// |z|^2, exact.
  Rational norm_squared() const { return re * re + im * im; }
  double modulus() const;

  Coefficient& operator+=(const Coefficient& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Coefficient& operator-=(const Coefficient& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator-(const Coefficient& a) { return {-a.re, -a.im}; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.re == b.re && a.im == b.im;
  }
};

}  // namespace conjlab
