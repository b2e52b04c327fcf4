#pragma once

#include <cmath>
#include <iosfwd>

#include "dcn/errors.hpp"

namespace dcn {

/// A complex number re + i*im.
///
/// Written out by hand instead of using std::complex: the library relies on
/// plain (non Annex G) multiplication so that operation counts and timings are
/// exactly what the formulas say. The public constructor rejects NaN and
/// infinity; arithmetic does not re-check.
class Complex {
 public:
  constexpr Complex() = default;
  Complex(double re, double im = 0.0) : re_(re), im_(im) {  // NOLINT
    if (!std::isfinite(re) || !std::isfinite(im)) throw NonFinite();
  }

  static constexpr Complex unchecked(double re, double im) {
    Complex z;
    z.re_ = re;
    z.im_ = im;
    return z;
  }

  /// e^{i*theta}
  static Complex polar(double theta) {
    return unchecked(std::cos(theta), std::sin(theta));
  }

  constexpr double re() const { return re_; }
  constexpr double im() const { return im_; }

  constexpr Complex conj() const { return unchecked(re_, -im_); }
  constexpr double norm2() const { return re_ * re_ + im_ * im_; }
  double abs() const { return std::hypot(re_, im_); }
  double arg() const { return std::atan2(im_, re_); }

  friend constexpr Complex operator+(Complex a, Complex b) {
    return unchecked(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend constexpr Complex operator-(Complex a, Complex b) {
    return unchecked(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend constexpr Complex operator-(Complex a) {
    return unchecked(-a.re_, -a.im_);
  }
  friend constexpr Complex operator*(Complex a, Complex b) {
    return unchecked(a.re_ * b.re_ - a.im_ * b.im_,
                     a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend constexpr Complex operator*(double s, Complex a) {
    return unchecked(s * a.re_, s * a.im_);
  }
  friend constexpr Complex operator*(Complex a, double s) { return s * a; }
  friend constexpr Complex operator/(Complex a, double s) {
    return unchecked(a.re_ / s, a.im_ / s);
  }
  friend constexpr Complex operator/(Complex a, Complex b) {
    const double d = b.norm2();
    return unchecked((a.re_ * b.re_ + a.im_ * b.im_) / d,
                     (a.im_ * b.re_ - a.re_ * b.im_) / d);
  }
  friend constexpr bool operator==(Complex a, Complex b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  double re_ = 0.0;
  double im_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, Complex z);

/// A point of the plane, identified with the complex number x + iy.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Complex to_complex() const { return Complex(x, y); }
  static Point2 from_complex(Complex z) { return {z.re(), z.im()}; }

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline double distance(Point2 a, Point2 b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace dcn
