#pragma once

// Seeded generators and comparison helpers shared by the test binaries.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "dcn/dcn.hpp"
#include "dcn/se2.hpp"

namespace dcn::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  Complex complex(double r = 10.0) {
    return Complex(uniform(-r, r), uniform(-r, r));
  }
  Dcn dcn(double r = 10.0) { return {complex(r), complex(r)}; }
  Point2 point(double r = 10.0) { return {uniform(-r, r), uniform(-r, r)}; }
  double angle() { return uniform(-std::numbers::pi, std::numbers::pi); }
  UnitDcn unit(double r = 10.0) {
    return UnitDcn::unchecked(Complex::polar(angle()), complex(r));
  }
  DcnTangent tangent(double margin = 0.01, double r = 10.0) {
    return {uniform(-std::numbers::pi + margin, std::numbers::pi - margin),
            complex(r)};
  }

 private:
  std::mt19937_64 rng_;
};

inline double max_diff(const Dcn& a, const Dcn& b) {
  return std::max({std::abs(a.p0().re() - b.p0().re()),
                   std::abs(a.p0().im() - b.p0().im()),
                   std::abs(a.p1().re() - b.p1().re()),
                   std::abs(a.p1().im() - b.p1().im())});
}

inline double max_diff(Point2 a, Point2 b) {
  return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

inline double max_diff(const Se2Mat& a, const Se2Mat& b) {
  const auto x = a.to_array();
  const auto y = b.to_array();
  double m = 0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

/// Sign-insensitive distance between two unit DCNs.
inline double max_diff_pm(const UnitDcn& a, const UnitDcn& b) {
  return std::min(max_diff(a, b), max_diff(a, negate(b)));
}

// Plain 3x3 homogeneous matrices built without the library, used as an
// independent oracle for rigid motions.
using Mat3 = std::array<std::array<double, 3>, 3>;

inline Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline Mat3 mat_translation(double x, double y) {
  return {{{1, 0, x}, {0, 1, y}, {0, 0, 1}}};
}

inline Mat3 mat_rotation(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {{{c, -s, 0}, {s, c, 0}, {0, 0, 1}}};
}

/// Rotation by theta about (cx, cy): T(c) R T(-c).
inline Mat3 mat_rotation_about(double theta, double cx, double cy) {
  return mat_mul(mat_translation(cx, cy),
                 mat_mul(mat_rotation(theta), mat_translation(-cx, -cy)));
}

inline Point2 mat_apply(const Mat3& m, Point2 v) {
  return {m[0][0] * v.x + m[0][1] * v.y + m[0][2],
          m[1][0] * v.x + m[1][1] * v.y + m[1][2]};
}

inline Se2Mat to_se2mat(const Mat3& m) {
  return {m[0][0], m[0][1], m[1][0], m[1][1], m[0][2], m[1][2]};
}

/// exp of a 3x3 matrix by its power series, summed until terms vanish.
inline Mat3 mat_exp_series(const Mat3& a) {
  Mat3 sum{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  Mat3 term = sum;
  for (int n = 1; n < 80; ++n) {
    term = mat_mul(term, a);
    for (auto& row : term)
      for (double& x : row) x /= n;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) sum[i][j] += term[i][j];
  }
  return sum;
}

}  // namespace dcn::testing
