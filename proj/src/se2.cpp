#include "dcn/se2.hpp"

#include <cmath>
#include <numbers>

namespace dcn {

std::array<double, 9> Se2Mat::to_array() const {
  return {r00, r01, tx, r10, r11, ty, 0.0, 0.0, 1.0};
}

Se2Mat Se2Mat::from_array(std::span<const double, 9> v) {
  for (double x : v)
    if (!std::isfinite(x)) throw NonFinite();
  if (std::abs(v[6]) > 1e-9 || std::abs(v[7]) > 1e-9 ||
      std::abs(v[8] - 1.0) > 1e-9)
    throw InvalidInput("SE(2) matrix bottom row must be (0, 0, 1)");
  return {v[0], v[1], v[3], v[4], v[2], v[5]};
}

Se2Mat operator*(const Se2Mat& a, const Se2Mat& b) {
  return {a.r00 * b.r00 + a.r01 * b.r10, a.r00 * b.r01 + a.r01 * b.r11,
          a.r10 * b.r00 + a.r11 * b.r10, a.r10 * b.r01 + a.r11 * b.r11,
          a.r00 * b.tx + a.r01 * b.ty + a.tx,
          a.r10 * b.tx + a.r11 * b.ty + a.ty};
}

Point2 apply(const Se2Mat& m, Point2 v) {
  return {m.r00 * v.x + m.r01 * v.y + m.tx, m.r10 * v.x + m.r11 * v.y + m.ty};
}

void check_rigid(const Se2Mat& m, double tol) {
  const double c0 = m.r00 * m.r00 + m.r10 * m.r10 - 1.0;
  const double c1 = m.r01 * m.r01 + m.r11 * m.r11 - 1.0;
  const double dot = m.r00 * m.r01 + m.r10 * m.r11;
  const double det = m.r00 * m.r11 - m.r01 * m.r10 - 1.0;
  if (std::abs(c0) > tol || std::abs(c1) > tol)
    throw NotRigid("rotation columns are not unit length");
  if (std::abs(dot) > tol) throw NotRigid("rotation columns are not orthogonal");
  if (std::abs(det) > tol) throw NotRigid("rotation determinant is not +1");
}

Se2Mat to_se2(const UnitDcn& p) {
  const Complex p0 = p.p0();
  const Complex rot = p0 * p0;
  const Complex t = 2.0 * (p0 * p.p1());
  return {rot.re(), -rot.im(), rot.im(), rot.re(), t.re(), t.im()};
}

UnitDcn from_se2(const Se2Mat& m) {
  check_rigid(m);
  double theta = std::atan2(m.r10, m.r00);
  if (theta <= -std::numbers::pi) theta = std::numbers::pi;
  const Complex p0 = Complex::polar(theta / 2.0);
  const Complex d(m.tx, m.ty);
  return UnitDcn::unchecked(p0, p0.conj() * d / 2.0);
}

Se2Tangent dphi(const DcnTangent& x) {
  return {2.0 * x.theta, 2.0 * x.t.re(), 2.0 * x.t.im()};
}

Se2Mat se2_exp(const Se2Tangent& v) {
  const double w = v.omega;
  const double c = std::cos(w);
  const double s = std::sin(w);
  double a, b;  // V = [[a, -b], [b, a]]
  if (std::abs(w) < 1e-4) {
    a = 1.0 - w * w / 6.0;
    b = w / 2.0 - w * w * w / 24.0;
  } else {
    a = s / w;
    b = (1.0 - c) / w;
  }
  return {c, -s, s, c, a * v.ux - b * v.uy, b * v.ux + a * v.uy};
}

double Quat::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quat operator*(const Quat& a, const Quat& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

std::array<double, 8> DualQuat::to_array() const {
  return {q0.w, q0.x, q0.y, q0.z, q1.w, q1.x, q1.y, q1.z};
}

DualQuat DualQuat::from_array(std::span<const double, 8> v) {
  for (double x : v)
    if (!std::isfinite(x)) throw NonFinite();
  return {{v[0], v[1], v[2], v[3]}, {v[4], v[5], v[6], v[7]}};
}

DualQuat to_dualquat(const Dcn& p) {
  // (a + bi) j = a j + b k
  return {{p.p0().re(), p.p0().im(), 0.0, 0.0},
          {0.0, 0.0, p.p1().re(), p.p1().im()}};
}

Dcn from_dualquat(const DualQuat& q, double tol) {
  if (std::abs(q.q0.y) > tol || std::abs(q.q0.z) > tol ||
      std::abs(q.q1.w) > tol || std::abs(q.q1.x) > tol)
    throw InvalidInput("dual quaternion is not in the image of the DCN ring");
  return {Complex(q.q0.w, q.q0.x), Complex(q.q1.y, q.q1.z)};
}

DualQuat dualquat_mul(const DualQuat& a, const DualQuat& b) {
  return {a.q0 * b.q0, a.q1 * b.q0 + a.q0 * b.q1};
}

DualQuat dualquat_involution(const DualQuat& a) {
  return {a.q0.conj(), Quat{} - a.q1.conj()};
}

double dualquat_norm(const DualQuat& a) { return a.q0.norm(); }

Vec3 dualquat_act(const DualQuat& p, Vec3 v) {
  const DualQuat embedded{{1.0, 0.0, 0.0, 0.0}, {0.0, v.x, v.y, v.z}};
  const DualQuat r =
      dualquat_mul(dualquat_mul(p, embedded), dualquat_involution(p));
  return {r.q1.x, r.q1.y, r.q1.z};
}

std::array<double, 8> CMat2::to_array() const {
  return {m00.re(), m00.im(), m01.re(), m01.im(),
          m10.re(), m10.im(), m11.re(), m11.im()};
}

CMat2 CMat2::from_array(std::span<const double, 8> v) {
  return {Complex(v[0], v[1]), Complex(v[2], v[3]), Complex(v[4], v[5]),
          Complex(v[6], v[7])};
}

CMat2 operator*(const CMat2& a, const CMat2& b) {
  return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
          a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

Complex det(const CMat2& m) { return m.m00 * m.m11 - m.m01 * m.m10; }

CMat2 cmat2_involution(const CMat2& m) { return {m.m11, m.m01, m.m10, m.m00}; }

CMat2 to_cmat2(const Dcn& p) {
  return {p.p0(), p.p1(), Complex(), p.p0().conj()};
}

Dcn from_cmat2(const CMat2& m, double tol) {
  if (m.m10.abs() > tol || (m.m11 - m.m00.conj()).abs() > tol)
    throw InvalidInput("complex matrix is not in the image of the DCN ring");
  return {m.m00, m.m01};
}

}  // namespace dcn
