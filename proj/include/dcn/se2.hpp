#pragma once

#include <array>
#include <span>

#include "dcn/dcn.hpp"

namespace dcn {

/// Homogeneous 3x3 matrix of an orientation-preserving rigid motion:
///   [r00 r01 tx]
///   [r10 r11 ty]
///   [ 0   0   1]
struct Se2Mat {
  double r00 = 1, r01 = 0, r10 = 0, r11 = 1;
  double tx = 0, ty = 0;

  static Se2Mat identity() { return {}; }

  /// Row-major, bottom row included.
  std::array<double, 9> to_array() const;
  /// Throws InvalidInput if the bottom row is not (0, 0, 1) within 1e-9.
  static Se2Mat from_array(std::span<const double, 9> v);

  friend bool operator==(const Se2Mat&, const Se2Mat&) = default;
};

Se2Mat operator*(const Se2Mat& a, const Se2Mat& b);
Point2 apply(const Se2Mat& m, Point2 v);

/// Throws NotRigid unless the rotation block is orthonormal with determinant
/// +1, each condition within tol.
void check_rigid(const Se2Mat& m, double tol = 1e-6);

/// Element of se(2): angular velocity omega and translational part u.
struct Se2Tangent {
  double omega = 0;
  double ux = 0, uy = 0;
};

Se2Mat to_se2(const UnitDcn& p);
/// The preimage with Re(p0) > 0 (Im(p0) >= 0 on the tie). Throws NotRigid.
UnitDcn from_se2(const Se2Mat& m);

/// Differential of to_se2 at the identity: (2 theta, 2 Re t, 2 Im t).
Se2Tangent dphi(const DcnTangent& x);
/// Closed-form exponential of se(2).
Se2Mat se2_exp(const Se2Tangent& v);

/// Quaternion w + xi + yj + zk, stored in (w, x, y, z) order.
struct Quat {
  double w = 0, x = 0, y = 0, z = 0;

  Quat conj() const { return {w, -x, -y, -z}; }
  double norm() const;

  friend Quat operator+(const Quat& a, const Quat& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Quat operator-(const Quat& a, const Quat& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Quat operator*(const Quat& a, const Quat& b);
};

/// Dual quaternion q0 + q1 eps with the ordinary commutative eps.
struct DualQuat {
  Quat q0, q1;

  /// [q0.w, q0.x, q0.y, q0.z, q1.w, q1.x, q1.y, q1.z]
  std::array<double, 8> to_array() const;
  static DualQuat from_array(std::span<const double, 8> v);
};

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

/// p0 + p1 eps -> p0 + p1 j eps, with complex i mapped to quaternion i.
DualQuat to_dualquat(const Dcn& p);
/// Inverse of to_dualquat on its image; throws InvalidInput off the image.
Dcn from_dualquat(const DualQuat& q, double tol = 1e-9);

DualQuat dualquat_mul(const DualQuat& a, const DualQuat& b);
/// q0* - q1* eps
DualQuat dualquat_involution(const DualQuat& a);
/// |q0|
double dualquat_norm(const DualQuat& a);
/// Embeds v as 1 + (x i + y j + z k) eps, conjugates by p, reads the vector
/// back out of the eps part.
Vec3 dualquat_act(const DualQuat& p, Vec3 v);

/// 2x2 complex matrix [[m00, m01], [m10, m11]].
struct CMat2 {
  Complex m00, m01, m10, m11;

  /// Row-major, each entry as (re, im).
  std::array<double, 8> to_array() const;
  static CMat2 from_array(std::span<const double, 8> v);
};

CMat2 operator*(const CMat2& a, const CMat2& b);
Complex det(const CMat2& m);
/// Swaps the diagonal entries, matching conj_tilde on the image of to_cmat2.
CMat2 cmat2_involution(const CMat2& m);

/// [[p0, p1], [0, conj(p0)]]
CMat2 to_cmat2(const Dcn& p);
/// Inverse of to_cmat2 on its image; throws InvalidInput off the image.
Dcn from_cmat2(const CMat2& m, double tol = 1e-9);

}  // namespace dcn
