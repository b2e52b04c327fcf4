#pragma once

#include <iosfwd>
#include <span>

#include "dcn/complex.hpp"

namespace dcn {

/// Numerical thresholds shared by the core operations. Every function that
/// depends on one takes a `const Tolerances&` defaulting to these values.
struct Tolerances {
  /// |p0| at or below this is treated as zero (inverse, normalize, blend).
  double singular = 1e-12;
  /// |sin(theta)| at or below this makes log undefined unless p1 vanishes.
  double log = 1e-9;
  /// |theta| below this switches theta/sin(theta) to its Taylor series.
  double taylor = 1e-4;
  /// UnitDcn construction renormalizes within this distance from |p0| = 1
  /// and rejects beyond it.
  double unit = 1e-6;
};

/// An anti-commutative dual complex number p0 + p1*eps.
///
/// Multiplication follows eps*z = conj(z)*eps:
///   (p0 + p1 eps)(q0 + q1 eps) = p0 q0 + (p1 conj(q0) + p0 q1) eps.
class Dcn {
 public:
  constexpr Dcn() = default;
  constexpr Dcn(Complex p0, Complex p1) : p0_(p0), p1_(p1) {}

  /// Builds from the flat order [p0.re, p0.im, p1.re, p1.im].
  static Dcn from_array(std::span<const double, 4> v);

  constexpr Complex p0() const { return p0_; }
  constexpr Complex p1() const { return p1_; }

  friend constexpr bool operator==(const Dcn&, const Dcn&) = default;

 private:
  Complex p0_;
  Complex p1_;
};

/// A DCN with |p0| = 1; represents a rigid motion of the plane, with p and -p
/// representing the same motion.
class UnitDcn {
 public:
  /// The identity (1, 0).
  UnitDcn() : p0_(Complex::unchecked(1.0, 0.0)) {}

  /// Renormalizes when ||p0| - 1| <= tol.unit, throws NotUnit otherwise.
  UnitDcn(Complex p0, Complex p1, const Tolerances& tol = {});
  explicit UnitDcn(const Dcn& d, const Tolerances& tol = {})
      : UnitDcn(d.p0(), d.p1(), tol) {}

  /// Skips the unit check. Only for values known to be unit up to rounding.
  static UnitDcn unchecked(Complex p0, Complex p1) {
    UnitDcn u;
    u.p0_ = p0;
    u.p1_ = p1;
    return u;
  }

  Complex p0() const { return p0_; }
  Complex p1() const { return p1_; }
  Dcn dcn() const { return {p0_, p1_}; }
  operator Dcn() const { return dcn(); }  // NOLINT

  friend bool operator==(const UnitDcn&, const UnitDcn&) = default;

 private:
  Complex p0_;
  Complex p1_;
};

/// Element theta*i + t*eps of the Lie algebra of unit DCNs.
struct DcnTangent {
  double theta = 0.0;
  Complex t;

  friend DcnTangent operator*(double s, const DcnTangent& x) {
    return {s * x.theta, s * x.t};
  }
  friend DcnTangent operator+(const DcnTangent& a, const DcnTangent& b) {
    return {a.theta + b.theta, a.t + b.t};
  }
  friend bool operator==(const DcnTangent&, const DcnTangent&) = default;
};

std::ostream& operator<<(std::ostream& os, const Dcn& d);
std::ostream& operator<<(std::ostream& os, const UnitDcn& d);

// Ring operations.

Dcn add(const Dcn& a, const Dcn& b);
Dcn mul(const Dcn& a, const Dcn& b);
Dcn scale(double s, const Dcn& a);
Dcn negate(const Dcn& a);
/// conj(p0) + p1 eps
Dcn conj_tilde(const Dcn& a);
/// |p0|; p1 does not contribute.
double norm(const Dcn& a);
/// Two-sided inverse (1/p0, -p1/|p0|^2). Throws SingularDcn.
Dcn inverse(const Dcn& a, const Tolerances& tol = {});
/// (p0, p1) / |p0|. Throws SingularDcn.
UnitDcn normalize(const Dcn& a, const Tolerances& tol = {});

inline Dcn operator+(const Dcn& a, const Dcn& b) { return add(a, b); }
inline Dcn operator-(const Dcn& a) { return negate(a); }
inline Dcn operator*(const Dcn& a, const Dcn& b) { return mul(a, b); }
inline Dcn operator*(double s, const Dcn& a) { return scale(s, a); }

// Group operations on unit DCNs. Products and inverses of units are units, so
// these do not renormalize.

UnitDcn mul(const UnitDcn& a, const UnitDcn& b);
/// (conj(p0), -p1)
UnitDcn inverse(const UnitDcn& a);
UnitDcn negate(const UnitDcn& a);
inline UnitDcn operator*(const UnitDcn& a, const UnitDcn& b) {
  return mul(a, b);
}
inline UnitDcn operator-(const UnitDcn& a) { return negate(a); }

/// Applies the rigid motion to v: p0^2 v + 2 p0 p1.
Point2 act(const UnitDcn& p, Point2 v);

/// Translation by d: (1, d/2).
UnitDcn from_translation(Point2 d);
/// Rotation by theta about center:
/// (e^{i theta/2}, (e^{-i theta/2} - e^{i theta/2}) center / 2).
UnitDcn from_rotation(double theta, Point2 center = {});

/// Rotation angle of the represented motion, in (-pi, pi].
double rotation_angle(const UnitDcn& p);
/// Translation part of the represented motion, i.e. act(p, 0).
Point2 translation(const UnitDcn& p);

/// Returns p or -p, whichever has Re(p.p0 * conj(reference.p0)) >= 0.
UnitDcn align_to(const UnitDcn& p, const UnitDcn& reference);

/// Dual number linear blending: normalize(sum w_i p_i), after flipping each
/// p_i into the hemisphere of ps[0]. Throws DegenerateBlend when the sum has
/// norm <= tol.singular, and InvalidInput on empty or mismatched spans.
UnitDcn dlb(std::span<const UnitDcn> ps, std::span<const double> ws,
            const Tolerances& tol = {});

/// (e^{i theta}, sin(theta)/theta * t)
UnitDcn exp(const DcnTangent& x);
/// (theta, theta/sin(theta) * p1) with theta = arg(p0) in [-pi, pi).
/// Throws LogSingular at theta = -pi with a nonzero translation part.
DcnTangent log(const UnitDcn& q, const Tolerances& tol = {});

/// exp(t log(p)); throws LogSingular like log.
UnitDcn pow(const UnitDcn& p, double t, const Tolerances& tol = {});

/// exp(t log(q p^{-1})) p with q first aligned to p's hemisphere.
UnitDcn slerp(const UnitDcn& p, const UnitDcn& q, double t,
              const Tolerances& tol = {});

}  // namespace dcn
