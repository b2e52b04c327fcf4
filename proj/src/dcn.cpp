#include "dcn/dcn.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace dcn {

namespace {

// sin(x)/x and x/sin(x) with the removable singularity at 0 patched by
// their Taylor series.
double sinc(double x, double taylor) {
  if (std::abs(x) < taylor) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

double inverse_sinc(double x, double taylor) {
  if (std::abs(x) < taylor) {
    const double x2 = x * x;
    return 1.0 + x2 / 6.0 + 7.0 * x2 * x2 / 360.0;
  }
  return x / std::sin(x);
}

}  // namespace

NotUnit::NotUnit(double norm)
    : Error([norm] {
        std::ostringstream os;
        os.precision(17);
        os << "NotUnit: |p0| = " << norm << " is not 1";
        return os.str();
      }()) {}

DegenerateBlend::DegenerateBlend(double norm, std::optional<std::size_t> vertex)
    : Error([&] {
        std::ostringstream os;
        os << "DegenerateBlend: weighted sum has norm " << norm;
        if (vertex) os << " at vertex " << *vertex;
        return os.str();
      }()),
      norm_(norm),
      vertex_(vertex) {}

Dcn Dcn::from_array(std::span<const double, 4> v) {
  return {Complex(v[0], v[1]), Complex(v[2], v[3])};
}

UnitDcn::UnitDcn(Complex p0, Complex p1, const Tolerances& tol) {
  const double n = p0.abs();
  if (std::abs(n - 1.0) > tol.unit) throw NotUnit(n);
  p0_ = p0 / n;
  p1_ = p1 / n;
}

std::ostream& operator<<(std::ostream& os, const Dcn& d) {
  return os << "(" << d.p0() << ", " << d.p1() << ")";
}

std::ostream& operator<<(std::ostream& os, const UnitDcn& d) {
  return os << d.dcn();
}

Dcn add(const Dcn& a, const Dcn& b) {
  return {a.p0() + b.p0(), a.p1() + b.p1()};
}

Dcn mul(const Dcn& a, const Dcn& b) {
  return {a.p0() * b.p0(), a.p1() * b.p0().conj() + a.p0() * b.p1()};
}

Dcn scale(double s, const Dcn& a) { return {s * a.p0(), s * a.p1()}; }

Dcn negate(const Dcn& a) { return {-a.p0(), -a.p1()}; }

Dcn conj_tilde(const Dcn& a) { return {a.p0().conj(), a.p1()}; }

double norm(const Dcn& a) { return a.p0().abs(); }

Dcn inverse(const Dcn& a, const Tolerances& tol) {
  const double n = norm(a);
  if (n <= tol.singular) throw SingularDcn("inverse of a DCN with |p0| ~ 0");
  const double n2 = a.p0().norm2();
  return {a.p0().conj() / n2, -a.p1() / n2};
}

UnitDcn normalize(const Dcn& a, const Tolerances& tol) {
  const double n = norm(a);
  if (n <= tol.singular) throw SingularDcn("normalize of a DCN with |p0| ~ 0");
  return UnitDcn::unchecked(a.p0() / n, a.p1() / n);
}

UnitDcn mul(const UnitDcn& a, const UnitDcn& b) {
  const Dcn r = mul(a.dcn(), b.dcn());
  return UnitDcn::unchecked(r.p0(), r.p1());
}

UnitDcn inverse(const UnitDcn& a) {
  return UnitDcn::unchecked(a.p0().conj(), -a.p1());
}

UnitDcn negate(const UnitDcn& a) {
  return UnitDcn::unchecked(-a.p0(), -a.p1());
}

Point2 act(const UnitDcn& p, Point2 v) {
  const Complex p0 = p.p0();
  return Point2::from_complex(p0 * p0 * v.to_complex() + 2.0 * (p0 * p.p1()));
}

UnitDcn from_translation(Point2 d) {
  return UnitDcn::unchecked(Complex::unchecked(1.0, 0.0), d.to_complex() / 2.0);
}

UnitDcn from_rotation(double theta, Point2 center) {
  const Complex half = Complex::polar(theta / 2.0);
  return UnitDcn::unchecked(half,
                            (half.conj() - half) * center.to_complex() / 2.0);
}

double rotation_angle(const UnitDcn& p) {
  const Complex p0 = p.p0();
  return (p0 * p0).arg();
}

Point2 translation(const UnitDcn& p) {
  return Point2::from_complex(2.0 * (p.p0() * p.p1()));
}

UnitDcn align_to(const UnitDcn& p, const UnitDcn& reference) {
  if ((p.p0() * reference.p0().conj()).re() < 0.0) return negate(p);
  return p;
}

UnitDcn dlb(std::span<const UnitDcn> ps, std::span<const double> ws,
            const Tolerances& tol) {
  if (ps.empty()) throw InvalidInput("dlb needs at least one element");
  if (ps.size() != ws.size())
    throw InvalidInput("dlb: transformation and weight counts differ");
  const UnitDcn& ref = ps.front();
  Complex s0, s1;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const UnitDcn p = align_to(ps[i], ref);
    s0 = s0 + ws[i] * p.p0();
    s1 = s1 + ws[i] * p.p1();
  }
  const double n = s0.abs();
  if (!(n > tol.singular)) throw DegenerateBlend(n);
  return UnitDcn::unchecked(s0 / n, s1 / n);
}

UnitDcn exp(const DcnTangent& x) {
  const double taylor = Tolerances{}.taylor;
  return UnitDcn::unchecked(Complex::polar(x.theta),
                            sinc(x.theta, taylor) * x.t);
}

DcnTangent log(const UnitDcn& q, const Tolerances& tol) {
  double theta = q.p0().arg();
  if (theta >= std::numbers::pi) theta = -std::numbers::pi;
  if (std::abs(theta) >= tol.taylor && std::abs(std::sin(theta)) <= tol.log) {
    // theta ~ -pi: only a pure half-turn has a principal logarithm.
    if (q.p1().abs() > tol.singular) throw LogSingular();
    return {theta, Complex()};
  }
  return {theta, inverse_sinc(theta, tol.taylor) * q.p1()};
}

UnitDcn pow(const UnitDcn& p, double t, const Tolerances& tol) {
  return exp(t * log(p, tol));
}

UnitDcn slerp(const UnitDcn& p, const UnitDcn& q, double t,
              const Tolerances& tol) {
  const UnitDcn aligned = align_to(q, p);
  return mul(pow(mul(aligned, inverse(p)), t, tol), p);
}

}  // namespace dcn
