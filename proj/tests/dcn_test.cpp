#include "dcn/dcn.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "support.hpp"

namespace dcn {
namespace {

using std::numbers::pi;
using testing::Gen;
using testing::max_diff;
using testing::max_diff_pm;

const double kSqrt2 = std::sqrt(2.0);

TEST(Complex, RejectsNonFinite) {
  EXPECT_THROW(Complex(NAN, 0.0), NonFinite);
  EXPECT_THROW(Complex(0.0, INFINITY), NonFinite);
  EXPECT_NO_THROW(Complex(1.0, -2.0));
}

TEST(DcnAdd, Examples) {
  EXPECT_EQ(add({1, 0}, {0, 1}), Dcn(1, 1));
  const Dcn a{Complex(1, 2), Complex(0, 3)};
  EXPECT_EQ(add(a, Dcn{}), a);
  EXPECT_EQ(add(a, {Complex(2, -2), Complex(1, -3)}), Dcn(3, 1));
}

TEST(DcnMul, EmbedsComplexMultiplication) {
  const Dcn i{Complex(0, 1), 0};
  EXPECT_EQ(mul(i, i), Dcn(-1, 0));
}

TEST(DcnMul, EpsilonAntiCommutes) {
  const Dcn eps{0, 1};
  const Dcn i{Complex(0, 1), 0};
  // eps * i = conj(i) * eps = -i eps, while i * eps = i eps.
  EXPECT_EQ(mul(eps, i), Dcn(0, Complex(0, -1)));
  EXPECT_EQ(mul(i, eps), Dcn(0, Complex(0, 1)));
}

TEST(DcnMul, WorkedExample) {
  // p0 q0 = (1+i)(1-i)/2 = 1;
  // p1 conj(q0) + p0 q1 = (1+i)/sqrt2 + (1+i) i / sqrt2 = 2i/sqrt2 = sqrt2 i.
  const Dcn a{Complex(1 / kSqrt2, 1 / kSqrt2), 1};
  const Dcn b{Complex(1 / kSqrt2, -1 / kSqrt2), Complex(0, 1)};
  EXPECT_LT(max_diff(mul(a, b), Dcn(1, Complex(0, kSqrt2))), 1e-15);
}

TEST(DcnConjTilde, ConjugatesSlotZeroOnly) {
  EXPECT_EQ(conj_tilde({Complex(0, 1), Complex(1, 1)}),
            Dcn(Complex(0, -1), Complex(1, 1)));
  Gen g(11);
  for (int k = 0; k < 100; ++k) {
    const Dcn a = g.dcn();
    EXPECT_EQ(conj_tilde(conj_tilde(a)), a);
  }
}

TEST(DcnNorm, IgnoresDualPart) {
  EXPECT_DOUBLE_EQ(norm({Complex(3, 4), Complex(99, 99)}), 5.0);
  EXPECT_NEAR(norm({Complex::polar(1.234), Complex(-7, 2)}), 1.0, 1e-15);
}

TEST(DcnNorm, Multiplicative) {
  Gen g(12);
  for (int k = 0; k < 10000; ++k) {
    const Dcn a = g.dcn(), b = g.dcn();
    const double expected = norm(a) * norm(b);
    EXPECT_NEAR(norm(mul(a, b)), expected, 1e-9 * expected);
  }
}

TEST(DcnInverse, UnitFormula) {
  const Dcn a{Complex::polar(pi / 3), Complex(2, 1)};
  const Dcn expected{Complex::polar(-pi / 3), Complex(-2, -1)};
  EXPECT_LT(max_diff(inverse(a), expected), 1e-15);
  EXPECT_EQ(inverse(Dcn(1, 0)), Dcn(1, 0));
}

TEST(DcnInverse, GeneralFormula) {
  const Dcn a{Complex(0, 2), 1};
  const Dcn inv = inverse(a);
  EXPECT_LT(max_diff(inv, Dcn(Complex(0, -0.5), -0.25)), 1e-15);
  EXPECT_LT(max_diff(mul(a, inv), Dcn(1, 0)), 1e-15);
  EXPECT_LT(max_diff(mul(inv, a), Dcn(1, 0)), 1e-15);
}

TEST(DcnInverse, TwoSidedOnRandomInputs) {
  Gen g(13);
  for (int k = 0; k < 1000; ++k) {
    const Dcn a{g.complex(3) + Complex(0.5, 0), g.complex(3)};
    if (norm(a) < 0.1) continue;
    EXPECT_LT(max_diff(mul(a, inverse(a)), Dcn(1, 0)), 1e-9);
    EXPECT_LT(max_diff(mul(inverse(a), a), Dcn(1, 0)), 1e-9);
  }
}

TEST(DcnInverse, Singular) {
  EXPECT_THROW(inverse(Dcn(0, 1)), SingularDcn);
  EXPECT_THROW(inverse(Dcn(Complex(1e-13, 0), 1)), SingularDcn);
  Tolerances loose;
  loose.singular = 1e-3;
  EXPECT_THROW(inverse(Dcn(Complex(1e-4, 0), 1), loose), SingularDcn);
}

TEST(DcnNormalize, Examples) {
  EXPECT_LT(max_diff(normalize({2, Complex(4, 2)}), Dcn(1, Complex(2, 1))), 1e-15);
  const UnitDcn u = from_rotation(0.7, {1, 2});
  EXPECT_LT(max_diff(normalize(u), u), 1e-15);
  EXPECT_LT(max_diff(normalize({Complex(1, 1), 1}),
                     Dcn(Complex(1 / kSqrt2, 1 / kSqrt2), 1 / kSqrt2)),
            1e-15);
  EXPECT_THROW(normalize(Dcn(0, 5)), SingularDcn);
}

TEST(UnitDcn, RenormalizesSmallDriftRejectsLarge) {
  const UnitDcn u(Complex(1 + 5e-7, 0), Complex(2, 0));
  EXPECT_DOUBLE_EQ(u.p0().re(), 1.0);
  EXPECT_NEAR(u.p1().re(), 2 / (1 + 5e-7), 1e-15);
  EXPECT_THROW(UnitDcn(Complex(1.1, 0), 0), NotUnit);
  EXPECT_THROW(UnitDcn(Dcn(2, 0)), NotUnit);
}

TEST(Ring, AxiomsOnRandomTriples) {
  Gen g(1);
  for (int k = 0; k < 10000; ++k) {
    const Dcn a = g.dcn(), b = g.dcn(), c = g.dcn();
    EXPECT_LT(max_diff(mul(mul(a, b), c), mul(a, mul(b, c))), 1e-9);
    EXPECT_LT(max_diff(mul(a, b + c), mul(a, b) + mul(a, c)), 1e-9);
    EXPECT_LT(max_diff(mul(a + b, c), mul(a, c) + mul(b, c)), 1e-9);
  }
}

TEST(Ring, NotCommutative) {
  const Dcn a{Complex(0, 1), 0}, b{0, 1};
  EXPECT_NE(mul(a, b), mul(b, a));
}

TEST(Group, UnitsClosedUnderProductAndInverse) {
  Gen g(2);
  for (int k = 0; k < 10000; ++k) {
    const UnitDcn p = g.unit(), q = g.unit();
    EXPECT_LT(max_diff(mul(p, inverse(p)), UnitDcn()), 1e-12);
    EXPECT_NEAR(norm(mul(p, q)), 1.0, 1e-12);
    EXPECT_NEAR(norm(inverse(p)), 1.0, 1e-12);
    // The unit inverse agrees with the general one.
    EXPECT_LT(max_diff(inverse(p), inverse(p.dcn())), 1e-12);
  }
}

TEST(Act, TranslationAndRotationExamples) {
  EXPECT_EQ(act(UnitDcn(1, 0.5), {0, 0}), (Point2{1, 0}));
  const Point2 r = act(UnitDcn::unchecked(Complex::polar(pi / 4), 0), {1, 0});
  EXPECT_LT(max_diff(r, {0, 1}), 1e-15);
}

TEST(Act, HalfTurnAboutOneMatchesMatrixOracle) {
  const UnitDcn p(Complex(0, 1), Complex(0, -1));
  const auto m = testing::mat_rotation_about(pi, 1, 0);
  const Point2 oracle = testing::mat_apply(m, {0, 0});
  EXPECT_LT(max_diff(oracle, {2, 0}), 1e-15);
  EXPECT_LT(max_diff(act(p, {0, 0}), oracle), 1e-15);
}

TEST(Act, IsRigidAndAGroupAction) {
  Gen g(3);
  for (int k = 0; k < 10000; ++k) {
    const UnitDcn p = g.unit(), q = g.unit();
    const Point2 u = g.point(), v = g.point();
    const double d = distance(u, v);
    EXPECT_NEAR(distance(act(p, u), act(p, v)), d, 1e-9 * d);
    EXPECT_LT(max_diff(act(mul(p, q), v), act(p, act(q, v))), 1e-9);
    EXPECT_EQ(act(p, v), act(negate(p), v));
  }
}

TEST(FromTranslation, Examples) {
  EXPECT_EQ(from_translation({0, 0}), UnitDcn());
  EXPECT_EQ(from_translation({2, 0}), UnitDcn(1, 1));
  const UnitDcn p = from_translation({3, -4});
  EXPECT_EQ(p, UnitDcn(1, Complex(1.5, -2)));
  EXPECT_EQ(act(p, {1, 1}), (Point2{4, -3}));
}

TEST(FromRotation, Examples) {
  EXPECT_EQ(from_rotation(0, {5, -3}), UnitDcn());
  EXPECT_LT(max_diff(from_rotation(pi, {1, 0}), Dcn(Complex(0, 1), Complex(0, -1))),
            1e-15);
  const UnitDcn q = from_rotation(pi / 2, {0, 1});
  EXPECT_LT(max_diff(act(q, {0, 1}), {0, 1}), 1e-15);
  const auto m = testing::mat_rotation_about(pi / 2, 0, 1);
  Gen g(4);
  for (int k = 0; k < 100; ++k) {
    const Point2 v = g.point();
    EXPECT_LT(max_diff(act(q, v), testing::mat_apply(m, v)), 1e-12);
  }
}

TEST(FromRotation, AngleAndTranslationReadback) {
  const UnitDcn p = mul(from_translation({1, 2}), from_rotation(0.5));
  EXPECT_NEAR(rotation_angle(p), 0.5, 1e-15);
  EXPECT_LT(max_diff(translation(p), {1, 2}), 1e-15);
}

TEST(Dlb, SingleElement) {
  const UnitDcn p = from_rotation(1.0, {2, 3});
  const std::vector<UnitDcn> ps{p};
  const std::vector<double> ws{1.0};
  EXPECT_LT(max_diff(dlb(ps, ws), p), 1e-15);
}

TEST(Dlb, TranslationMidpoint) {
  const std::vector<UnitDcn> ps{UnitDcn(1, 0), UnitDcn(1, 1)};
  const std::vector<double> ws{0.5, 0.5};
  const UnitDcn r = dlb(ps, ws);
  EXPECT_EQ(r, UnitDcn(1, 0.5));
  EXPECT_EQ(act(r, {0, 0}), (Point2{1, 0}));
}

TEST(Dlb, RotationMidpoint) {
  Gen g(5);
  for (int k = 0; k < 200; ++k) {
    const double t1 = g.uniform(-3, 3);
    // Within a quarter turn of each other, so alignment never flips.
    const double t2 = t1 + g.uniform(-1.5, 1.5);
    const std::vector<UnitDcn> ps{UnitDcn::unchecked(Complex::polar(t1), 0),
                                  UnitDcn::unchecked(Complex::polar(t2), 0)};
    const std::vector<double> ws{0.5, 0.5};
    const UnitDcn expected =
        UnitDcn::unchecked(Complex::polar((t1 + t2) / 2), 0);
    EXPECT_LT(max_diff(dlb(ps, ws), expected), 1e-12);
  }
}

TEST(Dlb, HemisphereAlignment) {
  // -p and p are the same motion; the blend must not cancel them.
  const UnitDcn p = from_rotation(0.3, {1, 1});
  const std::vector<UnitDcn> ps{p, negate(p)};
  const std::vector<double> ws{0.5, 0.5};
  EXPECT_LT(max_diff(dlb(ps, ws), p), 1e-15);
}

TEST(Dlb, Projection) {
  Gen g(6);
  for (int k = 0; k < 100; ++k) {
    const UnitDcn p = g.unit();
    const double w1 = g.uniform(0.1, 2), w2 = g.uniform(0.1, 2);
    const std::vector<UnitDcn> ps{p, p};
    EXPECT_LT(max_diff(dlb(ps, std::vector<double>{w1, w2}), p), 1e-12);
    EXPECT_LT(max_diff(dlb(ps, std::vector<double>{-w1, -w2}), negate(p)), 1e-12);
  }
}

TEST(Dlb, BiInvariance) {
  Gen g(7);
  for (int k = 0; k < 2000; ++k) {
    const UnitDcn q = g.unit();
    const std::size_t n = 1 + k % 5;
    std::vector<UnitDcn> ps, qps;
    std::vector<double> ws;
    for (std::size_t i = 0; i < n; ++i) {
      ps.push_back(g.unit());
      qps.push_back(mul(q, ps.back()));
      ws.push_back(g.uniform(0, 1));
    }
    EXPECT_LT(max_diff(mul(q, dlb(ps, ws)), dlb(qps, ws)), 1e-9);
  }
}

TEST(Dlb, ScaleInvariantInWeights) {
  Gen g(8);
  std::vector<UnitDcn> ps{g.unit(), g.unit(), g.unit()};
  std::vector<double> ws{0.2, 0.5, 0.3}, scaled{2, 5, 3};
  EXPECT_LT(max_diff(dlb(ps, ws), dlb(ps, scaled)), 1e-14);
}

TEST(Dlb, Degenerate) {
  const UnitDcn p = from_rotation(0.4, {1, 0});
  const std::vector<UnitDcn> ps{p, p};
  EXPECT_THROW(dlb(ps, std::vector<double>{1.0, -1.0}), DegenerateBlend);
  EXPECT_THROW(dlb(ps, std::vector<double>{0.0, 0.0}), DegenerateBlend);
}

TEST(Dlb, InvalidShapes) {
  const std::vector<UnitDcn> none;
  const std::vector<double> no_w;
  EXPECT_THROW(dlb(none, no_w), InvalidInput);
  const std::vector<UnitDcn> one{UnitDcn()};
  EXPECT_THROW(dlb(one, std::vector<double>{1, 2}), InvalidInput);
}

TEST(Exp, Examples) {
  EXPECT_EQ(exp({0, Complex(3, -1)}), UnitDcn(1, Complex(3, -1)));
  EXPECT_LT(max_diff(exp({pi / 2, 1}), Dcn(Complex(0, 1), 2 / pi)), 1e-15);
}

TEST(Exp, MatchesPowerSeries) {
  // exp as the sum of (theta i + t eps)^n / n! in the ring itself.
  Gen g(9);
  for (int k = 0; k < 100; ++k) {
    const DcnTangent x = g.tangent(0.01, 2);
    const Dcn xd{Complex(0, x.theta), x.t};
    Dcn sum{1, 0}, term{1, 0};
    for (int n = 1; n < 40; ++n) {
      term = scale(1.0 / n, mul(term, xd));
      sum = sum + term;
    }
    EXPECT_LT(max_diff(exp(x), sum), 1e-12);
  }
}

TEST(Log, Examples) {
  const DcnTangent a = log(UnitDcn(1, Complex(2, -3)));
  EXPECT_EQ(a.theta, 0.0);
  EXPECT_EQ(a.t, Complex(2, -3));
  const DcnTangent b = log(UnitDcn(Complex(0, 1), 1));
  EXPECT_NEAR(b.theta, pi / 2, 1e-15);
  EXPECT_NEAR(b.t.re(), pi / 2, 1e-15);
  EXPECT_NEAR(b.t.im(), 0, 1e-15);
}

TEST(Log, TaylorBranchIsContinuous) {
  for (double theta : {1e-5, 9.99e-5, 1.0001e-4, 1e-3}) {
    const UnitDcn q = UnitDcn::unchecked(Complex::polar(theta), 1);
    EXPECT_NEAR(log(q).t.re(), theta / std::sin(theta), 1e-15);
  }
}

TEST(Log, HalfTurn) {
  const DcnTangent x = log(UnitDcn(-1, 0));
  EXPECT_DOUBLE_EQ(x.theta, -pi);
  EXPECT_EQ(x.t, Complex());
  EXPECT_THROW(log(UnitDcn(-1, 0.5)), LogSingular);
  EXPECT_THROW(log(UnitDcn(Complex(-1, -1e-12), 0.5)), LogSingular);
}

TEST(ExpLog, RoundTrips) {
  Gen g(10);
  for (int k = 0; k < 10000; ++k) {
    const DcnTangent x = g.tangent();
    const DcnTangent y = log(exp(x));
    EXPECT_NEAR(y.theta, x.theta, 1e-10);
    EXPECT_NEAR(y.t.re(), x.t.re(), 1e-10 * std::max(1.0, std::abs(x.t.re())));
    EXPECT_NEAR(y.t.im(), x.t.im(), 1e-10 * std::max(1.0, std::abs(x.t.im())));
    const UnitDcn q = exp(x);
    EXPECT_LT(max_diff(exp(log(q)), q), 1e-10);
  }
}

TEST(Pow, Examples) {
  const UnitDcn p = from_rotation(1.0, {2, -1});
  EXPECT_EQ(pow(p, 0), UnitDcn());
  EXPECT_LT(max_diff(pow(p, 1), p), 1e-14);
  EXPECT_LT(max_diff(pow(UnitDcn(Complex(0, 1), 0), 2), UnitDcn(-1, 0)), 1e-15);
  Gen g(14);
  for (int k = 0; k < 100; ++k) {
    const Point2 d = g.point();
    const double t = g.uniform(-3, 3);
    EXPECT_LT(max_diff(pow(from_translation(d), t),
                       from_translation({t * d.x, t * d.y})),
              1e-12);
  }
}

TEST(Pow, OneParameterGroup) {
  Gen g(15);
  for (int k = 0; k < 500; ++k) {
    const UnitDcn p = exp(g.tangent(0.5, 3));
    const double s = g.uniform(-1, 1), t = g.uniform(-1, 1);
    EXPECT_LT(max_diff_pm(mul(pow(p, s), pow(p, t)), pow(p, s + t)), 1e-9);
  }
}

TEST(Slerp, Endpoints) {
  Gen g(16);
  for (int k = 0; k < 1000; ++k) {
    const UnitDcn p = g.unit();
    const UnitDcn q = align_to(g.unit(), p);
    EXPECT_LT(max_diff(slerp(p, q, 0), p), 1e-12);
    EXPECT_LT(max_diff(slerp(p, q, 1), q), 1e-12);
  }
}

TEST(Slerp, RotationMidpoint) {
  const UnitDcn r = slerp(UnitDcn(), UnitDcn::unchecked(Complex::polar(pi / 4), 0), 0.5);
  EXPECT_LT(max_diff(r, UnitDcn::unchecked(Complex::polar(pi / 8), 0)), 1e-15);
}

TEST(Slerp, UniformAngularVelocity) {
  Gen g(17);
  for (int k = 0; k < 500; ++k) {
    const UnitDcn p = g.unit();
    const UnitDcn q = g.unit();
    const double a0 = slerp(p, q, 0).p0().arg();
    double prev = a0;
    std::vector<double> angles{a0};
    for (int s = 1; s <= 10; ++s) {
      double a = slerp(p, q, s / 10.0).p0().arg();
      while (a - prev > pi) a -= 2 * pi;
      while (a - prev < -pi) a += 2 * pi;
      angles.push_back(a);
      prev = a;
    }
    const double slope = angles[10] - angles[0];
    for (int s = 0; s <= 10; ++s)
      EXPECT_NEAR(angles[s], a0 + slope * s / 10.0, 1e-9);
  }
}

TEST(Slerp, TakesTheShortPathForAntipodalRepresentatives) {
  const UnitDcn p = from_rotation(0.2);
  const UnitDcn q = negate(from_rotation(0.6));
  // Without alignment the path would sweep the long way around.
  EXPECT_NEAR(rotation_angle(slerp(p, q, 0.5)), 0.4, 1e-12);
}

TEST(Slerp, Extrapolates) {
  const UnitDcn p = from_translation({0, 0});
  const UnitDcn q = from_translation({1, 0});
  EXPECT_LT(max_diff(slerp(p, q, 2), from_translation({2, 0})), 1e-15);
}

}  // namespace
}  // namespace dcn
