#pragma once

// Scalar-generic kernels for the four rigid-motion representations compared
// by the benchmark. Instantiated with double they are what gets timed;
// instantiated with CountedScalar they produce the audited operation counts.
// Convention: + - * / and sqrt each cost one FLOP; negation, copysign and
// comparisons are free.

#include <cmath>

namespace dcn::bench {

struct OpCounts {
  int add = 0;
  int mul = 0;
  int div = 0;
  int sqrt = 0;

  int total() const { return add + mul + div + sqrt; }
};

/// A double that tallies every arithmetic operation into a thread-local
/// counter.
class CountedScalar {
 public:
  CountedScalar() = default;
  CountedScalar(double v) : v_(v) {}  // NOLINT

  double value() const { return v_; }

  static OpCounts& counts() {
    thread_local OpCounts c;
    return c;
  }

  friend CountedScalar operator+(CountedScalar a, CountedScalar b) {
    ++counts().add;
    return a.v_ + b.v_;
  }
  friend CountedScalar operator-(CountedScalar a, CountedScalar b) {
    ++counts().add;
    return a.v_ - b.v_;
  }
  friend CountedScalar operator*(CountedScalar a, CountedScalar b) {
    ++counts().mul;
    return a.v_ * b.v_;
  }
  friend CountedScalar operator/(CountedScalar a, CountedScalar b) {
    ++counts().div;
    return a.v_ / b.v_;
  }
  friend CountedScalar operator-(CountedScalar a) { return -a.v_; }
  friend bool operator<(CountedScalar a, CountedScalar b) {
    return a.v_ < b.v_;
  }
  friend bool operator>=(CountedScalar a, CountedScalar b) {
    return a.v_ >= b.v_;
  }
  friend CountedScalar sqrt(CountedScalar a) {
    ++counts().sqrt;
    return std::sqrt(a.v_);
  }
  friend CountedScalar copysign(CountedScalar a, CountedScalar b) {
    return std::copysign(a.v_, b.v_);
  }

 private:
  double v_ = 0.0;
};

template <class T>
struct Cx {
  T re, im;
};

template <class T>
inline Cx<T> operator+(Cx<T> a, Cx<T> b) {
  return {a.re + b.re, a.im + b.im};
}
template <class T>
inline Cx<T> operator-(Cx<T> a, Cx<T> b) {
  return {a.re - b.re, a.im - b.im};
}
template <class T>
inline Cx<T> operator*(Cx<T> a, Cx<T> b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class T>
inline Cx<T> conj(Cx<T> a) {
  return {a.re, -a.im};
}

template <class T>
struct Vec2 {
  T x, y;
};

// DCN: p0 + p1 eps.
template <class T>
struct DcnRep {
  Cx<T> p0, p1;
};

// Full 3x3 homogeneous matrix, row-major.
template <class T>
struct Mat3Rep {
  T m[9];
};

template <class T>
struct QuatRep {
  T w, x, y, z;
};

template <class T>
struct DualQuatRep {
  QuatRep<T> q0, q1;
};

// [[m00, m01], [m10, m11]]
template <class T>
struct CMat2Rep {
  Cx<T> m00, m01, m10, m11;
};

template <class T>
inline DcnRep<T> compose(const DcnRep<T>& a, const DcnRep<T>& b) {
  return {a.p0 * b.p0, a.p1 * conj(b.p0) + a.p0 * b.p1};
}

template <class T>
inline Vec2<T> transform(const DcnRep<T>& p, Vec2<T> v) {
  const Cx<T> w = (p.p0 * p.p0) * Cx<T>{v.x, v.y};
  const Cx<T> t = p.p0 * p.p1;
  const T two(2.0);
  return {w.re + two * t.re, w.im + two * t.im};
}

template <class T>
inline Mat3Rep<T> to_matrix(const DcnRep<T>& p) {
  const Cx<T> r = p.p0 * p.p0;
  const Cx<T> t = p.p0 * p.p1;
  const T two(2.0);
  return {{r.re, -r.im, two * t.re, r.im, r.re, two * t.im, T(0.0), T(0.0),
           T(1.0)}};
}

template <class T>
inline Mat3Rep<T> compose(const Mat3Rep<T>& a, const Mat3Rep<T>& b) {
  Mat3Rep<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.m[3 * i + j] = a.m[3 * i] * b.m[j] + a.m[3 * i + 1] * b.m[3 + j] +
                       a.m[3 * i + 2] * b.m[6 + j];
  return r;
}

// Homogeneous product with (x, y, 1); the third row is evaluated as well.
template <class T>
inline Vec2<T> transform(const Mat3Rep<T>& a, Vec2<T> v) {
  const T one(1.0);
  T out[3];
  for (int i = 0; i < 3; ++i)
    out[i] = a.m[3 * i] * v.x + a.m[3 * i + 1] * v.y + a.m[3 * i + 2] * one;
  return {out[0], out[1]};
}

// Half-angle extraction without trigonometry; returns the preimage with
// Re(p0) >= 0. Each branch uses one sqrt and one division.
template <class T>
inline DcnRep<T> to_dcn(const Mat3Rep<T>& a) {
  using std::copysign;
  using std::sqrt;
  const T c = a.m[0];
  const T s = a.m[3];
  const T half(0.5);
  T ch, sh;
  if (c >= T(0.0)) {
    ch = sqrt(half * (T(1.0) + c));
    sh = s / (ch + ch);
  } else {
    sh = copysign(sqrt(half * (T(1.0) - c)), s);
    ch = s / (sh + sh);
  }
  const Cx<T> p0{ch, sh};
  const Cx<T> d{half * a.m[2], half * a.m[5]};
  return {p0, conj(p0) * d};
}

template <class T>
inline QuatRep<T> operator*(const QuatRep<T>& a, const QuatRep<T>& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

template <class T>
inline QuatRep<T> operator+(const QuatRep<T>& a, const QuatRep<T>& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

template <class T>
inline QuatRep<T> operator-(const QuatRep<T>& a, const QuatRep<T>& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

template <class T>
inline QuatRep<T> conj(const QuatRep<T>& a) {
  return {a.w, -a.x, -a.y, -a.z};
}

template <class T>
inline DualQuatRep<T> compose(const DualQuatRep<T>& a,
                              const DualQuatRep<T>& b) {
  return {a.q0 * b.q0, a.q1 * b.q0 + a.q0 * b.q1};
}

// p (1 + w eps) p~ with w = x j + y k and p~ = q0* - q1* eps. The primal part
// of the result is |q0|^2 = 1 and is not evaluated.
template <class T>
inline Vec2<T> transform(const DualQuatRep<T>& p, Vec2<T> v) {
  const QuatRep<T> w{T(0.0), T(0.0), v.x, v.y};
  const QuatRep<T> a1 = p.q1 + p.q0 * w;
  const QuatRep<T> dual = a1 * conj(p.q0) - p.q0 * conj(p.q1);
  return {dual.y, dual.z};
}

template <class T>
inline CMat2Rep<T> compose(const CMat2Rep<T>& a, const CMat2Rep<T>& b) {
  return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
          a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

// M V M~ with V = [[1, v], [0, 1]] and M~ the diagonal swap of M; the moved
// point is the upper-right entry.
template <class T>
inline Vec2<T> transform(const CMat2Rep<T>& m, Vec2<T> v) {
  const CMat2Rep<T> embedded{{T(1.0), T(0.0)}, {v.x, v.y}, {T(0.0), T(0.0)},
                             {T(1.0), T(0.0)}};
  const CMat2Rep<T> tilde{m.m11, m.m01, m.m10, m.m00};
  const CMat2Rep<T> r = compose(compose(m, embedded), tilde);
  return {r.m01.re, r.m01.im};
}

template <class T>
inline Mat3Rep<T> to_matrix(const CMat2Rep<T>& m) {
  return to_matrix(DcnRep<T>{m.m00, m.m01});
}

}  // namespace dcn::bench
