#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "nks3/random.hpp"

namespace nks3 {

// Hamilton quaternion w + xi + yj + zk with the ij = k convention.
struct Quat {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

  constexpr Quat() = default;
  constexpr Quat(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quat one() { return {1, 0, 0, 0}; }
  static constexpr Quat i() { return {0, 1, 0, 0}; }
  static constexpr Quat j() { return {0, 0, 1, 0}; }
  static constexpr Quat k() { return {0, 0, 0, 1}; }

  constexpr Quat conjugate() const { return {w, -x, -y, -z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }
  constexpr double dot(const Quat& o) const { return w * o.w + x * o.x + y * o.y + z * o.z; }

  constexpr Quat operator+(const Quat& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
  constexpr Quat operator-(const Quat& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
  constexpr Quat operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quat operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
  constexpr Quat operator/(double s) const { return {w / s, x / s, y / s, z / s}; }
};

constexpr Quat operator*(double s, const Quat& q) { return q * s; }

// Hamilton product.
constexpr Quat qmul(const Quat& a, const Quat& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quat operator*(const Quat& a, const Quat& b) { return qmul(a, b); }

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  constexpr Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  constexpr double norm2() const { return dot(*this); }
  double norm() const { return std::sqrt(norm2()); }

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

  constexpr Quat as_quat() const { return {0, x, y, z}; }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr Vec3 imag_part(const Quat& q) { return {q.x, q.y, q.z}; }

constexpr double det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a.dot(b.cross(c));
}

// Construction tolerance: inputs farther than this from unit norm are rejected,
// closer ones are renormalized so iterated flows cannot drift.
inline constexpr double kUnitTol = 1e-9;

class UnitQuat {
 public:
  explicit UnitQuat(const Quat& q) : q_(q) {
    const double n = q.norm();
    if (std::abs(n - 1.0) > kUnitTol)
      throw std::invalid_argument("UnitQuat: input norm deviates from 1 beyond tolerance");
    q_ = q / n;
  }

  static UnitQuat identity() { return UnitQuat(Quat::one(), unchecked_t{}); }

  const Quat& value() const { return q_; }
  UnitQuat conjugate() const { return UnitQuat(q_.conjugate(), unchecked_t{}); }

  friend UnitQuat operator*(const UnitQuat& a, const UnitQuat& b) {
    return UnitQuat(qmul(a.q_, b.q_));
  }

 private:
  struct unchecked_t {};
  UnitQuat(const Quat& q, unchecked_t) : q_(q) {}
  Quat q_;
};

class ImaginaryUnit {
 public:
  explicit ImaginaryUnit(const Vec3& v) : v_(v) {
    const double n = v.norm();
    if (std::abs(n - 1.0) > kUnitTol)
      throw std::invalid_argument("ImaginaryUnit: input norm deviates from 1 beyond tolerance");
    v_ = v / n;
  }

  static ImaginaryUnit i() { return ImaginaryUnit(Vec3{1, 0, 0}, unchecked_t{}); }
  static ImaginaryUnit j() { return ImaginaryUnit(Vec3{0, 1, 0}, unchecked_t{}); }
  static ImaginaryUnit k() { return ImaginaryUnit(Vec3{0, 0, 1}, unchecked_t{}); }

  const Vec3& vec() const { return v_; }
  Quat quat() const { return v_.as_quat(); }
  ImaginaryUnit operator-() const { return ImaginaryUnit(-v_, unchecked_t{}); }

 private:
  struct unchecked_t {};
  ImaginaryUnit(const Vec3& v, unchecked_t) : v_(v) {}
  Vec3 v_;
};

// Adjoint (Hopf-type) projection pi_X: p -> \bar p X p. The result of
// conjugating an imaginary quaternion by a unit quaternion is imaginary
// with the same norm.
inline ImaginaryUnit adjoint(const UnitQuat& p, const ImaginaryUnit& X) {
  const Quat r = qmul(p.value().conjugate(), qmul(X.quat(), p.value()));
  return ImaginaryUnit(imag_part(r));
}

// e^{At} = cos(t) + A sin(t) for unit imaginary A.
inline UnitQuat exp_im(const ImaginaryUnit& A, double t) {
  const double c = std::cos(t), s = std::sin(t);
  const Vec3& a = A.vec();
  return UnitQuat(Quat{c, a.x * s, a.y * s, a.z * s});
}

inline double triple_det(const ImaginaryUnit& x, const ImaginaryUnit& y, const ImaginaryUnit& z) {
  return det3(x.vec(), y.vec(), z.vec());
}

// Haar-uniform point of S^3 via a normalized 4-dimensional gaussian.
inline UnitQuat sample_unit(RandomStream& rng) {
  for (;;) {
    const Quat g{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
    const double n = g.norm();
    if (n > 1e-8) return UnitQuat(g / n);
  }
}

// Uniform point of S^2 (unit imaginary quaternion).
inline ImaginaryUnit sample_imaginary(RandomStream& rng) {
  for (;;) {
    const Vec3 g{rng.gaussian(), rng.gaussian(), rng.gaussian()};
    const double n = g.norm();
    if (n > 1e-8) return ImaginaryUnit(g / n);
  }
}

}  // namespace nks3
