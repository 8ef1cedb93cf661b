#pragma once

#include <cmath>

namespace ohmflow {

// Real quaternion q0 + q1 e1 + q2 e2 + q3 e3 with the Hamilton table
// e1 e2 = e3, e2 e3 = e1, e3 e1 = e2, e_k^2 = -1 (so e1 e2 e3 = -1).
struct Quaternion {
  double q0 = 0.0, q1 = 0.0, q2 = 0.0, q3 = 0.0;

  static Quaternion scalar(double s) { return {s, 0.0, 0.0, 0.0}; }
  static Quaternion vector(double v1, double v2, double v3) { return {0.0, v1, v2, v3}; }

  Quaternion& operator+=(const Quaternion& o) {
    q0 += o.q0;
    q1 += o.q1;
    q2 += o.q2;
    q3 += o.q3;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    q0 -= o.q0;
    q1 -= o.q1;
    q2 -= o.q2;
    q3 -= o.q3;
    return *this;
  }
  Quaternion& operator*=(double s) {
    q0 *= s;
    q1 *= s;
    q2 *= s;
    q3 *= s;
    return *this;
  }
};

inline Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
inline Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
inline Quaternion operator*(double s, Quaternion q) { return q *= s; }
inline Quaternion operator*(Quaternion q, double s) { return q *= s; }
inline Quaternion operator-(const Quaternion& q) { return {-q.q0, -q.q1, -q.q2, -q.q3}; }

inline Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.q0 * b.q0 - a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3,
          a.q0 * b.q1 + a.q1 * b.q0 + a.q2 * b.q3 - a.q3 * b.q2,
          a.q0 * b.q2 - a.q1 * b.q3 + a.q2 * b.q0 + a.q3 * b.q1,
          a.q0 * b.q3 + a.q1 * b.q2 - a.q2 * b.q1 + a.q3 * b.q0};
}

inline Quaternion conj(const Quaternion& q) { return {q.q0, -q.q1, -q.q2, -q.q3}; }

inline double norm(const Quaternion& q) {
  return std::sqrt(q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3);
}

inline double max_abs_component(const Quaternion& q) {
  double m = std::abs(q.q0);
  m = std::max(m, std::abs(q.q1));
  m = std::max(m, std::abs(q.q2));
  return std::max(m, std::abs(q.q3));
}

}  // namespace ohmflow
