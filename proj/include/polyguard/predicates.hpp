#pragma once

#include "polyguard/vec.hpp"

namespace polyguard {

// Sign of det(q-p, r-p, s-p). 0 iff the four points are coplanar.
inline int orient3d(const Point3& p, const Point3& q, const Point3& r, const Point3& s) {
  return sign(dot(cross(q - p, r - p), s - p));
}

// Sign of the 2D orientation of (a,b,c): +1 left turn, -1 right turn, 0 collinear.
inline int orient2d(const Vec2& a, const Vec2& b, const Vec2& c) {
  return sign(cross2(b - a, c - a));
}

inline bool collinear3(const Point3& a, const Point3& b, const Point3& c) {
  return cross(b - a, c - a).is_zero();
}

// p on the closed segment [a,b] (segment may be degenerate).
inline bool on_segment3(const Point3& a, const Point3& b, const Point3& p) {
  if (!collinear3(a, b, p)) return false;
  Vec3 d = b - a;
  Rational t = dot(p - a, d);
  return t >= 0 && t <= sqnorm(d);
}

inline bool on_segment2(const Vec2& a, const Vec2& b, const Vec2& p) {
  if (orient2d(a, b, p) != 0) return false;
  Vec2 d = b - a;
  Rational t = dot2(p - a, d);
  return t >= 0 && t <= sqnorm2(d);
}

// Squared distance from p to the closed 2D segment [a,b].
inline Rational sqdist_point_segment2(const Vec2& a, const Vec2& b, const Vec2& p) {
  Vec2 d = b - a;
  Rational dd = sqnorm2(d);
  if (dd == 0) return sqnorm2(p - a);
  Rational t = dot2(p - a, d);
  if (t <= 0) return sqnorm2(p - a);
  if (t >= dd) return sqnorm2(p - b);
  Vec2 proj = a + d * (t / dd);
  return sqnorm2(p - proj);
}

// Exact angular order of direction vectors around the origin, counterclockwise
// starting from the positive x axis. Returns true if a comes strictly before b.
inline bool angle_less(const Vec2& a, const Vec2& b) {
  auto half = [](const Vec2& v) {
    // 0: upper half-plane including +x axis; 1: lower including -x axis.
    if (v.y != 0) return v.y > 0 ? 0 : 1;
    return v.x > 0 ? 0 : 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross2(a, b) > 0;
}

}  // namespace polyguard
