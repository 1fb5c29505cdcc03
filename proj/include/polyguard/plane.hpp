#pragma once

#include <optional>
#include <stdexcept>
#include <variant>

#include "polyguard/predicates.hpp"

namespace polyguard {

// Plane { p : normal . p = offset }. The normal is exact and unnormalized.
struct Plane {
  Vec3 normal;
  Rational offset;

  Plane() : normal(Rational(0), Rational(0), Rational(1)), offset(0) {}
  Plane(Vec3 n, Rational d) : normal(std::move(n)), offset(std::move(d)) {
    if (normal.is_zero()) throw std::invalid_argument("plane with zero normal");
  }

  static Plane through(const Point3& a, const Point3& b, const Point3& c) {
    Vec3 n = cross(b - a, c - a);
    if (n.is_zero()) throw std::invalid_argument("collinear points define no plane");
    return Plane(n, dot(n, a));
  }

  // Sign of normal . p - offset: +1 on the normal side, 0 on the plane.
  int side(const Point3& p) const { return sign(dot(normal, p) - offset); }
  bool contains(const Point3& p) const { return side(p) == 0; }

  // Scaled so the first nonzero normal coordinate equals 1; identifies the
  // plane as a point set (orientation is lost).
  Plane canonical() const {
    Rational s = normal.x != 0 ? normal.x : (normal.y != 0 ? normal.y : normal.z);
    return Plane(normal / s, offset / s);
  }

  // Scaled by a positive factor so the first nonzero normal coordinate is +-1;
  // identifies the oriented plane.
  Plane canonical_oriented() const {
    Rational s = normal.x != 0 ? normal.x : (normal.y != 0 ? normal.y : normal.z);
    s = rat_abs(s);
    return Plane(normal / s, offset / s);
  }

  bool operator==(const Plane& o) const {
    Plane a = canonical(), b = o.canonical();
    return a.normal == b.normal && a.offset == b.offset;
  }
};

struct PlaneHash {
  std::size_t operator()(const Plane& pl) const {
    Plane c = pl.canonical_oriented();
    std::size_t seed = Vec3Hash{}(c.normal);
    hash_combine(seed, hash_rational(c.offset));
    return seed;
  }
};
struct PlaneOrientedEq {
  bool operator()(const Plane& a, const Plane& b) const {
    Plane ca = a.canonical_oriented(), cb = b.canonical_oriented();
    return ca.normal == cb.normal && ca.offset == cb.offset;
  }
};

struct Segment3 {
  Point3 a, b;
};

// Classification of segment x plane.
struct SegPlaneEmpty {};
struct SegPlanePoint {
  Rational t;  // in [0,1]; the point is a + t (b - a)
  Point3 p;
};
struct SegPlaneAll {};
using SegPlaneResult = std::variant<SegPlaneEmpty, SegPlanePoint, SegPlaneAll>;

inline SegPlaneResult segment_plane_intersection(const Segment3& s, const Plane& pl) {
  if (s.a == s.b) throw std::invalid_argument("degenerate segment");
  Rational fa = dot(pl.normal, s.a) - pl.offset;
  Rational fb = dot(pl.normal, s.b) - pl.offset;
  if (fa == 0 && fb == 0) return SegPlaneAll{};
  if (fa == fb) return SegPlaneEmpty{};  // parallel, off plane
  if ((fa > 0 && fb > 0) || (fa < 0 && fb < 0)) return SegPlaneEmpty{};
  Rational t = fa / (fa - fb);
  return SegPlanePoint{t, s.a + (s.b - s.a) * t};
}

// Central projection of p from apex onto target, along the full line apex-p.
struct ProjPoint {
  Point3 p;
};
struct ProjAtInfinity {};
struct ProjUndefined {};
using ProjectionResult = std::variant<ProjPoint, ProjAtInfinity, ProjUndefined>;

inline ProjectionResult central_projection(const Point3& apex, const Point3& p, const Plane& target) {
  Rational fa = dot(target.normal, apex) - target.offset;
  if (fa == 0) throw std::invalid_argument("central_projection: apex on target plane");
  if (p == apex) return ProjUndefined{};
  Vec3 d = p - apex;
  Rational nd = dot(target.normal, d);
  if (nd == 0) return ProjAtInfinity{};
  Rational t = -fa / nd;
  return ProjPoint{apex + d * t};
}

}  // namespace polyguard
