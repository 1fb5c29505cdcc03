#pragma once

#include <array>
#include <ostream>

#include "polyguard/rational.hpp"

namespace polyguard {

struct Vec3 {
  Rational x, y, z;

  Vec3() : x(0), y(0), z(0) {}
  Vec3(Rational x_, Rational y_, Rational z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  const Rational& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  Rational& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(const Rational& s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(const Rational& s) const { return {x / s, y / s, z / s}; }
  bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
  bool operator!=(const Vec3& o) const { return !(*this == o); }
  bool is_zero() const { return x == 0 && y == 0 && z == 0; }
};

using Point3 = Vec3;

inline Rational dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Rational sqnorm(const Vec3& a) { return dot(a, a); }

struct Vec2 {
  Rational x, y;

  Vec2() : x(0), y(0) {}
  Vec2(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(const Rational& s) const { return {x * s, y * s}; }
  Vec2 operator/(const Rational& s) const { return {x / s, y / s}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Vec2& o) const { return !(*this == o); }
};

inline Rational cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot2(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rational sqnorm2(const Vec2& a) { return dot2(a, a); }

struct Vec3Hash {
  std::size_t operator()(const Vec3& v) const {
    std::size_t seed = hash_rational(v.x);
    hash_combine(seed, hash_rational(v.y));
    hash_combine(seed, hash_rational(v.z));
    return seed;
  }
};

struct Vec2Hash {
  std::size_t operator()(const Vec2& v) const {
    std::size_t seed = hash_rational(v.x);
    hash_combine(seed, hash_rational(v.y));
    return seed;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << "(" << v.x.str() << ", " << v.y.str() << ", " << v.z.str() << ")";
}
inline std::ostream& operator<<(std::ostream& os, const Vec2& v) {
  return os << "(" << v.x.str() << ", " << v.y.str() << ")";
}

}  // namespace polyguard
