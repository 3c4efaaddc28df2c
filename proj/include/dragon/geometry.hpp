#pragma once

#include <cmath>

#include "dragon/params.hpp"

namespace dragon {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point a, Point b) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

// Unit vector at polar angle `deg`.
inline Point direction(double deg) {
  const double r = deg * kDegToRad;
  return {std::cos(r), std::sin(r)};
}

// Polar angle of `v` in degrees, in (-180, 180].
inline double polar_angle_deg(Point v) { return std::atan2(v.y, v.x) * kRadToDeg; }

// Orientation-preserving similarity: p -> scale * R(rotation) * p + translation.
// The rotation is kept unwrapped (not reduced mod 360) so spiral phases stay
// on a consistent branch after composition.
class Similarity {
 public:
  Similarity() = default;
  Similarity(double rotation_deg, double scale, Point translation);

  static Similarity identity() { return {}; }

  double rotation_deg() const { return rotation_deg_; }
  double scale() const { return scale_; }
  Point translation() const { return translation_; }

  Point apply(Point p) const {
    return {scale_ * (cos_ * p.x - sin_ * p.y) + translation_.x,
            scale_ * (sin_ * p.x + cos_ * p.y) + translation_.y};
  }
  Point operator()(Point p) const { return apply(p); }

  // Linear part only (no translation).
  Point apply_vector(Point v) const {
    return {scale_ * (cos_ * v.x - sin_ * v.y), scale_ * (sin_ * v.x + cos_ * v.y)};
  }

  Similarity inverse() const;

  // (a * b)(p) == a(b(p)).
  friend Similarity operator*(const Similarity& a, const Similarity& b);

 private:
  double rotation_deg_ = 0.0;
  double scale_ = 1.0;
  Point translation_{};
  double cos_ = 1.0;
  double sin_ = 0.0;
};

}  // namespace dragon
