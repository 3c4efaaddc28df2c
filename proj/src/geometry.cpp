#include "dragon/geometry.hpp"

#include "dragon/error.hpp"

namespace dragon {

Similarity::Similarity(double rotation_deg, double scale, Point translation)
    : rotation_deg_(rotation_deg), scale_(scale), translation_(translation) {
  if (!(scale > 0.0)) throw Error(ErrorCode::kDomain, "similarity scale must be positive");
  const double r = rotation_deg * kDegToRad;
  cos_ = std::cos(r);
  sin_ = std::sin(r);
}

Similarity Similarity::inverse() const {
  Similarity inv;
  inv.rotation_deg_ = -rotation_deg_;
  inv.scale_ = 1.0 / scale_;
  inv.cos_ = cos_;
  inv.sin_ = -sin_;
  inv.translation_ = {0.0, 0.0};
  const Point t = inv.apply_vector(translation_);
  inv.translation_ = {-t.x, -t.y};
  return inv;
}

Similarity operator*(const Similarity& a, const Similarity& b) {
  Similarity c;
  c.rotation_deg_ = a.rotation_deg_ + b.rotation_deg_;
  c.scale_ = a.scale_ * b.scale_;
  // Multiply the unit rotors instead of re-evaluating trig on the summed
  // angle; keeps composition error independent of the angle magnitude.
  c.cos_ = a.cos_ * b.cos_ - a.sin_ * b.sin_;
  c.sin_ = a.sin_ * b.cos_ + a.cos_ * b.sin_;
  c.translation_ = a.apply(b.translation_);
  return c;
}

}  // namespace dragon
