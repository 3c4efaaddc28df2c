#pragma once

#include "dragon/geometry.hpp"

namespace dragon {

// Sign of the doubled signed area of triangle (a, b, c): +1 if c lies left of
// the directed line a->b, -1 if right, 0 if collinear. Exact for the given
// doubles: the plain floating-point determinant is used when it clears a
// forward error bound, otherwise the six products are summed exactly.
int orient2d(Point a, Point b, Point c);

// Always takes the exact path. Exposed for testing.
int orient2d_exact(Point a, Point b, Point c);

// Approximate determinant value (not sign-reliable near zero).
inline double orient2d_value(Point a, Point b, Point c) {
  return (a.x - c.x) * (b.y - c.y) - (a.y - c.y) * (b.x - c.x);
}

}  // namespace dragon
