#pragma once

#include <numbers>

namespace dragon {

inline constexpr double kDegToRad = std::numbers::pi / 180.0;
inline constexpr double kRadToDeg = 180.0 / std::numbers::pi;

// The coupled angle triple. alpha is the unfolding angle, beta = 90 - alpha/2
// the rotation magnitude of the generating maps, q = 1 / (2 cos beta) the
// contraction ratio. All angles are in degrees.
struct AngleParams {
  double alpha_deg = 90.0;
  double beta_deg = 45.0;
  double q = std::numbers::sqrt2 / 2.0;

  double beta_rad() const { return beta_deg * kDegToRad; }
  // alpha / beta, the exponent that shows up in most spiral identities.
  double alpha_over_beta() const { return alpha_deg / beta_deg; }
};

// Throws Error(kDomain) unless 0 < alpha_deg < 180.
AngleParams params_from_alpha(double alpha_deg);

// Inverse of params_from_alpha. Throws Error(kDomain) unless 0.5 < q < 1.
AngleParams params_from_q(double q);

// The window in which the duck hull is defined.
inline constexpr double kHullWindowLo = 90.0;
inline constexpr double kHullWindowHi = 108.0;

inline bool in_hull_window(const AngleParams& p) {
  return p.alpha_deg >= kHullWindowLo - 1e-12 &&
         p.alpha_deg <= kHullWindowHi + 1e-12;
}

}  // namespace dragon
