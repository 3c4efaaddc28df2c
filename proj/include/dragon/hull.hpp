#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "dragon/geometry.hpp"
#include "dragon/params.hpp"

namespace dragon {

// Closed interval of unwrapped polar angles in degrees; lo may be -infinity.
struct AngleInterval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = 0.0;

  bool contains(double phi, double slack = 0.0) const {
    return phi >= lo - slack && phi <= hi + slack;
  }
  AngleInterval shifted(double by) const { return {lo + by, hi + by}; }
};

// Logarithmic spiral r(phi) = amplitude * q^(-(phi - phase)/beta) about
// `center`, phi in degrees. Since q < 1 the radius grows with phi and one
// full turn down multiplies it by q^(360/beta).
struct Spiral {
  Point center;
  double amplitude = 1.0;
  double phase_deg = 0.0;
  double beta_deg = 45.0;
  double q = 0.7071067811865476;
  AngleInterval domain;
  // Wider domain used by some constructions (the e0' extension, the c0
  // extension to -alpha-beta).
  std::optional<AngleInterval> extended;

  // Formula value with no domain check.
  double radius_unchecked(double phi_deg) const;
  // Throws Error(kDomain) when phi is outside the domain (or outside the
  // extended domain when `allow_extension`).
  double radius(double phi_deg, bool allow_extension = false) const;
  Point point_at(double phi_deg) const;
  // Unit tangent in the direction of increasing phi.
  Point tangent_at(double phi_deg) const;
  // Angle where the radius equals r.
  double angle_for_radius(double r) const;

  Spiral transformed(const Similarity& sim) const;
};

double spiral_radius(const Spiral& s, double phi_deg, bool allow_extension = false);

// Constant angle between a radius and the tangent of every boundary spiral:
// tan(tau) = beta / ln(2 cos beta), beta in radians. Result in degrees.
double spiral_tangent_angle(const AngleParams& p);

enum class RegionTag : std::uint8_t { S1, S2, S3, S4, T1, T2 };
inline constexpr std::size_t kRegionCount = 6;
std::string_view to_string(RegionTag tag);

struct HullAnchors {
  Point p00, p01, p11, p21, p23;
};

struct HullNamedPoints {
  Point a, b, c, d, e, f, g, h;
};

// The duck-shaped hull A_PF = S1 u S2 u S3 u S4, optionally carried by a
// similarity onto a smaller copy. T1 and T2 are auxiliary subsets (of S1 and
// of S2 u S3) reported by membership but not counted in the union margin.
struct HullModel {
  AngleParams params;
  Similarity frame;  // maps the base hull onto this one
  bool outside_window = false;

  HullAnchors anchors;
  Spiral a0, b0, c0, d0, e0;
  HullNamedPoints named;
  double arc_radius = 0.0;    // |P11 B| = |P11 C| = q^3/(1-q^4), scaled
  double inner_radius = 0.0;  // the constant q bounding S2, scaled

  double scale() const { return frame.scale(); }
};

// Builds the base hull. Outside 90 <= alpha <= 108 the hull is still built
// but `outside_window` is set; callers decide whether to warn.
HullModel build_hull(const AngleParams& p);

HullModel transform_hull(const HullModel& hull, const Similarity& sim);

// Hull of segment k of Q_n: the base hull carried by the composition of
// pi0/pi1 that maps Q_0 onto that segment.
HullModel hull_for_segment(int n, std::uint64_t k, const AngleParams& p);

struct MembershipResult {
  // Signed margin of the union S1..S4 in units of the hull scale: the
  // smallest slack over the inequalities of the best region and branch.
  double margin = -std::numeric_limits<double>::infinity();
  std::array<double, kRegionCount> region_margin{};
  std::vector<RegionTag> tags;  // regions with margin >= -tol
  bool inside = false;          // margin >= -tol
  int branches_examined = 0;
};

MembershipResult membership(const HullModel& hull, Point p, double tol = 1e-9);

struct BoundaryOptions {
  int samples_per_turn = 360;
  // Spiral windings are cut where the radius drops below this (relative to
  // the hull scale); the winding center itself is then appended.
  double min_radius = 1e-12;
};

// Closed outline: P00, a0 outward to A, e0 from A to C, d0 inward to P01,
// c0 outward to F, b0 inward back to P00. samples_per_turn is measured in arc
// length: a circle of the local radius would receive that many samples.
std::vector<Point> boundary_polyline(const HullModel& hull, const BoundaryOptions& opt = {});

}  // namespace dragon
