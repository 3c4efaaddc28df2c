#include "dragon/hull.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dragon/error.hpp"
#include "dragon/polygon.hpp"

namespace dragon {

double Spiral::radius_unchecked(double phi_deg) const {
  return amplitude * std::exp(-(phi_deg - phase_deg) / beta_deg * std::log(q));
}

double Spiral::radius(double phi_deg, bool allow_extension) const {
  const AngleInterval& dom = (allow_extension && extended) ? *extended : domain;
  // A few ulps of slack so that endpoints computed by shifting stay valid.
  if (!dom.contains(phi_deg, 1e-9)) {
    std::ostringstream os;
    os << "polar angle " << phi_deg << " outside spiral domain [" << dom.lo << ", " << dom.hi
       << "]";
    throw Error(ErrorCode::kDomain, os.str());
  }
  return radius_unchecked(phi_deg);
}

Point Spiral::point_at(double phi_deg) const {
  return center + radius_unchecked(phi_deg) * direction(phi_deg);
}

Point Spiral::tangent_at(double phi_deg) const {
  const double growth = -std::log(q) / (beta_deg * kDegToRad);  // d ln r / d phi
  const Point radial = direction(phi_deg);
  const Point normal{-radial.y, radial.x};
  const Point v = growth * radial + normal;
  return (1.0 / norm(v)) * v;
}

double Spiral::angle_for_radius(double r) const {
  return phase_deg - beta_deg * std::log(r / amplitude) / std::log(q);
}

Spiral Spiral::transformed(const Similarity& sim) const {
  Spiral s = *this;
  const double rot = sim.rotation_deg();
  s.center = sim(center);
  s.amplitude = amplitude * sim.scale();
  s.phase_deg = phase_deg + rot;
  s.domain = domain.shifted(rot);
  if (extended) s.extended = extended->shifted(rot);
  return s;
}

double spiral_radius(const Spiral& s, double phi_deg, bool allow_extension) {
  return s.radius(phi_deg, allow_extension);
}

double spiral_tangent_angle(const AngleParams& p) {
  const double b = p.beta_rad();
  return std::atan(b / std::log(2.0 * std::cos(b))) * kRadToDeg;
}

std::string_view to_string(RegionTag tag) {
  switch (tag) {
    case RegionTag::S1: return "S1";
    case RegionTag::S2: return "S2";
    case RegionTag::S3: return "S3";
    case RegionTag::S4: return "S4";
    case RegionTag::T1: return "T1";
    case RegionTag::T2: return "T2";
  }
  return "?";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Spiral make_spiral(const AngleParams& p, Point center, double amplitude, double phase,
                   AngleInterval domain) {
  Spiral s;
  s.center = center;
  s.amplitude = amplitude;
  s.phase_deg = phase;
  s.beta_deg = p.beta_deg;
  s.q = p.q;
  s.domain = domain;
  return s;
}

HullModel apply_frame(const HullModel& base, const Similarity& sim) {
  HullModel h = base;
  h.frame = sim * base.frame;
  const auto map = [&](Point x) { return sim(x); };
  h.anchors = {map(base.anchors.p00), map(base.anchors.p01), map(base.anchors.p11),
               map(base.anchors.p21), map(base.anchors.p23)};
  h.a0 = base.a0.transformed(sim);
  h.b0 = base.b0.transformed(sim);
  h.c0 = base.c0.transformed(sim);
  h.d0 = base.d0.transformed(sim);
  h.e0 = base.e0.transformed(sim);
  const HullNamedPoints& n = base.named;
  h.named = {map(n.a), map(n.b), map(n.c), map(n.d), map(n.e), map(n.f), map(n.g), map(n.h)};
  h.arc_radius = base.arc_radius * sim.scale();
  h.inner_radius = base.inner_radius * sim.scale();
  return h;
}

}  // namespace

HullModel build_hull(const AngleParams& p) {
  const double q = p.q;
  const double beta = p.beta_deg;
  const double alpha = p.alpha_deg;
  const double q4 = std::pow(q, 4);
  const double outer = 1.0 / (1.0 - q4);
  const double inner = 1.0 - q * q / (1.0 - q4);

  HullModel h;
  h.params = p;
  h.outside_window = !in_hull_window(p);

  const Similarity pi0 = make_pi0(p);
  const Similarity pi1 = make_pi1(p);
  h.anchors.p00 = {0.0, 0.0};
  h.anchors.p01 = {1.0, 0.0};
  h.anchors.p11 = pi0(h.anchors.p01);
  h.anchors.p21 = pi0(h.anchors.p11);
  h.anchors.p23 = pi1(h.anchors.p11);

  h.a0 = make_spiral(p, h.anchors.p00, outer, 0.0, {-kInf, -beta});
  h.b0 = make_spiral(p, h.anchors.p00, inner, 0.0, {-kInf, 0.0});
  h.c0 = make_spiral(p, h.anchors.p01, outer, -alpha, {-kInf, -180.0});
  h.c0.extended = AngleInterval{-kInf, -alpha - beta};
  h.d0 = make_spiral(p, h.anchors.p01, inner, -alpha, {-kInf, -alpha - beta});
  h.e0 = make_spiral(p, h.anchors.p11, outer, 4.0 * beta, {-beta, beta});
  h.e0.extended = AngleInterval{-180.0 - beta, beta};

  h.arc_radius = q * q * q / (1.0 - q4);
  h.inner_radius = q;

  HullNamedPoints& n = h.named;
  n.a = h.a0.point_at(-beta);
  n.b = h.b0.point_at(-beta);
  n.c = h.d0.point_at(-alpha - beta);
  n.d = {q, 0.0};
  n.e = h.a0.point_at(-180.0 - beta);
  n.f = h.b0.point_at(0.0);
  n.h = h.c0.point_at(-alpha - beta);
  // Second intersection of the tangent to b0 at B with the circle of radius
  // arc_radius about P11 (B itself is the first).
  const Point u = h.b0.tangent_at(-beta);
  const double s = -2.0 * dot(u, n.b - h.anchors.p11);
  n.g = n.b + s * u;
  return h;
}

HullModel transform_hull(const HullModel& hull, const Similarity& sim) {
  return apply_frame(hull, sim);
}

HullModel hull_for_segment(int n, std::uint64_t k, const AngleParams& p) {
  return transform_hull(build_hull(p), segment_similarity(n, k, p));
}

namespace {

struct Polar {
  double d;
  double theta;
};

Polar polar_about(Point center, Point p) {
  const Point v = p - center;
  return {norm(v), polar_angle_deg(v)};
}

// Best (largest) margin of a wedge/band region over all winding branches
// phi = theta + 360 j. `lower`/`upper` give the radial bounds on a branch; for
// regions whose angular range is unbounded below the enumeration stops once
// the upper bound has dropped under the point's distance.
template <class Lower, class Upper>
double band_margin(Polar pt, double lo, double hi, Lower lower, Upper upper, int& branches) {
  const double start = pt.theta + 360.0 * std::floor((hi + 360.0 - pt.theta) / 360.0);
  double best = -kInf;
  for (double phi = start;; phi -= 360.0) {
    if (std::isfinite(lo) && phi < lo - 360.0) break;
    ++branches;
    const double up = upper(phi);
    double m = std::min(pt.d - lower(phi), up - pt.d);
    double ang = hi - phi;
    if (std::isfinite(lo)) ang = std::min(ang, phi - lo);
    m = std::min(m, ang * kDegToRad * pt.d);
    best = std::max(best, m);
    if (!std::isfinite(lo) && phi <= hi && up < pt.d) break;
    if (branches > 100000) break;
  }
  return best;
}

}  // namespace

MembershipResult membership(const HullModel& hull, Point p, double tol) {
  MembershipResult r;
  const double scale = hull.scale();
  const double rot = hull.frame.rotation_deg();
  const double alpha = hull.params.alpha_deg;
  const double beta = hull.params.beta_deg;
  const double tiny = 1e-15 * scale;
  int branches = 0;

  const Polar at00 = polar_about(hull.anchors.p00, p);
  const Polar at01 = polar_about(hull.anchors.p01, p);
  const Polar at11 = polar_about(hull.anchors.p11, p);
  const auto zero = [](double) { return 0.0; };

  auto& m = r.region_margin;
  // S1: b0 <= d <= a0, phi <= -beta about P00.
  m[0] = at00.d <= tiny ? 0.0
                        : band_margin(
                              at00, -kInf, -beta + rot,
                              [&](double f) { return hull.b0.radius_unchecked(f); },
                              [&](double f) { return hull.a0.radius_unchecked(f); }, branches);
  // S2: b0 <= d <= q, -beta <= phi <= 0 about P00.
  m[1] = band_margin(
      at00, -beta + rot, rot, [&](double f) { return hull.b0.radius_unchecked(f); },
      [&](double) { return hull.inner_radius; }, branches);
  // S3: d0 <= d <= c0 (extended), phi <= -alpha-beta about P01.
  m[2] = at01.d <= tiny ? 0.0
                        : band_margin(
                              at01, -kInf, -alpha - beta + rot,
                              [&](double f) { return hull.d0.radius_unchecked(f); },
                              [&](double f) { return hull.c0.radius_unchecked(f); }, branches);
  // S4: 0 <= d <= e0, -beta <= phi <= beta about P11.
  m[3] = at11.d <= tiny ? 0.0
                        : band_margin(
                              at11, -beta + rot, beta + rot, zero,
                              [&](double f) { return hull.e0.radius_unchecked(f); }, branches);
  // T1: 0 <= d <= e0', -180-beta <= phi <= -beta about P11.
  m[4] = at11.d <= tiny ? 0.0
                        : band_margin(
                              at11, -180.0 - beta + rot, -beta + rot, zero,
                              [&](double f) { return hull.e0.radius_unchecked(f); }, branches);
  // T2: d <= arc radius, -180-beta-alpha <= phi <= -180-beta about P11, and on
  // the P11 side of the tangent to b0 at B.
  if (at11.d <= tiny) {
    m[5] = 0.0;
  } else {
    const double wedge = band_margin(
        at11, -180.0 - beta - alpha + rot, -180.0 - beta + rot, zero,
        [&](double) { return hull.arc_radius; }, branches);
    const Point t = hull.b0.tangent_at(-beta + rot);
    const double side_ref = cross(t, hull.anchors.p11 - hull.named.b);
    const double side = cross(t, p - hull.named.b) * (side_ref >= 0.0 ? 1.0 : -1.0);
    m[5] = std::min(wedge, side);
  }
  for (double& v : m) v /= scale;

  r.margin = std::max({m[0], m[1], m[2], m[3]});
  r.inside = r.margin >= -tol;
  for (std::size_t i = 0; i < kRegionCount; ++i) {
    if (m[i] >= -tol) r.tags.push_back(static_cast<RegionTag>(i));
  }
  r.branches_examined = branches;
  return r;
}

namespace {

// Samples a spiral between two polar angles (either order) with arc-length
// spacing; `skip_first` drops the opening sample when it duplicates the end
// of the previous piece.
void sample_spiral(const Spiral& s, double from, double to, double step_deg, bool skip_first,
                   std::vector<Point>& out) {
  const double span = std::abs(to - from);
  const auto count = static_cast<std::int64_t>(std::max(1.0, std::ceil(span / step_deg)));
  for (std::int64_t i = skip_first ? 1 : 0; i <= count; ++i) {
    const double phi = from + (to - from) * static_cast<double>(i) / static_cast<double>(count);
    out.push_back(s.point_at(phi));
  }
}

}  // namespace

std::vector<Point> boundary_polyline(const HullModel& hull, const BoundaryOptions& opt) {
  if (opt.samples_per_turn < 8) {
    throw Error(ErrorCode::kDomain, "boundary sampling needs at least 8 samples per turn");
  }
  const double tau = spiral_tangent_angle(hull.params) * kDegToRad;
  const double step = 360.0 / opt.samples_per_turn * std::sin(tau);
  const double r_min = opt.min_radius * hull.scale();

  std::vector<Point> out;
  out.push_back(hull.anchors.p00);
  const double a_hi = hull.a0.domain.hi;
  sample_spiral(hull.a0, std::min(hull.a0.angle_for_radius(r_min), a_hi), a_hi, step, false, out);
  sample_spiral(hull.e0, hull.e0.domain.lo, hull.e0.domain.hi, step, true, out);
  const double d_hi = hull.d0.domain.hi;
  sample_spiral(hull.d0, d_hi, std::min(hull.d0.angle_for_radius(r_min), d_hi), step, true, out);
  out.push_back(hull.anchors.p01);
  const double c_hi = hull.c0.domain.hi;
  sample_spiral(hull.c0, std::min(hull.c0.angle_for_radius(r_min), c_hi), c_hi, step, false, out);
  const double b_hi = hull.b0.domain.hi;
  sample_spiral(hull.b0, b_hi, std::min(hull.b0.angle_for_radius(r_min), b_hi), step, true, out);
  out.push_back(hull.anchors.p00);
  return out;
}

}  // namespace dragon
