#include "dragon/checks.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "dragon/error.hpp"
#include "dragon/polygon.hpp"

namespace dragon {
namespace {

constexpr double kHalfSqrt2 = std::numbers::sqrt2 / 2.0;
constexpr double kGolden = 0.6180339887498949;  // (sqrt5 - 1) / 2

struct Terms {
  double q, q2, q3, q4, q5, ab, d;
  double inner;  // 1 - q^2/(1-q^4)
};

Terms terms(const AngleParams& p) {
  Terms t;
  t.q = p.q;
  t.q2 = t.q * t.q;
  t.q3 = t.q2 * t.q;
  t.q4 = t.q2 * t.q2;
  t.q5 = t.q4 * t.q;
  t.ab = p.alpha_over_beta();
  t.d = 1.0 - t.q4;
  t.inner = 1.0 - t.q2 / t.d;
  return t;
}

double pw(double q, double e) { return std::pow(q, e); }

std::vector<Condition> make_catalog() {
  std::vector<Condition> c;
  const auto add = [&](std::string id, std::string desc, QRange holds,
                       std::function<double(const AngleParams&)> f,
                       std::optional<std::pair<double, double>> bracket = std::nullopt,
                       std::optional<double> qa = std::nullopt,
                       std::optional<double> qq = std::nullopt) {
    c.push_back({std::move(id), std::move(desc), std::move(f), holds, qa, qq, bracket});
  };
  const QRange window{kGolden, kHalfSqrt2};

  add("L5a", "D lies in S3: (1-q^2/(1-q^4)) q^2 <= 1-q <= q^2/(1-q^4)", window,
      [](const AngleParams& p) {
        const Terms t = terms(p);
        return std::min(1.0 - t.q - t.inner * t.q2, t.q2 / t.d - (1.0 - t.q));
      },
      std::pair{108.0, 120.0});
  add("L5b", "H lies in S1: b0(lambda) <= |P00 H| <= a0(lambda)", window,
      [](const AngleParams& p) {
        const Terms t = terms(p);
        const double lambda =
            -std::atan(std::sqrt(4.0 * t.q2 - 1.0) / (1.0 - 2.0 * t.q4)) * kRadToDeg;
        const double dist = t.q * std::sqrt(1.0 - t.q2 + t.q4 * t.q2) / t.d;
        const double expo = -lambda / p.beta_deg;
        return std::min(dist - t.inner * pw(t.q, expo), pw(t.q, expo) / t.d - dist);
      });
  add("L6a", "arc BC misses P00P01: 1-4q^2-2q^4+12q^6+q^8-4q^10 < 0", QRange{0.524, 0.724},
      [](const AngleParams& p) {
        const double x = p.q * p.q;
        return -(1.0 - 4 * x - 2 * x * x + 12 * pw(x, 3) + pw(x, 4) - 4 * pw(x, 5));
      },
      std::pair{85.0, 90.0}, std::nullopt, 0.724);
  add("L6b", "G inside arc BC: beta/ln(2 cos beta) > tan beta", QRange{0.5 + 1e-12, kHalfSqrt2},
      [](const AngleParams& p) {
        const double b = p.beta_rad();
        return b / std::log(2.0 * std::cos(b)) - std::tan(b);
      });
  add("P1a-d1", "d1 beyond b0: (1-q^2/(1-q^4)) q <= q - (1-q^2/(1-q^4)) q^2", QRange{0.57, 1.0},
      [](const AngleParams& p) {
        const Terms t = terms(p);
        return t.q - t.inner * t.q2 - t.inner * t.q;
      },
      std::pair{115.0, 130.0}, 122.0, 0.57);
  add("P1b-d2", "d2 inside T2: (1-q^2/(1-q^4)) q^2 <= q^3/(1-q^4)", QRange{0.57, 1.0},
      [](const AngleParams& p) {
        const Terms t = terms(p);
        return t.q3 / t.d - t.inner * t.q2;
      },
      std::pair{115.0, 130.0}, 122.0, 0.57);
  add("L9-n2", "segment P21P22 clears b0: 1-q-q^2-q^4+q^5 < 0", QRange{0.6, 1.0},
      [](const AngleParams& p) {
        const Terms t = terms(p);
        return -(1.0 - t.q - t.q2 - t.q4 + t.q5);
      },
      std::pair{110.0, 118.0}, std::nullopt, 0.6);
  add("L9-perp", "segment P22P23 clears b0: sqrt(4q^2-1)(1-q^2-q^4+q^6) - 2(q^2-q^4-q^6) > 0",
      QRange{0.599, 1.0},
      [](const AngleParams& p) {
        const Terms t = terms(p);
        const double q6 = t.q4 * t.q2;
        return std::sqrt(4.0 * t.q2 - 1.0) * (1.0 - t.q2 - t.q4 + q6) - 2.0 * (t.q2 - t.q4 - q6);
      },
      std::pair{108.0, 118.0}, 113.0, 0.599);
  add("P3-main", "c1 < d2: 1 - q^2 - q^4 - q^(alpha/beta) > 0", QRange{0.5 + 1e-12, 0.6615289},
      [](const AngleParams& p) {
        const Terms t = terms(p);
        return 1.0 - t.q2 - t.q4 - pw(t.q, t.ab);
      },
      std::pair{95.0, 100.0}, 98.195, 0.6615289);
  add("P3-case1", "pi0(S1) vs pi1(S1): q^2/(1-q^4) < 1 - q^(alpha/beta+3)/(1-q^4)",
      QRange{0.5 + 1e-12, kHalfSqrt2},
      [](const AngleParams& p) {
        const Terms t = terms(p);
        return 1.0 - pw(t.q, t.ab + 3.0) / t.d - t.q2 / t.d;
      },
      std::pair{80.0, 90.0});
  add("P3-case2", "pi0(S3) vs pi1(S1): q^(alpha/beta+4)/(1-q^4) < q - q^3/(1-q^4)",
      QRange{0.5 + 1e-12, kHalfSqrt2},
      [](const AngleParams& p) {
        const Terms t = terms(p);
        return t.q - t.q3 / t.d - pw(t.q, t.ab + 4.0) / t.d;
      },
      std::pair{80.0, 90.0});
  add("P3-case4", "pi0(S3) vs pi1(S2): q^2 < q - q^(alpha/beta+2)/(1-q^4)",
      QRange{0.5 + 1e-12, 0.67},
      [](const AngleParams& p) {
        const Terms t = terms(p);
        return t.q - pw(t.q, t.ab + 2.0) / t.d - t.q2;
      },
      std::pair{95.0, 100.0}, std::nullopt, 0.67);
  add("P3-case5a", "pi0(S1) vs pi1(S3) in H0: q^5/(1-q^4) < q - q^(2 alpha/beta+5)/(1-q^4)",
      QRange{0.5 + 1e-12, kHalfSqrt2},
      [](const AngleParams& p) {
        const Terms t = terms(p);
        return t.q - pw(t.q, 2.0 * t.ab + 5.0) / t.d - t.q5 / t.d;
      },
      std::pair{70.0, 85.0});
  add("P3-case5b",
      "pi0(S1) vs pi1(S3) in H1: q^(alpha/beta+7)/(1-q^4) < q - q^(alpha/beta+3)/(1-q^4)",
      QRange{0.5 + 1e-12, kHalfSqrt2},
      [](const AngleParams& p) {
        const Terms t = terms(p);
        return t.q - pw(t.q, t.ab + 3.0) / t.d - pw(t.q, t.ab + 7.0) / t.d;
      },
      std::pair{70.0, 85.0});
  add("P3-case6", "pi0(S2) vs pi1(S3): q^5/(1-q^4) < q - q^2", QRange{0.5 + 1e-12, 0.69},
      [](const AngleParams& p) {
        const Terms t = terms(p);
        return t.q - t.q2 - t.q5 / t.d;
      },
      std::pair{90.0, 95.0}, std::nullopt, 0.69);
  add("P3-case7", "d1 > c2 one turn down: 1 - q^2 - q^4 - q^(4+alpha/beta) > 0",
      QRange{0.5 + 1e-12, kHalfSqrt2},
      [](const AngleParams& p) {
        const Terms t = terms(p);
        return 1.0 - t.q2 - t.q4 - pw(t.q, 4.0 + t.ab);
      },
      std::pair{80.0, 90.0});
  add("P3-case8", "pi0(S4) vs pi1(S3): q^5/(1-q^4) < q^2 - q^4/(1-q^4)", QRange{0.5 + 1e-12, 0.68},
      [](const AngleParams& p) {
        const Terms t = terms(p);
        return t.q2 - t.q4 / t.d - t.q5 / t.d;
      },
      std::pair{92.0, 97.0}, std::nullopt, 0.68);
  add("P3-case9", "pi0(S1) vs pi1(S4): q^4/(1-q^4) < 1 - q^2 - q^(alpha/beta+3)/(1-q^4)",
      QRange{0.5 + 1e-12, 0.69},
      [](const AngleParams& p) {
        const Terms t = terms(p);
        return 1.0 - t.q2 - pw(t.q, t.ab + 3.0) / t.d - t.q4 / t.d;
      },
      std::pair{90.0, 95.0}, std::nullopt, 0.69);
  add("T1-radial", "crossing point stays in the first-segment hull: q^4 q^(alpha/beta)/(1-q^4) < 1",
      QRange{0.5 + 1e-12, kHalfSqrt2},
      [](const AngleParams& p) {
        const Terms t = terms(p);
        return 1.0 - t.q4 * pw(t.q, t.ab) / t.d;
      },
      std::pair{60.0, 80.0});
  add("L11", "gap P47-P4,11 stays open: q^3/(1-q^4)(q^(alpha/beta)+q^2) < 2(cos b + cos 3b)",
      QRange{0.5 + 1e-12, 0.6715462},
      [](const AngleParams& p) {
        const Terms t = terms(p);
        const double b = p.beta_rad();
        return 2.0 * (std::cos(b) + std::cos(3.0 * b)) - t.q3 / t.d * (pw(t.q, t.ab) + t.q2);
      },
      std::pair{95.0, 97.0}, 96.241, 0.6715462);
  return c;
}

// Angles like 41.8805 sit exactly on a decimal half; round those upward.
double half_up3(double v) { return std::floor(v * 1000.0 + 0.5 + 1e-9) / 1000.0; }

double lemma11_lhs(const AngleParams& p) {
  const Terms t = terms(p);
  return t.q3 / t.d * (pw(t.q, t.ab) + t.q2);
}

double lemma11_rhs(const AngleParams& p) {
  const double b = p.beta_rad();
  return 2.0 * (std::cos(b) + std::cos(3.0 * b));
}

}  // namespace

const std::vector<Condition>& condition_catalog() {
  static const std::vector<Condition> catalog = make_catalog();
  return catalog;
}

const Condition& find_condition(const std::string& id) {
  for (const Condition& c : condition_catalog()) {
    if (c.id == id) return c;
  }
  throw Error(ErrorCode::kNotFound, "unknown condition id: " + id);
}

double evaluate_condition(const std::string& id, const AngleParams& p) {
  return find_condition(id).evaluate(p);
}

ThresholdResult find_threshold(const std::string& id, double alpha_lo, double alpha_hi,
                               double tol_deg) {
  const Condition& c = find_condition(id);
  if (!(tol_deg > 0.0)) throw Error(ErrorCode::kDomain, "tolerance must be positive");
  if (alpha_lo > alpha_hi) std::swap(alpha_lo, alpha_hi);
  const auto f = [&](double a) { return c.evaluate(params_from_alpha(a)); };
  double f_lo = f(alpha_lo);
  const double f_hi = f(alpha_hi);
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    std::ostringstream os;
    os << "condition " << id << " does not change sign on [" << alpha_lo << ", " << alpha_hi
       << "]";
    throw Error(ErrorCode::kNoSignChange, os.str());
  }
  ThresholdResult r;
  r.condition_id = id;
  while (alpha_hi - alpha_lo > tol_deg) {
    const double mid = 0.5 * (alpha_lo + alpha_hi);
    const double f_mid = f(mid);
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      alpha_lo = mid;
      f_lo = f_mid;
    } else {
      alpha_hi = mid;
    }
    ++r.iterations;
  }
  r.alpha_lo = alpha_lo;
  r.alpha_hi = alpha_hi;
  r.bracket_width = alpha_hi - alpha_lo;
  r.critical_alpha_deg = 0.5 * (alpha_lo + alpha_hi);
  r.critical_q = params_from_alpha(r.critical_alpha_deg).q;
  return r;
}

namespace {

void take(VerificationReport& r, double margin, Point at) {
  ++r.samples;
  if (r.samples == 1 || margin < r.min_margin) {
    r.min_margin = margin;
    r.worst_point = at;
  }
}

void finish(VerificationReport& r, double tol) {
  r.tolerance = tol;
  r.pass = r.samples > 0 && r.min_margin >= -tol;
}

}  // namespace

VerificationReport verify_hull_invariance(const AngleParams& p, const SamplingOptions& opt) {
  VerificationReport r;
  r.subject = "hull-invariance";
  r.alpha_deg = p.alpha_deg;
  const HullModel hull = build_hull(p);
  const std::vector<Point> outline = boundary_polyline(hull, opt.boundary);
  for (const Similarity& sim : {make_pi0(p), make_pi1(p)}) {
    for (const Point& x : outline) {
      const Point y = sim(x);
      take(r, membership(hull, y, opt.tolerance).margin, y);
    }
  }
  finish(r, opt.tolerance);
  return r;
}

VerificationReport verify_polygon_in_hull(int n, const AngleParams& p,
                                          const ContainmentOptions& opt) {
  if (n < 2) throw Error(ErrorCode::kDomain, "containment check needs level n >= 2");
  if (opt.samples_per_segment < 2) throw Error(ErrorCode::kDomain, "need >= 2 samples per segment");
  VerificationReport r;
  r.subject = "polygon-containment";
  r.alpha_deg = p.alpha_deg;
  const HullModel hull = build_hull(p);
  const FoldPolygon poly = generate_recursive(n, p);
  for (const Point& v : poly.vertices) take(r, membership(hull, v, opt.tolerance).margin, v);
  const std::size_t segments = poly.segment_count();
  const int steps = opt.samples_per_segment - 1;
  for (std::size_t k = 0; k < segments; ++k) {
    if (!opt.include_end_segments && (k == 0 || k + 1 == segments)) continue;
    const Point a = poly.vertices[k];
    const Point b = poly.vertices[k + 1];
    for (int s = 1; s < steps; ++s) {
      const Point x = a + (static_cast<double>(s) / steps) * (b - a);
      take(r, membership(hull, x, opt.tolerance).margin, x);
    }
  }
  finish(r, opt.tolerance);
  return r;
}

VerificationReport verify_separation(const AngleParams& p, const SamplingOptions& opt,
                                     double exclusion_factor) {
  VerificationReport r;
  r.subject = "separation";
  r.alpha_deg = p.alpha_deg;
  const HullModel base = build_hull(p);
  const HullModel left = transform_hull(base, make_pi0(p));
  const HullModel right = transform_hull(base, make_pi1(p));
  const double exclusion = exclusion_factor * p.q;
  const Point pivot = base.anchors.p11;
  for (const auto& [from, against] : {std::pair{&left, &right}, std::pair{&right, &left}}) {
    for (const Point& x : boundary_polyline(*from, opt.boundary)) {
      if (distance(x, pivot) <= exclusion) continue;
      take(r, -membership(*against, x, opt.tolerance).margin, x);
    }
  }
  finish(r, opt.tolerance);
  return r;
}

std::vector<Lemma11Row> lemma11_table(std::span<const double> alphas) {
  std::vector<Lemma11Row> rows;
  rows.reserve(alphas.size());
  for (double a : alphas) {
    const AngleParams p = params_from_alpha(a);
    const double lhs = lemma11_lhs(p);
    const double rhs = lemma11_rhs(p);
    rows.push_back({a, p.beta_deg, p.q, lhs, rhs, lhs < rhs});
  }
  return rows;
}

std::vector<Lemma11Row> lemma11_table() {
  std::vector<double> alphas;
  for (int i = 0; i <= 10; ++i) alphas.push_back((96235 + i) / 1000.0);
  return lemma11_table(alphas);
}

std::string format_lemma11_table(const std::vector<Lemma11Row>& rows) {
  std::string out = "alpha(deg)\tbeta(deg)\tq\tleft side\tright side\t<\n";
  char buf[160];
  for (const Lemma11Row& r : rows) {
    std::snprintf(buf, sizeof buf, "%.3f\t%.3f\t%.7f\t%.7f\t%.7f\t%s\n", half_up3(r.alpha_deg), half_up3(r.beta_deg),
                  r.q, r.lhs, r.rhs, r.satisfied ? "TRUE" : "FALSE");
    out += buf;
  }
  return out;
}

Lemma11Geometry lemma11_geometry(const AngleParams& p) {
  Lemma11Geometry g;
  const double q4 = std::pow(p.q, 4);
  const double b = p.beta_rad();
  const double beta = p.beta_deg;
  g.gap_length = 2.0 * q4 * (std::cos(b) + std::cos(3.0 * b));
  g.s3_reach = q4 / (1.0 - q4) * std::pow(p.q, (p.alpha_deg + 3.0 * beta) / beta);
  g.s4_reach = q4 / (1.0 - q4) * std::pow(p.q, 5);

  g.gap_from_polygon = distance(vertex_at(4, 7, p), vertex_at(4, 11, p));

  // The outer c-spiral of each segment hull, read off in the direction of
  // the opposite gap end. Rotations are unwrapped, so move the evaluation
  // angle onto the same branch as the composed rotation.
  const auto branch_offset = [](const HullModel& h) {
    const double rot = h.frame.rotation_deg();
    return rot - std::remainder(rot, 360.0);
  };
  const HullModel h6 = hull_for_segment(4, 6, p);
  const HullModel h10 = hull_for_segment(4, 10, p);
  g.s3_from_hull = h6.c0.radius_unchecked(-360.0 + beta + branch_offset(h6));
  g.s4_from_hull = h10.c0.radius_unchecked(-180.0 + beta + branch_offset(h10));

  g.consistent = std::abs(g.gap_length - g.gap_from_polygon) <= 1e-9 &&
                 std::abs(g.s3_reach - g.s3_from_hull) <= 1e-9 &&
                 std::abs(g.s4_reach - g.s4_from_hull) <= 1e-9;
  return g;
}

}  // namespace dragon
