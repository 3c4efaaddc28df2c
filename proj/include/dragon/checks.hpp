#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dragon/geometry.hpp"
#include "dragon/hull.hpp"
#include "dragon/params.hpp"

namespace dragon {

// Range of q on which a condition is quoted to hold (inclusive).
struct QRange {
  double lo = 0.5;
  double hi = 1.0;
  bool contains(double q) const { return q >= lo && q <= hi; }
};

// A numeric inequality as a signed residual: positive means it holds.
struct Condition {
  std::string id;
  std::string description;
  std::function<double(const AngleParams&)> evaluate;
  QRange holds_for;
  // Quoted critical value, if the inequality is stated with one.
  std::optional<double> quoted_alpha;
  std::optional<double> quoted_q;
  // Default alpha bracket in which the residual changes sign.
  std::optional<std::pair<double, double>> search_bracket;
};

const std::vector<Condition>& condition_catalog();

// Throws Error(kNotFound) for an unknown id.
const Condition& find_condition(const std::string& id);
double evaluate_condition(const std::string& id, const AngleParams& p);

struct ThresholdResult {
  std::string condition_id;
  double critical_q = 0.0;
  double critical_alpha_deg = 0.0;
  double alpha_lo = 0.0;
  double alpha_hi = 0.0;
  double bracket_width = 0.0;
  int iterations = 0;
};

// Bisection on alpha until the bracket is no wider than tol_deg. Throws
// Error(kNoSignChange) when the residual has the same sign at both ends.
ThresholdResult find_threshold(const std::string& id, double alpha_lo, double alpha_hi,
                               double tol_deg = 1e-6);

struct VerificationReport {
  std::string subject;
  double alpha_deg = 0.0;
  std::size_t samples = 0;
  double min_margin = 0.0;
  Point worst_point;
  double tolerance = 1e-9;
  bool pass = false;
};

struct SamplingOptions {
  BoundaryOptions boundary{720, 1e-12};
  double tolerance = 1e-9;
};

// Samples the hull outline, maps every sample by pi0 and by pi1 and measures
// its membership margin in the base hull.
VerificationReport verify_hull_invariance(const AngleParams& p, const SamplingOptions& opt = {});

struct ContainmentOptions {
  int samples_per_segment = 9;  // including both endpoints
  bool include_end_segments = false;
  double tolerance = 1e-9;
};

// Every vertex of Q_n and sampled points of every segment except the first
// and the last must lie in the hull.
VerificationReport verify_polygon_in_hull(int n, const AngleParams& p,
                                          const ContainmentOptions& opt = {});

// Margin here is distance outside: the outline of pi0(hull) must lie outside
// pi1(hull) and vice versa, except within exclusion_factor * q of P11.
VerificationReport verify_separation(const AngleParams& p, const SamplingOptions& opt = {},
                                     double exclusion_factor = 1e-6);

struct Lemma11Row {
  double alpha_deg;
  double beta_deg;
  double q;
  double lhs;
  double rhs;
  bool satisfied;
};

std::vector<Lemma11Row> lemma11_table(std::span<const double> alphas);
// The eleven rows 96.235, 96.236, ..., 96.245.
std::vector<Lemma11Row> lemma11_table();
std::string format_lemma11_table(const std::vector<Lemma11Row>& rows);

struct Lemma11Geometry {
  // Closed forms.
  double gap_length = 0.0;  // |P_{4,7} P_{4,11}| = 2 q^4 (cos b + cos 3b)
  double s3_reach = 0.0;    // outer spiral of the (4,6) hull towards P_{4,11}
  double s4_reach = 0.0;    // outer spiral of the (4,10) hull towards P_{4,7}
  // Same quantities measured on Q_4 and on transformed hulls.
  double gap_from_polygon = 0.0;
  double s3_from_hull = 0.0;
  double s4_from_hull = 0.0;
  bool consistent = false;  // all three pairs agree within 1e-9
};

Lemma11Geometry lemma11_geometry(const AngleParams& p);

}  // namespace dragon
