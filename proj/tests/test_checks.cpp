#include <gtest/gtest.h>

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <set>

#include "dragon/checks.hpp"
#include "dragon/error.hpp"
#include "dragon/hull.hpp"
#include "dragon/polygon.hpp"
#include "oracles.hpp"

using namespace dragon;

namespace {

// Root of a residual written as a function of q, found by TOMS 748 directly
// in q and converted to alpha.
template <class F>
double q_root(F f, double lo, double hi) {
  boost::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(
      f, lo, hi, boost::math::tools::eps_tolerance<double>(50), iters);
  return 0.5 * (r.first + r.second);
}

double ab_of_q(double q) {
  const double alpha = oracle::alpha_of_q(q);
  return alpha / (90.0 - alpha / 2.0);
}

}  // namespace

TEST(Catalog, SizeAndIds) {
  const auto& cat = condition_catalog();
  EXPECT_GE(cat.size(), 14u);
  std::set<std::string> ids;
  for (const Condition& c : cat) ids.insert(c.id);
  EXPECT_EQ(ids.size(), cat.size());
  for (const char* id : {"L5a", "L5b", "L6a", "L6b", "P1a-d1", "P1b-d2", "L9-n2", "L9-perp",
                         "P3-main", "P3-case4", "P3-case6", "P3-case8", "P3-case9", "L11"}) {
    EXPECT_TRUE(ids.count(id)) << id;
  }
}

TEST(Catalog, UnknownId) {
  try {
    evaluate_condition("nope", params_from_alpha(100.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFound);
  }
  EXPECT_THROW(find_threshold("nope", 90, 100), Error);
}

TEST(Catalog, ResidualsHoldOnQuotedRanges) {
  // 100-point grid over [0.524, 0.7071]; each condition must be satisfied
  // wherever its quoted range applies.
  for (const Condition& c : condition_catalog()) {
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
      const double q = 0.524 + (0.7071 - 0.524) * i / 99.0;
      if (!c.holds_for.contains(q)) continue;
      ++checked;
      EXPECT_GT(c.evaluate(params_from_q(q)), 0.0) << c.id << " q=" << q;
    }
    EXPECT_GT(checked, 0) << c.id;
  }
}

TEST(Catalog, SignFlipsBeyondQuotedThresholds) {
  const auto at = [](const char* id, double q) { return evaluate_condition(id, params_from_q(q)); };
  EXPECT_LT(at("P3-main", 0.6616), 0.0);
  EXPECT_LT(at("P3-main", 0.70), 0.0);
  EXPECT_GT(at("P3-main", 0.66), 0.0);
  EXPECT_LT(at("P3-case4", 0.6696), 0.0);
  EXPECT_LT(at("P3-case6", 0.6955), 0.0);
  EXPECT_LT(at("P3-case8", 0.6825), 0.0);
  EXPECT_LT(at("P3-case9", 0.6965), 0.0);
  EXPECT_LT(at("P1a-d1", 0.569), 0.0);
  EXPECT_LT(at("P1b-d2", 0.569), 0.0);
  EXPECT_LT(at("L9-n2", 0.595), 0.0);
  EXPECT_LT(at("L9-perp", 0.598), 0.0);
  EXPECT_LT(at("L5a", 0.59), 0.0);
  EXPECT_LT(at("L11", 0.672), 0.0);
}

TEST(Catalog, L6aSignPattern) {
  const auto f = [](double q) { return evaluate_condition("L6a", params_from_q(q)); };
  EXPECT_LT(f(0.520), 0.0);
  EXPECT_GT(f(0.524), 0.0);
  EXPECT_GT(f(0.65), 0.0);
  EXPECT_GT(f(0.724), 0.0);
  EXPECT_LT(f(0.725), 0.0);
}

TEST(Catalog, L6bEverywhere) {
  for (double beta = 0.5; beta < 45.0; beta += 0.5) {
    EXPECT_GT(evaluate_condition("L6b", params_from_alpha(180.0 - 2 * beta)), 0.0) << beta;
  }
}

TEST(Catalog, L11Rows) {
  EXPECT_LT(evaluate_condition("L11", params_from_alpha(96.240)), 0.0);
  EXPECT_GT(evaluate_condition("L11", params_from_alpha(96.241)), 0.0);
}

TEST(Catalog, P3MainDirect) {
  const AngleParams p = params_from_q(0.66);
  const double expected = 1 - 0.66 * 0.66 - std::pow(0.66, 4) - std::pow(0.66, p.alpha_over_beta());
  EXPECT_NEAR(evaluate_condition("P3-main", p), expected, 1e-15);
}

TEST(Threshold, P3MainAgainstIndependentRoot) {
  const ThresholdResult r = find_threshold("P3-main", 95.0, 100.0, 1e-4);
  EXPECT_GE(r.critical_q, 0.6615289);
  EXPECT_LE(r.critical_q, 0.6615339);
  EXPECT_NEAR(r.critical_alpha_deg, 98.195, 1e-3);
  EXPECT_LE(r.bracket_width, 1e-4);
  const double q = q_root([](double q) { return 1 - q * q - std::pow(q, 4) - std::pow(q, ab_of_q(q)); },
                          0.65, 0.67);
  EXPECT_NEAR(r.critical_alpha_deg, oracle::alpha_of_q(q), 1e-4);
}

TEST(Threshold, L11Crossover) {
  const ThresholdResult r = find_threshold("L11", 95.0, 97.0, 1e-4);
  EXPECT_GT(r.critical_alpha_deg, 96.240);
  EXPECT_LT(r.critical_alpha_deg, 96.241);
  const double q = q_root(
      [](double q) {
        const double b = std::acos(1 / (2 * q));
        const double q4 = std::pow(q, 4);
        return 2 * (std::cos(b) + std::cos(3 * b)) -
               q * q * q / (1 - q4) * (std::pow(q, ab_of_q(q)) + q * q);
      },
      0.66, 0.68);
  EXPECT_NEAR(r.critical_alpha_deg, oracle::alpha_of_q(q), 1e-4);
}

TEST(Threshold, L9Perp) {
  const ThresholdResult r = find_threshold("L9-perp", 108.0, 118.0, 1e-4);
  EXPECT_NEAR(r.critical_alpha_deg, 113.0, 0.5);
  const double q = q_root(
      [](double q) {
        const double q2 = q * q, q4 = q2 * q2, q6 = q4 * q2;
        return std::sqrt(4 * q2 - 1) * (1 - q2 - q4 + q6) - 2 * (q2 - q4 - q6);
      },
      0.55, 0.65);
  EXPECT_NEAR(r.critical_q, q, 1e-6);
}

TEST(Threshold, NoSignChange) {
  try {
    find_threshold("P3-main", 100.0, 108.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoSignChange);
  }
}

TEST(Threshold, BracketHalvesWithTolerance) {
  const ThresholdResult a = find_threshold("P3-main", 95.0, 100.0, 1e-3);
  const ThresholdResult b = find_threshold("P3-main", 95.0, 100.0, 5e-4);
  EXPECT_NEAR(b.bracket_width, a.bracket_width / 2, 1e-12);
  EXPECT_LE(std::abs(b.iterations - a.iterations - 1), 1);
  // Residual changes sign across the reported bracket.
  const double lo = evaluate_condition("P3-main", params_from_alpha(b.alpha_lo));
  const double hi = evaluate_condition("P3-main", params_from_alpha(b.alpha_hi));
  EXPECT_LT(lo * hi, 0.0);
}

TEST(Threshold, EveryDefaultBracketResolves) {
  for (const Condition& c : condition_catalog()) {
    if (!c.search_bracket) continue;
    const ThresholdResult r = find_threshold(c.id, c.search_bracket->first, c.search_bracket->second);
    EXPECT_LE(r.bracket_width, 1e-6);
    if (c.quoted_alpha) {
      EXPECT_NEAR(r.critical_alpha_deg, *c.quoted_alpha, 0.7) << c.id;
    }
  }
}

TEST(Verify, HullInvariance) {
  for (double a : {90.0, 100.0, 108.0}) {
    const VerificationReport r = verify_hull_invariance(params_from_alpha(a));
    EXPECT_TRUE(r.pass) << a << ' ' << r.min_margin;
    EXPECT_GT(r.samples, 1000u);
    EXPECT_EQ(r.subject, "hull-invariance");
  }
}

TEST(Verify, Containment) {
  const VerificationReport r = verify_polygon_in_hull(12, params_from_alpha(100.0));
  EXPECT_TRUE(r.pass) << r.min_margin;
  EXPECT_EQ(r.samples, 4097u + (4096u - 2u) * 7u);
  EXPECT_TRUE(verify_polygon_in_hull(2, params_from_alpha(108.0)).pass);
  ContainmentOptions with_ends;
  with_ends.include_end_segments = true;
  const VerificationReport bad = verify_polygon_in_hull(12, params_from_alpha(100.0), with_ends);
  EXPECT_FALSE(bad.pass);
  EXPECT_THROW(verify_polygon_in_hull(1, params_from_alpha(100.0)), Error);
}

TEST(Verify, Separation) {
  EXPECT_TRUE(verify_separation(params_from_alpha(99.0)).pass);
  EXPECT_TRUE(verify_separation(params_from_alpha(108.0)).pass);
  const VerificationReport r = verify_separation(params_from_alpha(97.0));
  EXPECT_FALSE(r.pass);
  EXPECT_LT(r.min_margin, -1e-3);
}

TEST(Verify, PassMatchesMargin) {
  for (double a : {95.0, 98.2}) {
    const VerificationReport r = verify_separation(params_from_alpha(a));
    EXPECT_EQ(r.pass, r.min_margin >= -r.tolerance);
  }
}

TEST(GapTable, Rows) {
  const std::vector<Lemma11Row> rows = lemma11_table();
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_NEAR(rows.front().q, 0.6715777, 5e-8);
  EXPECT_NEAR(rows.front().lhs, 0.3238188, 5e-8);
  EXPECT_NEAR(rows.front().rhs, 0.3234373, 5e-8);
  EXPECT_FALSE(rows.front().satisfied);
  EXPECT_NEAR(rows.back().q, 0.6715252, 5e-8);
  EXPECT_NEAR(rows.back().lhs, 0.3236317, 5e-8);
  EXPECT_NEAR(rows.back().rhs, 0.3239793, 5e-8);
  EXPECT_TRUE(rows.back().satisfied);
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i].satisfied, i >= 6) << i;
  const std::string text = format_lemma11_table(rows);
  EXPECT_NE(text.find("96.239\t41.881\t0.6715567\t0.3237439\t0.3236541\tFALSE"), std::string::npos);
  EXPECT_NE(text.find("96.245\t41.878\t0.6715252"), std::string::npos);
}

TEST(GapTable, GeometryMatchesPolygonAndHulls) {
  for (double a : {90.0, 94.0, 96.241, 98.195, 103.0, 108.0}) {
    const AngleParams p = params_from_alpha(a);
    const Lemma11Geometry g = lemma11_geometry(p);
    EXPECT_TRUE(g.consistent) << a;
    const FoldPolygon q4 = generate_recursive(4, p);
    EXPECT_NEAR(g.gap_length, distance(q4.vertices[7], q4.vertices[11]), 1e-9);
    EXPECT_NEAR(g.s3_from_hull, g.s3_reach, 1e-9);
    EXPECT_NEAR(g.s4_from_hull, g.s4_reach, 1e-9);
  }
  EXPECT_NEAR(lemma11_geometry(params_from_alpha(90.0)).gap_length, 0.0, 1e-15);
  const AngleParams p = params_from_alpha(96.241);
  EXPECT_NEAR(lemma11_geometry(p).gap_length / std::pow(p.q, 4), 0.3237625, 5e-8);
}

TEST(Separation, Case7SpiralOrdering) {
  for (double a : {99.0, 103.0, 108.0}) {
    const AngleParams p = params_from_alpha(a);
    const HullModel base = build_hull(p);
    const HullModel left = transform_hull(base, make_pi0(p));
    const HullModel right = transform_hull(base, make_pi1(p));
    // Unwrapped angles about P11, as carried by the composed rotations.
    for (double phi = -180.0 - a - 1.0; phi > -1500.0; phi -= 7.0) {
      const double c1 = left.c0.radius_unchecked(phi);
      const double d1 = left.d0.radius_unchecked(phi);
      const double c2 = right.c0.radius_unchecked(phi);
      const double d2 = right.d0.radius_unchecked(phi);
      const double q4 = std::pow(p.q, 4), b = p.beta_deg;
      // Closed forms about P11.
      const double C1 = std::pow(p.q, -(phi + a) / b) / (1 - q4);
      const double D1 = (1 - p.q * p.q / (1 - q4)) * std::pow(p.q, -(phi + a) / b);
      const double C2 = std::pow(p.q, -(phi + 2 * a) / b) / (1 - q4);
      const double D2 = (1 - p.q * p.q / (1 - q4)) * std::pow(p.q, -(phi + 2 * a) / b);
      EXPECT_NEAR(c1, C1, 1e-12 * C1);
      EXPECT_NEAR(d1, D1, 1e-12 * D1);
      EXPECT_NEAR(c2, C2, 1e-12 * C2);
      EXPECT_NEAR(d2, D2, 1e-12 * D2);
      const double C2down = C2 * std::pow(p.q, 360.0 / b);
      EXPECT_GT(C2, D2);
      EXPECT_GT(D2, C1) << a << ' ' << phi;
      EXPECT_GT(C1, D1);
      EXPECT_GT(D1, C2down) << a << ' ' << phi;
    }
  }
}
