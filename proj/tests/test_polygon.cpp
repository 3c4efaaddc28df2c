#include <gtest/gtest.h>

#include <cmath>

#include "dragon/error.hpp"
#include "dragon/polygon.hpp"
#include "dragon/sequence.hpp"
#include "oracles.hpp"

using namespace dragon;

namespace {

const double kAlphas[] = {90.0, 95.0, 98.195, 100.0, 108.0};

double interior_angle_deg(Point prev, Point at, Point next) {
  const Point u = prev - at, v = next - at;
  return std::atan2(std::abs(cross(u, v)), dot(u, v)) * kRadToDeg;
}

}  // namespace

TEST(Maps, Pi0) {
  const AngleParams p90 = params_from_alpha(90.0);
  const Point img = make_pi0(p90)({1.0, 0.0});
  EXPECT_NEAR(img.x, 0.5, 1e-15);
  EXPECT_NEAR(img.y, -0.5, 1e-15);
  for (double a : kAlphas) {
    const Point fixed = make_pi0(params_from_alpha(a))({0.0, 0.0});
    EXPECT_EQ(fixed.x, 0.0);
    EXPECT_EQ(fixed.y, 0.0);
  }
  EXPECT_NEAR(norm(make_pi0(params_from_alpha(108.0))({1.0, 0.0})), 0.6180340, 5e-8);
}

TEST(Maps, Pi1) {
  for (double a : kAlphas) {
    const AngleParams p = params_from_alpha(a);
    const Point start = make_pi1(p)({0.0, 0.0});
    EXPECT_NEAR(start.x, 1.0, 1e-15);
    EXPECT_NEAR(start.y, 0.0, 1e-15);
    // Both maps send P01 to the apex P11.
    const Point via1 = make_pi1(p)({1.0, 0.0});
    const Point via0 = make_pi0(p)({1.0, 0.0});
    EXPECT_NEAR(via1.x, via0.x, 1e-14);
    EXPECT_NEAR(via1.y, via0.y, 1e-14);
  }
  const Point img = make_pi1(params_from_alpha(90.0))({1.0, 0.0});
  EXPECT_NEAR(img.x, 0.5, 1e-15);
  EXPECT_NEAR(img.y, -0.5, 1e-15);
}

TEST(Generate, SmallLevels) {
  const AngleParams p = params_from_alpha(90.0);
  const FoldPolygon q0 = generate_recursive(0, p);
  ASSERT_EQ(q0.vertices.size(), 2u);
  EXPECT_EQ(q0.vertices[0], (Point{0, 0}));
  EXPECT_EQ(q0.vertices[1], (Point{1, 0}));
  const FoldPolygon q1 = generate_recursive(1, p);
  ASSERT_EQ(q1.vertices.size(), 3u);
  EXPECT_NEAR(q1.vertices[1].x, 0.5, 1e-15);
  EXPECT_NEAR(q1.vertices[1].y, -0.5, 1e-15);
  const FoldPolygon i1 = generate_inflation(1, p);
  EXPECT_NEAR(i1.vertices[1].x, 0.5, 1e-15);
  EXPECT_NEAR(i1.vertices[1].y, -0.5, 1e-15);
  EXPECT_EQ(generate_inflation(0, p).vertices, q0.vertices);
}

TEST(Generate, ResourceGuard) {
  const AngleParams p = params_from_alpha(100.0);
  try {
    generate_recursive(25, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResource);
  }
  EXPECT_THROW(generate_inflation(-1, p), Error);
}

TEST(Generate, Level12Alpha100) {
  const AngleParams p = params_from_alpha(100.0);
  const FoldPolygon poly = generate_recursive(12, p);
  ASSERT_EQ(poly.vertices.size(), 4097u);
  const double len = std::pow(p.q, 12);
  for (std::size_t k = 0; k + 1 < poly.vertices.size(); ++k) {
    ASSERT_NEAR(distance(poly.vertices[k], poly.vertices[k + 1]), len, 1e-9 * len);
  }
}

TEST(Generate, Level2Alpha108Angles) {
  const FoldPolygon poly = generate_inflation(2, params_from_alpha(108.0));
  for (std::size_t k = 1; k < 4; ++k) {
    EXPECT_NEAR(interior_angle_deg(poly.vertices[k - 1], poly.vertices[k], poly.vertices[k + 1]),
                108.0, 1e-9);
  }
}

TEST(Generate, MatchesTurtleOracle) {
  for (double a : kAlphas) {
    for (int n : {1, 3, 6, 10, 12}) {
      const AngleParams p = params_from_alpha(a);
      const auto walk = oracle::turtle_polygon(n, a);
      const FoldPolygon poly = generate_recursive(n, p);
      const double tol = 1e-9 * std::pow(p.q, n);
      ASSERT_EQ(walk.size(), poly.vertices.size());
      for (std::size_t k = 0; k < walk.size(); ++k) {
        ASSERT_NEAR(poly.vertices[k].x, walk[k].x, tol) << a << ' ' << n << ' ' << k;
        ASSERT_NEAR(poly.vertices[k].y, walk[k].y, tol) << a << ' ' << n << ' ' << k;
      }
    }
  }
}

TEST(Generate, RecursiveEqualsInflation) {
  for (double a : kAlphas) {
    const AngleParams p = params_from_alpha(a);
    for (int n = 0; n <= 12; ++n) {
      const FoldPolygon r = generate_recursive(n, p);
      const FoldPolygon i = generate_inflation(n, p);
      ASSERT_EQ(r.vertices.size(), i.vertices.size());
      double worst = 0.0;
      for (std::size_t k = 0; k < r.vertices.size(); ++k) {
        worst = std::max(worst, distance(r.vertices[k], i.vertices[k]));
      }
      EXPECT_LT(worst, 1e-9 * std::pow(p.q, n)) << a << ' ' << n;
    }
  }
}

TEST(Generate, EdgeAndAngleInvariants) {
  for (double a : kAlphas) {
    const AngleParams p = params_from_alpha(a);
    for (int n : {2, 5, 9, 12}) {
      for (const FoldPolygon& poly : {generate_recursive(n, p), generate_inflation(n, p)}) {
        const auto& v = poly.vertices;
        ASSERT_EQ(v.size() - 1, std::size_t{1} << n);
        EXPECT_EQ(v.front(), (Point{0, 0}));
        EXPECT_NEAR(v.back().x, 1.0, 1e-12);
        EXPECT_NEAR(v.back().y, 0.0, 1e-12);
        const double len = std::pow(p.q, n);
        for (std::size_t k = 0; k + 1 < v.size(); ++k) {
          ASSERT_NEAR(distance(v[k], v[k + 1]), len, 1e-9 * len);
        }
        for (std::size_t k = 1; k + 1 < v.size(); ++k) {
          ASSERT_NEAR(interior_angle_deg(v[k - 1], v[k], v[k + 1]), a, 1e-9) << k;
        }
      }
    }
  }
}

TEST(Generate, TurnDirectionFollowsSequence) {
  for (double a : kAlphas) {
    const FoldPolygon poly = generate_recursive(12, params_from_alpha(a));
    const auto& v = poly.vertices;
    for (std::size_t k = 1; k + 1 < v.size(); ++k) {
      const double turn = cross(v[k] - v[k - 1], v[k + 1] - v[k]);
      ASSERT_EQ(turn > 0.0, sigma(k) == FoldSymbol::L) << a << ' ' << k;
    }
  }
}

TEST(Generate, VertexAtMatchesFullPolygon) {
  const AngleParams p = params_from_alpha(96.241);
  const FoldPolygon poly = generate_recursive(9, p);
  for (std::uint64_t k = 0; k < poly.vertices.size(); ++k) {
    const Point v = vertex_at(9, k, p);
    ASSERT_NEAR(v.x, poly.vertices[k].x, 1e-13);
    ASSERT_NEAR(v.y, poly.vertices[k].y, 1e-13);
  }
  EXPECT_THROW(vertex_at(9, 513, p), Error);
}

TEST(Generate, SegmentSimilarityMapsUnitSegment) {
  const AngleParams p = params_from_alpha(100.0);
  const FoldPolygon poly = generate_recursive(7, p);
  for (std::uint64_t k = 0; k < 128; ++k) {
    const Similarity s = segment_similarity(7, k, p);
    const Point e0 = s({0, 0}), e1 = s({1, 0});
    const Point v0 = poly.vertices[k], v1 = poly.vertices[k + 1];
    const bool forward = distance(e0, v0) < distance(e0, v1);
    const double err = forward ? std::max(distance(e0, v0), distance(e1, v1))
                               : std::max(distance(e0, v1), distance(e1, v0));
    ASSERT_LT(err, 1e-13) << k;
  }
}

TEST(Collinearity, LeftRuns) {
  const AngleParams p = params_from_alpha(100.0);
  EXPECT_TRUE(check_collinearity_left(1, 1, 1, p).collinear);
  const CollinearRun run = check_collinearity_left(1, 1, 2, p);
  EXPECT_TRUE(run.collinear);
  ASSERT_EQ(run.points.size(), 4u);
  const Point p9 = vertex_at(9, 273, p);
  EXPECT_EQ(run.points.back(), p9);
  EXPECT_LT(run.max_sine, 1e-9);
}

TEST(Collinearity, RightRun) {
  const AngleParams p = params_from_alpha(100.0);
  const CollinearRun run = check_collinearity_right(2, 3, 1, p);
  EXPECT_TRUE(run.collinear);
  EXPECT_NEAR(run.points[0].x, 1.0, 1e-15);
  EXPECT_EQ(run.points[2], vertex_at(6, 47, p));
}

TEST(Collinearity, PreconditionOnTurn) {
  const AngleParams p = params_from_alpha(100.0);
  try {
    check_collinearity_left(2, 3, 1, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
  }
  EXPECT_THROW(check_collinearity_right(1, 1, 1, p), Error);
  EXPECT_THROW(check_collinearity_left(2, 2, 1, p), Error);
}

TEST(Collinearity, GeometricSeries) {
  for (double a : kAlphas) {
    const AngleParams p = params_from_alpha(a);
    for (int m = 0; m <= 4; ++m) {
      const CollinearRun run = check_collinearity_left(1, 1, m, p);
      EXPECT_TRUE(run.collinear);
      EXPECT_NEAR(run.run_length, run.series_length, 1e-9) << a << ' ' << m;
    }
    const double limit = p.q / (1.0 - std::pow(p.q, 4));
    EXPECT_NEAR(check_collinearity_left(1, 1, 4, p).run_length, limit,
                p.q * std::pow(p.q, 20) / (1.0 - std::pow(p.q, 4)) + 1e-12);
  }
}

TEST(Collinearity, ManyStartingVertices) {
  const AngleParams p = params_from_alpha(103.0);
  for (std::uint64_t k = 1; k < 64; k += 2) {
    const CollinearRun run = sigma(k) == FoldSymbol::L ? check_collinearity_left(6, k, 2, p)
                                                       : check_collinearity_right(6, k, 2, p);
    // Cross product relative to the run scale.
    EXPECT_LT(run.max_sine, 1e-9) << k;
  }
}
