#pragma once

#include <cstdint>
#include <vector>

#include "dragon/geometry.hpp"
#include "dragon/params.hpp"

namespace dragon {

inline constexpr int kMaxLevel = 24;

// Level-n paperfolding polygon Q_n: 2^n + 1 vertices from (0,0) to (1,0),
// every edge of length q^n.
struct FoldPolygon {
  int level = 0;
  AngleParams params;
  std::vector<Point> vertices;

  std::size_t segment_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  double edge_length() const;
};

// Rotation by -beta and scaling by q about the origin.
Similarity make_pi0(const AngleParams& p);
// Rotation by beta - 180, scaling by q, then translation by (1, 0).
Similarity make_pi1(const AngleParams& p);

// Q_n = pi0(Q_{n-1}) followed by the reversed pi1(Q_{n-1}). Every vertex is
// the image of P_{0,0} or P_{0,1} under one composed similarity.
// Throws Error(kResource) for n outside [0, kMaxLevel].
FoldPolygon generate_recursive(int n, const AngleParams& p);

// Edge-midpoint inflation: each segment is replaced by the two legs of an
// isosceles triangle placed on the right of the segment directed from its
// even-indexed to its odd-indexed end.
FoldPolygon generate_inflation(int n, const AngleParams& p);

// The composition of pi0/pi1 mapping Q_0 onto segment k of Q_n, as a set.
// Depending on how many pi1 factors it contains, P_{0,0} lands on P_{n,k}
// or on P_{n,k+1}.
Similarity segment_similarity(int n, std::uint64_t k, const AngleParams& p);

// Single vertex P_{n,k} without building the whole polygon.
Point vertex_at(int n, std::uint64_t k, const AngleParams& p);

struct CollinearRun {
  bool collinear = false;
  // Largest |sin| of the angle between the base segment and the chord to any
  // later point of the run.
  double max_sine = 0.0;
  // Distance from the run's first point to its last point.
  double run_length = 0.0;
  // Base segment length times (1 + q^4 + ... + q^(4m)).
  double series_length = 0.0;
  std::vector<Point> points;
};

// Left turn at odd k: P_{n,k-1}, P_{n,k}, P_{n+4,16k+1}, P_{n+8,256k+17}, ...
// (m extra points). Throws Error(kPrecondition) if k is even or the turn at
// P_{n,k} is a right turn.
CollinearRun check_collinearity_left(int n, std::uint64_t k, int m, const AngleParams& p,
                                     double tol = 1e-9);

// Mirror image for a right turn: P_{n,k+1}, P_{n,k}, P_{n+4,16k-1}, ...
CollinearRun check_collinearity_right(int n, std::uint64_t k, int m, const AngleParams& p,
                                      double tol = 1e-9);

}  // namespace dragon
