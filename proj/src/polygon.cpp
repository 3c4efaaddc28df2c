#include "dragon/polygon.hpp"

#include <cmath>
#include <sstream>

#include "dragon/error.hpp"
#include "dragon/sequence.hpp"

namespace dragon {
namespace {

void check_level(int n) {
  if (n < 0 || n > kMaxLevel) {
    std::ostringstream os;
    os << "polygon level " << n << " outside [0, " << kMaxLevel << "]";
    throw Error(ErrorCode::kResource, os.str());
  }
}

// Writes the image of Q_n under `sim` so that vertex i of Q_n lands at
// out[base + dir * i].
void fill(int n, const Similarity& sim, const Similarity& pi0, const Similarity& pi1,
          std::int64_t base, std::int64_t dir, std::vector<Point>& out) {
  if (n == 0) {
    out[static_cast<std::size_t>(base)] = sim({0.0, 0.0});
    out[static_cast<std::size_t>(base + dir)] = sim({1.0, 0.0});
    return;
  }
  const std::int64_t span = std::int64_t{1} << n;
  fill(n - 1, sim * pi0, pi0, pi1, base, dir, out);
  fill(n - 1, sim * pi1, pi0, pi1, base + dir * span, -dir, out);
}

}  // namespace

double FoldPolygon::edge_length() const { return std::pow(params.q, level); }

Similarity make_pi0(const AngleParams& p) { return Similarity(-p.beta_deg, p.q, {0.0, 0.0}); }

Similarity make_pi1(const AngleParams& p) {
  return Similarity(p.beta_deg - 180.0, p.q, {1.0, 0.0});
}

FoldPolygon generate_recursive(int n, const AngleParams& p) {
  check_level(n);
  FoldPolygon poly;
  poly.level = n;
  poly.params = p;
  poly.vertices.resize((std::size_t{1} << n) + 1);
  fill(n, Similarity::identity(), make_pi0(p), make_pi1(p), 0, 1, poly.vertices);
  // The endpoints are fixed points of the construction; pin them exactly.
  poly.vertices.front() = {0.0, 0.0};
  poly.vertices.back() = {1.0, 0.0};
  return poly;
}

FoldPolygon generate_inflation(int n, const AngleParams& p) {
  check_level(n);
  const Similarity turn(-p.beta_deg, p.q, {0.0, 0.0});
  std::vector<Point> cur{{0.0, 0.0}, {1.0, 0.0}};
  for (int level = 0; level < n; ++level) {
    std::vector<Point> next;
    next.reserve(2 * cur.size() - 1);
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      const Point a = cur[k];
      const Point b = cur[k + 1];
      next.push_back(a);
      // Orient from the even index to the odd one, then put the apex on the
      // right-hand side.
      const Point apex = (k % 2 == 0) ? a + turn.apply_vector(b - a) : b + turn.apply_vector(a - b);
      next.push_back(apex);
    }
    next.push_back(cur.back());
    cur = std::move(next);
  }
  FoldPolygon poly;
  poly.level = n;
  poly.params = p;
  poly.vertices = std::move(cur);
  return poly;
}

Similarity segment_similarity(int n, std::uint64_t k, const AngleParams& p) {
  check_level(n);
  if (k >= (std::uint64_t{1} << n)) {
    std::ostringstream os;
    os << "segment index " << k << " out of range for level " << n;
    throw Error(ErrorCode::kDomain, os.str());
  }
  const Similarity pi0 = make_pi0(p);
  const Similarity pi1 = make_pi1(p);
  Similarity sim;
  for (int level = n; level > 0; --level) {
    const std::uint64_t half = std::uint64_t{1} << (level - 1);
    if (k < half) {
      sim = sim * pi0;
    } else {
      sim = sim * pi1;
      k = 2 * half - 1 - k;
    }
  }
  return sim;
}

Point vertex_at(int n, std::uint64_t k, const AngleParams& p) {
  check_level(n);
  const std::uint64_t count = std::uint64_t{1} << n;
  if (k > count) throw Error(ErrorCode::kDomain, "vertex index out of range");
  if (k == count) return {1.0, 0.0};
  const Similarity pi0 = make_pi0(p);
  const Similarity pi1 = make_pi1(p);
  Similarity sim;
  for (int level = n; level > 0; --level) {
    const std::uint64_t half = std::uint64_t{1} << (level - 1);
    if (k <= half) {
      sim = sim * pi0;
    } else {
      sim = sim * pi1;
      k = 2 * half - k;
    }
    // k now indexes Q_{level-1}; its endpoints are P_{0,0} and P_{0,1}.
    if (k == 0) return sim({0.0, 0.0});
    if (k == half) return sim({1.0, 0.0});
  }
  return sim({0.0, 0.0});
}

namespace {

CollinearRun collinear_run(int n, std::uint64_t k, int m, const AngleParams& p, double tol,
                           bool left) {
  if (k % 2 == 0) throw Error(ErrorCode::kPrecondition, "collinearity runs start at odd k");
  if (m < 0 || n + 4 * m > kMaxLevel) throw Error(ErrorCode::kResource, "run too deep");
  const FoldSymbol want = left ? FoldSymbol::L : FoldSymbol::R;
  if (sigma(k) != want) {
    throw Error(ErrorCode::kPrecondition,
                left ? "no left turn at P_{n,k}" : "no right turn at P_{n,k}");
  }
  CollinearRun run;
  const Point origin = vertex_at(n, left ? k - 1 : k + 1, p);
  const Point pivot = vertex_at(n, k, p);
  run.points = {origin, pivot};
  std::uint64_t idx = k;
  int level = n;
  for (int i = 0; i < m; ++i) {
    idx = left ? 16 * idx + 1 : 16 * idx - 1;
    level += 4;
    run.points.push_back(vertex_at(level, idx, p));
  }
  const Point base = pivot - origin;
  const double base_len = norm(base);
  for (std::size_t i = 2; i < run.points.size(); ++i) {
    const Point chord = run.points[i] - origin;
    run.max_sine = std::max(run.max_sine, std::abs(cross(base, chord)) / (base_len * norm(chord)));
  }
  run.collinear = run.max_sine <= tol;
  run.run_length = distance(origin, run.points.back());
  const double q4 = std::pow(p.q, 4);
  run.series_length = base_len * (1.0 - std::pow(q4, m + 1)) / (1.0 - q4);
  return run;
}

}  // namespace

CollinearRun check_collinearity_left(int n, std::uint64_t k, int m, const AngleParams& p,
                                     double tol) {
  return collinear_run(n, k, m, p, tol, true);
}

CollinearRun check_collinearity_right(int n, std::uint64_t k, int m, const AngleParams& p,
                                      double tol) {
  return collinear_run(n, k, m, p, tol, false);
}

}  // namespace dragon
