#include "dragon/intersect.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <thread>

#include "dragon/error.hpp"
#include "dragon/hull.hpp"
#include "dragon/predicates.hpp"

namespace dragon {

const char* to_string(ContactKind k) {
  switch (k) {
    case ContactKind::kProperCrossing:
      return "proper_crossing";
    case ContactKind::kEndpointOnInterior:
      return "endpoint_on_interior";
    case ContactKind::kVertexCoincidence:
      return "vertex_coincidence";
  }
  return "unknown";
}

namespace {

// Distance from x to segment [a, b] and the clamped projection parameter.
double point_segment_distance(Point x, Point a, Point b, double& t) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  t = len2 > 0.0 ? std::clamp(dot(x - a, d) / len2, 0.0, 1.0) : 0.0;
  return distance(x, a + t * d);
}

// Length of the overlap of two collinear segments, measured along a.
double collinear_overlap(Point a0, Point a1, Point b0, Point b1, Point& mid) {
  const Point d = a1 - a0;
  const double len = norm(d);
  if (len == 0.0) return 0.0;
  const double s0 = dot(b0 - a0, d) / len;
  const double s1 = dot(b1 - a0, d) / len;
  const double lo = std::max(0.0, std::min(s0, s1));
  const double hi = std::min(len, std::max(s0, s1));
  mid = a0 + (0.5 * (lo + hi) / len) * d;
  return hi - lo;
}

}  // namespace

bool classify_segment_pair(Point a0, Point a1, Point b0, Point b1, double eps, ContactEvent& out) {
  const int o_b0 = orient2d(a0, a1, b0);
  const int o_b1 = orient2d(a0, a1, b1);
  const int o_a0 = orient2d(b0, b1, a0);
  const int o_a1 = orient2d(b0, b1, a1);

  if (o_b0 == 0 && o_b1 == 0 && o_a0 == 0 && o_a1 == 0) {
    Point mid;
    const double overlap = collinear_overlap(a0, a1, b0, b1, mid);
    if (overlap > eps) {
      out.kind = ContactKind::kProperCrossing;
      out.location = mid;
      out.separation = -overlap;
      return true;
    }
  }

  const Point a_ends[2] = {a0, a1};
  const Point b_ends[2] = {b0, b1};
  double best = std::numeric_limits<double>::infinity();
  for (Point pa : a_ends) {
    for (Point pb : b_ends) {
      const double d = distance(pa, pb);
      if (d < best) {
        best = d;
        out.location = 0.5 * (pa + pb);
      }
    }
  }
  if (best <= eps) {
    out.kind = ContactKind::kVertexCoincidence;
    out.separation = best;
    return true;
  }

  best = std::numeric_limits<double>::infinity();
  const auto probe = [&](Point x, Point s0, Point s1) {
    double t = 0.0;
    const double d = point_segment_distance(x, s0, s1, t);
    if (d < best) {
      best = d;
      out.location = x;
    }
  };
  probe(b0, a0, a1);
  probe(b1, a0, a1);
  probe(a0, b0, b1);
  probe(a1, b0, b1);
  if (best <= eps) {
    out.kind = ContactKind::kEndpointOnInterior;
    out.separation = best;
    return true;
  }

  if (o_b0 * o_b1 < 0 && o_a0 * o_a1 < 0) {
    const Point r = a1 - a0;
    const Point s = b1 - b0;
    const double t = cross(b0 - a0, s) / cross(r, s);
    out.kind = ContactKind::kProperCrossing;
    out.location = a0 + t * r;
    out.separation = -best;
    return true;
  }
  return false;
}

namespace {

struct CellRange {
  std::int64_t x0, x1, y0, y1;
};

struct Grid {
  double min_x = 0.0;
  double min_y = 0.0;
  double cell = 1.0;
  std::int64_t width = 1;

  std::int64_t index(double v, double origin) const {
    return static_cast<std::int64_t>(std::floor((v - origin) / cell));
  }
  std::uint64_t key(std::int64_t x, std::int64_t y) const {
    return static_cast<std::uint64_t>(y * width + x);
  }
};

struct CellEntry {
  std::uint64_t key;
  std::uint32_t seg;
  friend bool operator<(const CellEntry& a, const CellEntry& b) {
    return a.key != b.key ? a.key < b.key : a.seg < b.seg;
  }
};

// Segments bucketed by the cells their (eps-grown) bounding boxes cover.
class SegmentGrid {
 public:
  SegmentGrid(const std::vector<Point>& v, double cell, double eps) {
    const std::size_t segs = v.size() - 1;
    double max_x = v[0].x, max_y = v[0].y;
    grid_.min_x = v[0].x;
    grid_.min_y = v[0].y;
    for (const Point& p : v) {
      grid_.min_x = std::min(grid_.min_x, p.x);
      grid_.min_y = std::min(grid_.min_y, p.y);
      max_x = std::max(max_x, p.x);
      max_y = std::max(max_y, p.y);
    }
    grid_.min_x -= 2.0 * eps;
    grid_.min_y -= 2.0 * eps;
    grid_.cell = cell;
    grid_.width = grid_.index(max_x + 2.0 * eps, grid_.min_x) + 1;

    ranges_.resize(segs);
    entries_.reserve(segs * 4);
    for (std::size_t k = 0; k < segs; ++k) {
      const Point a = v[k];
      const Point b = v[k + 1];
      CellRange& r = ranges_[k];
      r.x0 = grid_.index(std::min(a.x, b.x) - eps, grid_.min_x);
      r.x1 = grid_.index(std::max(a.x, b.x) + eps, grid_.min_x);
      r.y0 = grid_.index(std::min(a.y, b.y) - eps, grid_.min_y);
      r.y1 = grid_.index(std::max(a.y, b.y) + eps, grid_.min_y);
      for (std::int64_t y = r.y0; y <= r.y1; ++y) {
        for (std::int64_t x = r.x0; x <= r.x1; ++x) {
          entries_.push_back({grid_.key(x, y), static_cast<std::uint32_t>(k)});
        }
      }
    }
    std::sort(entries_.begin(), entries_.end());
    for (std::size_t e = 0; e < entries_.size(); ++e) {
      if (e == 0 || entries_[e].key != entries_[e - 1].key) starts_.push_back(e);
    }
    starts_.push_back(entries_.size());
  }

  std::size_t groups() const { return starts_.size() - 1; }

  // Calls f(i, j) for every non-adjacent pair i < j sharing a cell, once per
  // pair: only in the first cell the two ranges have in common.
  template <class F>
  void visit(std::size_t g_begin, std::size_t g_end, F&& f) const {
    for (std::size_t g = g_begin; g < g_end; ++g) {
      const std::size_t lo = starts_[g];
      const std::size_t hi = starts_[g + 1];
      const std::uint64_t cell = entries_[lo].key;
      for (std::size_t e1 = lo; e1 < hi; ++e1) {
        const std::uint32_t i = entries_[e1].seg;
        const CellRange& ri = ranges_[i];
        for (std::size_t e2 = e1 + 1; e2 < hi; ++e2) {
          const std::uint32_t j = entries_[e2].seg;
          if (j <= i + 1) continue;
          const CellRange& rj = ranges_[j];
          if (grid_.key(std::max(ri.x0, rj.x0), std::max(ri.y0, rj.y0)) != cell) continue;
          f(i, j);
        }
      }
    }
  }

 private:
  Grid grid_;
  std::vector<CellRange> ranges_;
  std::vector<CellEntry> entries_;
  std::vector<std::size_t> starts_;
};

struct Partial {
  std::vector<ContactEvent> events;
  std::size_t pairs = 0;
};

void check_size(const FoldPolygon& poly, double tolerance) {
  if (poly.segment_count() > kMaxContactSegments) {
    throw Error(ErrorCode::kResource, "contact search is limited to 2^24 segments");
  }
  if (!(tolerance >= 0.0)) throw Error(ErrorCode::kDomain, "tolerance must be >= 0");
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> grid_candidate_pairs(const FoldPolygon& poly,
                                                                      double tolerance) {
  check_size(poly, tolerance);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (poly.segment_count() < 3) return out;
  const double h = poly.edge_length();
  const SegmentGrid grid(poly.vertices, h, tolerance * h);
  grid.visit(0, grid.groups(), [&](std::size_t i, std::size_t j) { out.emplace_back(i, j); });
  std::sort(out.begin(), out.end());
  return out;
}

CrossingReport find_contacts(const FoldPolygon& poly, const ContactOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  check_size(poly, opt.tolerance);

  CrossingReport report;
  report.level = poly.level;
  report.alpha_deg = poly.params.alpha_deg;
  if (poly.segment_count() < 3) return report;

  const std::vector<Point>& v = poly.vertices;
  const double h = poly.edge_length();
  const double eps = opt.tolerance * h;
  const SegmentGrid grid(v, h, eps);
  const std::size_t groups = grid.groups();

  const auto scan = [&](std::size_t g_begin, std::size_t g_end, Partial& out) {
    grid.visit(g_begin, g_end, [&](std::size_t i, std::size_t j) {
      ++out.pairs;
      ContactEvent ev;
      if (classify_segment_pair(v[i], v[i + 1], v[j], v[j + 1], eps, ev)) {
        ev.seg_i = i;
        ev.seg_j = j;
        out.events.push_back(ev);
      }
    });
  };

  unsigned threads = opt.threads != 0 ? opt.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(groups / 64 + 1)));
  std::vector<Partial> partials(threads);
  if (threads == 1) {
    scan(0, groups, partials[0]);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (groups + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t b = std::min(groups, t * chunk);
      const std::size_t e = std::min(groups, b + chunk);
      pool.emplace_back([&, b, e, t] { scan(b, e, partials[t]); });
    }
  }

  std::vector<ContactEvent> all;
  for (Partial& p : partials) {
    report.candidate_pairs += p.pairs;
    all.insert(all.end(), p.events.begin(), p.events.end());
  }
  std::sort(all.begin(), all.end(), [](const ContactEvent& a, const ContactEvent& b) {
    return a.seg_i != b.seg_i ? a.seg_i < b.seg_i : a.seg_j < b.seg_j;
  });
  for (const ContactEvent& e : all) ++report.counts[static_cast<int>(e.kind)];
  if (all.size() > opt.max_events) {
    all.resize(opt.max_events);
    report.truncated = true;
  }
  report.events = std::move(all);
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool has_proper_crossing(int n, const AngleParams& p, const ContactOptions& opt) {
  ContactOptions o = opt;
  o.max_events = 0;
  return find_contacts(generate_recursive(n, p), o).count(ContactKind::kProperCrossing) > 0;
}

CriticalBracket empirical_critical_angle(int n, double alpha_lo, double alpha_hi, double tol_deg,
                                         const ContactOptions& opt) {
  if (!(tol_deg > 0.0) || !(alpha_lo < alpha_hi)) {
    throw Error(ErrorCode::kPrecondition, "need alpha_lo < alpha_hi and a positive tolerance");
  }
  const auto crosses = [&](double a) { return has_proper_crossing(n, params_from_alpha(a), opt); };
  if (!crosses(alpha_lo) || crosses(alpha_hi)) {
    throw Error(ErrorCode::kPrecondition,
                "bracket must have a crossing at the low end and none at the high end");
  }
  CriticalBracket r;
  while (alpha_hi - alpha_lo > tol_deg) {
    const double mid = 0.5 * (alpha_lo + alpha_hi);
    (crosses(mid) ? alpha_lo : alpha_hi) = mid;
    ++r.iterations;
  }
  r.alpha_lo = alpha_lo;
  r.alpha_hi = alpha_hi;
  return r;
}

Theorem1Report theorem1_boundary_checks(int n, const AngleParams& p, int samples_per_turn) {
  if (n < 4) throw Error(ErrorCode::kDomain, "boundary checks need n >= 4");
  Theorem1Report r;
  r.level = n;
  r.alpha_deg = p.alpha_deg;
  const double qn = std::pow(p.q, n);
  const HullModel base = build_hull(p);
  const BoundaryOptions bopt{samples_per_turn, 1e-12};

  const auto min_distance = [&](const HullModel& h, Point from) {
    double best = std::numeric_limits<double>::infinity();
    const std::vector<Point> outline = boundary_polyline(h, bopt);
    for (std::size_t k = 0; k + 1 < outline.size(); ++k) {
      double t = 0.0;
      best = std::min(best, point_segment_distance(from, outline[k], outline[k + 1], t));
    }
    return best;
  };

  const double d1 = min_distance(transform_hull(base, make_pi1(p)), base.anchors.p00);
  const double d2 = min_distance(transform_hull(base, make_pi0(p)), base.anchors.p01);
  const double q4 = std::pow(p.q, 4);
  const double radial = q4 * std::pow(p.q, p.alpha_over_beta()) / (1.0 - q4);

  r.checks[0] = {"first segment clear of pi1(hull)", d1, qn, d1 > qn};
  r.checks[1] = {"last segment clear of pi0(hull)", d2, qn, d2 > qn};
  r.checks[2] = {"q - q^n > q^n", p.q - qn, qn, p.q - qn > qn};
  r.checks[3] = {"q^4 q^(alpha/beta) / (1 - q^4) < 1", radial, 1.0, radial < 1.0};
  r.pass = std::all_of(r.checks.begin(), r.checks.end(), [](const Theorem1Check& c) { return c.pass; });
  return r;
}

}  // namespace dragon
