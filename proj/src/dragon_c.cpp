#include "dragon/dragon.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "dragon/checks.hpp"
#include "dragon/error.hpp"
#include "dragon/hull.hpp"
#include "dragon/intersect.hpp"
#include "dragon/params.hpp"
#include "dragon/polygon.hpp"
#include "dragon/sequence.hpp"

struct dragon_path {
  std::vector<dragon_point> points;
};

struct dragon_polygon {
  dragon::FoldPolygon poly;
  std::vector<dragon_point> points;
};

struct dragon_hull {
  dragon::HullModel model;
};

struct dragon_contacts {
  dragon::CrossingReport report;
};

namespace {

thread_local std::string g_last_error;

dragon_status fail(dragon_status s, const char* what) {
  g_last_error = what;
  return s;
}

template <class F>
dragon_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return DRAGON_OK;
  } catch (const dragon::Error& e) {
    return fail(static_cast<dragon_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DRAGON_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(DRAGON_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DRAGON_ERR_INTERNAL, "unknown failure");
  }
}

#define DRAGON_REQUIRE(cond)                                              \
  do {                                                                    \
    if (!(cond)) return fail(DRAGON_ERR_INVALID_ARGUMENT, #cond " is false"); \
  } while (0)

dragon_point to_c(dragon::Point p) { return {p.x, p.y}; }

dragon_params to_c(const dragon::AngleParams& p) { return {p.alpha_deg, p.beta_deg, p.q}; }

void fill(const dragon::VerificationReport& r, dragon_verification* out) {
  out->alpha_deg = r.alpha_deg;
  out->samples = r.samples;
  out->min_margin = r.min_margin;
  out->worst_point = to_c(r.worst_point);
  out->tolerance = r.tolerance;
  out->pass = r.pass ? 1 : 0;
}

dragon_path* make_path(const std::vector<dragon::Point>& pts) {
  auto* path = new dragon_path;
  path->points.reserve(pts.size());
  for (const dragon::Point& p : pts) path->points.push_back(to_c(p));
  return path;
}

}  // namespace

extern "C" {

const char* dragon_version(void) { return "0.1.0"; }

const char* dragon_status_string(dragon_status status) {
  switch (status) {
    case DRAGON_OK: return "ok";
    case DRAGON_ERR_DOMAIN: return "domain error";
    case DRAGON_ERR_RESOURCE: return "resource limit";
    case DRAGON_ERR_PRECONDITION: return "precondition violated";
    case DRAGON_ERR_NOT_FOUND: return "not found";
    case DRAGON_ERR_NO_SIGN_CHANGE: return "no sign change";
    case DRAGON_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DRAGON_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* dragon_last_error(void) { return g_last_error.c_str(); }

dragon_status dragon_params_from_alpha(double alpha_deg, dragon_params* out) {
  DRAGON_REQUIRE(out);
  return guarded([&] { *out = to_c(dragon::params_from_alpha(alpha_deg)); });
}

dragon_status dragon_params_from_q(double q, dragon_params* out) {
  DRAGON_REQUIRE(out);
  return guarded([&] { *out = to_c(dragon::params_from_q(q)); });
}

int dragon_params_in_hull_window(const dragon_params* p) {
  return p && p->alpha_deg >= dragon::kHullWindowLo && p->alpha_deg <= dragon::kHullWindowHi;
}

dragon_status dragon_sigma(uint64_t n, char* out) {
  DRAGON_REQUIRE(out);
  return guarded([&] { *out = dragon::to_char(dragon::sigma(n)); });
}

size_t dragon_path_size(const dragon_path* path) { return path ? path->points.size() : 0; }

const dragon_point* dragon_path_data(const dragon_path* path) {
  return path ? path->points.data() : nullptr;
}

void dragon_path_destroy(dragon_path* path) { delete path; }

dragon_status dragon_polygon_create(double alpha_deg, int level, dragon_generation method,
                                    dragon_polygon** out) {
  DRAGON_REQUIRE(out);
  *out = nullptr;
  DRAGON_REQUIRE(method == DRAGON_GENERATE_RECURSIVE || method == DRAGON_GENERATE_INFLATION);
  return guarded([&] {
    const dragon::AngleParams p = dragon::params_from_alpha(alpha_deg);
    auto* h = new dragon_polygon;
    try {
      h->poly = method == DRAGON_GENERATE_RECURSIVE ? dragon::generate_recursive(level, p)
                                                    : dragon::generate_inflation(level, p);
      h->points.reserve(h->poly.vertices.size());
      for (const dragon::Point& v : h->poly.vertices) h->points.push_back(to_c(v));
    } catch (...) {
      delete h;
      throw;
    }
    *out = h;
  });
}

void dragon_polygon_destroy(dragon_polygon* poly) { delete poly; }

int dragon_polygon_level(const dragon_polygon* poly) { return poly ? poly->poly.level : -1; }

size_t dragon_polygon_vertex_count(const dragon_polygon* poly) {
  return poly ? poly->points.size() : 0;
}

const dragon_point* dragon_polygon_vertices(const dragon_polygon* poly) {
  return poly ? poly->points.data() : nullptr;
}

double dragon_polygon_edge_length(const dragon_polygon* poly) {
  return poly ? poly->poly.edge_length() : 0.0;
}

dragon_status dragon_hull_create(double alpha_deg, dragon_hull** out) {
  DRAGON_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new dragon_hull{dragon::build_hull(dragon::params_from_alpha(alpha_deg))};
  });
}

dragon_status dragon_hull_image(const dragon_hull* hull, dragon_map map, dragon_hull** out) {
  DRAGON_REQUIRE(hull && out);
  *out = nullptr;
  DRAGON_REQUIRE(map == DRAGON_PI0 || map == DRAGON_PI1);
  return guarded([&] {
    const dragon::AngleParams& p = hull->model.params;
    const dragon::Similarity sim = map == DRAGON_PI0 ? dragon::make_pi0(p) : dragon::make_pi1(p);
    *out = new dragon_hull{dragon::transform_hull(hull->model, sim)};
  });
}

void dragon_hull_destroy(dragon_hull* hull) { delete hull; }

int dragon_hull_outside_window(const dragon_hull* hull) {
  return hull && hull->model.outside_window ? 1 : 0;
}

dragon_status dragon_hull_membership(const dragon_hull* hull, dragon_point p, double tol,
                                     double* margin, int* inside) {
  DRAGON_REQUIRE(hull);
  return guarded([&] {
    const dragon::MembershipResult m = dragon::membership(hull->model, {p.x, p.y}, tol);
    if (margin) *margin = m.margin;
    if (inside) *inside = m.inside ? 1 : 0;
  });
}

dragon_status dragon_hull_boundary(const dragon_hull* hull, int samples_per_turn,
                                   double min_radius, dragon_path** out) {
  DRAGON_REQUIRE(hull && out);
  *out = nullptr;
  return guarded([&] {
    *out = make_path(dragon::boundary_polyline(hull->model, {samples_per_turn, min_radius}));
  });
}

size_t dragon_condition_count(void) { return dragon::condition_catalog().size(); }

dragon_status dragon_condition_get(size_t index, dragon_condition_info* out) {
  DRAGON_REQUIRE(out);
  const auto& catalog = dragon::condition_catalog();
  if (index >= catalog.size()) return fail(DRAGON_ERR_NOT_FOUND, "condition index out of range");
  const dragon::Condition& c = catalog[index];
  out->id = c.id.c_str();
  out->description = c.description.c_str();
  out->holds_q_lo = c.holds_for.lo;
  out->holds_q_hi = c.holds_for.hi;
  out->has_quoted_alpha = c.quoted_alpha.has_value();
  out->quoted_alpha = c.quoted_alpha.value_or(0.0);
  out->has_quoted_q = c.quoted_q.has_value();
  out->quoted_q = c.quoted_q.value_or(0.0);
  out->has_bracket = c.search_bracket.has_value();
  out->bracket_lo = c.search_bracket ? c.search_bracket->first : 0.0;
  out->bracket_hi = c.search_bracket ? c.search_bracket->second : 0.0;
  g_last_error.clear();
  return DRAGON_OK;
}

dragon_status dragon_condition_evaluate(const char* id, double alpha_deg, double* residual) {
  DRAGON_REQUIRE(id && residual);
  return guarded(
      [&] { *residual = dragon::evaluate_condition(id, dragon::params_from_alpha(alpha_deg)); });
}

dragon_status dragon_find_threshold(const char* id, double alpha_lo, double alpha_hi,
                                    double tol_deg, dragon_threshold* out) {
  DRAGON_REQUIRE(id && out);
  return guarded([&] {
    const dragon::ThresholdResult r = dragon::find_threshold(id, alpha_lo, alpha_hi, tol_deg);
    *out = {r.critical_alpha_deg, r.critical_q, r.alpha_lo, r.alpha_hi, r.bracket_width,
            r.iterations};
  });
}

dragon_status dragon_verify_hull_invariance(double alpha_deg, int samples_per_turn,
                                            double min_radius, double tol,
                                            dragon_verification* out) {
  DRAGON_REQUIRE(out);
  return guarded([&] {
    dragon::SamplingOptions opt{{samples_per_turn, min_radius}, tol};
    fill(dragon::verify_hull_invariance(dragon::params_from_alpha(alpha_deg), opt), out);
  });
}

dragon_status dragon_verify_containment(double alpha_deg, int level, int samples_per_segment,
                                        int include_end_segments, double tol,
                                        dragon_verification* out) {
  DRAGON_REQUIRE(out);
  return guarded([&] {
    dragon::ContainmentOptions opt{samples_per_segment, include_end_segments != 0, tol};
    fill(dragon::verify_polygon_in_hull(level, dragon::params_from_alpha(alpha_deg), opt), out);
  });
}

dragon_status dragon_verify_separation(double alpha_deg, int samples_per_turn, double min_radius,
                                       double tol, double exclusion_factor,
                                       dragon_verification* out) {
  DRAGON_REQUIRE(out);
  return guarded([&] {
    dragon::SamplingOptions opt{{samples_per_turn, min_radius}, tol};
    fill(dragon::verify_separation(dragon::params_from_alpha(alpha_deg), opt, exclusion_factor),
         out);
  });
}

dragon_status dragon_lemma11_table(const double* alphas, size_t count, dragon_lemma11_row* rows) {
  DRAGON_REQUIRE(rows);
  DRAGON_REQUIRE(alphas || count == 11);
  return guarded([&] {
    const std::vector<dragon::Lemma11Row> table =
        alphas ? dragon::lemma11_table(std::span<const double>(alphas, count))
               : dragon::lemma11_table();
    for (size_t i = 0; i < table.size(); ++i) {
      const dragon::Lemma11Row& r = table[i];
      rows[i] = {r.alpha_deg, r.beta_deg, r.q, r.lhs, r.rhs, r.satisfied ? 1 : 0};
    }
  });
}

dragon_status dragon_lemma11_geometry_get(double alpha_deg, dragon_lemma11_geometry* out) {
  DRAGON_REQUIRE(out);
  return guarded([&] {
    const dragon::Lemma11Geometry g = dragon::lemma11_geometry(dragon::params_from_alpha(alpha_deg));
    *out = {g.gap_length,       g.s3_reach,     g.s4_reach,    g.gap_from_polygon,
            g.s3_from_hull,     g.s4_from_hull, g.consistent ? 1 : 0};
  });
}

const char* dragon_contact_kind_string(dragon_contact_kind kind) {
  return dragon::to_string(static_cast<dragon::ContactKind>(kind));
}

dragon_status dragon_find_contacts(const dragon_polygon* poly, double tol, unsigned threads,
                                   size_t max_events, dragon_contacts** out) {
  DRAGON_REQUIRE(poly && out);
  *out = nullptr;
  return guarded([&] {
    dragon::ContactOptions opt{tol, threads, max_events};
    *out = new dragon_contacts{dragon::find_contacts(poly->poly, opt)};
  });
}

void dragon_contacts_destroy(dragon_contacts* report) { delete report; }

size_t dragon_contacts_count(const dragon_contacts* report, dragon_contact_kind kind) {
  if (!report || kind < DRAGON_PROPER_CROSSING || kind > DRAGON_VERTEX_COINCIDENCE) return 0;
  return report->report.counts[kind];
}

size_t dragon_contacts_event_count(const dragon_contacts* report) {
  return report ? report->report.events.size() : 0;
}

dragon_status dragon_contacts_event(const dragon_contacts* report, size_t index,
                                    dragon_contact_event* out) {
  DRAGON_REQUIRE(report && out);
  if (index >= report->report.events.size()) {
    return fail(DRAGON_ERR_NOT_FOUND, "event index out of range");
  }
  const dragon::ContactEvent& e = report->report.events[index];
  *out = {static_cast<dragon_contact_kind>(e.kind), e.seg_i, e.seg_j, to_c(e.location),
          e.separation};
  g_last_error.clear();
  return DRAGON_OK;
}

int dragon_contacts_truncated(const dragon_contacts* report) {
  return report && report->report.truncated ? 1 : 0;
}

double dragon_contacts_wall_time(const dragon_contacts* report) {
  return report ? report->report.wall_time_s : 0.0;
}

dragon_status dragon_empirical_critical_angle(int level, double alpha_lo, double alpha_hi,
                                              double tol_deg, double* out_lo, double* out_hi) {
  DRAGON_REQUIRE(out_lo && out_hi);
  return guarded([&] {
    const dragon::CriticalBracket b =
        dragon::empirical_critical_angle(level, alpha_lo, alpha_hi, tol_deg);
    *out_lo = b.alpha_lo;
    *out_hi = b.alpha_hi;
  });
}

dragon_status dragon_theorem1_checks(int level, double alpha_deg, int samples_per_turn,
                                     dragon_theorem1_report* out) {
  DRAGON_REQUIRE(out);
  static const char* const kNames[4] = {
      "first segment clear of pi1(hull)",
      "last segment clear of pi0(hull)",
      "q - q^n > q^n",
      "q^4 q^(alpha/beta) / (1 - q^4) < 1",
  };
  return guarded([&] {
    const dragon::Theorem1Report r =
        dragon::theorem1_boundary_checks(level, dragon::params_from_alpha(alpha_deg),
                                         samples_per_turn);
    out->level = r.level;
    out->alpha_deg = r.alpha_deg;
    for (int i = 0; i < 4; ++i) {
      out->checks[i] = {kNames[i], r.checks[i].value, r.checks[i].bound, r.checks[i].pass ? 1 : 0};
    }
    out->pass = r.pass ? 1 : 0;
  });
}

}  // extern "C"
