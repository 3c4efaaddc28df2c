/* C interface to the dragonfold library. All handles are opaque; every
 * fallible call returns a dragon_status and records a message retrievable
 * with dragon_last_error() on the calling thread. */
#ifndef DRAGON_DRAGON_H
#define DRAGON_DRAGON_H

#include <stddef.h>
#include <stdint.h>

#if defined(DRAGON_BUILDING_LIBRARY)
#define DRAGON_API __attribute__((visibility("default")))
#else
#define DRAGON_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dragon_status {
  DRAGON_OK = 0,
  DRAGON_ERR_DOMAIN = 1,
  DRAGON_ERR_RESOURCE = 2,
  DRAGON_ERR_PRECONDITION = 3,
  DRAGON_ERR_NOT_FOUND = 4,
  DRAGON_ERR_NO_SIGN_CHANGE = 5,
  DRAGON_ERR_INVALID_ARGUMENT = 6,
  DRAGON_ERR_INTERNAL = 7
} dragon_status;

DRAGON_API const char* dragon_version(void);
DRAGON_API const char* dragon_status_string(dragon_status status);
/* Message for the most recent failure on this thread; "" after success. */
DRAGON_API const char* dragon_last_error(void);

typedef struct dragon_point {
  double x;
  double y;
} dragon_point;

typedef struct dragon_params {
  double alpha_deg;
  double beta_deg;
  double q;
} dragon_params;

DRAGON_API dragon_status dragon_params_from_alpha(double alpha_deg, dragon_params* out);
DRAGON_API dragon_status dragon_params_from_q(double q, dragon_params* out);
/* 1 if 90 <= alpha <= 108. */
DRAGON_API int dragon_params_in_hull_window(const dragon_params* p);

/* Fold symbol of position n >= 1: 'L' or 'R'. */
DRAGON_API dragon_status dragon_sigma(uint64_t n, char* out);

/* Point buffers returned by outline queries. */
typedef struct dragon_path dragon_path;
DRAGON_API size_t dragon_path_size(const dragon_path* path);
DRAGON_API const dragon_point* dragon_path_data(const dragon_path* path);
DRAGON_API void dragon_path_destroy(dragon_path* path);

/* ---- polygons ---------------------------------------------------------- */

typedef enum dragon_generation {
  DRAGON_GENERATE_RECURSIVE = 0,
  DRAGON_GENERATE_INFLATION = 1
} dragon_generation;

typedef struct dragon_polygon dragon_polygon;

DRAGON_API dragon_status dragon_polygon_create(double alpha_deg, int level,
                                               dragon_generation method, dragon_polygon** out);
DRAGON_API void dragon_polygon_destroy(dragon_polygon* poly);
DRAGON_API int dragon_polygon_level(const dragon_polygon* poly);
DRAGON_API size_t dragon_polygon_vertex_count(const dragon_polygon* poly);
DRAGON_API const dragon_point* dragon_polygon_vertices(const dragon_polygon* poly);
DRAGON_API double dragon_polygon_edge_length(const dragon_polygon* poly);

/* ---- hulls ------------------------------------------------------------- */

typedef struct dragon_hull dragon_hull;

typedef enum dragon_map { DRAGON_PI0 = 0, DRAGON_PI1 = 1 } dragon_map;

/* Succeeds outside 90..108 as well; check dragon_hull_outside_window. */
DRAGON_API dragon_status dragon_hull_create(double alpha_deg, dragon_hull** out);
DRAGON_API dragon_status dragon_hull_image(const dragon_hull* hull, dragon_map map,
                                           dragon_hull** out);
DRAGON_API void dragon_hull_destroy(dragon_hull* hull);
DRAGON_API int dragon_hull_outside_window(const dragon_hull* hull);
DRAGON_API dragon_status dragon_hull_membership(const dragon_hull* hull, dragon_point p,
                                                double tol, double* margin, int* inside);
DRAGON_API dragon_status dragon_hull_boundary(const dragon_hull* hull, int samples_per_turn,
                                              double min_radius, dragon_path** out);

/* ---- numeric conditions ------------------------------------------------ */

typedef struct dragon_condition_info {
  const char* id;
  const char* description;
  double holds_q_lo;
  double holds_q_hi;
  int has_quoted_alpha;
  double quoted_alpha;
  int has_quoted_q;
  double quoted_q;
  int has_bracket;
  double bracket_lo;
  double bracket_hi;
} dragon_condition_info;

DRAGON_API size_t dragon_condition_count(void);
/* Strings stay valid for the lifetime of the process. */
DRAGON_API dragon_status dragon_condition_get(size_t index, dragon_condition_info* out);
DRAGON_API dragon_status dragon_condition_evaluate(const char* id, double alpha_deg,
                                                   double* residual);

typedef struct dragon_threshold {
  double critical_alpha_deg;
  double critical_q;
  double alpha_lo;
  double alpha_hi;
  double bracket_width;
  int iterations;
} dragon_threshold;

DRAGON_API dragon_status dragon_find_threshold(const char* id, double alpha_lo, double alpha_hi,
                                               double tol_deg, dragon_threshold* out);

/* ---- set verification -------------------------------------------------- */

typedef struct dragon_verification {
  double alpha_deg;
  size_t samples;
  double min_margin;
  dragon_point worst_point;
  double tolerance;
  int pass;
} dragon_verification;

DRAGON_API dragon_status dragon_verify_hull_invariance(double alpha_deg, int samples_per_turn,
                                                       double min_radius, double tol,
                                                       dragon_verification* out);
DRAGON_API dragon_status dragon_verify_containment(double alpha_deg, int level,
                                                   int samples_per_segment,
                                                   int include_end_segments, double tol,
                                                   dragon_verification* out);
DRAGON_API dragon_status dragon_verify_separation(double alpha_deg, int samples_per_turn,
                                                  double min_radius, double tol,
                                                  double exclusion_factor,
                                                  dragon_verification* out);

typedef struct dragon_lemma11_row {
  double alpha_deg;
  double beta_deg;
  double q;
  double lhs;
  double rhs;
  int satisfied;
} dragon_lemma11_row;

/* Fills `count` rows. With alphas == NULL the eleven default angles
 * 96.235 ... 96.245 are used and count must be 11. */
DRAGON_API dragon_status dragon_lemma11_table(const double* alphas, size_t count,
                                              dragon_lemma11_row* rows);

typedef struct dragon_lemma11_geometry {
  double gap_length;
  double s3_reach;
  double s4_reach;
  double gap_from_polygon;
  double s3_from_hull;
  double s4_from_hull;
  int consistent;
} dragon_lemma11_geometry;

DRAGON_API dragon_status dragon_lemma11_geometry_get(double alpha_deg,
                                                     dragon_lemma11_geometry* out);

/* ---- contacts ---------------------------------------------------------- */

typedef enum dragon_contact_kind {
  DRAGON_PROPER_CROSSING = 0,
  DRAGON_ENDPOINT_ON_INTERIOR = 1,
  DRAGON_VERTEX_COINCIDENCE = 2
} dragon_contact_kind;

typedef struct dragon_contact_event {
  dragon_contact_kind kind;
  size_t seg_i;
  size_t seg_j;
  dragon_point location;
  double separation;
} dragon_contact_event;

typedef struct dragon_contacts dragon_contacts;

DRAGON_API const char* dragon_contact_kind_string(dragon_contact_kind kind);
/* threads == 0 uses all hardware threads. */
DRAGON_API dragon_status dragon_find_contacts(const dragon_polygon* poly, double tol,
                                              unsigned threads, size_t max_events,
                                              dragon_contacts** out);
DRAGON_API void dragon_contacts_destroy(dragon_contacts* report);
DRAGON_API size_t dragon_contacts_count(const dragon_contacts* report, dragon_contact_kind kind);
DRAGON_API size_t dragon_contacts_event_count(const dragon_contacts* report);
DRAGON_API dragon_status dragon_contacts_event(const dragon_contacts* report, size_t index,
                                               dragon_contact_event* out);
DRAGON_API int dragon_contacts_truncated(const dragon_contacts* report);
DRAGON_API double dragon_contacts_wall_time(const dragon_contacts* report);

DRAGON_API dragon_status dragon_empirical_critical_angle(int level, double alpha_lo,
                                                         double alpha_hi, double tol_deg,
                                                         double* out_lo, double* out_hi);

typedef struct dragon_theorem1_check {
  const char* name;
  double value;
  double bound;
  int pass;
} dragon_theorem1_check;

typedef struct dragon_theorem1_report {
  int level;
  double alpha_deg;
  dragon_theorem1_check checks[4];
  int pass;
} dragon_theorem1_report;

DRAGON_API dragon_status dragon_theorem1_checks(int level, double alpha_deg, int samples_per_turn,
                                                dragon_theorem1_report* out);

#ifdef __cplusplus
}
#endif

#endif
