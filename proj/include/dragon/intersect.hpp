#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dragon/geometry.hpp"
#include "dragon/params.hpp"
#include "dragon/polygon.hpp"

namespace dragon {

enum class ContactKind { kProperCrossing = 0, kEndpointOnInterior = 1, kVertexCoincidence = 2 };

const char* to_string(ContactKind k);

// Contact between non-adjacent segments i < j (segment k joins vertices k
// and k+1). `separation` is negative for proper crossings (minus the
// shortest endpoint-to-segment distance, a proxy for crossing depth) and is
// the contact distance otherwise.
struct ContactEvent {
  ContactKind kind = ContactKind::kProperCrossing;
  std::size_t seg_i = 0;
  std::size_t seg_j = 0;
  Point location;
  double separation = 0.0;

  friend bool operator==(const ContactEvent&, const ContactEvent&) = default;
};

struct ContactOptions {
  // Contacts within tolerance * q^n of an endpoint are classified as vertex
  // coincidences or endpoint-on-interior contacts.
  double tolerance = 1e-9;
  // 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
  // Events beyond this count are counted but not stored.
  std::size_t max_events = 1u << 20;
};

struct CrossingReport {
  int level = 0;
  double alpha_deg = 0.0;
  std::array<std::size_t, 3> counts{};  // indexed by ContactKind
  std::vector<ContactEvent> events;     // sorted by (seg_i, seg_j)
  bool truncated = false;
  std::size_t candidate_pairs = 0;
  double wall_time_s = 0.0;

  std::size_t count(ContactKind k) const { return counts[static_cast<int>(k)]; }
};

inline constexpr std::size_t kMaxContactSegments = std::size_t{1} << 24;

// Throws Error(kResource) above kMaxContactSegments segments and
// Error(kDomain) for a negative tolerance.
CrossingReport find_contacts(const FoldPolygon& poly, const ContactOptions& opt = {});

// Non-adjacent pairs (i < j) that the uniform grid hands to the classifier,
// sorted. Exposed for completeness testing.
std::vector<std::pair<std::size_t, std::size_t>> grid_candidate_pairs(const FoldPolygon& poly,
                                                                      double tolerance = 1e-9);

// Classifies one segment pair; returns false when the segments do not touch.
bool classify_segment_pair(Point a0, Point a1, Point b0, Point b1, double eps, ContactEvent& out);

struct CriticalBracket {
  double alpha_lo = 0.0;  // proper crossing present
  double alpha_hi = 0.0;  // no proper crossing
  int iterations = 0;
};

// Bisection on "Q_n has at least one proper crossing". Throws
// Error(kPrecondition) unless the low end crosses and the high end does not.
CriticalBracket empirical_critical_angle(int n, double alpha_lo, double alpha_hi,
                                         double tol_deg = 0.01, const ContactOptions& opt = {});

bool has_proper_crossing(int n, const AngleParams& p, const ContactOptions& opt = {});

struct Theorem1Check {
  std::string name;
  double value = 0.0;  // the quantity being compared
  double bound = 0.0;  // must exceed (checks 1-3) or stay below (check 4)
  bool pass = false;
};

struct Theorem1Report {
  int level = 0;
  double alpha_deg = 0.0;
  std::array<Theorem1Check, 4> checks;
  bool pass = false;
};

// The four special-segment arguments for the first and last segment of Q_n:
// distance from P_{0,0} to the sampled outline of pi1(hull) and from P_{0,1}
// to that of pi0(hull) against q^n, q - q^n > q^n, and the radial bound
// q^4 q^(alpha/beta) / (1 - q^4) < 1. Throws Error(kDomain) for n < 4.
Theorem1Report theorem1_boundary_checks(int n, const AngleParams& p,
                                        int samples_per_turn = 720);

}  // namespace dragon
