#include "dragon/predicates.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace dragon {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;  // 2^-53
constexpr double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;

struct TwoTerm {
  double hi;
  double lo;
};

TwoTerm two_product(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

TwoTerm two_sum(double a, double b) {
  const double s = a + b;
  const double bv = s - a;
  const double av = s - bv;
  return {s, (a - av) + (b - bv)};
}

// Nonoverlapping expansion, components in increasing magnitude, zeros removed.
class Expansion {
 public:
  void add(double b) {
    std::size_t out = 0;
    double q = b;
    for (std::size_t i = 0; i < size_; ++i) {
      const TwoTerm t = two_sum(q, terms_[i]);
      q = t.hi;
      if (t.lo != 0.0) terms_[out++] = t.lo;
    }
    if (q != 0.0) terms_[out++] = q;
    size_ = out;
  }
  int sign() const {
    if (size_ == 0) return 0;
    return terms_[size_ - 1] > 0.0 ? 1 : -1;
  }

 private:
  std::array<double, 16> terms_{};
  std::size_t size_ = 0;
};

}  // namespace

int orient2d_exact(Point a, Point b, Point c) {
  // Expanded determinant; the cx*cy terms cancel.
  const std::array<TwoTerm, 6> products = {
      two_product(a.x, b.y),  two_product(-a.x, c.y), two_product(-c.x, b.y),
      two_product(-a.y, b.x), two_product(a.y, c.x),  two_product(c.y, b.x)};
  Expansion e;
  for (const TwoTerm& t : products) {
    e.add(t.lo);
    e.add(t.hi);
  }
  return e.sign();
}

int orient2d(Point a, Point b, Point c) {
  const double left = (a.x - c.x) * (b.y - c.y);
  const double right = (a.y - c.y) * (b.x - c.x);
  const double det = left - right;
  const double bound = kCcwErrBound * (std::abs(left) + std::abs(right));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return orient2d_exact(a, b, c);
}

}  // namespace dragon
