#include "dragon/params.hpp"

#include <cmath>
#include <sstream>

#include "dragon/error.hpp"

namespace dragon {

AngleParams params_from_alpha(double alpha_deg) {
  if (!(alpha_deg > 0.0 && alpha_deg < 180.0)) {
    std::ostringstream os;
    os << "unfolding angle must lie in (0, 180) degrees, got " << alpha_deg;
    throw Error(ErrorCode::kDomain, os.str());
  }
  AngleParams p;
  p.alpha_deg = alpha_deg;
  p.beta_deg = 90.0 - alpha_deg / 2.0;
  p.q = 1.0 / (2.0 * std::cos(p.beta_deg * kDegToRad));
  return p;
}

AngleParams params_from_q(double q) {
  if (!(q > 0.5 && q < 1.0)) {
    std::ostringstream os;
    os << "contraction ratio must lie in (0.5, 1), got " << q;
    throw Error(ErrorCode::kDomain, os.str());
  }
  AngleParams p;
  p.q = q;
  p.beta_deg = std::acos(1.0 / (2.0 * q)) * kRadToDeg;
  p.alpha_deg = 180.0 - 2.0 * p.beta_deg;
  return p;
}

}  // namespace dragon
