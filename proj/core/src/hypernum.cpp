#include "hyperprob/hypernum.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "hyperprob/errors.hpp"

namespace hyperprob {

namespace {

void require_finite(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw Error(ErrorCode::NonFinite,
                "hyperbolic number components must be finite");
  }
}

}  // namespace

HyperNumber::HyperNumber(double x, double y) : x_(x), y_(y) {
  require_finite(x, y);
}

HyperNumber& HyperNumber::operator+=(const HyperNumber& o) {
  x_ += o.x_;
  y_ += o.y_;
  require_finite(x_, y_);
  return *this;
}

HyperNumber& HyperNumber::operator-=(const HyperNumber& o) {
  x_ -= o.x_;
  y_ -= o.y_;
  require_finite(x_, y_);
  return *this;
}

HyperNumber& HyperNumber::operator*=(const HyperNumber& o) {
  // (x1 + j y1)(x2 + j y2) = (x1 x2 + y1 y2) + j (x1 y2 + x2 y1)
  const double x = x_ * o.x_ + y_ * o.y_;
  const double y = x_ * o.y_ + o.x_ * y_;
  x_ = x;
  y_ = y;
  require_finite(x_, y_);
  return *this;
}

HyperNumber conj(const HyperNumber& z) { return HyperNumber(z.x(), -z.y()); }

// Factored form: no cancellation between x^2 and y^2 near the light cone.
double sq_modulus(const HyperNumber& z) {
  return (z.x() - z.y()) * (z.x() + z.y());
}

bool in_g_plus(const HyperNumber& z) { return sq_modulus(z) >= 0.0; }

bool in_g_plus_star(const HyperNumber& z) { return sq_modulus(z) > 0.0; }

HyperNumber hexp(double theta) {
  if (!std::isfinite(theta) || std::abs(theta) > kMaxHyperbolicPhase) {
    throw Error(ErrorCode::RangeError,
                "hyperbolic phase " + std::to_string(theta) +
                    " overflows cosh");
  }
  return HyperNumber(std::cosh(theta), std::sinh(theta));
}

HyperNumber PolarForm::reconstruct() const {
  const HyperNumber e = hexp(theta);
  const double s = sign * modulus;
  return HyperNumber(s * e.x(), s * e.y());
}

PolarForm polar(const HyperNumber& z) {
  const double m2 = sq_modulus(z);
  if (!(m2 > 0.0)) {
    throw Error(ErrorCode::NotInGroup,
                "polar form needs sq_modulus > 0, got " + std::to_string(m2));
  }
  // |y/x| < 1 strictly inside G+*, so atanh is finite.
  PolarForm p;
  p.sign = z.x() > 0.0 ? 1 : -1;
  p.modulus = std::sqrt(m2);
  p.theta = std::atanh(z.y() / z.x());
  return p;
}

HyperNumber invert(const HyperNumber& z) {
  const double m2 = sq_modulus(z);
  if (m2 == 0.0) {
    throw Error(ErrorCode::NotInvertible,
                "element on the light cone has no inverse");
  }
  return HyperNumber(z.x() / m2, -z.y() / m2);
}

std::ostream& operator<<(std::ostream& os, const HyperNumber& z) {
  return os << z.x() << (z.y() < 0 ? " - " : " + ") << std::abs(z.y()) << "j";
}

}  // namespace hyperprob
