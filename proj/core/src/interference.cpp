#include "hyperprob/interference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hyperprob/errors.hpp"

namespace hyperprob {

std::string_view to_string(ContextClass c) {
  switch (c) {
    case ContextClass::classical: return "classical";
    case ContextClass::trigonometric: return "trigonometric";
    case ContextClass::hyperbolic: return "hyperbolic";
    case ContextClass::mixed: return "mixed";
    case ContextClass::boundary: return "boundary";
  }
  return "unknown";
}

int sign_of(double v) { return v < 0.0 ? -1 : 1; }

bool DisturbanceProfile::in_hyperbolic_family(double tol) const {
  return std::abs(lambda[0]) >= 1.0 - tol && std::abs(lambda[1]) >= 1.0 - tol;
}

Pair classical_total_probability(const ContextStatistics& s) {
  Pair out{};
  for (std::size_t x = 0; x < 2; ++x) {
    out[x] = s.p_a[0] * s.transition[0][x] + s.p_a[1] * s.transition[1][x];
  }
  return out;
}

Pair interference_radicals(const ContextStatistics& s) {
  Pair out{};
  for (std::size_t x = 0; x < 2; ++x) {
    out[x] = std::sqrt(s.p_a[0] * s.transition[0][x] * s.p_a[1] *
                       s.transition[1][x]);
  }
  return out;
}

Pair lambda_coefficients(const ContextStatistics& s) {
  const Pair classical = classical_total_probability(s);
  const Pair radical = interference_radicals(s);
  Pair lambda{};
  for (std::size_t x = 0; x < 2; ++x) {
    if (!(radical[x] > 0.0)) {
      throw Error(ErrorCode::ZeroDenominator,
                  "interference radical vanishes for b" + std::to_string(x + 1) +
                      " in context '" + s.context + "'");
    }
    lambda[x] = (s.p_b[x] - classical[x]) / (2.0 * radical[x]);
  }
  return lambda;
}

ContextClass classify(const Pair& lambda, double tol) {
  const double m = std::max(std::abs(lambda[0]), std::abs(lambda[1]));
  const double n = std::min(std::abs(lambda[0]), std::abs(lambda[1]));
  if (m <= tol) return ContextClass::classical;
  if (m < 1.0 - tol) return ContextClass::trigonometric;
  if (m <= 1.0 + tol) return ContextClass::boundary;
  return n >= 1.0 - tol ? ContextClass::hyperbolic : ContextClass::mixed;
}

DisturbanceProfile phases(const Pair& lambda, double tol) {
  DisturbanceProfile p;
  p.lambda = lambda;
  p.context_class = classify(lambda, tol);
  if (p.context_class == ContextClass::mixed) {
    throw Error(ErrorCode::MixedClassUnsupported,
                "lambda = (" + std::to_string(lambda[0]) + ", " +
                    std::to_string(lambda[1]) +
                    ") mixes hyperbolic and trigonometric interference");
  }
  for (std::size_t x = 0; x < 2; ++x) {
    const double l = lambda[x];
    p.epsilon[x] = sign_of(l);
    const double a = std::abs(l);
    switch (p.context_class) {
      case ContextClass::classical:
      case ContextClass::trigonometric:
        p.theta[x] = std::acos(std::clamp(l, -1.0, 1.0));
        break;
      case ContextClass::hyperbolic:
        p.hyperbolic_branch[x] = true;
        p.theta[x] = a > 1.0 + tol ? std::acosh(a) : 0.0;
        break;
      case ContextClass::boundary:
        if (a >= 1.0 - tol) {
          p.hyperbolic_branch[x] = true;
          p.theta[x] = 0.0;
        } else {
          p.theta[x] = std::acos(l);
        }
        break;
      case ContextClass::mixed:
        break;
    }
  }
  return p;
}

Pair reconstruct_total_probability(const ContextStatistics& s,
                                   const DisturbanceProfile& profile) {
  const Pair classical = classical_total_probability(s);
  const Pair radical = interference_radicals(s);
  Pair out{};
  for (std::size_t x = 0; x < 2; ++x) {
    const double factor =
        profile.hyperbolic_branch[x]
            ? profile.epsilon[x] * std::cosh(profile.theta[x])
            : std::cos(profile.theta[x]);
    out[x] = classical[x] + 2.0 * factor * radical[x];
  }
  return out;
}

double balance_check(const ContextStatistics& s, const Pair& lambda) {
  const Pair radical = interference_radicals(s);
  return lambda[0] * radical[0] + lambda[1] * radical[1];
}

}  // namespace hyperprob
