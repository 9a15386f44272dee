#pragma once

// Coefficients of statistical disturbance and the interference form of the
// total probability formula:
//
//   p_C^b(x) = sum_y p_C^a(y) p(x|y) + 2 lambda(x) sqrt(prod_y p_C^a(y) p(x|y))
//
// |lambda| <= 1 admits lambda = cos(theta) (trigonometric interference),
// |lambda| >= 1 admits lambda = +-cosh(theta) (hyperbolic interference).

#include <array>
#include <string_view>

#include "hyperprob/kolmogorov.hpp"

namespace hyperprob {

inline constexpr double kClassTolerance = 1e-9;

enum class ContextClass { classical, trigonometric, hyperbolic, mixed, boundary };

std::string_view to_string(ContextClass c);

struct DisturbanceProfile {
  Pair lambda{};
  std::array<int, 2> epsilon{1, 1};
  Pair theta{};
  ContextClass context_class = ContextClass::classical;
  /// Per outcome: true when lambda = epsilon * cosh(theta), false when
  /// lambda = cos(theta).
  std::array<bool, 2> hyperbolic_branch{false, false};

  /// Both |lambda| >= 1 (up to tolerance): the context admits a hyperbolic
  /// amplitude.
  bool in_hyperbolic_family(double tol = kClassTolerance) const;
};

/// sum_y p_C^a(y) p(x|y) for x = b1, b2.
Pair classical_total_probability(const ContextStatistics& s);
/// sqrt(prod_y p_C^a(y) p(x|y)) for x = b1, b2.
Pair interference_radicals(const ContextStatistics& s);

/// Throws Error(ZeroDenominator) when a radical vanishes.
Pair lambda_coefficients(const ContextStatistics& s);

/// With m = max|lambda|, n = min|lambda|: classical if m <= tol,
/// trigonometric if m < 1 - tol, boundary if |m - 1| <= tol, otherwise
/// hyperbolic when n >= 1 - tol and mixed when n < 1 - tol.
ContextClass classify(const Pair& lambda, double tol = kClassTolerance);

/// Throws Error(MixedClassUnsupported) for mixed contexts.
DisturbanceProfile phases(const Pair& lambda, double tol = kClassTolerance);

/// Re-evaluates the interference formula from the profile.
Pair reconstruct_total_probability(const ContextStatistics& s,
                                   const DisturbanceProfile& profile);

/// sum_k lambda_k sqrt(P(A1|C) P(A2|C) P(B_k|A1) P(B_k|A2)); zero for
/// consistent statistics.
double balance_check(const ContextStatistics& s, const Pair& lambda);

int sign_of(double v);

}  // namespace hyperprob
