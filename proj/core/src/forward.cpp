#include "hyperprob/forward.hpp"

#include <cmath>
#include <string>

#include "hyperprob/errors.hpp"

namespace hyperprob {

namespace {

bool all_in_group(const std::array<HyperNumber, 2>& v_a, const GMatrix2& v) {
  for (const auto& z : v_a) {
    if (!in_g_plus_star(z)) return false;
  }
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 2; ++k) {
      if (!in_g_plus_star(v(i, k))) return false;
    }
  }
  return true;
}

}  // namespace

Decomposition decompose(const HyperState& phi,
                        const std::array<HyperState, 2>& basis, double tol) {
  if (!is_orthonormal_basis(basis[0], basis[1], tol)) {
    throw Error(ErrorCode::BasisNotOrthonormal,
                "expansion basis is not orthonormal");
  }
  Decomposition d;
  for (std::size_t i = 0; i < 2; ++i) {
    d.coefficients[i] = g_inner(phi, basis[i]);
  }
  d.decomposable = sq_modulus(d.coefficients[0]) >= -kConeTolerance &&
                   sq_modulus(d.coefficients[1]) >= -kConeTolerance;
  return d;
}

ForwardResult forward(const std::array<HyperNumber, 2>& v_a, const GMatrix2& v,
                      double tol) {
  for (const auto& z : v_a) {
    if (sq_modulus(z) < -kConeTolerance) {
      throw Error(ErrorCode::NotDecomposable,
                  "a-coordinate has sq_modulus " + std::to_string(sq_modulus(z)));
    }
  }
  if (!is_g_unitary(v, tol)) {
    throw Error(ErrorCode::NotGUnitary,
                "transition matrix violates conj(V)^T V = I by " +
                    std::to_string(unitarity_defect(v).max_abs()));
  }
  ForwardResult r;
  r.b_state = apply(v, HyperState{v_a, v.source});
  if (!is_decomposable(r.b_state)) {
    throw Error(ErrorCode::NotDecomposableOutput,
                "b-coordinates (" + std::to_string(sq_modulus(r.b_state[0])) +
                    ", " + std::to_string(sq_modulus(r.b_state[1])) +
                    ") leave G+; no probability interpretation");
  }
  for (std::size_t k = 0; k < 2; ++k) {
    r.probabilities[k] = std::max(0.0, sq_modulus(r.b_state[k]));
  }
  if (all_in_group(v_a, v)) {
    r.closed_form = forward_closed_form(v_a, v);
    r.phase_gap = phase_alignment_gap(v);
  }
  return r;
}

Pair forward_probabilities(const std::array<HyperNumber, 2>& v_a,
                           const GMatrix2& v, double tol) {
  return forward(v_a, v, tol).probabilities;
}

Pair forward_closed_form(const std::array<HyperNumber, 2>& v_a,
                         const GMatrix2& v) {
  const PolarForm a1 = polar(v_a[0]);
  const PolarForm a2 = polar(v_a[1]);
  Pair out{};
  for (std::size_t k = 0; k < 2; ++k) {
    const PolarForm m1 = polar(v(0, k));
    const PolarForm m2 = polar(v(1, k));
    const double t1 = a1.modulus * m1.modulus;
    const double t2 = a2.modulus * m2.modulus;
    const int sign = a1.sign * a2.sign * m1.sign * m2.sign;
    const double gap = (a1.theta + m1.theta) - (a2.theta + m2.theta);
    out[k] = t1 * t1 + t2 * t2 + 2.0 * sign * t1 * t2 * std::cosh(gap);
  }
  return out;
}

double phase_alignment_gap(const GMatrix2& v) {
  const double theta1 = polar(v(1, 0)).theta - polar(v(0, 0)).theta;
  const double theta2 = polar(v(1, 1)).theta - polar(v(0, 1)).theta;
  return std::abs(theta1 - theta2);
}

double sign_constraint_residual(const Matrix2& p, double theta) {
  const double c = std::cosh(theta);
  return std::abs(std::sqrt(p[0][1] * p[1][1]) * c -
                  std::sqrt(p[0][0] * p[1][0]) * c);
}

}  // namespace hyperprob
