#pragma once

// State-first direction: expand a state in an orthonormal a-basis, gate on
// decomposability, and push a-coordinates through a G-unitary change of
// basis to obtain b-probabilities.

#include <array>
#include <optional>

#include "hyperprob/hyperspace.hpp"
#include "hyperprob/kolmogorov.hpp"

namespace hyperprob {

struct Decomposition {
  std::array<HyperNumber, 2> coefficients{};
  bool decomposable = false;
};

/// v_i = (phi, f_i). Throws Error(BasisNotOrthonormal).
Decomposition decompose(const HyperState& phi,
                        const std::array<HyperState, 2>& basis,
                        double tol = kUnitarityTolerance);

struct ForwardResult {
  Pair probabilities{};
  HyperState b_state;
  /// Closed-form interference evaluation; present when every a-coordinate
  /// and matrix entry lies in G+*.
  std::optional<Pair> closed_form;
  /// |theta_1 - theta_2| of the matrix phases; present with closed_form.
  std::optional<double> phase_gap;
};

/// Throws Error(NotDecomposable) for a-coordinates outside G+,
/// Error(NotGUnitary) for a non-unitary V and Error(NotDecomposableOutput)
/// when a b-coordinate leaves G+.
ForwardResult forward(const std::array<HyperNumber, 2>& v_a, const GMatrix2& v,
                      double tol = kUnitarityTolerance);

/// Probability part of forward().
Pair forward_probabilities(const std::array<HyperNumber, 2>& v_a,
                           const GMatrix2& v, double tol = kUnitarityTolerance);

/// p^b(b_k) = sum_i p^a(a_i) p_ik
///          + 2 s1 s2 sigma_1k sigma_2k sqrt(p^a(a1) p^a(a2) p_1k p_2k) cosh(phase gap)
/// from polar forms of the a-coordinates and of V's entries.
/// Throws Error(NotInGroup) if any of them lies outside G+*.
Pair forward_closed_form(const std::array<HyperNumber, 2>& v_a,
                         const GMatrix2& v);

/// |theta_1 - theta_2| with theta_k = phase(V(1, k)) - phase(V(0, k)).
/// Throws Error(NotInGroup) if an entry lies outside G+*.
double phase_alignment_gap(const GMatrix2& v);

/// |sqrt(p12 p22) cosh(theta) - sqrt(p11 p21) cosh(theta)|; vanishes for
/// double stochastic p.
double sign_constraint_residual(const Matrix2& p, double theta);

}  // namespace hyperprob
