#pragma once

// Quantum-like representation of hyperbolic contexts.
//
// A context C with |lambda(b_x)| >= 1 for both outcomes is mapped to the
// hyperbolic amplitude
//
//   phi_C(x) = sqrt(p_C^a(a1) p(x|a1)) + eps(x) e^{j theta(x)} sqrt(p_C^a(a2) p(x|a2))
//
// whose square moduli are p_C^b(x). When the transition matrix is double
// stochastic, the vectors
//
//   e_1^a = (u11, u12),  e_2^a = (eps1 e^{j theta} u21, eps2 e^{j theta} u22)
//
// with a common phase theta form an orthonormal basis, and the Born rule also
// holds for the a-variable.

#include <array>
#include <optional>
#include <string>

#include "hyperprob/hyperspace.hpp"
#include "hyperprob/interference.hpp"
#include "hyperprob/kolmogorov.hpp"

namespace hyperprob {

struct ABasis {
  std::array<HyperState, 2> vectors;
  /// Row i = b-coordinates of e_i^a.
  GMatrix2 transition;
  /// Signed phases used for the b1 and b2 coordinates of e_2^a.
  Pair phases{};
};

struct Representation {
  ContextStatistics stats;
  DisturbanceProfile profile;
  HyperState amplitude;
  /// Signed phases used in the amplitude, per b outcome.
  Pair phases{};
  std::optional<ABasis> a_basis;
  /// Why a_basis is absent, if it is.
  std::string a_basis_note;
};

HyperState build_amplitude_with_phases(const ContextStatistics& s,
                                       const std::array<int, 2>& epsilon,
                                       const Pair& phases);

/// Throws Error(NotHyperbolicContext) unless both |lambda| >= 1.
HyperState build_amplitude(const ContextStatistics& s,
                           const DisturbanceProfile& profile);

/// Builds e^a from arbitrary phases. No alignment or stochasticity check.
ABasis build_a_basis_with_phases(const ContextStatistics& s,
                                 const std::array<int, 2>& epsilon,
                                 const Pair& phases);

/// Aligned a-basis, theta_1 = theta_2 = theta(b1).
/// Throws Error(NotDoubleStochastic) or Error(NotHyperbolicContext).
ABasis build_a_basis(const ContextStatistics& s,
                     const DisturbanceProfile& profile,
                     double tol = kStochasticTolerance);

/// Runs lambda -> phases -> amplitude -> a-basis. The a-basis is left empty
/// (with a note) when the transition matrix is not double stochastic.
Representation represent(const ContextStatistics& s);

/// max_x |sq_modulus((phi, e_x^b)) - p_C^b(x)|
double born_residual_b(const Representation& rep);

/// max_j |sq_modulus((phi, e_j^a)) - p_C^a(a_j)|.
/// Throws Error(InvalidArgument) when the representation has no a-basis.
double born_residual_a(const Representation& rep);

/// Checks that rep_c can be expanded in the a-basis of rep_c0 with
/// |v_j|^2 = p_C^a(a_j), and that the phase differences agree.
bool shared_basis_check(const Representation& rep_c,
                        const Representation& rep_c0,
                        double tol = kUnitarityTolerance);

/// (b_hat phi, phi) with b_hat the multiplication operator by `values`.
double expectation(const Representation& rep, const Pair& values);

/// Matrix of a_hat = sum_i a_i |e_i^a><e_i^a| in b-coordinates.
std::array<std::array<HyperNumber, 2>, 2> a_operator(const GMatrix2& v,
                                                     const Pair& a_values);

/// Frobenius norm of [a_hat, b_hat] over the real coefficients.
double commutator_norm(const GMatrix2& v, const Pair& a_values,
                       const Pair& b_values);

/// Throws Error(InvalidArgument) when the representation has no a-basis.
double noncommutativity_witness(const Representation& rep, const Pair& a_values,
                                const Pair& b_values);

}  // namespace hyperprob
