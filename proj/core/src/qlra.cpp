#include "hyperprob/qlra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hyperprob/errors.hpp"

namespace hyperprob {

namespace {

void require_hyperbolic(const DisturbanceProfile& profile,
                        const ContextStatistics& s) {
  const bool admissible = profile.context_class == ContextClass::hyperbolic ||
                          profile.context_class == ContextClass::boundary;
  if (!admissible || !profile.in_hyperbolic_family()) {
    throw Error(ErrorCode::NotHyperbolicContext,
                "context '" + s.context + "' is " +
                    std::string(to_string(profile.context_class)) +
                    " with lambda = (" + std::to_string(profile.lambda[0]) +
                    ", " + std::to_string(profile.lambda[1]) + ")");
  }
}

HyperNumber signed_phase(int epsilon, double theta) {
  const HyperNumber e = hexp(theta);
  return epsilon < 0 ? -e : e;
}

}  // namespace

HyperState build_amplitude_with_phases(const ContextStatistics& s,
                                       const std::array<int, 2>& epsilon,
                                       const Pair& phases) {
  HyperState phi;
  phi.basis = "b";
  for (std::size_t x = 0; x < 2; ++x) {
    const double first = std::sqrt(s.p_a[0] * s.transition[0][x]);
    const double second = std::sqrt(s.p_a[1] * s.transition[1][x]);
    phi[x] = HyperNumber(first) +
             signed_phase(epsilon[x], phases[x]) * HyperNumber(second);
  }
  return phi;
}

HyperState build_amplitude(const ContextStatistics& s,
                           const DisturbanceProfile& profile) {
  require_hyperbolic(profile, s);
  return build_amplitude_with_phases(s, profile.epsilon, profile.theta);
}

ABasis build_a_basis_with_phases(const ContextStatistics& s,
                                 const std::array<int, 2>& epsilon,
                                 const Pair& phases) {
  ABasis basis;
  basis.phases = phases;
  GMatrix2& v = basis.transition;
  v.source = "a";
  v.target = "b";
  for (std::size_t k = 0; k < 2; ++k) {
    v(0, k) = HyperNumber(s.u(0, k));
    v(1, k) = signed_phase(epsilon[k], phases[k]) * HyperNumber(s.u(1, k));
  }
  for (std::size_t i = 0; i < 2; ++i) {
    basis.vectors[i] = HyperState{{v(i, 0), v(i, 1)}, "b"};
  }
  return basis;
}

ABasis build_a_basis(const ContextStatistics& s,
                     const DisturbanceProfile& profile, double tol) {
  require_hyperbolic(profile, s);
  if (!is_double_stochastic(s.transition, tol)) {
    throw Error(ErrorCode::NotDoubleStochastic,
                "column sums of the transition matrix are " +
                    std::to_string(s.transition[0][0] + s.transition[1][0]) +
                    " and " +
                    std::to_string(s.transition[0][1] + s.transition[1][1]) +
                    "; the a-variable has no Born rule");
  }
  const double theta = profile.theta[0];
  return build_a_basis_with_phases(s, profile.epsilon, {theta, theta});
}

Representation represent(const ContextStatistics& s) {
  Representation rep;
  rep.stats = s;
  rep.profile = phases(lambda_coefficients(s));
  require_hyperbolic(rep.profile, s);
  rep.phases = rep.profile.theta;
  try {
    rep.a_basis = build_a_basis(s, rep.profile);
    // Under double stochasticity |lambda_1| = |lambda_2|; share one phase so
    // the amplitude expands exactly in the aligned a-basis.
    rep.phases = rep.a_basis->phases;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotDoubleStochastic) throw;
    rep.a_basis_note = e.what();
  }
  rep.amplitude = build_amplitude_with_phases(s, rep.profile.epsilon, rep.phases);
  return rep;
}

double born_residual_b(const Representation& rep) {
  double worst = 0.0;
  for (std::size_t x = 0; x < 2; ++x) {
    HyperState e{{HyperNumber(x == 0 ? 1.0 : 0.0), HyperNumber(x == 1 ? 1.0 : 0.0)},
                 rep.amplitude.basis};
    const double p = sq_modulus(g_inner(rep.amplitude, e));
    worst = std::max(worst, std::abs(p - rep.stats.p_b[x]));
  }
  return worst;
}

double born_residual_a(const Representation& rep) {
  if (!rep.a_basis) {
    throw Error(ErrorCode::InvalidArgument, "representation has no a-basis");
  }
  double worst = 0.0;
  for (std::size_t j = 0; j < 2; ++j) {
    const double p = sq_modulus(g_inner(rep.amplitude, rep.a_basis->vectors[j]));
    worst = std::max(worst, std::abs(p - rep.stats.p_a[j]));
  }
  return worst;
}

bool shared_basis_check(const Representation& rep_c,
                        const Representation& rep_c0, double tol) {
  if (!rep_c0.a_basis) return false;
  const auto& basis = rep_c0.a_basis->vectors;
  const double gap_c = rep_c.phases[0] - rep_c.phases[1];
  const double gap_c0 = rep_c0.a_basis->phases[0] - rep_c0.a_basis->phases[1];
  if (std::abs(gap_c - gap_c0) > tol) return false;
  if (!is_orthonormal_basis(basis[0], basis[1], tol)) return false;
  HyperState rebuilt{{HyperNumber(), HyperNumber()}, rep_c.amplitude.basis};
  for (std::size_t j = 0; j < 2; ++j) {
    const HyperNumber v = g_inner(rep_c.amplitude, basis[j]);
    if (std::abs(sq_modulus(v) - rep_c.stats.p_a[j]) > tol) return false;
    rebuilt = rebuilt + v * basis[j];
  }
  for (std::size_t x = 0; x < 2; ++x) {
    const HyperNumber d = rebuilt[x] - rep_c.amplitude[x];
    if (std::abs(d.x()) > tol || std::abs(d.y()) > tol) return false;
  }
  return true;
}

double expectation(const Representation& rep, const Pair& values) {
  const HyperState& phi = rep.amplitude;
  const HyperState b_phi{{HyperNumber(values[0]) * phi[0],
                          HyperNumber(values[1]) * phi[1]},
                         phi.basis};
  return g_inner(b_phi, phi).x();
}

std::array<std::array<HyperNumber, 2>, 2> a_operator(const GMatrix2& v,
                                                     const Pair& a_values) {
  // M_kl = sum_i a_i V(i, k) conj(V(i, l)); M e_i^a = a_i e_i^a for an
  // orthonormal a-basis.
  std::array<std::array<HyperNumber, 2>, 2> m{};
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t l = 0; l < 2; ++l) {
      HyperNumber acc;
      for (std::size_t i = 0; i < 2; ++i) {
        acc += HyperNumber(a_values[i]) * v(i, k) * conj(v(i, l));
      }
      m[k][l] = acc;
    }
  }
  return m;
}

double commutator_norm(const GMatrix2& v, const Pair& a_values,
                       const Pair& b_values) {
  const auto m = a_operator(v, a_values);
  // b_hat is diagonal, so [M, B]_kl = M_kl (b_l - b_k).
  double sum = 0.0;
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t l = 0; l < 2; ++l) {
      const double f = b_values[l] - b_values[k];
      sum += f * f * (m[k][l].x() * m[k][l].x() + m[k][l].y() * m[k][l].y());
    }
  }
  return std::sqrt(sum);
}

double noncommutativity_witness(const Representation& rep, const Pair& a_values,
                                const Pair& b_values) {
  if (!rep.a_basis) {
    throw Error(ErrorCode::InvalidArgument, "representation has no a-basis");
  }
  return commutator_norm(rep.a_basis->transition, a_values, b_values);
}

}  // namespace hyperprob
