#pragma once

// Two-dimensional hyperbolic Hilbert module G^2 with the G-valued scalar
// product (u, v) = sum_x u(x) conj(v(x)).

#include <array>
#include <string>

#include "hyperprob/hypernum.hpp"

namespace hyperprob {

inline constexpr double kUnitarityTolerance = 1e-10;
/// sq_modulus values down to -kConeTolerance still count as G+ when deciding
/// decomposability; the resulting Born probability is clamped to zero.
inline constexpr double kConeTolerance = 1e-12;

/// Coordinates of a vector of G^2 in a labelled basis.
struct HyperState {
  std::array<HyperNumber, 2> components{};
  std::string basis = "b";

  const HyperNumber& operator[](std::size_t i) const { return components[i]; }
  HyperNumber& operator[](std::size_t i) { return components[i]; }

  /// Builds a state and checks (phi, phi) = 1 within tol.
  /// Throws Error(NotNormalized) otherwise.
  static HyperState normalized(std::array<HyperNumber, 2> components,
                               std::string basis,
                               double tol = kUnitarityTolerance);
};

HyperState operator*(const HyperNumber& a, const HyperState& s);
HyperState operator+(const HyperState& u, const HyperState& v);

/// 2x2 matrix over G. Row i holds the target-basis coordinates of the i-th
/// source-basis vector, so a source-basis coordinate vector v maps to
/// w_k = sum_i v_i * V(i, k).
struct GMatrix2 {
  std::array<std::array<HyperNumber, 2>, 2> entries{};
  std::string source = "a";
  std::string target = "b";

  const HyperNumber& operator()(std::size_t i, std::size_t k) const {
    return entries[i][k];
  }
  HyperNumber& operator()(std::size_t i, std::size_t k) { return entries[i][k]; }

  static GMatrix2 identity(const std::string& basis = "b");
};

/// Throws Error(BasisMismatch) if the states use different bases.
HyperNumber g_inner(const HyperState& u, const HyperState& v);

bool is_normalized(const HyperState& s, double tol = kUnitarityTolerance);

bool is_orthonormal_basis(const HyperState& f1, const HyperState& f2,
                          double tol = kUnitarityTolerance);

/// Deviations of the three G-unitarity conditions conj(V)^T V = I:
/// column norms minus one, and the column cross product.
struct UnitarityDefect {
  std::array<HyperNumber, 2> column_norm{};
  HyperNumber column_cross{};

  double max_abs() const;
};

UnitarityDefect unitarity_defect(const GMatrix2& v);
bool is_g_unitary(const GMatrix2& v, double tol = kUnitarityTolerance);

/// Change of basis: source coordinates to target coordinates.
/// Throws Error(BasisMismatch) when phi is not in v.source.
HyperState apply(const GMatrix2& v, const HyperState& phi);

bool is_decomposable(const HyperState& phi, double tol = kConeTolerance);

/// (|v1|^2, |v2|^2) for a normalized decomposable state.
/// Throws Error(NotDecomposable) or Error(NotNormalized).
std::array<double, 2> born_probabilities(const HyperState& phi,
                                         double tol = kUnitarityTolerance);

}  // namespace hyperprob
