#include "hyperprob/hyperspace.hpp"

#include <algorithm>
#include <cmath>

#include "hyperprob/errors.hpp"

namespace hyperprob {

namespace {

bool near(const HyperNumber& z, double x, double tol) {
  return std::abs(z.x() - x) <= tol && std::abs(z.y()) <= tol;
}

}  // namespace

HyperState HyperState::normalized(std::array<HyperNumber, 2> components,
                                  std::string basis, double tol) {
  HyperState s{components, std::move(basis)};
  if (!is_normalized(s, tol)) {
    const HyperNumber n = g_inner(s, s);
    throw Error(ErrorCode::NotNormalized,
                "(phi, phi) = " + std::to_string(n.x()) + " + " +
                    std::to_string(n.y()) + "j");
  }
  return s;
}

HyperState operator*(const HyperNumber& a, const HyperState& s) {
  return HyperState{{a * s[0], a * s[1]}, s.basis};
}

HyperState operator+(const HyperState& u, const HyperState& v) {
  if (u.basis != v.basis) {
    throw Error(ErrorCode::BasisMismatch,
                "cannot add states in bases '" + u.basis + "' and '" + v.basis + "'");
  }
  return HyperState{{u[0] + v[0], u[1] + v[1]}, u.basis};
}

GMatrix2 GMatrix2::identity(const std::string& basis) {
  GMatrix2 m;
  m.entries = {{{HyperNumber(1.0), HyperNumber(0.0)},
                {HyperNumber(0.0), HyperNumber(1.0)}}};
  m.source = basis;
  m.target = basis;
  return m;
}

HyperNumber g_inner(const HyperState& u, const HyperState& v) {
  if (u.basis != v.basis) {
    throw Error(ErrorCode::BasisMismatch,
                "scalar product of states in bases '" + u.basis + "' and '" +
                    v.basis + "'");
  }
  return u[0] * conj(v[0]) + u[1] * conj(v[1]);
}

bool is_normalized(const HyperState& s, double tol) {
  return near(g_inner(s, s), 1.0, tol);
}

bool is_orthonormal_basis(const HyperState& f1, const HyperState& f2,
                          double tol) {
  return near(g_inner(f1, f1), 1.0, tol) && near(g_inner(f2, f2), 1.0, tol) &&
         near(g_inner(f1, f2), 0.0, tol);
}

double UnitarityDefect::max_abs() const {
  double m = 0.0;
  for (const auto& z : {column_norm[0], column_norm[1], column_cross}) {
    m = std::max({m, std::abs(z.x()), std::abs(z.y())});
  }
  return m;
}

UnitarityDefect unitarity_defect(const GMatrix2& v) {
  UnitarityDefect d;
  for (std::size_t k = 0; k < 2; ++k) {
    d.column_norm[k] =
        conj(v(0, k)) * v(0, k) + conj(v(1, k)) * v(1, k) - HyperNumber(1.0);
  }
  d.column_cross = conj(v(0, 0)) * v(0, 1) + conj(v(1, 0)) * v(1, 1);
  return d;
}

bool is_g_unitary(const GMatrix2& v, double tol) {
  return unitarity_defect(v).max_abs() <= tol;
}

HyperState apply(const GMatrix2& v, const HyperState& phi) {
  if (phi.basis != v.source) {
    throw Error(ErrorCode::BasisMismatch,
                "matrix maps basis '" + v.source + "', state is in '" +
                    phi.basis + "'");
  }
  HyperState out;
  out.basis = v.target;
  for (std::size_t k = 0; k < 2; ++k) {
    out[k] = phi[0] * v(0, k) + phi[1] * v(1, k);
  }
  return out;
}

bool is_decomposable(const HyperState& phi, double tol) {
  return sq_modulus(phi[0]) >= -tol && sq_modulus(phi[1]) >= -tol;
}

std::array<double, 2> born_probabilities(const HyperState& phi, double tol) {
  if (!is_decomposable(phi)) {
    throw Error(ErrorCode::NotDecomposable,
                "a coordinate lies outside G+; Born probabilities undefined");
  }
  if (!is_normalized(phi, tol)) {
    throw Error(ErrorCode::NotNormalized, "state is not normalized");
  }
  return {std::max(0.0, sq_modulus(phi[0])), std::max(0.0, sq_modulus(phi[1]))};
}

}  // namespace hyperprob
