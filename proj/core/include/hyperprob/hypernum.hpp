#pragma once

// Hyperbolic (split-complex) numbers: the commutative two-dimensional
// Clifford algebra with generator j, j*j = 1.
//
// The algebra has zero divisors on the light cone x^2 = y^2, so it is not a
// field. Elements with x^2 - y^2 >= 0 form the multiplicative semigroup G+,
// and those with x^2 - y^2 > 0 the group G+*, which admits the polar form
//   z = sign(x) * |z| * e^{j theta},   e^{j theta} = cosh theta + j sinh theta.

#include <iosfwd>

namespace hyperprob {

class HyperNumber {
 public:
  constexpr HyperNumber() noexcept = default;

  /// Throws Error(NonFinite) for NaN or infinite components.
  HyperNumber(double x, double y = 0.0);

  constexpr double x() const noexcept { return x_; }
  constexpr double y() const noexcept { return y_; }

  HyperNumber& operator+=(const HyperNumber& o);
  HyperNumber& operator-=(const HyperNumber& o);
  HyperNumber& operator*=(const HyperNumber& o);

  friend HyperNumber operator+(HyperNumber a, const HyperNumber& b) { return a += b; }
  friend HyperNumber operator-(HyperNumber a, const HyperNumber& b) { return a -= b; }
  friend HyperNumber operator*(HyperNumber a, const HyperNumber& b) { return a *= b; }
  friend HyperNumber operator-(const HyperNumber& a) { return HyperNumber(-a.x_, -a.y_); }

  friend bool operator==(const HyperNumber&, const HyperNumber&) = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
};

inline const HyperNumber kJ{0.0, 1.0};

HyperNumber conj(const HyperNumber& z);

/// x^2 - y^2. Indefinite: negative outside the cone G+.
double sq_modulus(const HyperNumber& z);

bool in_g_plus(const HyperNumber& z);
bool in_g_plus_star(const HyperNumber& z);

/// Hyperbolic Euler formula. Throws Error(RangeError) when cosh overflows.
HyperNumber hexp(double theta);

/// z = sign * modulus * e^{j theta}, defined on G+*.
struct PolarForm {
  int sign = 1;
  double modulus = 1.0;
  double theta = 0.0;

  HyperNumber reconstruct() const;
};

/// Throws Error(NotInGroup) when sq_modulus(z) <= 0.
PolarForm polar(const HyperNumber& z);

/// conj(z) / sq_modulus(z); any z off the light cone is invertible.
/// Throws Error(NotInvertible) when sq_modulus(z) == 0.
HyperNumber invert(const HyperNumber& z);

/// Largest |theta| accepted by hexp.
inline constexpr double kMaxHyperbolicPhase = 710.0;

std::ostream& operator<<(std::ostream& os, const HyperNumber& z);

}  // namespace hyperprob
