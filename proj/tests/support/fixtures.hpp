#pragma once

// Shared fixtures and independent oracles for the unit and acceptance tests.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperprob/hyperspace.hpp"
#include "hyperprob/interference.hpp"
#include "hyperprob/kolmogorov.hpp"

namespace hyperprob::testing {

inline std::string data_path(const std::string& file) {
  return std::string(HYPERPROB_TEST_DATA_DIR) + "/" + file;
}

inline Atom atom(std::string id, double w, AOutcome a, BOutcome b,
                 std::vector<std::string> in = {}) {
  return Atom{std::move(id), w, a, b, std::move(in)};
}

/// The canonical eight-atom space. Context C has p_a = (0.5, 0.5),
/// p_b = (0.95, 0.05); the transition matrix is [[0.8, 0.2], [0.2, 0.8]].
/// D = {w1, w2, w3, w4, w6}.
inline std::vector<Atom> hyp8_atoms() {
  using A = AOutcome;
  using B = BOutcome;
  return {
      atom("w1", 0.10, A::a1, B::b1, {"C", "D"}),
      atom("w2", 0.00, A::a1, B::b2, {"C", "D"}),
      atom("w3", 0.09, A::a2, B::b1, {"C", "D"}),
      atom("w4", 0.01, A::a2, B::b2, {"C", "D"}),
      atom("w5", 0.30, A::a1, B::b1),
      atom("w6", 0.10, A::a1, B::b2, {"D"}),
      atom("w7", 0.01, A::a2, B::b1),
      atom("w8", 0.39, A::a2, B::b2),
  };
}

inline FiniteContextSpace hyp8() {
  return FiniteContextSpace(hyp8_atoms(), {"C", "D"});
}

/// Exact fractions with 64-bit parts; enough for hand-sized fixtures.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational(std::int64_t n = 0, std::int64_t d = 1) : num(n), den(d) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rational operator+(Rational a, Rational b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend Rational operator-(Rational a, Rational b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend Rational operator*(Rational a, Rational b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend Rational operator/(Rational a, Rational b) {
    return {a.num * b.den, a.den * b.num};
  }
  friend bool operator==(Rational a, Rational b) {
    return a.num == b.num && a.den == b.den;
  }

  double value() const { return static_cast<double>(num) / den; }
};

/// Exact square root of a rational with perfect-square parts.
inline Rational exact_sqrt(Rational r) {
  auto root = [](std::int64_t v) {
    auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
    if (s * s != v) throw std::domain_error("not a perfect square");
    return s;
  };
  return {root(r.num), root(r.den)};
}

/// Brute-force context-conditioned classical total probability
/// sum_y P(a=y | C) P(b=x | a=y, C), straight from the atom list.
inline Pair conditioned_total_probability(const FiniteContextSpace& space,
                                          const Event& c) {
  const auto& atoms = space.atoms();
  double pc = 0.0;
  std::array<double, 2> pa{};
  std::array<std::array<double, 2>, 2> joint{};
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!c.contains(i)) continue;
    pc += atoms[i].weight;
    pa[index(atoms[i].a)] += atoms[i].weight;
    joint[index(atoms[i].a)][index(atoms[i].b)] += atoms[i].weight;
  }
  Pair out{};
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      if (pa[y] > 0.0) out[x] += (pa[y] / pc) * (joint[y][x] / pa[y]);
    }
  }
  return out;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Joint (a, b) masses; double stochastic transitions when requested.
inline Matrix2 random_joint(std::mt19937_64& rng, bool double_stochastic) {
  if (double_stochastic) {
    const double alpha = uniform(rng, 0.05, 0.95);
    const double p = uniform(rng, 0.05, 0.95);
    return {{{alpha * p, alpha * (1 - p)}, {(1 - alpha) * (1 - p), (1 - alpha) * p}}};
  }
  std::array<double, 4> w{};
  double total = 0.0;
  for (auto& v : w) total += (v = uniform(rng, 0.02, 1.0));
  return {{{w[0] / total, w[1] / total}, {w[2] / total, w[3] / total}}};
}

/// Random space with incompatible variables: each (a, b) cell is split over
/// one to three atoms, every atom joins each of the contexts K1..K3 with
/// probability 1/2.
inline FiniteContextSpace random_space(std::mt19937_64& rng, bool double_stochastic) {
  const Matrix2 joint = random_joint(rng, double_stochastic);
  const std::vector<std::string> contexts{"K1", "K2", "K3"};
  std::vector<Atom> atoms;
  std::bernoulli_distribution member(0.5);
  std::uniform_int_distribution<int> pieces(1, 3);
  int id = 0;
  for (auto a : {AOutcome::a1, AOutcome::a2}) {
    for (auto b : {BOutcome::b1, BOutcome::b2}) {
      const int k = pieces(rng);
      std::vector<double> share(k);
      double total = 0.0;
      for (auto& s : share) total += (s = uniform(rng, 0.1, 1.0));
      for (int i = 0; i < k; ++i) {
        Atom at{"r" + std::to_string(id++), joint[index(a)][index(b)] * share[i] / total,
                a, b, {}};
        for (const auto& c : contexts) {
          if (member(rng)) at.contexts.push_back(c);
        }
        atoms.push_back(std::move(at));
      }
    }
  }
  return FiniteContextSpace::normalized(std::move(atoms), contexts);
}

/// Space with a context "H" engineered to have |lambda(b1)| > 1. Returns false if
/// the drawn parameters leave no room for hyperbolic interference.
inline bool try_hyperbolic_space(std::mt19937_64& rng, bool double_stochastic,
                                 std::vector<Atom>& atoms_out) {
  const Matrix2 t = random_joint(rng, double_stochastic);
  Matrix2 p{};
  for (std::size_t i = 0; i < 2; ++i) {
    const double row = t[i][0] + t[i][1];
    p[i] = {t[i][0] / row, t[i][1] / row};
  }
  const double q = uniform(rng, 0.05, 0.95);
  const double classical = q * p[0][0] + (1 - q) * p[1][0];
  const double radical = std::sqrt(q * (1 - q) * p[0][0] * p[1][0]);
  const double margin = 2.0 * radical * uniform(rng, 1.001, 1.5);
  const double lo_hi = classical - margin;
  const double hi_lo = classical + margin;
  const double room_low = lo_hi - 0.005;
  const double room_high = 0.995 - hi_lo;
  if (room_low <= 0.0 && room_high <= 0.0) return false;
  double pb1;
  if (room_low > 0.0 && (room_high <= 0.0 || std::bernoulli_distribution(0.5)(rng))) {
    pb1 = uniform(rng, 0.005, lo_hi);
  } else {
    pb1 = uniform(rng, hi_lo, 0.995);
  }
  // In-context table with row sums (q, 1 - q) and column sums (pb1, 1 - pb1).
  const double x11 = uniform(rng, std::max(0.0, q + pb1 - 1.0), std::min(q, pb1));
  const Matrix2 x{{{x11, q - x11}, {pb1 - x11, 1.0 - q - pb1 + x11}}};
  double scale = 1e300;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      if (x[a][b] > 0.0) scale = std::min(scale, t[a][b] / x[a][b]);
  scale *= uniform(rng, 0.2, 0.9);

  atoms_out.clear();
  std::bernoulli_distribution member(0.5);
  int id = 0;
  for (auto a : {AOutcome::a1, AOutcome::a2}) {
    for (auto b : {BOutcome::b1, BOutcome::b2}) {
      const double inside = scale * x[index(a)][index(b)];
      Atom in{"h" + std::to_string(id++), inside, a, b, {"H"}};
      Atom out{"h" + std::to_string(id++), t[index(a)][index(b)] - inside, a, b, {}};
      if (member(rng)) in.contexts.push_back("K");
      if (member(rng)) out.contexts.push_back("K");
      atoms_out.push_back(std::move(in));
      atoms_out.push_back(std::move(out));
    }
  }
  return true;
}

/// Space whose context "H" is hyperbolic: both |lambda| > 1. Under a double
/// stochastic transition this holds for every draw; otherwise draws whose
/// second coefficient falls below one are rejected.
inline FiniteContextSpace random_hyperbolic_space(std::mt19937_64& rng,
                                                  bool double_stochastic) {
  for (;;) {
    std::vector<Atom> atoms;
    if (!try_hyperbolic_space(rng, double_stochastic, atoms)) continue;
    auto space = FiniteContextSpace::normalized(std::move(atoms), {"H", "K"});
    if (classify(lambda_coefficients(space.context_stats("H"))) == ContextClass::hyperbolic) {
      return space;
    }
  }
}

/// Random G-unitary matrix. In the idempotent coordinates z+ = x + y,
/// z- = x - y conjugation swaps the two real parts, so conj(V)^T V = I
/// amounts to V- = (V+^T)^{-1}.
inline GMatrix2 random_unitary(std::mt19937_64& rng) {
  double m[2][2];
  double det = 0.0;
  do {
    for (auto& row : m)
      for (auto& v : row) v = uniform(rng, -2.0, 2.0);
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  } while (std::abs(det) < 0.3);
  // (M^T)^{-1} = (M^{-1})^T
  const double inv_t[2][2] = {{m[1][1] / det, -m[1][0] / det},
                              {-m[0][1] / det, m[0][0] / det}};
  GMatrix2 v;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) {
      const double plus = m[i][k];
      const double minus = inv_t[i][k];
      v(i, k) = HyperNumber((plus + minus) / 2.0, (plus - minus) / 2.0);
    }
  }
  return v;
}

/// Random normalized state whose coordinates lie in G+, with sq_moduli
/// (s, 1 - s). Uses z = r e+ + (s/r) e- in idempotent coordinates.
inline HyperState random_decomposable_state(std::mt19937_64& rng,
                                            const std::string& basis) {
  const double s = uniform(rng, 0.0, 1.0);
  const double shares[2] = {s, 1.0 - s};
  HyperState phi;
  phi.basis = basis;
  for (int k = 0; k < 2; ++k) {
    double r = uniform(rng, 0.3, 2.0);
    if (std::bernoulli_distribution(0.5)(rng)) r = -r;
    const double plus = r;
    const double minus = shares[k] / r;
    phi[k] = HyperNumber((plus + minus) / 2.0, (plus - minus) / 2.0);
  }
  return phi;
}

/// Random normalized state with arbitrary (possibly negative) sq_moduli.
inline HyperState random_normalized_state(std::mt19937_64& rng,
                                          const std::string& basis) {
  double plus[2], minus[2];
  for (int k = 0; k < 2; ++k) {
    plus[k] = uniform(rng, -2.0, 2.0);
    minus[k] = uniform(rng, -2.0, 2.0);
  }
  const double n2 = plus[0] * plus[0] + plus[1] * plus[1];
  const double dot = plus[0] * minus[0] + plus[1] * minus[1];
  for (int k = 0; k < 2; ++k) minus[k] += (1.0 - dot) / n2 * plus[k];
  HyperState phi;
  phi.basis = basis;
  for (int k = 0; k < 2; ++k) {
    phi[k] = HyperNumber((plus[k] + minus[k]) / 2.0, (plus[k] - minus[k]) / 2.0);
  }
  return phi;
}

inline HyperNumber random_hyper(std::mt19937_64& rng, double range = 3.0) {
  return HyperNumber(uniform(rng, -range, range), uniform(rng, -range, range));
}

}  // namespace hyperprob::testing
