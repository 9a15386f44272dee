#pragma once

// Finite contextual Kolmogorov spaces.
//
// Atoms carry a weight, the values of the two dichotomous reference
// variables a and b, and the names of the contexts they belong to. A context
// is a set of atoms; besides the declared ones every space exposes the
// reserved contexts OMEGA (all atoms), A1, A2 ({a = a_i}) and B1, B2
// ({b = b_j}).

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hyperprob {

using Pair = std::array<double, 2>;
/// Row-major 2x2 real matrix; for transitions entry (i, j) = P(b = b_j | a = a_i).
using Matrix2 = std::array<std::array<double, 2>, 2>;

enum class AOutcome : std::uint8_t { a1 = 0, a2 = 1 };
enum class BOutcome : std::uint8_t { b1 = 0, b2 = 1 };

constexpr std::size_t index(AOutcome a) { return static_cast<std::size_t>(a); }
constexpr std::size_t index(BOutcome b) { return static_cast<std::size_t>(b); }

inline constexpr double kWeightSumTolerance = 1e-9;
inline constexpr double kStochasticTolerance = 1e-10;

inline constexpr std::string_view kOmega = "OMEGA";

struct Atom {
  std::string id;
  double weight = 0.0;
  AOutcome a = AOutcome::a1;
  BOutcome b = BOutcome::b1;
  std::vector<std::string> contexts;

  bool in(std::string_view context) const;
};

/// Subset of the atoms of one space.
class Event {
 public:
  Event() = default;
  explicit Event(std::size_t atom_count, bool full = false)
      : members_(atom_count, full) {}

  std::size_t size() const { return members_.size(); }
  bool contains(std::size_t atom) const { return members_[atom]; }
  void insert(std::size_t atom) { members_[atom] = true; }
  bool empty() const;

  friend Event operator&(const Event& lhs, const Event& rhs);
  friend bool operator==(const Event&, const Event&) = default;

 private:
  std::vector<bool> members_;
};

/// Probability data of one context: p_C^a, p_C^b and the (unconditioned)
/// transition matrix p(b_j | a_i).
struct ContextStatistics {
  std::string context;
  Pair p_a{};
  Pair p_b{};
  Matrix2 transition{};
  bool empirical = false;

  double u_a(std::size_t i) const;
  double u_b(std::size_t j) const;
  double u(std::size_t i, std::size_t j) const;
};

class FiniteContextSpace {
 public:
  /// Validates weights (finite, non-negative, sum 1 +- 1e-9), unique ids and
  /// declared context names. Throws hyperprob::Error.
  FiniteContextSpace(std::vector<Atom> atoms, std::vector<std::string> contexts);

  /// Same validation after dividing every weight by their total.
  static FiniteContextSpace normalized(std::vector<Atom> atoms,
                                       std::vector<std::string> contexts);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<std::string>& declared_contexts() const { return contexts_; }

  /// Declared contexts followed by OMEGA, A1, A2, B1, B2.
  std::vector<std::string> all_context_names() const;

  /// Resolves a declared or reserved context name.
  /// Throws Error(UnknownContextName).
  Event context(std::string_view name) const;

  Event omega() const;
  Event none() const;
  Event a_event(AOutcome a) const;
  Event b_event(BOutcome b) const;

  double prob(const Event& e) const;
  /// Bayes: P(A & C) / P(C). Throws Error(ZeroConditioningContext).
  double cond_prob(const Event& a, const Event& c) const;

  /// P(A_1 & C) > 0 and P(A_2 & C) > 0. Throws if P(C) = 0.
  bool is_nondegenerate(const Event& c) const;
  /// All four cells P(A_i & B_j) are positive.
  bool are_incompatible() const;

  /// Throws Error(ZeroConditioningContext), Error(DegenerateContext) or
  /// Error(CompatibleVariables).
  ContextStatistics context_stats(std::string_view name) const;
  ContextStatistics context_stats(const Event& c, std::string name) const;

  /// Unconditioned p(b_j | a_i).
  Matrix2 transition() const;

  /// FNV-1a hash over ids, weights, labels and memberships.
  std::uint64_t fingerprint() const;

 private:
  std::vector<Atom> atoms_;
  std::vector<std::string> contexts_;
};

bool is_reserved_context(std::string_view name);

bool is_row_stochastic(const Matrix2& p, double tol = kStochasticTolerance);
bool is_double_stochastic(const Matrix2& p, double tol = kStochasticTolerance);

}  // namespace hyperprob
