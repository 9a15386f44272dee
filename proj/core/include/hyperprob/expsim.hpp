#pragma once

// Monte-Carlo two-slit style experiments on a finite context space.
//
// Each draw picks an atom with probability equal to its weight and records
// its (a, b) values and whether it lies in the studied context. Contextual
// frequencies p_C^a, p_C^b come from draws inside the context; the
// transition p(b_j | a_i) comes from the unconditioned joint counts.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperprob/kolmogorov.hpp"

namespace hyperprob {

/// Cell counts over (a, b, in context). Merging is element-wise addition.
struct TrialCounts {
  std::string context;
  std::uint64_t seed = 0;
  std::uint64_t fingerprint = 0;
  std::uint64_t n_total = 0;
  /// cells[a][b][in_context]
  std::array<std::array<std::array<std::uint64_t, 2>, 2>, 2> cells{};

  std::uint64_t n_context() const;
  std::uint64_t n_a_in_context(AOutcome a) const;
  std::uint64_t n_b_in_context(BOutcome b) const;
  std::uint64_t n_a(AOutcome a) const;
  std::uint64_t n_joint(AOutcome a, BOutcome b) const;

  /// Adds another shard. Throws Error(InvalidArgument) when the shards come
  /// from different (space, context, seed).
  TrialCounts& merge(const TrialCounts& other);

  friend bool operator==(const TrialCounts&, const TrialCounts&) = default;
};

/// Draws with global indices [begin, end) of the draw stream.
TrialCounts sample_range(const FiniteContextSpace& space,
                         const std::string& context, std::uint64_t begin,
                         std::uint64_t end, std::uint64_t seed);

/// n draws split into `shards` contiguous ranges run on separate threads.
/// The result does not depend on the shard count.
/// Throws Error(InvalidArgument) when n == 0 or shards == 0.
TrialCounts sample(const FiniteContextSpace& space, const std::string& context,
                   std::uint64_t n, std::uint64_t seed, unsigned shards = 1);

/// Frequency estimates. Throws Error(InsufficientData) when a conditioning
/// count is zero.
ContextStatistics estimate_stats(const TrialCounts& counts);

/// Infinite-sample limit: the exact statistics of the space.
ContextStatistics exact_stats(const FiniteContextSpace& space,
                              const std::string& context);

enum class Verdict { classical, trigonometric, hyperbolic, inconclusive };
std::string_view to_string(Verdict v);

enum class ErrorMethod { bootstrap, delta };
std::string_view to_string(ErrorMethod m);

struct RegimeOptions {
  ErrorMethod method = ErrorMethod::bootstrap;
  unsigned resamples = 200;
  /// Seed of the bootstrap stream; defaults to the sampling seed.
  std::optional<std::uint64_t> bootstrap_seed;
};

struct RegimeReport {
  ContextStatistics stats;
  Pair lambda_hat{};
  Pair stderr_hat{};
  Verdict verdict = Verdict::inconclusive;
  ErrorMethod method = ErrorMethod::bootstrap;
  unsigned resamples = 0;
  /// Bootstrap resamples dropped for lack of data.
  unsigned dropped_resamples = 0;
  std::uint64_t n_effective = 0;
};

/// Verdict from lambda-hat and its standard error s (per outcome):
///   hyperbolic     |l| - 1 > 2s for both outcomes
///   classical      |l| <= 2s and 1 - |l| > 2s for both outcomes
///   trigonometric  1 - |l| > 2s for both, |l| > 2s for at least one
///   inconclusive   otherwise
Verdict decide_regime(const Pair& lambda_hat, const Pair& stderr_hat);

/// Throws Error(InsufficientData) when estimate_stats does.
RegimeReport detect_regime(const TrialCounts& counts,
                           const RegimeOptions& options = {});

/// First-order delta-method standard errors of lambda-hat under the
/// multinomial cell model.
Pair delta_method_stderr(const TrialCounts& counts);

/// n_grid entry 0 denotes the exact (infinite-sample) row.
inline constexpr std::uint64_t kExactTrials = 0;

struct ConvergenceRow {
  std::uint64_t trials = 0;
  std::size_t runs = 0;
  std::size_t skipped = 0;
  Pair mean{};
  Pair spread{};
};

/// For each n, mean and sample standard deviation of lambda-hat over seeds.
/// Runs that hit InsufficientData are skipped and counted.
std::vector<ConvergenceRow> convergence_report(
    const FiniteContextSpace& space, const std::string& context,
    const std::vector<std::uint64_t>& n_grid,
    const std::vector<std::uint64_t>& seeds, unsigned shards = 1);

/// Least-squares slope of log(spread of lambda-hat(b1)) against log(n) over
/// the finite rows with positive spread.
double log_log_slope(const std::vector<ConvergenceRow>& rows);

}  // namespace hyperprob
