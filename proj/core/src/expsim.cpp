#include "hyperprob/expsim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "hyperprob/errors.hpp"
#include "hyperprob/interference.hpp"
#include "hyperprob/philox.hpp"

namespace hyperprob {

namespace {

// Flattened cell order: index = 4 a + 2 b + in_context.
using CellVector = std::array<double, 8>;

constexpr std::size_t cell_index(std::size_t a, std::size_t b, std::size_t in) {
  return 4 * a + 2 * b + in;
}

CellVector flatten(const TrialCounts& c) {
  CellVector v{};
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t in = 0; in < 2; ++in)
        v[cell_index(a, b, in)] = static_cast<double>(c.cells[a][b][in]);
  return v;
}

ContextStatistics stats_from_cells(const CellVector& n, const std::string& name) {
  auto cell = [&](std::size_t a, std::size_t b, std::size_t in) {
    return n[cell_index(a, b, in)];
  };
  double n_context = 0.0;
  Pair n_a_context{}, n_b_context{}, n_a{};
  Matrix2 n_joint{};
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      n_context += cell(a, b, 1);
      n_a_context[a] += cell(a, b, 1);
      n_b_context[b] += cell(a, b, 1);
      n_joint[a][b] = cell(a, b, 0) + cell(a, b, 1);
      n_a[a] += n_joint[a][b];
    }
  }
  if (!(n_context > 0.0)) {
    throw Error(ErrorCode::InsufficientData, "no draws landed in context '" + name + "'");
  }
  for (std::size_t a = 0; a < 2; ++a) {
    if (!(n_a[a] > 0.0)) {
      throw Error(ErrorCode::InsufficientData,
                  "no draws with a = a" + std::to_string(a + 1));
    }
  }
  ContextStatistics s;
  s.context = name;
  s.empirical = true;
  for (std::size_t i = 0; i < 2; ++i) {
    s.p_a[i] = n_a_context[i] / n_context;
    s.p_b[i] = n_b_context[i] / n_context;
    for (std::size_t j = 0; j < 2; ++j) s.transition[i][j] = n_joint[i][j] / n_a[i];
  }
  return s;
}

Pair lambda_from_cells(const CellVector& n, const std::string& name) {
  try {
    return lambda_coefficients(stats_from_cells(n, name));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ZeroDenominator) {
      throw Error(ErrorCode::InsufficientData, e.what());
    }
    throw;
  }
}

double sample_stddev(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / (xs.size() - 1));
}

}  // namespace

std::uint64_t TrialCounts::n_context() const {
  std::uint64_t n = 0;
  for (const auto& a : cells)
    for (const auto& b : a) n += b[1];
  return n;
}

std::uint64_t TrialCounts::n_a_in_context(AOutcome a) const {
  const auto& row = cells[index(a)];
  return row[0][1] + row[1][1];
}

std::uint64_t TrialCounts::n_b_in_context(BOutcome b) const {
  return cells[0][index(b)][1] + cells[1][index(b)][1];
}

std::uint64_t TrialCounts::n_a(AOutcome a) const {
  const auto& row = cells[index(a)];
  return row[0][0] + row[0][1] + row[1][0] + row[1][1];
}

std::uint64_t TrialCounts::n_joint(AOutcome a, BOutcome b) const {
  const auto& cell = cells[index(a)][index(b)];
  return cell[0] + cell[1];
}

TrialCounts& TrialCounts::merge(const TrialCounts& other) {
  if (context != other.context || seed != other.seed ||
      fingerprint != other.fingerprint) {
    throw Error(ErrorCode::InvalidArgument,
                "cannot merge counts from different experiments");
  }
  n_total += other.n_total;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t in = 0; in < 2; ++in)
        cells[a][b][in] += other.cells[a][b][in];
  return *this;
}

TrialCounts sample_range(const FiniteContextSpace& space,
                         const std::string& context, std::uint64_t begin,
                         std::uint64_t end, std::uint64_t seed) {
  const Event c = space.context(context);
  const auto& atoms = space.atoms();

  std::vector<double> cumulative(atoms.size());
  std::vector<std::size_t> atom_cell(atoms.size());
  std::size_t last_positive = 0;
  double acc = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    acc += atoms[i].weight;
    cumulative[i] = acc;
    atom_cell[i] = cell_index(index(atoms[i].a), index(atoms[i].b),
                              c.contains(i) ? 1 : 0);
    if (atoms[i].weight > 0.0) last_positive = i;
  }

  std::array<std::uint64_t, 8> tally{};
  for (std::uint64_t i = begin; i < end; ++i) {
    const double target =
        to_unit_interval(philox_u64(seed, PhiloxStream::draws, i)) * acc;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
    const std::size_t atom = it == cumulative.end()
                                 ? last_positive
                                 : static_cast<std::size_t>(it - cumulative.begin());
    ++tally[atom_cell[atom]];
  }

  TrialCounts counts;
  counts.context = context;
  counts.seed = seed;
  counts.fingerprint = space.fingerprint();
  counts.n_total = end - begin;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t in = 0; in < 2; ++in)
        counts.cells[a][b][in] = tally[cell_index(a, b, in)];
  return counts;
}

TrialCounts sample(const FiniteContextSpace& space, const std::string& context,
                   std::uint64_t n, std::uint64_t seed, unsigned shards) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "need at least one trial");
  if (shards == 0) throw Error(ErrorCode::InvalidArgument, "need at least one shard");
  space.context(context);  // validate the name before spawning threads

  const std::uint64_t k = std::min<std::uint64_t>(shards, n);
  std::vector<TrialCounts> parts(k);
  auto bounds = [&](std::uint64_t s) { return n / k * s + std::min(s, n % k); };
  if (k == 1) {
    parts[0] = sample_range(space, context, 0, n, seed);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(k);
    for (std::uint64_t s = 0; s < k; ++s) {
      workers.emplace_back([&, s] {
        parts[s] = sample_range(space, context, bounds(s), bounds(s + 1), seed);
      });
    }
  }
  TrialCounts total = parts[0];
  for (std::uint64_t s = 1; s < k; ++s) total.merge(parts[s]);
  return total;
}

ContextStatistics estimate_stats(const TrialCounts& counts) {
  return stats_from_cells(flatten(counts), counts.context);
}

ContextStatistics exact_stats(const FiniteContextSpace& space,
                              const std::string& context) {
  return space.context_stats(context);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::classical: return "classical";
    case Verdict::trigonometric: return "trigonometric";
    case Verdict::hyperbolic: return "hyperbolic";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string_view to_string(ErrorMethod m) {
  return m == ErrorMethod::bootstrap ? "bootstrap" : "delta";
}

Verdict decide_regime(const Pair& l, const Pair& s) {
  // Absorbs round-off when lambda-hat is identically zero with zero spread.
  constexpr double kSlack = 1e-12;
  bool hyperbolic = true, below_one = true, near_zero = true, off_zero = false;
  for (std::size_t x = 0; x < 2; ++x) {
    const double a = std::abs(l[x]);
    hyperbolic = hyperbolic && (a - 1.0 > 2.0 * s[x]);
    below_one = below_one && (1.0 - a > 2.0 * s[x]);
    near_zero = near_zero && (a <= 2.0 * s[x] + kSlack);
    off_zero = off_zero || (a > 2.0 * s[x] + kSlack);
  }
  if (hyperbolic) return Verdict::hyperbolic;
  if (below_one && near_zero) return Verdict::classical;
  if (below_one && off_zero) return Verdict::trigonometric;
  return Verdict::inconclusive;
}

Pair delta_method_stderr(const TrialCounts& counts) {
  const CellVector n = flatten(counts);
  const double total = std::accumulate(n.begin(), n.end(), 0.0);
  CellVector q{};
  for (std::size_t c = 0; c < 8; ++c) q[c] = n[c] / total;

  // lambda-hat is homogeneous of degree zero in the counts, so it can be
  // differentiated with respect to the cell proportions directly.
  std::array<Pair, 8> grad{};
  const Pair base = lambda_from_cells(q, counts.context);
  for (std::size_t c = 0; c < 8; ++c) {
    const double h = 1e-6 * std::max(q[c], 1e-3);
    CellVector up = q;
    up[c] += h;
    const Pair f_up = lambda_from_cells(up, counts.context);
    if (q[c] > h) {
      CellVector down = q;
      down[c] -= h;
      const Pair f_down = lambda_from_cells(down, counts.context);
      for (std::size_t x = 0; x < 2; ++x) grad[c][x] = (f_up[x] - f_down[x]) / (2 * h);
    } else {
      for (std::size_t x = 0; x < 2; ++x) grad[c][x] = (f_up[x] - base[x]) / h;
    }
  }
  Pair out{};
  for (std::size_t x = 0; x < 2; ++x) {
    double m1 = 0.0, m2 = 0.0;
    for (std::size_t c = 0; c < 8; ++c) {
      m1 += q[c] * grad[c][x];
      m2 += q[c] * grad[c][x] * grad[c][x];
    }
    out[x] = std::sqrt(std::max(0.0, m2 - m1 * m1) / total);
  }
  return out;
}

RegimeReport detect_regime(const TrialCounts& counts,
                           const RegimeOptions& options) {
  RegimeReport r;
  r.stats = estimate_stats(counts);
  r.lambda_hat = lambda_from_cells(flatten(counts), counts.context);
  r.method = options.method;
  r.n_effective = counts.n_context();

  if (options.method == ErrorMethod::delta) {
    r.stderr_hat = delta_method_stderr(counts);
  } else {
    if (options.resamples < 2) {
      throw Error(ErrorCode::InvalidArgument, "bootstrap needs at least 2 resamples");
    }
    r.resamples = options.resamples;
    const CellVector n = flatten(counts);
    const std::uint64_t seed = options.bootstrap_seed.value_or(counts.seed);
    std::array<std::vector<double>, 2> draws;
    for (unsigned b = 0; b < options.resamples; ++b) {
      // Each resample owns a disjoint block range of the bootstrap stream.
      PhiloxEngine engine(seed, PhiloxStream::bootstrap,
                          static_cast<std::uint64_t>(b) << 32);
      CellVector resampled{};
      std::uint64_t remaining = counts.n_total;
      double mass = static_cast<double>(counts.n_total);
      for (std::size_t c = 0; c < 8 && remaining > 0; ++c) {
        if (c == 7 || n[c] >= mass) {
          resampled[c] = static_cast<double>(remaining);
          remaining = 0;
          break;
        }
        std::binomial_distribution<std::uint64_t> binom(remaining, n[c] / mass);
        const std::uint64_t k = binom(engine);
        resampled[c] = static_cast<double>(k);
        remaining -= k;
        mass -= n[c];
      }
      try {
        const Pair l = lambda_from_cells(resampled, counts.context);
        draws[0].push_back(l[0]);
        draws[1].push_back(l[1]);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::InsufficientData) throw;
        ++r.dropped_resamples;
      }
    }
    if (draws[0].size() < 2) {
      throw Error(ErrorCode::InsufficientData,
                  "fewer than two bootstrap resamples produced an estimate");
    }
    r.stderr_hat = {sample_stddev(draws[0]), sample_stddev(draws[1])};
  }
  r.verdict = decide_regime(r.lambda_hat, r.stderr_hat);
  return r;
}

std::vector<ConvergenceRow> convergence_report(
    const FiniteContextSpace& space, const std::string& context,
    const std::vector<std::uint64_t>& n_grid,
    const std::vector<std::uint64_t>& seeds, unsigned shards) {
  std::vector<ConvergenceRow> rows;
  for (std::uint64_t n : n_grid) {
    ConvergenceRow row;
    row.trials = n;
    if (n == kExactTrials) {
      row.mean = lambda_coefficients(exact_stats(space, context));
      row.runs = 1;
      rows.push_back(row);
      continue;
    }
    std::array<std::vector<double>, 2> values;
    for (std::uint64_t seed : seeds) {
      try {
        const Pair l = lambda_from_cells(
            flatten(sample(space, context, n, seed, shards)), context);
        values[0].push_back(l[0]);
        values[1].push_back(l[1]);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::InsufficientData) throw;
        ++row.skipped;
      }
    }
    row.runs = values[0].size();
    for (std::size_t x = 0; x < 2; ++x) {
      if (!values[x].empty()) {
        row.mean[x] = std::accumulate(values[x].begin(), values[x].end(), 0.0) /
                      values[x].size();
      }
      row.spread[x] = sample_stddev(values[x]);
    }
    rows.push_back(row);
  }
  return rows;
}

double log_log_slope(const std::vector<ConvergenceRow>& rows) {
  std::vector<double> xs, ys;
  for (const auto& row : rows) {
    if (row.trials == kExactTrials || !(row.spread[0] > 0.0)) continue;
    xs.push_back(std::log(static_cast<double>(row.trials)));
    ys.push_back(std::log(row.spread[0]));
  }
  if (xs.size() < 2) {
    throw Error(ErrorCode::InsufficientData, "need two finite rows for a slope");
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace hyperprob
