#pragma once

// Command implementations behind the hyperprob executable. Each command
// writes its report to `out`, diagnostics to `err`, and returns the process
// exit code.

#include <cstdint>
#include <ostream>
#include <string>

#include "hyperprob/errors.hpp"
#include "hyperprob/json_io.hpp"

namespace hyperprob::cli {

enum class Format { json, text };

enum ExitCode : int {
  kOk = 0,
  kChecksFailed = 1,
  kValidationError = 2,
  kNotHyperbolic = 3,
  kDomainError = 4,
};

struct CommonOptions {
  Format format = Format::json;
  double tolerance = kUnitarityTolerance;
};

struct SimulateOptions {
  std::string space_file;
  std::string context;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 42;
  unsigned shards = 1;
  /// 0 selects the delta method.
  unsigned bootstrap = 200;
};

/// Maps a library error to an exit code.
int exit_code_for(ErrorCode code);

Json classify_report(const FiniteContextSpace& space, const std::string& context);
Json represent_report(const FiniteContextSpace& space, const std::string& context);
/// Sets all_passed to false if any check fails.
Json verify_report(const FiniteContextSpace& space, double tolerance,
                   bool& all_passed);
Json forward_report(const HyperState& v_a, const GMatrix2& v, double tolerance);
Json simulate_report(const FiniteContextSpace& space, const SimulateOptions& opts);

int classify_cmd(const std::string& space_file, const std::string& context,
                 const CommonOptions& opts, std::ostream& out, std::ostream& err);
int represent_cmd(const std::string& space_file, const std::string& context,
                  const CommonOptions& opts, std::ostream& out, std::ostream& err);
int verify_cmd(const std::string& space_file, const CommonOptions& opts,
               std::ostream& out, std::ostream& err);
int forward_cmd(const std::string& state_file, const std::string& matrix_file,
                const CommonOptions& opts, std::ostream& out, std::ostream& err);
int simulate_cmd(const SimulateOptions& sim, const CommonOptions& opts,
                 std::ostream& out, std::ostream& err);

/// Two-space indented dump with trailing newline.
std::string emit(const Json& report);

}  // namespace hyperprob::cli
