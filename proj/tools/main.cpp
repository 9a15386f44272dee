#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace hyperprob::cli;

  CLI::App app{"Contextual probability with hyperbolic interference"};
  app.set_version_flag("--version", std::string(hyperprob::version()));
  app.require_subcommand(1);

  CommonOptions common;
  const std::map<std::string, Format> formats{{"json", Format::json},
                                              {"text", Format::text}};
  app.add_option("--format", common.format, "Report format: json or text")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--tolerance", common.tolerance,
                 "Absolute tolerance for unitarity, Born and stochasticity checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string space_file, context, state_file, matrix_file;

  auto* classify = app.add_subcommand("classify", "Disturbance coefficients and context class");
  classify->add_option("--space", space_file, "Space JSON file")->required();
  classify->add_option("--context", context, "Context name (declared, OMEGA, A1, A2, B1, B2)")
      ->required();

  auto* represent = app.add_subcommand("represent", "Hyperbolic amplitude and a-basis of a context");
  represent->add_option("--space", space_file, "Space JSON file")->required();
  represent->add_option("--context", context, "Context name")->required();

  auto* verify = app.add_subcommand("verify", "Run every invariant check on every context");
  verify->add_option("--space", space_file, "Space JSON file")->required();

  auto* forward = app.add_subcommand("forward", "Probabilities of an a-state after a change of basis");
  forward->add_option("--state", state_file, "State JSON file (basis \"a\")")->required();
  forward->add_option("--matrix", matrix_file, "Transition matrix JSON file")->required();

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo estimate of lambda and regime verdict");
  simulate->add_option("--space", sim.space_file, "Space JSON file")->required();
  simulate->add_option("--context", sim.context, "Context name")->required();
  simulate->add_option("--trials", sim.trials, "Number of draws")
      ->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--seed", sim.seed, "Generator seed")->capture_default_str();
  simulate->add_option("--shards", sim.shards, "Parallel shards")
      ->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--bootstrap", sim.bootstrap,
                       "Bootstrap resamples for the standard error (0: delta method)")
      ->capture_default_str();
  for (auto* sub : {classify, represent, verify, forward, simulate}) {
    sub->add_option("--format", common.format, "Report format: json or text")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--tolerance", common.tolerance, "Check tolerance")
        ->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*classify) return classify_cmd(space_file, context, common, std::cout, std::cerr);
  if (*represent) return represent_cmd(space_file, context, common, std::cout, std::cerr);
  if (*verify) return verify_cmd(space_file, common, std::cout, std::cerr);
  if (*forward) return forward_cmd(state_file, matrix_file, common, std::cout, std::cerr);
  if (*simulate) return simulate_cmd(sim, common, std::cout, std::cerr);
  return 0;
}
