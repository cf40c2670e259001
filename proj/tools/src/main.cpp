#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "glvo/cli/run.hpp"

namespace {

void add_common(CLI::App& cmd, glvo::cli::RunConfig& config, std::string& engine) {
  cmd.add_option("--h", config.h, "Time step h > 0");
  cmd.add_option("--horizon", config.horizon, "End time; must be a multiple of h");
  cmd.add_option("--schedule", config.schedule,
                 "Order schedule: inline \"t,a;t,a\", @file, or ex1/ex2/a3");
  cmd.add_option("--signal", config.signal, "Input signal: step or file:<path>");
  cmd.add_option("--engine", engine, "direct1, direct2, direct3, matrix or chain")
      ->check(CLI::IsMember({"direct1", "direct2", "direct3", "matrix", "chain"}));
  cmd.add_option("--out", config.out, "CSV output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  using glvo::cli::Command;
  glvo::cli::RunConfig config;
  std::string engine = "direct2";

  CLI::App app{"Grünwald–Letnikov constant and variable order differintegrals"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  auto* weights = app.add_subcommand("weights", "Print GL coefficients w_0..w_{count-1}");
  add_common(*weights, config, engine);
  weights->add_option("--order", config.order, "Order alpha");
  weights->add_option("--count", config.count, "Number of coefficients");

  auto* derive = app.add_subcommand("derive", "Evaluate the differintegral of a signal");
  add_common(*derive, config, engine);
  derive->add_flag("--dump-matrix", config.dump_matrix,
                   "Print the operator matrix to stdout (matrix engine)");

  auto* compare = app.add_subcommand("compare", "Compare against an analytic oracle");
  add_common(*compare, config, engine);
  compare->add_option("--oracle", config.oracle, "ex1, ex2 or const")->required();
  compare->add_option("--coeffs", config.coeffs, "ex2 oracle constants: exact or paper");

  auto* check = app.add_subcommand("check", "Cross-check switching product, matrix, type-2 and chain");
  add_common(*check, config, engine);
  check->add_option("--tol", config.tol, "Maximum allowed discrepancy");

  auto* sweep = app.add_subcommand("sweep", "Repeat compare over several step sizes");
  add_common(*sweep, config, engine);
  sweep->add_option("--oracle", config.oracle, "ex1, ex2 or const")->required();
  sweep->add_option("--coeffs", config.coeffs, "ex2 oracle constants: exact or paper");
  sweep->add_option("--hs", config.hs, "Step sizes, e.g. --hs 0.05,0.01,0.005")
      ->delimiter(',')
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : glvo::cli::kValidationError;
  }

  const std::map<CLI::App*, Command> commands{{weights, Command::kWeights},
                                              {derive, Command::kDerive},
                                              {compare, Command::kCompare},
                                              {check, Command::kCheck},
                                              {sweep, Command::kSweep}};
  config.command = commands.at(app.get_subcommands().front());
  config.engine = glvo::cli::parse_engine(engine);
  return glvo::cli::run(config, std::cout, std::cerr);
}
