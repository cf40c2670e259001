#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glvo/timed_schedule.hpp"

namespace glvo::cli {

enum class Command { kWeights, kDerive, kCompare, kCheck, kSweep };
enum class Engine { kDirect1, kDirect2, kDirect3, kMatrix, kChain };

/// Exit statuses of `run`.
enum ExitCode : int { kOk = 0, kValidationError = 1, kToleranceBreach = 2 };

/// Largest sample index the direct and chain engines accept.
inline constexpr std::size_t kMaxDirectSamples = 100'000;

struct RunConfig {
  Command command = Command::kDerive;
  Engine engine = Engine::kDirect2;
  std::optional<double> h;
  std::optional<double> horizon;
  std::optional<std::string> schedule;  // inline "t,a;t,a", @file, or ex1/ex2/a3
  std::string signal = "step";          // "step" or "file:<path>"
  std::optional<std::string> oracle;    // ex1, ex2, const
  std::string coeffs = "exact";         // ex2 oracle constants: exact or paper
  std::optional<std::string> out;       // CSV path; stdout when absent
  bool dump_matrix = false;
  std::vector<double> hs;               // sweep steps
  double tol = 1e-9;                    // check tolerance
  std::optional<double> order;          // weights
  std::optional<std::size_t> count;     // weights
};

/// Lines (or ';'-separated entries) of "t_start,alpha"; '#' starts a comment.
TimedSchedule parse_schedule(std::string_view text);

/// Resolves a --schedule argument: a named schedule, "@path", or inline text.
TimedSchedule resolve_schedule(std::string_view arg);

Engine parse_engine(std::string_view name);

/// Executes one command. CSV goes to config.out or `out`; diagnostics go to `err`.
/// Validation failures are reported on `err` and yield kValidationError.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace glvo::cli
