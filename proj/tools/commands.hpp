#pragma once

// Task dispatch shared by the hcalc subcommands and `hcalc run`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hc/io.hpp"

namespace hc::cli {

struct Options {
  std::uint64_t seed = 1;
  int budget = 64;
};

/// Default budget, replaced by HC_BUDGET when that is set to a positive integer.
int default_budget();

struct Outcome {
  Json result;
  /// Set for yes/no tasks; false maps to exit code 1.
  std::optional<bool> verdict;
};

/// Commands: classify, sign, diag, collapse, cones, member, posinv, hsigma,
/// presylvester, maximal-on, represents. Args name forms and elements of the
/// problem: "form", "element", "elements", "cone", "ordering", "orderings",
/// "pivot", "budget".
Outcome execute(const ProblemFile& problem, const Task& task, const Options& options);

const std::vector<std::string>& task_commands();

struct RunReport {
  Json output;
  int exit_code;
};

/// Executes every task in order. A failing task is reported in place and
/// makes the exit code 2; otherwise any false verdict makes it 1.
RunReport run(const ProblemFile& problem, const Options& options);

/// Plain-text rendering of a result.
std::string as_table(const Json& j);

}  // namespace hc::cli
