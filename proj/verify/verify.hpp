#pragma once

// The acceptance suite: one result per criterion, run over the built-in zoo.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hc::verify {

struct CriterionResult {
  int id;
  std::string title;
  bool pass;
  /// Counts and tolerances behind the verdict.
  std::string detail;
  double seconds;
};

struct Criterion {
  int id;
  std::string title;
  std::function<CriterionResult(std::uint64_t seed)> run;
};

const std::vector<Criterion>& criteria();

/// Runs the selected criteria (all when `only` is empty) in order.
std::vector<CriterionResult> run_all(std::uint64_t seed, const std::vector<int>& only = {});

/// "PASS  3  signature laws  (...)"
std::string format_line(const CriterionResult& r);

}  // namespace hc::verify
