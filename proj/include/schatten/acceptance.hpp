#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace schatten {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;  // measured numbers backing the verdict, one line
};

struct AcceptanceConfig {
  std::vector<int> criteria;  // empty means all of 1..11
  std::string cli_path;       // executable checked by the reproducibility criterion
  int threads = 1;
  std::uint64_t seed = 20260817;  // base seed for the randomized criteria
};

// Runs the requested criteria in id order. Every tolerance is pinned inside;
// the config only selects criteria and supplies seed/threads/CLI plumbing.
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config);

// One line per criterion: "criterion NN PASS|FAIL title | detail".
void print_results(const std::vector<CriterionResult>& results, std::ostream& os);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace schatten
