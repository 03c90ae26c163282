#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace gmm {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Criterion {
  int id;
  std::string title;
  std::function<CriterionResult()> run;
};

const std::vector<Criterion>& acceptance_criteria();

// Runs the selected criteria (all when `only` is empty), printing one line each.
std::vector<CriterionResult> run_acceptance(std::ostream& out, const std::vector<int>& only = {});

}  // namespace gmm
