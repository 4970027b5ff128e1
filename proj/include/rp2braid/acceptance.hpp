#pragma once

#include <string>
#include <vector>

namespace rp2braid {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::string detail;  // first failure, or a summary
};

/// Criterion ids for a named suite: orders, finite-cases, p3, kernel,
/// classify, all. Throws std::invalid_argument for unknown names.
std::vector<int> suite_criteria(const std::string& suite);

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_suite(const std::string& suite);

std::string format_criterion_line(const CriterionResult& r);

}  // namespace rp2braid
