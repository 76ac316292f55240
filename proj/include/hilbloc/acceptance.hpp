#pragma once

#include <string>
#include <vector>

namespace hilbloc {

struct AcceptanceOptions {
  int workers = 1;
};

struct CriterionResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

std::vector<std::string> acceptance_ids();

// Throws std::invalid_argument for an unknown id. Exceptions raised while
// checking are reported as failures.
CriterionResult run_criterion(const std::string& id, const AcceptanceOptions& opts = {});

// "PASS A1  title  detail (0.12s)"
std::string format_result(const CriterionResult& r);

}  // namespace hilbloc
