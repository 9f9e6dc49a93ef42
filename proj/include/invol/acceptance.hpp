#pragma once

#include "invol/records.hpp"

#include <string>
#include <vector>

namespace invol {

struct CriterionResult {
  unsigned number;
  std::string title;
  bool pass;
  std::string summary;
  std::vector<ReportRecord> records;
};

constexpr unsigned kCriterionCount = 8;

/// Runs one criterion of the acceptance battery (1..kCriterionCount).
CriterionResult run_criterion(unsigned number, const RecordOptions& options);
std::vector<CriterionResult> run_acceptance(const RecordOptions& options);

/// The oracle cases checked by criterion 1.
std::vector<GroupId> acceptance_oracle_cases();

}  // namespace invol
