#pragma once

#include "invol/hpreal.hpp"
#include "invol/identities.hpp"
#include "invol/limits.hpp"
#include "invol/matgroups.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace invol {

using Fields = std::vector<std::pair<std::string, std::string>>;

/// One line of a report. Exact values are stored as strings already, so the
/// renderers never see a floating-point number.
struct ReportRecord {
  std::string kind;
  Fields inputs;
  Fields outputs;
  std::optional<bool> pass;
  std::optional<long long> millis;
};

struct RecordOptions {
  unsigned threads = 1;
  bool timing = true;
  BigInt budget = default_oracle_budget();
};

std::string group_label(const GroupId& g);
std::string hp_digits(const HPReal& x, unsigned digits);

ReportRecord count_record(const GroupId& g, const RecordOptions& options);
ReportRecord order_record(const GroupId& g, const RecordOptions& options);
/// Throws OracleInfeasible when the scan exceeds options.budget.
ReportRecord oracle_record(const GroupId& g, const RecordOptions& options);
ReportRecord identity_record(IdentityId id, const BigRat& q, unsigned order, const RecordOptions& options);
ReportRecord limit_record(const LimitCase& c, unsigned digits, const RecordOptions& options);
std::vector<ReportRecord> convergence_records(const LimitCase& c, const std::vector<unsigned>& n_list,
                                              unsigned digits, std::optional<Family> family,
                                              const RecordOptions& options);

}  // namespace invol
