#include "invol/records.hpp"

#include "invol/counts.hpp"

#include <chrono>

namespace invol {

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  std::optional<long long> millis() const {
    if (!enabled_) return std::nullopt;
    auto elapsed = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

Fields group_inputs(const GroupId& g) {
  return {{"family", std::string(family_name(g.family))}, {"dim", std::to_string(g.dim)}, {"q", std::to_string(g.q)}};
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string group_label(const GroupId& g) {
  return std::string(family_name(g.family)) + "(" + std::to_string(g.dim) + "," + std::to_string(g.q) + ")";
}

std::string hp_digits(const HPReal& x, unsigned digits) { return x.decimal(digits); }

ReportRecord count_record(const GroupId& g, const RecordOptions& options) {
  Stopwatch watch(options.timing);
  BigInt count = count_involutions(g);
  return {"count", group_inputs(g), {{"involutions", to_decimal_string(count)}}, std::nullopt, watch.millis()};
}

ReportRecord order_record(const GroupId& g, const RecordOptions& options) {
  Stopwatch watch(options.timing);
  BigInt order = group_order(g);
  return {"order", group_inputs(g), {{"order", to_decimal_string(order)}}, std::nullopt, watch.millis()};
}

ReportRecord oracle_record(const GroupId& g, const RecordOptions& options) {
  Stopwatch watch(options.timing);
  OracleOptions oracle;
  oracle.budget = options.budget;
  oracle.threads = options.threads;
  Census census = oracle_census(g, oracle);
  BigInt order = group_order(g);
  BigInt count = count_involutions(g);
  const bool pass = census.order == order && census.involutions == count;
  return {"oracle",
          group_inputs(g),
          {{"oracle_order", to_decimal_string(census.order)},
           {"oracle_involutions", to_decimal_string(census.involutions)},
           {"formula_order", to_decimal_string(order)},
           {"formula_involutions", to_decimal_string(count)}},
          pass,
          watch.millis()};
}

ReportRecord identity_record(IdentityId id, const BigRat& q, unsigned order, const RecordOptions& options) {
  Stopwatch watch(options.timing);
  IdentityReport report = verify(id, q, order);
  Fields outputs = {{"match", bool_str(report.match)}};
  if (report.first_mismatch) {
    outputs.emplace_back("mismatch_degree", std::to_string(report.first_mismatch->degree));
    outputs.emplace_back("mismatch_lhs", to_fraction_string(report.first_mismatch->lhs));
    outputs.emplace_back("mismatch_rhs", to_fraction_string(report.first_mismatch->rhs));
  }
  if (!report.parameters.empty()) outputs.emplace_back("parameters", report.parameters);
  return {"verify-identity",
          {{"id", std::string(identity_tag(id))}, {"q", to_fraction_string(q)}, {"order", std::to_string(order)}},
          std::move(outputs),
          report.match,
          watch.millis()};
}

ReportRecord limit_record(const LimitCase& c, unsigned digits, const RecordOptions& options) {
  Stopwatch watch(options.timing);
  HPReal value = limit_constant(c, digits);
  HPReal alt = limit_constant_alt(c, digits);
  const bool two_forms = limit_shape(c.tag).two_forms;
  const bool agree = certainly_consistent(value, alt);
  return {"limit",
          {{"case", limit_tag_name(c.tag)}, {"q", to_fraction_string(c.q)}, {"digits", std::to_string(digits)}},
          {{"value", hp_digits(value, digits)},
           {"err_exponent", std::to_string(value.err_exponent())},
           {"alt_value", hp_digits(alt, digits)},
           {"alt_err_exponent", std::to_string(alt.err_exponent())},
           {"two_forms", bool_str(two_forms)}},
          agree,
          watch.millis()};
}

std::vector<ReportRecord> convergence_records(const LimitCase& c, const std::vector<unsigned>& n_list,
                                              unsigned digits, std::optional<Family> family,
                                              const RecordOptions& options) {
  Stopwatch watch(options.timing);
  ConvergenceReport report = convergence_report(c, n_list, digits, family);
  const Fields base = {{"case", limit_tag_name(c.tag)},
                       {"q", to_fraction_string(c.q)},
                       {"family", std::string(family_name(report.family))}};
  std::vector<ReportRecord> out;
  for (const auto& row : report.rows) {
    Fields inputs = base;
    inputs.emplace_back("n", std::to_string(row.n));
    out.push_back({"convergence-row",
                   std::move(inputs),
                   {{"ratio", to_fraction_string(row.ratio)},
                    {"distance_lower", to_fraction_string(row.dist_lower)},
                    {"distance_upper", to_fraction_string(row.dist_upper)}},
                   std::nullopt,
                   std::nullopt});
  }
  const BigRat final_upper = report.rows.empty() ? BigRat(0) : report.rows.back().dist_upper;
  out.push_back({"convergence",
                 base,
                 {{"limit", hp_digits(report.limit, digits)},
                  {"limit_err_exponent", std::to_string(report.limit.err_exponent())},
                  {"strictly_decreasing", bool_str(report.strictly_decreasing())},
                  {"final_distance_upper", to_fraction_string(final_upper)}},
                 report.strictly_decreasing(),
                 watch.millis()});
  return out;
}

}  // namespace invol
