#include "cli.hpp"

#include "invol/acceptance.hpp"
#include "invol/counts.hpp"
#include "invol/records.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace invol::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "json";
  std::string output;
  unsigned threads = 1;
  bool no_timing = false;

  std::string family;
  unsigned dim = 0;
  std::string q;
  std::string budget;
  std::string id;
  unsigned order = 12;
  std::string limit_case;
  unsigned digits = 30;
  std::string n_list;
  std::vector<unsigned> criteria;
};

unsigned default_threads() {
  if (const char* env = std::getenv("INVOL_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

Family family_of(const std::string& name) {
  auto f = parse_family(name);
  if (!f) throw UsageError("unknown family '" + name + "'");
  return *f;
}

GroupId group_of(const Config& c) {
  if (c.family.empty()) throw UsageError("--family is required");
  if (c.q.empty()) throw UsageError("--q is required");
  GroupId g{family_of(c.family), c.dim, 0};
  try {
    const unsigned long q = std::stoul(c.q);
    g.q = static_cast<unsigned>(q);
  } catch (const std::exception&) {
    throw UsageError("group q must be a prime power, got '" + c.q + "'");
  }
  try {
    validate(g);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return g;
}

BigRat rational_of(const std::string& text) {
  if (text.empty()) throw UsageError("--q is required");
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("cannot parse rational '" + text + "'");
  }
}

std::vector<unsigned> parse_n_list(const std::string& text) {
  // "1..15", "2..20:2" or "2,4,6"
  std::vector<unsigned> out;
  try {
    auto dots = text.find("..");
    if (dots != std::string::npos) {
      unsigned step = 1;
      std::string rest = text.substr(dots + 2);
      auto colon = rest.find(':');
      if (colon != std::string::npos) {
        step = static_cast<unsigned>(std::stoul(rest.substr(colon + 1)));
        rest = rest.substr(0, colon);
      }
      const unsigned lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
      const unsigned hi = static_cast<unsigned>(std::stoul(rest));
      if (step == 0) throw UsageError("step must be positive");
      for (unsigned n = lo; n <= hi; n += step) out.push_back(n);
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(static_cast<unsigned>(std::stoul(item)));
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("cannot parse n list '" + text + "'");
  }
  if (out.empty()) throw UsageError("empty n list");
  return out;
}

std::vector<LimitTag> limit_tags_of(const std::string& name) {
  if (name.empty()) throw UsageError("--case is required");
  if (name == "all") return all_limit_tags();
  auto t = parse_limit_tag(name);
  if (!t) throw UsageError("unknown limit case '" + name + "'");
  return {*t};
}

std::vector<IdentityId> identities_of(const std::string& name) {
  if (name.empty()) throw UsageError("--id is required");
  if (name == "all") return {all_identities().begin(), all_identities().end()};
  auto id = parse_identity(name);
  if (!id) throw UsageError("unknown identity '" + name + "'");
  return {*id};
}

// Rendering

nlohmann::ordered_json to_json(const std::vector<ReportRecord>& records) {
  auto fields = [](const Fields& f) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (const auto& [k, v] : f) o[k] = v;
    return o;
  };
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json o;
    o["kind"] = r.kind;
    o["inputs"] = fields(r.inputs);
    o["outputs"] = fields(r.outputs);
    o["pass"] = r.pass ? nlohmann::ordered_json(*r.pass) : nlohmann::ordered_json(nullptr);
    o["millis"] = r.millis ? nlohmann::ordered_json(*r.millis) : nlohmann::ordered_json(nullptr);
    arr.push_back(std::move(o));
  }
  return arr;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render_csv(const std::vector<ReportRecord>& records, std::ostream& out) {
  out << "record,kind,section,key,value\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    auto row = [&](const char* section, const std::string& key, const std::string& value) {
      out << i << ',' << csv_cell(r.kind) << ',' << section << ',' << csv_cell(key) << ',' << csv_cell(value) << '\n';
    };
    for (const auto& [k, v] : r.inputs) row("inputs", k, v);
    for (const auto& [k, v] : r.outputs) row("outputs", k, v);
    row("pass", "pass", r.pass ? (*r.pass ? "true" : "false") : "");
    row("millis", "millis", r.millis ? std::to_string(*r.millis) : "");
  }
}

void render_text(const std::vector<ReportRecord>& records, std::ostream& out) {
  for (const auto& r : records) {
    out << r.kind;
    for (const auto& [k, v] : r.inputs) out << ' ' << k << '=' << v;
    out << " ->";
    for (const auto& [k, v] : r.outputs) out << ' ' << k << '=' << v;
    if (r.pass) out << (*r.pass ? "  [PASS]" : "  [FAIL]");
    if (r.millis) out << "  (" << *r.millis << " ms)";
    out << '\n';
  }
}

void render(const std::vector<ReportRecord>& records, const std::string& format, std::ostream& out) {
  if (format == "json") out << to_json(records).dump(2) << '\n';
  else if (format == "csv") render_csv(records, out);
  else render_text(records, out);
}

// Commands

RecordOptions record_options(const Config& c) {
  RecordOptions o;
  o.threads = c.threads;
  o.timing = !c.no_timing;
  if (!c.budget.empty()) {
    try {
      o.budget = BigInt(c.budget, 10);
    } catch (const std::exception&) {
      throw UsageError("cannot parse budget '" + c.budget + "'");
    }
    if (o.budget < 0) throw UsageError("budget must be non-negative");
  }
  return o;
}

std::vector<ReportRecord> run_limit(const Config& c, const RecordOptions& o) {
  const BigRat q = rational_of(c.q);
  if (q <= 1) throw UsageError("limit constants need q > 1");
  if (c.digits < 10) throw UsageError("--digits must be at least 10");
  std::vector<ReportRecord> out;
  for (LimitTag t : limit_tags_of(c.limit_case)) out.push_back(limit_record({t, q}, c.digits, o));
  return out;
}

std::vector<ReportRecord> run_convergence(const Config& c, const RecordOptions& o) {
  const auto tags = limit_tags_of(c.limit_case);
  if (tags.size() != 1) throw UsageError("convergence takes a single case");
  const BigRat q = rational_of(c.q);
  const std::vector<unsigned> ns = parse_n_list(c.n_list.empty() ? "1..10" : c.n_list);
  std::optional<Family> family;
  if (!c.family.empty()) family = family_of(c.family);
  try {
    return convergence_records({tags.front(), q}, ns, c.digits, family, o);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<ReportRecord> run_full_suite(const Config& c, const RecordOptions& o) {
  std::vector<unsigned> which = c.criteria;
  if (which.empty())
    for (unsigned i = 1; i <= kCriterionCount; ++i) which.push_back(i);
  for (unsigned i : which)
    if (i < 1 || i > kCriterionCount) throw UsageError("criterion out of range");
  std::vector<ReportRecord> out;
  for (unsigned i : which) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult res = run_criterion(i, o);
    for (auto& r : res.records) out.push_back(std::move(r));
    std::optional<long long> ms;
    if (o.timing)
      ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    out.push_back({"criterion",
                   {{"number", std::to_string(res.number)}, {"title", res.title}},
                   {{"summary", res.summary}},
                   res.pass,
                   ms});
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  c.threads = default_threads();
  CLI::App app{"Involution counts, identities and limit constants for finite classical groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", c.output, "Write the report to this file");
  app.add_option("--threads", c.threads, "Worker threads (default: INVOL_THREADS or 1)")->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", c.no_timing, "Omit wall times so output is reproducible");

  auto group_opts = [&](CLI::App* sub) {
    sub->add_option("--family", c.family, "gl, u, sp, o-plus, o-minus, o-odd")->required();
    sub->add_option("--dim", c.dim, "Matrix dimension")->required();
    sub->add_option("--q", c.q, "Field size")->required();
  };
  auto* count = app.add_subcommand("count", "Closed-form involution count");
  group_opts(count);
  auto* order = app.add_subcommand("order", "Group order");
  group_opts(order);
  auto* oracle = app.add_subcommand("oracle", "Exhaustive scan of the matrix space");
  group_opts(oracle);
  oracle->add_option("--budget", c.budget, "Maximum number of matrices to scan");
  auto* ident = app.add_subcommand("verify-identity", "Check a sum=product identity coefficientwise");
  ident->add_option("--id", c.id, "Identity tag or 'all'")->required();
  ident->add_option("--q", c.q, "Rational q, e.g. 2 or 7/2")->required();
  ident->add_option("--order", c.order, "Truncation order N");
  auto* limit = app.add_subcommand("limit", "Evaluate a limiting constant in both forms");
  limit->add_option("--case", c.limit_case, "Limit case or 'all'")->required();
  limit->add_option("--q", c.q, "Rational q > 1")->required();
  limit->add_option("--digits", c.digits, "Decimal digits D");
  auto* conv = app.add_subcommand("convergence", "Distances of exact ratios to a limiting constant");
  conv->add_option("--case", c.limit_case, "Limit case")->required();
  conv->add_option("--q", c.q, "Prime power q")->required();
  conv->add_option("--n", c.n_list, "n values: '1..15', '2..20:2' or '2,4,6'");
  conv->add_option("--family", c.family, "o-plus or o-minus for the orthogonal cases");
  conv->add_option("--digits", c.digits, "Decimal digits D");
  auto* suite = app.add_subcommand("full-suite", "Run the acceptance battery");
  suite->add_option("--criterion", c.criteria, "Run only these criteria");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  std::vector<ReportRecord> records;
  try {
    const RecordOptions opts = record_options(c);
    if (count->parsed()) records.push_back(count_record(group_of(c), opts));
    else if (order->parsed()) records.push_back(order_record(group_of(c), opts));
    else if (oracle->parsed()) records.push_back(oracle_record(group_of(c), opts));
    else if (ident->parsed()) {
      const BigRat q = rational_of(c.q);
      if (q <= 0) throw UsageError("q must be positive");
      if (c.order < 1) throw UsageError("--order must be positive");
      for (IdentityId id : identities_of(c.id)) records.push_back(identity_record(id, q, c.order, opts));
    } else if (limit->parsed()) records = run_limit(c, opts);
    else if (conv->parsed()) records = run_convergence(c, opts);
    else if (suite->parsed()) records = run_full_suite(c, opts);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const OracleInfeasible& e) {
    err << "oracle infeasible: " << e.what() << '\n';
    return kOracleInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  if (c.output.empty()) {
    render(records, c.format, out);
  } else {
    std::ofstream file(c.output);
    if (!file) {
      err << "usage error: cannot open " << c.output << '\n';
      return kUsageError;
    }
    render(records, c.format, file);
  }
  const bool failed = std::any_of(records.begin(), records.end(), [](const ReportRecord& r) { return r.pass == false; });
  return failed ? kVerificationFailure : kPass;
}

}  // namespace invol::cli
