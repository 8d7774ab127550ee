#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigsum/asymptotics.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/harmonic_series.hpp"
#include "trigsum/number_tables.hpp"
#include "trigsum/trig_sums.hpp"
#include "trigsum/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Range {
  std::int64_t from = 0;
  std::int64_t to = 0;
};

std::int64_t parse_int(const std::string& text) {
  size_t used = 0;
  const std::int64_t v = std::stoll(text, &used);
  if (used != text.size()) throw std::invalid_argument("trailing characters");
  return v;
}

// "p" or "a..b", both ends >= 1.
Range parse_range(const std::string& text) {
  Range r;
  const auto sep = text.find("..");
  try {
    if (sep == std::string::npos) {
      r.from = r.to = parse_int(text);
    } else {
      r.from = parse_int(text.substr(0, sep));
      r.to = parse_int(text.substr(sep + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("range '" + text +
                                "' is not 'p' or 'a..b' with integers");
  }
  if (r.from < 1 || r.to < r.from) {
    throw std::invalid_argument("range '" + text +
                                "' must satisfy 1 <= a <= b");
  }
  return r;
}

struct OutputTarget {
  std::ostream* os = &std::cout;
  std::ofstream file;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path, std::ios::binary);
    if (!file) {
      throw std::invalid_argument("cannot open output file '" + path + "'");
    }
    os = &file;
  }
};

struct SumRow {
  std::int64_t p;
  trigsum::Scalar value;
  std::optional<trigsum::Scalar> tail_bound;
};

void emit_sum_rows(const std::vector<SumRow>& rows, const std::string& format,
                   int digits, std::ostream& os) {
  if (format == "csv") {
    os << "p,value,tail_bound\n";
    for (const auto& row : rows) {
      os << row.p << ',' << row.value.to_string(digits) << ',';
      if (row.tail_bound) os << row.tail_bound->to_string(3);
      os << '\n';
    }
  } else if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json item = {{"p", row.p},
                                     {"value", row.value.to_string(digits)}};
      if (row.tail_bound) item["tail_bound"] = row.tail_bound->to_string(3);
      arr.push_back(std::move(item));
    }
    os << arr.dump(2) << '\n';
  } else {
    for (const auto& row : rows) {
      os << row.p << ", " << row.value.to_display_string(digits);
      if (row.tail_bound) {
        os << ", tail <= " << row.tail_bound->to_string(3);
      }
      os << '\n';
    }
  }
}

int run_sum(const std::string& kind, const Range& range, double tol,
            const std::string& format, const std::string& out_path,
            const trigsum::Workspace& ws) {
  const trigsum::ScalarEnv& env = ws.env();
  const trigsum::Context ctx = ws.context();
  const int digits = env.policy().working_digits;

  static const std::map<std::string, trigsum::TrigSumKind> trig_kinds = {
      {"I", trigsum::TrigSumKind::Cosecant},
      {"J", trigsum::TrigSumKind::Cotangent},
      {"K", trigsum::TrigSumKind::Tangent},
      {"L", trigsum::TrigSumKind::WeightedCosecant},
      {"M", trigsum::TrigSumKind::OddCotangent},
  };

  std::vector<SumRow> rows;
  for (std::int64_t p = range.from; p <= range.to; ++p) {
    if (auto it = trig_kinds.find(kind); it != trig_kinds.end()) {
      rows.push_back(SumRow{p, trigsum::trig_sum(it->second, p, env), {}});
    } else if (kind == "secant2" || kind == "secant4") {
      const int power = kind == "secant2" ? 2 : 4;
      rows.push_back(SumRow{p, trigsum::secant_power_sum(p, power, env), {}});
    } else if (kind == "kou") {
      rows.push_back(SumRow{p, trigsum::kou_secant_sum(p, env), {}});
    } else if (kind == "C") {
      auto r = trigsum::c_series(p, tol, ctx);
      rows.push_back(SumRow{p, r.value, r.tail_bound});
    } else if (kind == "D") {
      auto r = trigsum::d_series(p, tol, ctx);
      rows.push_back(SumRow{p, r.value, r.tail_bound});
    } else if (kind == "E") {
      auto r = trigsum::e_series(p, tol, env);
      rows.push_back(SumRow{p, r.value, r.tail_bound});
    } else {
      throw std::invalid_argument(
          "unknown sum kind '" + kind +
          "' (expected I, J, K, L, M, C, D, E, secant2, secant4, kou)");
    }
  }

  OutputTarget target;
  target.open(out_path);
  emit_sum_rows(rows, format, digits, *target.os);
  return kExitOk;
}

int run_verify(const std::string& suite, const Range& range, double tol,
               const std::vector<int>& levels, const std::string& format,
               const std::string& out_path, const trigsum::Workspace& ws) {
  const trigsum::Context ctx = ws.context();

  trigsum::VerificationReport report;
  if (suite == "identities") {
    report = trigsum::verify_identities(range.from, range.to, tol, ctx);
  } else if (suite == "bounds") {
    report = trigsum::verify_bounds(range.from, range.to, levels, ctx);
  } else if (suite == "all") {
    report = trigsum::verify_identities(range.from, range.to, tol, ctx);
    report.merge(trigsum::verify_bounds(range.from, range.to, levels, ctx));
  } else {
    throw std::invalid_argument("unknown verify suite '" + suite +
                                "' (expected identities, bounds, all)");
  }

  OutputTarget target;
  target.open(out_path);
  const auto fmt = format == "json" ? trigsum::ReportFormat::Json
                                    : trigsum::ReportFormat::Csv;
  trigsum::emit_report(report, fmt, *target.os);
  return report.all_asserted_passed() ? kExitOk : kExitCheckFailed;
}

int run_expand(const std::string& target_name, std::int64_t p,
               std::optional<int> m_opt, std::optional<int> n_opt,
               const std::string& format, const std::string& out_path,
               const trigsum::Workspace& ws) {
  const trigsum::Context ctx = ws.context();

  trigsum::ExpansionResult result{trigsum::ExpansionTarget::Harmonic,
                                  0,
                                  0,
                                  trigsum::Scalar(),
                                  trigsum::Scalar(),
                                  trigsum::Scalar(),
                                  false};
  if (target_name == "H" || target_name == "C" || target_name == "D") {
    if (n_opt) {
      throw std::invalid_argument("target " + target_name +
                                  " takes --m, not --n");
    }
    const int m = m_opt.value_or(3);
    if (target_name == "H") {
      result = trigsum::h_expansion(p, m, ctx);
    } else if (target_name == "C") {
      result = trigsum::c_expansion(p, m, ctx);
    } else {
      result = trigsum::d_expansion(p, m, ctx);
    }
  } else if (target_name == "I" || target_name == "J") {
    if (m_opt) {
      throw std::invalid_argument("target " + target_name +
                                  " takes --n, not --m");
    }
    const int n = n_opt.value_or(0);
    result = target_name == "I" ? trigsum::i_expansion(p, n, ctx)
                                : trigsum::j_expansion(p, n, ctx);
  } else {
    throw std::invalid_argument("unknown expansion target '" + target_name +
                                "' (expected H, C, D, I, J)");
  }

  const int digits = ws.env().policy().working_digits;
  OutputTarget out;
  out.open(out_path);
  std::ostream& os = *out.os;
  if (format == "csv") {
    os << "p,order,truncated,lower,upper,width\n"
       << result.p << ',' << result.order << ','
       << result.truncated.to_string(digits) << ','
       << result.lower.to_string(digits) << ','
       << result.upper.to_string(digits) << ','
       << result.width().to_string(3) << '\n';
  } else if (format == "json") {
    nlohmann::ordered_json j = {
        {"p", result.p},
        {"order", result.order},
        {"truncated", result.truncated.to_string(digits)},
        {"lower", result.lower.to_string(digits)},
        {"upper", result.upper.to_string(digits)},
        {"width", result.width().to_string(3)},
        {"past_useful_depth", result.past_useful_depth}};
    os << j.dump(2) << '\n';
  } else {
    os << "p = " << result.p << '\n'
       << "order = " << result.order << '\n'
       << "truncated = " << result.truncated.to_display_string(digits) << '\n'
       << "lower = " << result.lower.to_display_string(digits) << '\n'
       << "upper = " << result.upper.to_display_string(digits) << '\n'
       << "width = " << result.width().to_string(3) << '\n';
  }
  if (result.past_useful_depth) {
    std::cerr << "warning: truncation depth is past the useful regime; "
                 "the bracket is valid but wider than a shallower one\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "trigsum: finite trigonometric sums, certified harmonic series, and "
      "two-sided asymptotic brackets, with a built-in identity auditor"};
  app.require_subcommand(1);
  app.fallthrough();

  int digits = 30;
  if (const char* env_digits = std::getenv("TRIGSUM_DIGITS")) {
    try {
      digits = static_cast<int>(parse_int(env_digits));
    } catch (const std::exception&) {
      std::cerr << "error: TRIGSUM_DIGITS is not an integer\n";
      return kExitUsage;
    }
  }
  app.add_option("--digits", digits,
                 "working decimal digits (default 30, env TRIGSUM_DIGITS)");
  std::string format = "plain";
  app.add_option("--format", format, "output format: plain, csv, json")
      ->check(CLI::IsMember({"plain", "csv", "json"}));
  std::string out_path;
  app.add_option("--out", out_path, "write output to this file");

  auto* sum_cmd = app.add_subcommand(
      "sum", "evaluate a trigonometric sum or certified series over a range");
  std::string sum_kind;
  std::string sum_range;
  double sum_tol = 1e-12;
  sum_cmd->add_option("kind", sum_kind,
                      "I, J, K, L, M, C, D, E, secant2, secant4, kou")
      ->required();
  sum_cmd->add_option("range", sum_range, "p or a..b")->required();
  sum_cmd->add_option("--tol", sum_tol,
                      "certified tolerance for series kinds (default 1e-12)");

  auto* verify_cmd = app.add_subcommand(
      "verify", "audit identities and bounds over a range of p");
  std::string verify_suite;
  std::string verify_range;
  double verify_tol = 1e-15;
  std::vector<int> verify_levels{0, 1, 2};
  verify_cmd->add_option("suite", verify_suite, "identities, bounds, all")
      ->required();
  verify_cmd->add_option("range", verify_range, "p or a..b")->required();
  verify_cmd->add_option("--tol", verify_tol,
                         "identity comparison tolerance (default 1e-15)");
  verify_cmd->add_option("--n", verify_levels,
                         "bracket levels for bound checks (default 0 1 2)");

  auto* expand_cmd = app.add_subcommand(
      "expand", "asymptotic truncation with a certified two-sided bracket");
  std::string expand_target;
  std::string expand_p;
  std::optional<int> expand_m;
  std::optional<int> expand_n;
  expand_cmd->add_option("target", expand_target, "H, C, D, I, J")->required();
  expand_cmd->add_option("p", expand_p, "expansion point (positive integer)")
      ->required();
  expand_cmd->add_option("--m", expand_m,
                         "truncation depth for H, C, D (default 3)");
  expand_cmd->add_option("--n", expand_n,
                         "bracket level for I, J (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    trigsum::PrecisionPolicy policy;
    policy.working_digits = digits;
    const trigsum::Workspace ws(policy);

    if (sum_cmd->parsed()) {
      return run_sum(sum_kind, parse_range(sum_range), sum_tol, format,
                     out_path, ws);
    }
    if (verify_cmd->parsed()) {
      return run_verify(verify_suite, parse_range(verify_range), verify_tol,
                        verify_levels, format, out_path, ws);
    }
    if (expand_cmd->parsed()) {
      const Range pr = parse_range(expand_p);
      if (pr.from != pr.to) {
        throw std::invalid_argument("expand takes a single p, not a range");
      }
      return run_expand(expand_target, pr.from, expand_m, expand_n, format,
                        out_path, ws);
    }
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const trigsum::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitResource;
  } catch (const trigsum::budget_error& e) {
    std::cerr << "budget error: " << e.what() << '\n';
    return kExitResource;
  } catch (const trigsum::precision_error& e) {
    std::cerr << "precision error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
