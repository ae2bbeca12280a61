// qwol: batch verification of the q-Wolstenholme congruences and their
// supporting identities.
//
//   qwol verify <claim|all> [--n RANGE] [--p RANGE] [--k RANGE] [--j RANGE]
//               [--format text|csv|json] [--jobs N] [--fail-fast] [--out FILE]
//
// Exit status: 0 when every verdict holds, 1 on any failure, 2 on usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwol/errors.hpp"
#include "qwol/report.hpp"
#include "qwol/runner.hpp"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::optional<std::vector<std::int64_t>> range_option(const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  return qwol::parse_range(spec);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of q-Wolstenholme congruences"};
  app.set_version_flag("--version", std::string(qwol::kToolVersion));
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Check a claim over a parameter range");
  std::string claim_arg;
  std::string n_spec, p_spec, k_spec, j_spec;
  std::string format_name = "text";
  std::string out_path;
  unsigned jobs = 1;
  bool fail_fast = false;
  bool timing = false;

  std::string claims_help = "one of: all";
  for (auto c : qwol::all_claims()) claims_help += ", " + std::string(qwol::claim_name(c));
  verify->add_option("claim", claim_arg, claims_help)->required();
  verify->add_option("--n", n_spec, "range for n, e.g. 2..50 or 5,7,11");
  verify->add_option("--p", p_spec, "range for p, e.g. 5..50:primes");
  verify->add_option("--k", k_spec, "range for the derivative order k");
  verify->add_option("--j", j_spec, "range for the Ramanujan index j (default 1..n)");
  verify->add_option("--format", format_name, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  verify->add_option("--jobs", jobs, "worker threads")->envname("QWOL_JOBS")->check(CLI::Range(1u, 1024u));
  verify->add_flag("--fail-fast", fail_fast, "stop at the first failing case");
  verify->add_flag("--timing", timing, "include elapsed_ms in json output");
  verify->add_option("--out", out_path, "write the report to FILE instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  std::vector<qwol::CheckReport> reports;
  try {
    qwol::RunOptions options;
    options.n = range_option(n_spec);
    options.p = range_option(p_spec);
    options.k = range_option(k_spec);
    options.j = range_option(j_spec);
    options.jobs = jobs;
    options.fail_fast = fail_fast;

    std::vector<qwol::Claim> claims;
    if (claim_arg == "all") {
      if (options.n || options.p || options.k || options.j) {
        throw qwol::InvalidArgument("'verify all' runs the default ranges and takes no range options");
      }
      claims.assign(qwol::all_claims().begin(), qwol::all_claims().end());
    } else if (auto c = qwol::claim_from_name(claim_arg)) {
      claims.push_back(*c);
      qwol::claim_parameters(*c, options);  // reject inapplicable options before running
    } else {
      throw qwol::InvalidArgument("unknown claim '" + claim_arg + "'; expected " + claims_help);
    }

    for (auto c : claims) {
      reports.push_back(qwol::run_verify(c, options));
      if (fail_fast && !reports.back().all_hold) break;
    }
  } catch (const qwol::Error& e) {
    std::cerr << "qwol: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto format = qwol::parse_format(format_name);
  qwol::FormatOptions fmt;
  fmt.timing = timing || format == qwol::ReportFormat::kText;
  const std::string text = qwol::format_reports(reports, format, fmt);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "qwol: cannot open " << out_path << '\n';
      return kExitUsage;
    }
    out << text;
  }

  bool all_hold = true;
  for (const auto& r : reports) all_hold = all_hold && r.all_hold;
  return all_hold ? 0 : kExitFailed;
}
