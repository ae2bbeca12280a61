#ifndef QWOL_REPORT_HPP
#define QWOL_REPORT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qwol/verifier.hpp"

namespace qwol {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Result of running one claim over a parameter list. Verdicts are in
/// ascending parameter order; all_hold is true iff every verdict holds.
struct CheckReport {
  std::string tool_version{kToolVersion};
  std::string claim;
  std::vector<std::vector<std::int64_t>> parameters_run;
  std::vector<CongruenceVerdict> verdicts;
  std::int64_t elapsed_ms = 0;
  bool all_hold = true;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

enum class ReportFormat { kText, kCsv, kJson };

ReportFormat parse_format(std::string_view name);

struct FormatOptions {
  /// Emit elapsed_ms. Off by default for JSON so that reports are
  /// byte-identical between runs.
  bool timing = false;
};

/// Text: aligned table, one row per verdict ending in OK or FAIL.
/// CSV: header "claim,parameter,holds,notes" then one row per verdict.
/// JSON: one object per line, a report header line followed by verdict lines.
std::string format_report(const CheckReport& report, ReportFormat format, FormatOptions options = {});
/// Several reports in one stream; CSV carries a single header.
std::string format_reports(std::span<const CheckReport> reports, ReportFormat format, FormatOptions options = {});

/// Parses the JSON-lines format back into reports. Throws ParseError.
std::vector<CheckReport> parse_json_reports(std::string_view text);

/// "7" or "2:3" for two-parameter claims.
std::string parameter_label(std::span<const std::int64_t> parameter);

}  // namespace qwol

#endif  // QWOL_REPORT_HPP
