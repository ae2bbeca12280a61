#ifndef QWOL_RUNNER_HPP
#define QWOL_RUNNER_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qwol/report.hpp"
#include "qwol/verifier.hpp"

namespace qwol {

/// Parses "A..B", "A" or a comma separated list of those, with an optional
/// ":primes" suffix. Result is sorted and deduplicated.
/// Throws ParseError on malformed input and EmptyRange when B < A or the
/// filter leaves nothing.
std::vector<std::int64_t> parse_range(std::string_view spec);

struct RunOptions {
  std::optional<std::vector<std::int64_t>> n;
  std::optional<std::vector<std::int64_t>> p;
  std::optional<std::vector<std::int64_t>> k;
  std::optional<std::vector<std::int64_t>> j;
  unsigned jobs = 1;
  bool fail_fast = false;
};

/// Parameter tuples for a claim, from the options or the claim's default
/// ranges. Throws InvalidArgument when an option does not apply to the claim.
std::vector<std::vector<std::int64_t>> claim_parameters(Claim claim, const RunOptions& options);

/// One check. Errors become failed verdicts carrying the message in notes.
CongruenceVerdict run_case(Claim claim, const std::vector<std::int64_t>& parameter);

/// Runs every case on `options.jobs` workers. With fail_fast the report is cut
/// after the first failing parameter.
CheckReport run_verify(Claim claim, const RunOptions& options);

}  // namespace qwol

#endif  // QWOL_RUNNER_HPP
