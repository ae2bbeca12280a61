#include "qwol/runner.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <limits>
#include <thread>

#include "qwol/arith.hpp"
#include "qwol/errors.hpp"

namespace qwol {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("malformed range '" + std::string(whole) + "'");
  }
  return v;
}

std::vector<std::int64_t> inclusive(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v;
  for (std::int64_t i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v;
  for (std::int64_t i = lo; i <= hi; ++i) {
    if (is_prime(i)) v.push_back(i);
  }
  return v;
}

using Tuples = std::vector<std::vector<std::int64_t>>;

Tuples singletons(const std::vector<std::int64_t>& values) {
  Tuples out;
  for (auto v : values) out.push_back({v});
  return out;
}

void reject(const std::optional<std::vector<std::int64_t>>& opt, const char* flag, Claim claim) {
  if (opt) {
    throw InvalidArgument(std::string("option ") + flag + " does not apply to claim " +
                          std::string(claim_name(claim)));
  }
}

}  // namespace

std::vector<std::int64_t> parse_range(std::string_view spec) {
  const std::string_view whole = spec;
  bool primes_only = false;
  if (auto colon = spec.find(':'); colon != std::string_view::npos) {
    if (spec.substr(colon) != ":primes") throw ParseError("unknown range filter in '" + std::string(whole) + "'");
    primes_only = true;
    spec = spec.substr(0, colon);
  }
  if (spec.empty()) throw ParseError("empty range");

  std::vector<std::int64_t> out;
  while (true) {
    const auto comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    if (auto dots = item.find(".."); dots != std::string_view::npos) {
      const std::int64_t lo = parse_int(item.substr(0, dots), whole);
      const std::int64_t hi = parse_int(item.substr(dots + 2), whole);
      if (hi < lo) throw EmptyRange("range '" + std::string(item) + "' is empty");
      for (std::int64_t i = lo; i <= hi; ++i) out.push_back(i);
    } else {
      out.push_back(parse_int(item, whole));
    }
    if (comma == std::string_view::npos) break;
    spec = spec.substr(comma + 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (primes_only) std::erase_if(out, [](std::int64_t v) { return !is_prime(v); });
  if (out.empty()) throw EmptyRange("range '" + std::string(whole) + "' selects nothing");
  return out;
}

std::vector<std::vector<std::int64_t>> claim_parameters(Claim claim, const RunOptions& o) {
  switch (claim) {
    case Claim::kTheorem1:
    case Claim::kTheorem2:
    case Claim::kLemmaLnIdentity:
    case Claim::kDerivativeFacts:
    case Claim::kCyclotomicSanity: {
      reject(o.p, "--p", claim);
      reject(o.k, "--k", claim);
      reject(o.j, "--j", claim);
      if (o.n) return singletons(*o.n);
      switch (claim) {
        case Claim::kTheorem1: return singletons(inclusive(2, 300));
        case Claim::kTheorem2: return singletons(inclusive(2, 150));
        case Claim::kLemmaLnIdentity: return singletons(inclusive(2, 300));
        case Claim::kDerivativeFacts: return singletons(inclusive(2, 200));
        default: return singletons(inclusive(1, 1000));
      }
    }
    case Claim::kShiPan:
    case Claim::kClassical: {
      reject(o.n, "--n", claim);
      reject(o.k, "--k", claim);
      reject(o.j, "--j", claim);
      if (o.p) return singletons(*o.p);
      return singletons(claim == Claim::kShiPan ? primes_in(5, 50) : primes_in(5, 499));
    }
    case Claim::kLemmaLogDeriv: {
      reject(o.p, "--p", claim);
      reject(o.j, "--j", claim);
      const auto ns = o.n ? *o.n : inclusive(2, 100);
      const auto ks = o.k ? *o.k : inclusive(1, 6);
      Tuples out;
      for (auto n : ns) {
        for (auto k : ks) out.push_back({n, k});
      }
      return out;
    }
    case Claim::kRamanujan: {
      reject(o.p, "--p", claim);
      reject(o.k, "--k", claim);
      const auto ns = o.n ? *o.n : inclusive(2, 80);
      Tuples out;
      for (auto n : ns) {
        for (auto j : o.j ? *o.j : inclusive(1, n)) out.push_back({n, j});
      }
      return out;
    }
  }
  throw InvalidArgument("unknown claim");
}

CongruenceVerdict run_case(Claim claim, const std::vector<std::int64_t>& param) {
  try {
    const std::int64_t a = param.at(0);
    switch (claim) {
      case Claim::kTheorem1: return theorem1_check(a);
      case Claim::kTheorem2: return theorem2_check(a);
      case Claim::kShiPan: return shi_pan_probe(a);
      case Claim::kLemmaLogDeriv: {
        const std::int64_t k = param.at(1);
        if (k < 1 || k > std::numeric_limits<int>::max()) throw InvalidArgument("k out of range");
        return lemma_b1_check(a, static_cast<int>(k));
      }
      case Claim::kLemmaLnIdentity: return lemma_b2_check(a);
      case Claim::kDerivativeFacts: return derivative_facts_check(a);
      case Claim::kRamanujan: return ramanujan_oracle_check(param.at(1), a);
      case Claim::kClassical: return classical_wolstenholme_check(a);
      case Claim::kCyclotomicSanity: return cyclotomic_sanity_check(a);
    }
    throw InvalidArgument("unknown claim");
  } catch (const std::exception& e) {
    // No residue exists; the constant 1 keeps holds == (witness == 0).
    return make_verdict(claim, param, Polynomial::constant(1), Polynomial(), std::string("error: ") + e.what());
  }
}

CheckReport run_verify(Claim claim, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.claim = std::string(claim_name(claim));
  report.parameters_run = claim_parameters(claim, options);
  auto& params = report.parameters_run;
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());

  std::vector<std::optional<CongruenceVerdict>> slots(params.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= params.size()) return;
      slots[i] = run_case(claim, params[i]);
      if (options.fail_fast && !slots[i]->holds) stop.store(true);
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(params.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }

  // Workers claim indices in increasing order, so every slot before a
  // claimed index is filled once the pool has joined.
  for (auto& slot : slots) {
    if (!slot) break;
    report.verdicts.push_back(std::move(*slot));
    if (options.fail_fast && !report.verdicts.back().holds) break;
  }
  report.all_hold = std::all_of(report.verdicts.begin(), report.verdicts.end(),
                                [](const CongruenceVerdict& v) { return v.holds; });
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace qwol
