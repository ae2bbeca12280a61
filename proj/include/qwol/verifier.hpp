#ifndef QWOL_VERIFIER_HPP
#define QWOL_VERIFIER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qwol/cyclotomic.hpp"
#include "qwol/polynomial.hpp"
#include "qwol/rational.hpp"

namespace qwol {

/// Claims the verifier knows how to check. Names are stable identifiers used
/// by the command line and by every report format.
enum class Claim {
  kTheorem1,
  kTheorem2,
  kShiPan,
  kLemmaLogDeriv,
  kLemmaLnIdentity,
  kDerivativeFacts,
  kRamanujan,
  kClassical,
  kCyclotomicSanity,
};

std::string_view claim_name(Claim c);
std::optional<Claim> claim_from_name(std::string_view name);
std::span<const Claim> all_claims();

/// Outcome of one check. holds is true exactly when residue_witness is the
/// zero polynomial. A zero modulus means plain equality was checked.
/// Two-parameter claims list n first: (n, k) or (n, j).
struct CongruenceVerdict {
  Claim claim = Claim::kTheorem1;
  std::vector<std::int64_t> parameter;
  bool holds = false;
  Polynomial residue_witness;
  Polynomial modulus;
  std::string notes;

  friend bool operator==(const CongruenceVerdict&, const CongruenceVerdict&) = default;
};

/// Builds a verdict with holds derived from the witness.
CongruenceVerdict make_verdict(Claim claim, std::vector<std::int64_t> parameter, Polynomial witness,
                               Polynomial modulus, std::string notes);

/// L_n(z) = sum_{k=1}^{n} mu(n/(n,k)) / phi(n/(n,k)) z^(k-1).
struct LnPolynomial {
  std::int64_t n = 0;
  Polynomial poly;
};

// Primitive-root sum: sum over (n,k)=1 of zeta^k / (1 - zeta^k)^2, computed
// in Q[q]/(Phi_n) where zeta is the class of q.
ResidueClass primitive_root_sum(std::int64_t n);
CongruenceVerdict theorem1_check(std::int64_t n);

/// sum over (n,k)=1 of 1/[k] in Q[q]/([n] Phi_n), folded term by term.
ResidueClass harmonic_residue(std::int64_t n);
/// The same sum in an arbitrary quotient ring (every [k] must be a unit).
ResidueClass harmonic_residue(std::int64_t n, const std::shared_ptr<const QuotientContext>& ctx);
/// (1-q) phi(n)/2 + (1-q)(1-q^n) J_2(n)/24.
Polynomial theorem2_rhs(std::int64_t n);
CongruenceVerdict theorem2_check(std::int64_t n);
/// Theorem 2 by the congruence definition: the sum over a common
/// denominator, reduced to lowest terms, numerator divisible by the modulus,
/// denominator coprime to it. Witness matches theorem2_check.
CongruenceVerdict theorem2_definition_check(std::int64_t n);

CongruenceVerdict shi_pan_probe(std::int64_t p);

CongruenceVerdict ramanujan_oracle_check(std::int64_t j, std::int64_t n);

/// k-th derivative of ln Phi_n(z) at z = 1.
Rational log_deriv_at_one(std::int64_t n, int k);
/// sum_{j=1}^{k} B_j(1) s(k,j) / j * J_j(n).
Rational log_deriv_closed_form(std::int64_t n, int k);
CongruenceVerdict lemma_b1_check(std::int64_t n, int k);

LnPolynomial build_Ln(std::int64_t n);
CongruenceVerdict lemma_b2_check(std::int64_t n);
CongruenceVerdict derivative_facts_check(std::int64_t n);

/// Reduced numerator of 1 + 1/2 + ... + 1/(p-1) against p^2.
CongruenceVerdict classical_wolstenholme_check(std::int64_t p);

/// prod_{d|n} Phi_d = q^n - 1, deg Phi_n = phi(n), integer coefficients and
/// the value Phi_n(1).
CongruenceVerdict cyclotomic_sanity_check(std::int64_t n);

}  // namespace qwol

#endif  // QWOL_VERIFIER_HPP
