#include "qwol/verifier.hpp"

#include <array>
#include <sstream>
#include <string>
#include <utility>

#include "qwol/arith.hpp"
#include "qwol/errors.hpp"

namespace qwol {

namespace {

constexpr std::array kClaims{
    std::pair{Claim::kTheorem1, std::string_view("theorem1")},
    std::pair{Claim::kTheorem2, std::string_view("theorem2")},
    std::pair{Claim::kShiPan, std::string_view("shi-pan")},
    std::pair{Claim::kLemmaLogDeriv, std::string_view("lemma-logderiv")},
    std::pair{Claim::kLemmaLnIdentity, std::string_view("lemma-ln-identity")},
    std::pair{Claim::kDerivativeFacts, std::string_view("derivative-facts")},
    std::pair{Claim::kRamanujan, std::string_view("ramanujan")},
    std::pair{Claim::kClassical, std::string_view("classical")},
    std::pair{Claim::kCyclotomicSanity, std::string_view("cyclotomic-sanity")},
};

constexpr std::array kClaimOrder{
    Claim::kTheorem1,        Claim::kTheorem2,  Claim::kShiPan,
    Claim::kLemmaLogDeriv,   Claim::kLemmaLnIdentity, Claim::kDerivativeFacts,
    Claim::kRamanujan,       Claim::kClassical, Claim::kCyclotomicSanity,
};

void require_at_least(std::int64_t v, std::int64_t lo, const char* name) {
  if (v < lo) {
    throw InvalidArgument(std::string(name) + " must be >= " + std::to_string(lo) + ", got " + std::to_string(v));
  }
}

// Polynomial whose i-th coefficient is the i-th discrepancy; zero iff all are.
Polynomial discrepancies(std::initializer_list<Rational> values) {
  return Polynomial(std::vector<Rational>(values));
}

Polynomial one_minus_q() { return Polynomial{Rational(1), Rational(-1)}; }

Polynomial one_minus_q_pow(std::int64_t n) {
  return Polynomial::constant(1) - Polynomial::monomial(1, static_cast<std::size_t>(n));
}

// Shared tail of the two Wolstenholme right-hand sides:
// (p^2 - 1)(1 - q)(1 - q^p)/24 with p^2 - 1 replaced by `j2`.
Polynomial quadratic_term(std::int64_t n, const BigInt& j2) {
  return one_minus_q() * one_minus_q_pow(n) * (Rational(j2) / Rational(24));
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  auto [quot, rem] = divrem(a * b, gcd(a, b));
  if (!rem.is_zero()) throw InternalError("lcm: gcd does not divide the product");
  return quot.monic();
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [quot, rem] = divrem(a, b);
  if (!rem.is_zero()) throw InternalError("expected exact division by " + b.str());
  return quot;
}

const char* verdict_word(bool ok) { return ok ? "holds" : "fails"; }

}  // namespace

std::string_view claim_name(Claim c) {
  for (const auto& [claim, name] : kClaims) {
    if (claim == c) return name;
  }
  return "unknown";
}

std::optional<Claim> claim_from_name(std::string_view name) {
  for (const auto& [claim, n] : kClaims) {
    if (n == name) return claim;
  }
  return std::nullopt;
}

std::span<const Claim> all_claims() { return kClaimOrder; }

CongruenceVerdict make_verdict(Claim claim, std::vector<std::int64_t> parameter, Polynomial witness,
                               Polynomial modulus, std::string notes) {
  CongruenceVerdict v;
  v.claim = claim;
  v.parameter = std::move(parameter);
  v.holds = witness.is_zero();
  v.residue_witness = std::move(witness);
  v.modulus = std::move(modulus);
  v.notes = std::move(notes);
  return v;
}

// ---- Theorem 1 ----

ResidueClass primitive_root_sum(std::int64_t n) {
  require_at_least(n, 2, "n");
  auto ctx = QuotientContext::create(cyclotomic(n));
  const auto one = ResidueClass::constant(ctx, 1);
  auto sum = ResidueClass::constant(ctx, 0);
  for (std::int64_t k = 1; k <= n; ++k) {
    if (gcd(n, k) != 1) continue;
    const auto zeta_k = ResidueClass::q_power(ctx, static_cast<std::size_t>(k));
    const auto d = one - zeta_k;
    sum += zeta_k * residue_inv(d * d);
  }
  return sum;
}

CongruenceVerdict theorem1_check(std::int64_t n) {
  const ResidueClass sum = primitive_root_sum(n);
  const Rational expected = -Rational(jordan_totient(2, n)) / Rational(12);
  const ResidueClass target = ResidueClass::constant(sum.context_ptr(), expected);
  std::string notes = "sum=" + sum.representative().str() + "; -J2/12=" + expected.str();
  return make_verdict(Claim::kTheorem1, {n}, (sum - target).representative(), sum.context().modulus(),
                      std::move(notes));
}

// ---- Theorem 2 ----

ResidueClass harmonic_residue(std::int64_t n, const std::shared_ptr<const QuotientContext>& ctx) {
  require_at_least(n, 2, "n");
  auto sum = ResidueClass::constant(ctx, 0);
  for (std::int64_t k = 1; k <= n; ++k) {
    if (gcd(n, k) != 1) continue;
    sum += residue_inv(ResidueClass(ctx, q_integer(k)));
  }
  return sum;
}

ResidueClass harmonic_residue(std::int64_t n) {
  require_at_least(n, 2, "n");
  return harmonic_residue(n, QuotientContext::create(wolstenholme_modulus(n)));
}

Polynomial theorem2_rhs(std::int64_t n) {
  require_at_least(n, 2, "n");
  return one_minus_q() * Rational(euler_phi(n), 2) + quadratic_term(n, jordan_totient(2, n));
}

CongruenceVerdict theorem2_check(std::int64_t n) {
  require_at_least(n, 2, "n");
  auto ctx = QuotientContext::create(wolstenholme_modulus(n));
  const Polynomial rhs = theorem2_rhs(n);
  const ResidueClass lhs = harmonic_residue(n, ctx);
  Polynomial witness = (lhs - ResidueClass(ctx, rhs)).representative();

  // The same sum against the stronger modulus [n]^2, reported only.
  const Polynomial qn = q_integer(n);
  bool strong;
  if (is_prime(n)) {
    strong = witness.is_zero();
  } else {
    auto square = QuotientContext::create(qn * qn);
    strong = (harmonic_residue(n, square) - ResidueClass(square, rhs)).is_zero();
  }
  std::string notes = std::string("mod [n]^2: ") + verdict_word(strong);
  return make_verdict(Claim::kTheorem2, {n}, std::move(witness), ctx->modulus(), std::move(notes));
}

CongruenceVerdict theorem2_definition_check(std::int64_t n) {
  require_at_least(n, 2, "n");
  const Polynomial modulus = wolstenholme_modulus(n);
  auto ctx = QuotientContext::create(modulus);

  Polynomial denominator = Polynomial::constant(1);
  for (std::int64_t k = 1; k <= n; ++k) {
    if (gcd(n, k) == 1) denominator = lcm(denominator, q_integer(k));
  }
  Polynomial numerator;
  for (std::int64_t k = 1; k <= n; ++k) {
    if (gcd(n, k) == 1) numerator += exact_quotient(denominator, q_integer(k));
  }
  // LHS - RHS = numerator / denominator, brought to lowest terms.
  numerator -= theorem2_rhs(n) * denominator;
  if (!numerator.is_zero()) {
    const Polynomial g = gcd(numerator, denominator);
    numerator = exact_quotient(numerator, g);
    denominator = exact_quotient(denominator, g);
  }
  if (!gcd(denominator, modulus).is_constant()) {
    return make_verdict(Claim::kTheorem2, {n}, Polynomial::constant(1), modulus,
                        "definition: reduced denominator not coprime to modulus");
  }
  const Polynomial reduced = ctx->reduce(numerator);
  const bool divisible = reduced.is_zero();
  Polynomial witness = divisible ? Polynomial() : ctx->multiply(reduced, ctx->inverse(denominator));
  std::string notes = std::string("definition: numerator divisible: ") + (divisible ? "yes" : "no");
  return make_verdict(Claim::kTheorem2, {n}, std::move(witness), modulus, std::move(notes));
}

// ---- Shi-Pan probe ----

CongruenceVerdict shi_pan_probe(std::int64_t p) {
  if (p < 5 || !is_prime(p)) throw InvalidArgument("Shi-Pan probe needs a prime p >= 5, got " + std::to_string(p));
  const Polynomial qp = q_integer(p);
  auto ctx = QuotientContext::create(qp * qp);
  const ResidueClass lhs = harmonic_residue(p, ctx);

  const BigInt p2_minus_1 = BigInt(p) * p - 1;
  const Polynomial tail = quadratic_term(p, p2_minus_1);
  const Polynomial printed = Polynomial{Rational(-1), Rational(1)} * Rational(p - 1, 2) + tail;
  const Polynomial variant = one_minus_q() * Rational(p - 1, 2) + tail;

  const Polynomial w_printed = (lhs - ResidueClass(ctx, printed)).representative();
  Polynomial w_variant = (lhs - ResidueClass(ctx, variant)).representative();
  const bool matches_theorem2 = variant == theorem2_rhs(p);

  std::ostringstream notes;
  notes << "printed (p-1)(q-1)/2: " << verdict_word(w_printed.is_zero())
        << "; variant (p-1)(1-q)/2: " << verdict_word(w_variant.is_zero())
        << "; variant equals theorem2 rhs: " << (matches_theorem2 ? "yes" : "no");
  if (w_variant.is_zero() && (w_printed.is_zero() || !matches_theorem2)) {
    // Not exactly one variant, or not the expected one.
    w_variant = Polynomial::constant(1);
    notes << "; unexpected variant pattern";
  }
  return make_verdict(Claim::kShiPan, {p}, std::move(w_variant), ctx->modulus(), notes.str());
}

// ---- Ramanujan sums ----

CongruenceVerdict ramanujan_oracle_check(std::int64_t j, std::int64_t n) {
  require_at_least(j, 1, "j");
  require_at_least(n, 2, "n");
  auto ctx = QuotientContext::create(cyclotomic(n));
  auto sum = ResidueClass::constant(ctx, 0);
  for (std::int64_t k = 1; k <= n; ++k) {
    if (gcd(n, k) != 1) continue;
    // k*j can overflow for large j; reduce each factor first.
    const auto e = static_cast<std::size_t>((k % n) * (j % n) % n);
    sum += ResidueClass::q_power(ctx, e);
  }
  const std::int64_t closed = ramanujan_closed(j, n);
  std::string notes = "sum=" + sum.representative().str() + "; closed=" + std::to_string(closed);
  Polynomial witness = (sum - ResidueClass::constant(ctx, Rational(closed))).representative();
  return make_verdict(Claim::kRamanujan, {n, j}, std::move(witness), ctx->modulus(), std::move(notes));
}

// ---- Logarithmic derivatives ----

Rational log_deriv_at_one(std::int64_t n, int k) {
  require_at_least(n, 2, "n");
  require_at_least(k, 1, "k");
  const Polynomial phi = cyclotomic(n);
  const Polynomial dphi = phi.derivative();
  // D_k = N_k / Phi^k with N_1 = Phi' and N_{k+1} = N_k' Phi - k N_k Phi'.
  Polynomial num = dphi;
  for (int i = 1; i < k; ++i) num = num.derivative() * phi - num * dphi * Rational(i);
  const Rational at_one = phi.evaluate(1);
  Rational denom = 1;
  for (int i = 0; i < k; ++i) denom *= at_one;
  return num.evaluate(1) / denom;
}

Rational log_deriv_closed_form(std::int64_t n, int k) {
  require_at_least(n, 2, "n");
  require_at_least(k, 1, "k");
  Rational sum;
  for (int j = 1; j <= k; ++j) {
    sum += bernoulli_at_one(j) * Rational(stirling_first(k, j)) / Rational(j) * Rational(jordan_totient(j, n));
  }
  return sum;
}

CongruenceVerdict lemma_b1_check(std::int64_t n, int k) {
  const Rational lhs = log_deriv_at_one(n, k);
  const Rational rhs = log_deriv_closed_form(n, k);
  std::string notes = "lhs=" + lhs.str() + "; rhs=" + rhs.str();
  return make_verdict(Claim::kLemmaLogDeriv, {n, k}, Polynomial::constant(lhs - rhs), Polynomial(),
                      std::move(notes));
}

// ---- L_n(z) ----

LnPolynomial build_Ln(std::int64_t n) {
  require_at_least(n, 2, "n");
  std::vector<Rational> coeffs(static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k <= n; ++k) {
    const std::int64_t m = n / gcd(n, k);
    coeffs[static_cast<std::size_t>(k - 1)] = Rational(mobius(m), euler_phi(m));
  }
  return {n, Polynomial(std::move(coeffs))};
}

CongruenceVerdict lemma_b2_check(std::int64_t n) {
  const LnPolynomial ln = build_Ln(n);
  const Polynomial phi = cyclotomic(n);
  // phi(n) Phi_n L_n = (z^n - 1) Phi_n'
  const Polynomial left = phi * ln.poly * Rational(euler_phi(n));
  const Polynomial right = -one_minus_q_pow(n) * phi.derivative();
  return make_verdict(Claim::kLemmaLnIdentity, {n}, left - right, Polynomial(),
                      "cleared form phi(n)*Phi_n*L_n = (z^n-1)*Phi_n'");
}

CongruenceVerdict derivative_facts_check(std::int64_t n) {
  const LnPolynomial ln = build_Ln(n);
  const Polynomial d1 = ln.poly.derivative();
  const Polynomial d2 = d1.derivative();
  const Rational v0 = ln.poly.evaluate(1);
  const Rational v1 = d1.evaluate(1);
  const Rational v2 = d2.evaluate(1);
  const Rational e1 = Rational(n, 2);
  const Rational e2 = Rational(n * (n - 3), 2) +
                      Rational(n) * Rational(jordan_totient(2, n)) / (Rational(6) * Rational(euler_phi(n)));
  std::string notes = "L(1)=" + v0.str() + "; L'(1)=" + v1.str() + "; L''(1)=" + v2.str() +
                      "; expected L''(1)=" + e2.str();
  return make_verdict(Claim::kDerivativeFacts, {n}, discrepancies({v0, v1 - e1, v2 - e2}), Polynomial(),
                      std::move(notes));
}

// ---- Classical Wolstenholme ----

CongruenceVerdict classical_wolstenholme_check(std::int64_t p) {
  require_at_least(p, 2, "p");
  Rational harmonic;
  for (std::int64_t k = 1; k < p; ++k) harmonic += Rational(1, k);
  const BigInt p2 = BigInt(p) * p;
  BigInt rem;
  mpz_mod(rem.get_mpz_t(), harmonic.num_ref().get_mpz_t(), p2.get_mpz_t());

  std::string notes = "numerator=" + harmonic.numerator().get_str() + "; p^2=" + p2.get_str();
  Polynomial witness = Polynomial::constant(Rational(rem));
  if (p < 5 || !is_prime(p)) {
    notes += "; p is not a prime >= 5";
    if (witness.is_zero()) witness = Polynomial::constant(1);
  }
  return make_verdict(Claim::kClassical, {p}, std::move(witness), Polynomial::constant(Rational(p2)),
                      std::move(notes));
}

// ---- Cyclotomic sanity ----

CongruenceVerdict cyclotomic_sanity_check(std::int64_t n) {
  require_at_least(n, 1, "n");
  const Polynomial q_n_minus_1 = -one_minus_q_pow(n);
  Polynomial product = Polynomial::constant(1);
  for (auto d : divisors(n)) product *= cyclotomic(d);

  const Polynomial phi = cyclotomic(n);
  const std::int64_t degree = static_cast<std::int64_t>(*phi.degree());
  Rational expected_value = 1;
  if (n == 1) {
    expected_value = 0;
  } else if (auto f = factorize(n); f.size() == 1) {
    expected_value = Rational(f[0].first);
  }
  const Rational value = phi.evaluate(1);
  std::int64_t non_integer = 0;
  for (const auto& c : phi.coefficients()) non_integer += c.is_integer() ? 0 : 1;

  Polynomial witness = product - q_n_minus_1;
  if (witness.is_zero()) {
    witness = discrepancies({Rational(degree - euler_phi(n)), value - expected_value, Rational(non_integer)});
  }
  std::string notes = "deg=" + std::to_string(degree) + "; Phi_n(1)=" + value.str();
  return make_verdict(Claim::kCyclotomicSanity, {n}, std::move(witness), Polynomial(), std::move(notes));
}

}  // namespace qwol
