#include <gtest/gtest.h>

#include "qwol/arith.hpp"
#include "qwol/errors.hpp"
#include "qwol/verifier.hpp"
#include "test_support.hpp"

namespace qwol {
namespace {

using testing::poly;

// Independent route for the primitive-root sum: for any n-th root of unity
// w != 1, 1/(1 - w) = -(1/n) sum_{j=1}^{n-1} j w^j. Only multiplication and
// reduction are used, never an inverse.
Rational primitive_root_sum_oracle(std::int64_t n) {
  auto ctx = QuotientContext::create(cyclotomic(n));
  auto sum = ResidueClass::constant(ctx, 0);
  for (std::int64_t k = 1; k <= n; ++k) {
    if (gcd(n, k) != 1) continue;
    Polynomial inv_one_minus;
    for (std::int64_t j = 1; j < n; ++j) {
      inv_one_minus += Polynomial::monomial(Rational(-j, n), static_cast<std::size_t>((j * k) % n));
    }
    const ResidueClass w(ctx, inv_one_minus);
    sum += ResidueClass::q_power(ctx, static_cast<std::size_t>(k)) * w * w;
  }
  EXPECT_TRUE(sum.representative().is_constant()) << n;
  return sum.representative().coefficient(0);
}

TEST(ClaimNames, RoundTrip) {
  for (auto c : all_claims()) EXPECT_EQ(claim_from_name(claim_name(c)), c);
  EXPECT_FALSE(claim_from_name("theorem3").has_value());
  EXPECT_EQ(all_claims().size(), 9u);
}

TEST(Theorem1, Examples) {
  const auto v2 = theorem1_check(2);
  EXPECT_TRUE(v2.holds);
  EXPECT_EQ(primitive_root_sum(2).representative(), Polynomial::constant(Rational(-1, 4)));
  EXPECT_EQ(primitive_root_sum(5).representative(), Polynomial::constant(Rational(-2)));
  EXPECT_EQ(primitive_root_sum(6).representative(), Polynomial::constant(Rational(-2)));
  EXPECT_TRUE(theorem1_check(5).holds);
  EXPECT_TRUE(theorem1_check(6).holds);
  EXPECT_EQ(theorem1_check(6).modulus, cyclotomic(6));
  EXPECT_THROW(theorem1_check(1), InvalidArgument);
}

TEST(Theorem1, AgreesWithInverseFreeOracle) {
  for (std::int64_t n = 2; n <= 40; ++n) {
    const Rational oracle = primitive_root_sum_oracle(n);
    EXPECT_EQ(primitive_root_sum(n).representative(), Polynomial::constant(oracle)) << n;
    EXPECT_EQ(oracle, -Rational(jordan_totient(2, n)) / Rational(12)) << n;
  }
}

TEST(Theorem1, PrimeSpecialization) {
  for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    EXPECT_EQ(primitive_root_sum(p).representative(), Polynomial::constant(Rational(1 - p * p, 12))) << p;
  }
}

TEST(Theorem2, HarmonicResidueExamples) {
  EXPECT_EQ(harmonic_residue(2).representative(), poly({1}));
  auto ctx4 = QuotientContext::create(wolstenholme_modulus(4));
  const ResidueClass expected = ResidueClass::constant(ctx4, 1) + residue_inv(ResidueClass(ctx4, q_integer(3)));
  EXPECT_EQ(harmonic_residue(4).representative(), expected.representative());
  EXPECT_THROW(harmonic_residue(1), InvalidArgument);
}

TEST(Theorem2, HandCaseTwo) {
  // 1 - (1-q)/2 - (1-q)^2 (1+q)/8 vanishes to second order at q = -1.
  const Polynomial diff = poly({1}) - theorem2_rhs(2);
  EXPECT_EQ(diff, poly({1, 1}) * poly({1, 1}) * Polynomial({Rational(3, 8), Rational(-1, 8)}));
  const auto v = theorem2_check(2);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.modulus, poly({1, 2, 1}));
}

TEST(Theorem2, Examples) {
  for (std::int64_t n : {3, 5, 6}) {
    const auto v = theorem2_check(n);
    EXPECT_TRUE(v.holds) << n;
    EXPECT_TRUE(v.residue_witness.is_zero()) << n;
    EXPECT_EQ(v.modulus, wolstenholme_modulus(n));
  }
}

TEST(Theorem2, DefinitionRouteAgrees) {
  for (std::int64_t n = 2; n <= 16; ++n) {
    const auto fold = theorem2_check(n);
    const auto definition = theorem2_definition_check(n);
    EXPECT_TRUE(definition.holds) << n;
    EXPECT_EQ(definition.residue_witness, fold.residue_witness) << n;
  }
  // n = 3: the fold equals the image of the right-hand side mod [3]^2.
  auto ctx = QuotientContext::create(q_integer(3) * q_integer(3));
  EXPECT_EQ(harmonic_residue(3, ctx).representative(), ctx->reduce(theorem2_rhs(3)));
}

TEST(Theorem2, StrongModulusNoteIsRecorded) {
  for (std::int64_t n : {4, 5, 6, 9}) {
    const auto v = theorem2_check(n);
    EXPECT_NE(v.notes.find("mod [n]^2: "), std::string::npos);
  }
}

TEST(ShiPan, PrintedSignFailsVariantHolds) {
  for (std::int64_t p : {5, 7}) {
    const auto v = shi_pan_probe(p);
    EXPECT_TRUE(v.holds) << p;
    EXPECT_NE(v.notes.find("printed (p-1)(q-1)/2: fails"), std::string::npos);
    EXPECT_NE(v.notes.find("variant (p-1)(1-q)/2: holds"), std::string::npos);
    EXPECT_NE(v.notes.find("theorem2 rhs: yes"), std::string::npos);
    EXPECT_EQ(v.modulus, q_integer(p) * q_integer(p));
  }
  EXPECT_THROW(shi_pan_probe(3), InvalidArgument);
  EXPECT_THROW(shi_pan_probe(9), InvalidArgument);
}

TEST(Ramanujan, OracleExamples) {
  const auto v = ramanujan_oracle_check(2, 4);
  EXPECT_TRUE(v.holds);
  EXPECT_NE(v.notes.find("sum=-2"), std::string::npos);
  EXPECT_TRUE(ramanujan_oracle_check(6, 6).holds);
  EXPECT_NE(ramanujan_oracle_check(6, 6).notes.find("closed=2"), std::string::npos);
  EXPECT_TRUE(ramanujan_oracle_check(1, 6).holds);
  EXPECT_EQ(ramanujan_oracle_check(1, 6).parameter, (std::vector<std::int64_t>{6, 1}));
  EXPECT_THROW(ramanujan_oracle_check(0, 6), InvalidArgument);
  EXPECT_THROW(ramanujan_oracle_check(1, 1), InvalidArgument);
}

TEST(LogDerivative, Examples) {
  EXPECT_EQ(log_deriv_at_one(4, 1), Rational(1));
  EXPECT_EQ(log_deriv_at_one(2, 2), Rational(-1, 4));
  EXPECT_EQ(log_deriv_at_one(3, 1), Rational(1));
  EXPECT_EQ(log_deriv_closed_form(2, 2), Rational(-1, 4));
  EXPECT_THROW(log_deriv_at_one(1, 1), InvalidArgument);
  EXPECT_THROW(log_deriv_at_one(4, 0), InvalidArgument);
}

TEST(LogDerivative, ThirdDerivativeOfLogOnePlusZ) {
  // d^3/dz^3 ln(1+z) = 2/(1+z)^3 -> 1/4 at z = 1.
  EXPECT_EQ(log_deriv_at_one(2, 3), Rational(1, 4));
}

TEST(LemmaLogDeriv, Examples) {
  EXPECT_TRUE(lemma_b1_check(2, 2).holds);
  EXPECT_EQ(lemma_b1_check(2, 2).notes, "lhs=-1/4; rhs=-1/4");
  EXPECT_TRUE(lemma_b1_check(4, 1).holds);
  EXPECT_TRUE(lemma_b1_check(6, 3).holds);
}

TEST(Ln, Examples) {
  EXPECT_EQ(build_Ln(2).poly, poly({-1, 1}));
  EXPECT_EQ(build_Ln(3).poly, Polynomial({Rational(-1, 2), Rational(-1, 2), Rational(1)}));
  for (std::int64_t n = 2; n <= 50; ++n) {
    const auto ln = build_Ln(n);
    EXPECT_EQ(ln.n, n);
    EXPECT_EQ(static_cast<std::int64_t>(*ln.poly.degree()), n - 1);
    EXPECT_TRUE(ln.poly.evaluate(1).is_zero());
  }
  EXPECT_THROW(build_Ln(1), InvalidArgument);
}

TEST(LemmaLnIdentity, Examples) {
  const Polynomial left = poly({1, 1, 1}) * build_Ln(3).poly * Rational(2);
  EXPECT_EQ(left, poly({-1, 0, 0, 1}) * poly({1, 2}));
  for (std::int64_t n : {2, 3, 12}) EXPECT_TRUE(lemma_b2_check(n).holds) << n;
}

TEST(DerivativeFacts, Examples) {
  EXPECT_TRUE(derivative_facts_check(2).holds);
  EXPECT_EQ(build_Ln(2).poly.derivative().evaluate(1), Rational(1));
  EXPECT_EQ(build_Ln(3).poly.derivative().evaluate(1), Rational(3, 2));
  EXPECT_EQ(build_Ln(3).poly.derivative().derivative().evaluate(1), Rational(2));
  EXPECT_TRUE(derivative_facts_check(3).holds);
  EXPECT_TRUE(derivative_facts_check(10).holds);
}

TEST(Classical, Examples) {
  const auto v5 = classical_wolstenholme_check(5);
  EXPECT_TRUE(v5.holds);
  EXPECT_NE(v5.notes.find("numerator=25"), std::string::npos);
  const auto v7 = classical_wolstenholme_check(7);
  EXPECT_TRUE(v7.holds);
  EXPECT_NE(v7.notes.find("numerator=49"), std::string::npos);
  const auto v3 = classical_wolstenholme_check(3);
  EXPECT_FALSE(v3.holds);
  EXPECT_EQ(v3.residue_witness, poly({3}));
  EXPECT_FALSE(classical_wolstenholme_check(4).holds);
  EXPECT_FALSE(classical_wolstenholme_check(2).holds);
  EXPECT_THROW(classical_wolstenholme_check(1), InvalidArgument);
}

TEST(CyclotomicSanity, SmallRange) {
  for (std::int64_t n = 1; n <= 60; ++n) EXPECT_TRUE(cyclotomic_sanity_check(n).holds) << n;
}

TEST(Verdict, HoldsIffWitnessIsZero) {
  EXPECT_TRUE(make_verdict(Claim::kTheorem1, {2}, Polynomial(), poly({1, 1}), "").holds);
  EXPECT_FALSE(make_verdict(Claim::kTheorem1, {2}, poly({0, 1}), poly({1, 1}), "").holds);
}

}  // namespace
}  // namespace qwol
