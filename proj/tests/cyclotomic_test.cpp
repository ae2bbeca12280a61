#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "qwol/arith.hpp"
#include "qwol/cyclotomic.hpp"
#include "qwol/errors.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace qwol {
namespace {

using testing::poly;
using testing::q_pow_minus_one;

TEST(QInteger, Examples) {
  EXPECT_EQ(q_integer(1), poly({1}));
  EXPECT_EQ(q_integer(3), poly({1, 1, 1}));
  EXPECT_EQ(q_integer(5), cyclotomic(5));
  EXPECT_THROW(q_integer(0), InvalidArgument);
}

TEST(Cyclotomic, Examples) {
  EXPECT_EQ(cyclotomic(1), poly({-1, 1}));
  EXPECT_EQ(cyclotomic(2), poly({1, 1}));
  EXPECT_EQ(cyclotomic(4), poly({1, 0, 1}));
  EXPECT_EQ(cyclotomic(6), poly({1, -1, 1}));
  EXPECT_EQ(cyclotomic(5), poly({1, 1, 1, 1, 1}));
  EXPECT_EQ(cyclotomic(1) * cyclotomic(2), poly({-1, 0, 1}));
  EXPECT_THROW(cyclotomic(0), InvalidArgument);
}

TEST(Cyclotomic, FirstCoefficientOutsideUnitRange) {
  // Phi_105 is the first cyclotomic polynomial with a coefficient -2.
  const Polynomial phi = cyclotomic(105);
  bool seen = false;
  for (const auto& c : phi.coefficients()) seen = seen || c == Rational(-2);
  EXPECT_TRUE(seen);
  for (std::int64_t n = 1; n < 105; ++n) {
    const Polynomial small = cyclotomic(n);
    for (const auto& c : small.coefficients()) EXPECT_LE(c * c, Rational(1)) << n;
  }
}

TEST(Cyclotomic, ProductOverDivisorsIsQnMinusOne) {
  for (std::int64_t n = 1; n <= 500; ++n) {
    Polynomial product = Polynomial::constant(1);
    for (auto d : divisors(n)) product *= cyclotomic(d);
    ASSERT_EQ(product, q_pow_minus_one(n)) << n;
    const Polynomial phi = cyclotomic(n);
    EXPECT_EQ(static_cast<std::int64_t>(*phi.degree()), euler_phi(n)) << n;
    EXPECT_TRUE(phi.has_integer_coefficients()) << n;
    EXPECT_TRUE(phi.is_monic()) << n;
  }
}

TEST(Cyclotomic, ValueAtOneIsPrimeForPrimePowers) {
  for (std::int64_t n = 2; n <= 1000; ++n) {
    const auto f = factorize(n);
    const Rational expected = f.size() == 1 ? Rational(f[0].first) : Rational(1);
    EXPECT_EQ(cyclotomic(n).evaluate(1), expected) << n;
  }
}

TEST(Cyclotomic, ConcurrentConstructionIsConsistent) {
  std::vector<Polynomial> a(60), b(60);
  {
    std::jthread t1([&] {
      for (int n = 1200; n < 1260; ++n) a[n - 1200] = cyclotomic(n);
    });
    std::jthread t2([&] {
      for (int n = 1259; n >= 1200; --n) b[n - 1200] = cyclotomic(n);
    });
  }
  EXPECT_EQ(a, b);
}

TEST(WolstenholmeModulus, Examples) {
  EXPECT_EQ(wolstenholme_modulus(3), poly({1, 1, 1}) * poly({1, 1, 1}));
  EXPECT_EQ(wolstenholme_modulus(4), poly({1, 1, 1, 1}) * poly({1, 0, 1}));
  EXPECT_EQ(wolstenholme_modulus(6).degree(), 7u);
  EXPECT_THROW(wolstenholme_modulus(1), InvalidArgument);
  for (std::int64_t n = 2; n <= 60; ++n) {
    EXPECT_EQ(static_cast<std::int64_t>(*wolstenholme_modulus(n).degree()), n - 1 + euler_phi(n));
  }
}

TEST(QuotientContext, RejectsConstantModulus) {
  EXPECT_THROW(QuotientContext(poly({3})), InvalidArgument);
  EXPECT_THROW(QuotientContext{Polynomial()}, InvalidArgument);
}

TEST(ResidueInverse, Examples) {
  auto c4 = QuotientContext::create(poly({1, 0, 1}));
  EXPECT_EQ(residue_inv(ResidueClass(c4, poly({0, 1}))).representative(), poly({0, -1}));

  auto c3 = QuotientContext::create(cyclotomic(3));
  const auto inv = residue_inv(ResidueClass(c3, poly({1, -1})));
  EXPECT_EQ(inv.representative(), Polynomial({Rational(2, 3), Rational(1, 3)}));
  EXPECT_EQ((inv * ResidueClass(c3, poly({1, -1}))).representative(), poly({1}));

  auto c1 = QuotientContext::create(poly({-1, 1}));
  EXPECT_THROW(residue_inv(ResidueClass(c1, poly({-1, 1}))), NotInvertible);
}

TEST(ResidueInverse, ZeroDivisorsOfNonSquarefreeModulus) {
  for (std::int64_t n : {4, 6, 9, 12}) {
    auto ctx = QuotientContext::create(wolstenholme_modulus(n));
    EXPECT_THROW(residue_inv(ResidueClass(ctx, cyclotomic(n))), NotInvertible) << n;
    EXPECT_THROW(residue_inv(ResidueClass(ctx, q_integer(n) * poly({2, 1}))), NotInvertible) << n;
    EXPECT_THROW(detail::exact_inverse(cyclotomic(n), ctx->modulus()), NotInvertible) << n;
  }
}

TEST(ResidueInverse, MultimodularAgreesWithExactEuclid) {
  std::mt19937_64 rng(11);
  for (std::int64_t n : {5, 8, 12, 15, 21, 30}) {
    auto ctx = QuotientContext::create(wolstenholme_modulus(n));
    for (int t = 0; t < 10; ++t) {
      const Polynomial a = ctx->reduce(testing::random_nonzero_polynomial(rng, static_cast<int>(ctx->degree()) - 1));
      Polynomial exact;
      try {
        exact = detail::exact_inverse(a, ctx->monic_modulus());
      } catch (const NotInvertible&) {
        EXPECT_THROW(ctx->inverse(a), NotInvertible);
        continue;
      }
      const Polynomial fast = detail::multimodular_inverse(*ctx, a);
      ASSERT_FALSE(fast.is_zero());
      EXPECT_EQ(fast, exact);
      EXPECT_EQ(ctx->multiply(a, exact), poly({1}));
    }
  }
}

TEST(ResidueInverse, NonIntegralModulus) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 40; ++t) {
    Polynomial m = testing::random_nonzero_polynomial(rng, 7);
    if (m.is_constant()) continue;
    auto ctx = QuotientContext::create(m);
    const ResidueClass a(ctx, testing::random_polynomial(rng, 10));
    try {
      const ResidueClass b = residue_inv(a);
      EXPECT_EQ((a * b).representative(), poly({1}));
      EXPECT_EQ(residue_inv(b), a);
    } catch (const NotInvertible&) {
      EXPECT_FALSE(a.is_zero() ? false : gcd(a.representative(), m).is_constant());
    }
  }
}

TEST(ResidueInverse, QIntegersAreUnitsModuloWolstenholmeModulus) {
  for (std::int64_t n = 2; n <= 200; ++n) {
    const Polynomial m = wolstenholme_modulus(n);
    for (std::int64_t k = 1; k < n; ++k) {
      if (gcd(n, k) != 1) continue;
      ASSERT_TRUE(gcd(q_integer(k), m).is_constant()) << "n=" << n << " k=" << k;
    }
  }
}

TEST(ResidueInverse, Involution) {
  std::mt19937_64 rng(13);
  auto ctx = QuotientContext::create(wolstenholme_modulus(10));
  for (int t = 0; t < 20; ++t) {
    const ResidueClass a(ctx, testing::random_nonzero_polynomial(rng, 8));
    try {
      EXPECT_EQ(residue_inv(residue_inv(a)), a);
    } catch (const NotInvertible&) {
    }
  }
}

TEST(ResidueClass, RingAxiomsAndReduction) {
  std::mt19937_64 rng(14);
  auto ctx = QuotientContext::create(cyclotomic(12) * poly({1, 2}));
  for (int t = 0; t < 50; ++t) {
    const Polynomial pa = testing::random_polynomial(rng, 14), pb = testing::random_polynomial(rng, 14);
    const ResidueClass a(ctx, pa), b(ctx, pb), c(ctx, testing::random_polynomial(rng, 14));
    EXPECT_TRUE(a.representative().size() <= ctx->degree());
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a * b).representative(), (pa * pb) % ctx->modulus());
  }
}

TEST(ResidueClass, DifferentModuliDoNotMix) {
  auto c1 = QuotientContext::create(cyclotomic(4));
  auto c2 = QuotientContext::create(cyclotomic(6));
  auto c1_again = QuotientContext::create(cyclotomic(4));
  const ResidueClass a(c1, poly({0, 1})), b(c2, poly({0, 1}));
  EXPECT_THROW((void)(a == b), InvalidArgument);
  EXPECT_THROW(a + b, InvalidArgument);
  EXPECT_THROW(a * b, InvalidArgument);
  EXPECT_TRUE(a == ResidueClass(c1_again, poly({0, 1})));
}

TEST(ResidueClass, PowersOfQ) {
  auto ctx = QuotientContext::create(cyclotomic(7));
  EXPECT_EQ(ResidueClass::q_power(ctx, 7).representative(), poly({1}));
  EXPECT_EQ(ResidueClass::q_power(ctx, 6).representative(), poly({-1, -1, -1, -1, -1, -1}));
  EXPECT_EQ(ResidueClass::q_power(ctx, 15).representative(), poly({0, 1}));
}

}  // namespace
}  // namespace qwol
