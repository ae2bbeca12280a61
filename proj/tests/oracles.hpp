#ifndef QWOL_TESTS_ORACLES_HPP
#define QWOL_TESTS_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "qwol/arith.hpp"
#include "qwol/polynomial.hpp"

namespace qwol::testing {

// Naive Rational schoolbook product, independent of the integer kernels.
inline Polynomial schoolbook(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return Polynomial(std::move(c));
}

inline std::int64_t brute_phi(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t k = 1; k <= n; ++k) count += gcd(k, n) == 1 ? 1 : 0;
  return count;
}

// Taylor coefficients of x e^x / (e^x - 1) = e^x / (sum_i x^i / (i+1)!),
// by power-series division; B_j(1) = j! * c_j.
inline std::vector<Rational> bernoulli_series_oracle(int order) {
  std::vector<Rational> factorial{Rational(1)};
  for (int i = 1; i <= order + 1; ++i) factorial.push_back(factorial.back() * Rational(i));
  std::vector<Rational> c;
  for (int j = 0; j <= order; ++j) {
    Rational v = Rational(1) / factorial[j];
    for (int i = 0; i < j; ++i) v -= c[i] / factorial[j - i + 1];
    c.push_back(v);
  }
  std::vector<Rational> values;
  for (int j = 0; j <= order; ++j) values.push_back(c[j] * factorial[j]);
  return values;
}

inline Polynomial q_pow_minus_one(std::int64_t n) {
  return Polynomial::monomial(1, static_cast<std::size_t>(n)) - Polynomial::constant(1);
}

}  // namespace qwol::testing

#endif  // QWOL_TESTS_ORACLES_HPP
