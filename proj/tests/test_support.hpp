#ifndef QWOL_TESTS_TEST_SUPPORT_HPP
#define QWOL_TESTS_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "qwol/polynomial.hpp"

namespace qwol::testing {

// Small random rationals: numerators in [-9, 9], denominators in [1, 6].
inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  return Rational(num(rng), den(rng));
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int max_degree = 12) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  const int d = deg(rng);
  std::vector<Rational> c;
  for (int i = 0; i <= d; ++i) c.push_back(random_rational(rng));
  return Polynomial(std::move(c));
}

inline Polynomial random_nonzero_polynomial(std::mt19937_64& rng, int max_degree = 12) {
  Polynomial p;
  while (p.is_zero()) p = random_polynomial(rng, max_degree);
  return p;
}

// q written as a polynomial, for readable expectations.
inline Polynomial poly(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return Polynomial(std::move(c));
}

}  // namespace qwol::testing

#endif  // QWOL_TESTS_TEST_SUPPORT_HPP
