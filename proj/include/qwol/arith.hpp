#ifndef QWOL_ARITH_HPP
#define QWOL_ARITH_HPP

#include <cstdint>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qwol/polynomial.hpp"
#include "qwol/rational.hpp"

namespace qwol {

/// (prime, exponent) pairs with strictly increasing primes.
using Factorization = std::vector<std::pair<std::int64_t, int>>;

/// Memoized trial-division factorizations. Lookups and inserts may come from
/// any number of threads.
class FactorizationTable {
 public:
  Factorization factor(std::int64_t n);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::int64_t, Factorization> table_;
};

FactorizationTable& default_factorization_table();

Factorization factorize(std::int64_t n);
/// All positive divisors of n in ascending order.
std::vector<std::int64_t> divisors(std::int64_t n);
bool is_prime(std::int64_t n);
std::int64_t gcd(std::int64_t a, std::int64_t b);

int mobius(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);

/// J_k(n) = sum over d | n of mu(n/d) d^k.
BigInt jordan_totient(int k, std::int64_t n);

/// Closed form of the Ramanujan sum: phi(n) mu(n/(n,j)) / phi(n/(n,j)).
std::int64_t ramanujan_closed(std::int64_t j, std::int64_t n);

BigInt binomial(int n, int k);

/// Bernoulli numbers with B_1 = -1/2.
Rational bernoulli_number(int j);
/// B_j(t) = sum_i binom(j, i) B_i t^(j - i).
Polynomial bernoulli_polynomial(int j);
Rational bernoulli_at_one(int j);

/// Signed Stirling number of the first kind: coefficient of x^j in
/// x(x-1)...(x-k+1). Zero when j < 0 or j > k.
BigInt stirling_first(int k, int j);

}  // namespace qwol

#endif  // QWOL_ARITH_HPP
