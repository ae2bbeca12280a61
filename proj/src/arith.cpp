#include "qwol/arith.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "qwol/errors.hpp"

namespace qwol {

namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw InvalidArgument(std::string(what) + " must be >= 1, got " + std::to_string(n));
}

Factorization trial_division(std::int64_t n) {
  Factorization f;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

}  // namespace

Factorization FactorizationTable::factor(std::int64_t n) {
  require_positive(n, "n");
  {
    std::shared_lock lock(mutex_);
    auto it = table_.find(n);
    if (it != table_.end()) return it->second;
  }
  Factorization f = trial_division(n);
  std::unique_lock lock(mutex_);
  return table_.try_emplace(n, std::move(f)).first->second;
}

std::size_t FactorizationTable::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

FactorizationTable& default_factorization_table() {
  static FactorizationTable table;
  return table;
}

Factorization factorize(std::int64_t n) { return default_factorization_table().factor(n); }

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::int64_t pk = 1;
    for (int i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t k = 0; k < base; ++k) out.push_back(out[k] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

int mobius(std::int64_t n) {
  require_positive(n, "n");
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::int64_t euler_phi(std::int64_t n) {
  require_positive(n, "n");
  std::int64_t result = n;
  for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

BigInt jordan_totient(int k, std::int64_t n) {
  if (k < 1) throw InvalidArgument("Jordan totient order k must be >= 1, got " + std::to_string(k));
  require_positive(n, "n");
  BigInt sum = 0;
  for (auto d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
    if (mu > 0) sum += term; else sum -= term;
  }
  return sum;
}

std::int64_t ramanujan_closed(std::int64_t j, std::int64_t n) {
  require_positive(j, "j");
  require_positive(n, "n");
  const std::int64_t m = n / gcd(n, j);
  const std::int64_t num = euler_phi(n) * mobius(m);
  const std::int64_t den = euler_phi(m);
  if (num % den != 0) {
    throw InternalError("Ramanujan closed form not integral at j=" + std::to_string(j) + ", n=" + std::to_string(n));
  }
  return num / den;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational bernoulli_number(int j) {
  if (j < 0) throw InvalidArgument("Bernoulli index must be >= 0");
  // sum_{i=0}^{m} binom(m+1, i) B_i = 0 for m >= 1.
  std::vector<Rational> b{Rational(1)};
  for (int m = 1; m <= j; ++m) {
    Rational acc;
    for (int i = 0; i < m; ++i) acc += Rational(binomial(m + 1, i)) * b[i];
    b.push_back(-acc / Rational(m + 1));
  }
  return b[j];
}

Polynomial bernoulli_polynomial(int j) {
  if (j < 0) throw InvalidArgument("Bernoulli index must be >= 0");
  std::vector<Rational> coeffs(j + 1);
  for (int i = 0; i <= j; ++i) coeffs[j - i] = Rational(binomial(j, i)) * bernoulli_number(i);
  return Polynomial(std::move(coeffs));
}

Rational bernoulli_at_one(int j) { return bernoulli_polynomial(j).evaluate(1); }

BigInt stirling_first(int k, int j) {
  if (k < 1) throw InvalidArgument("Stirling index k must be >= 1, got " + std::to_string(k));
  if (j < 0 || j > k) return 0;
  Polynomial falling = Polynomial::constant(1);
  for (int i = 0; i < k; ++i) falling *= Polynomial{Rational(-i), Rational(1)};
  return falling[static_cast<std::size_t>(j)].numerator();
}

}  // namespace qwol
