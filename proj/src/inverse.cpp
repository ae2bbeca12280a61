#include <cstdint>
#include <optional>
#include <vector>

#include "int_poly.hpp"
#include "qwol/cyclotomic.hpp"
#include "qwol/errors.hpp"

namespace qwol::detail {

namespace {

using Word = std::uint64_t;
using ModVec = std::vector<Word>;

constexpr int kMaxPrimes = 256;
// Consecutive primes with no inverse before the exact gcd decides.
constexpr int kUnluckyBeforeGcd = 3;

bool word_is_prime(Word n) {
  if (n < 2) return false;
  for (Word d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

const std::vector<Word>& primes() {
  static const std::vector<Word> list = [] {
    std::vector<Word> v;
    for (Word c = (Word{1} << 31) - 1; v.size() < kMaxPrimes; c -= 2) {
      if (word_is_prime(c)) v.push_back(c);
    }
    return v;
  }();
  return list;
}

Word pow_mod(Word b, Word e, Word p) {
  Word r = 1;
  b %= p;
  while (e != 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Word inv_mod(Word a, Word p) { return pow_mod(a, p - 2, p); }

void trim_mod(ModVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Image of p in F_p[q]; nullopt when the prime divides a denominator.
std::optional<ModVec> reduce_mod(const Polynomial& poly, Word p) {
  ModVec out(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Rational& c = poly[i];
    const Word den = mpz_fdiv_ui(c.den_ref().get_mpz_t(), p);
    if (den == 0) return std::nullopt;
    const Word num = mpz_fdiv_ui(c.num_ref().get_mpz_t(), p);
    out[i] = den == 1 ? num : num * inv_mod(den, p) % p;
  }
  trim_mod(out);
  return out;
}

// Extended Euclid in F_p[q]: t with t * a == 1 (mod m), or nullopt when
// gcd(a, m) is nonconstant modulo p.
std::optional<ModVec> inverse_mod_p(ModVec a, ModVec m, Word p) {
  ModVec r0 = std::move(m), r1 = std::move(a);
  ModVec t0, t1{1};
  while (r1.size() > 1) {
    const std::size_t d1 = r1.size() - 1;
    const Word inv_lc = inv_mod(r1.back(), p);
    ModVec quot(r0.size() - d1);
    for (std::size_t i = r0.size(); i-- > d1;) {
      const Word c = r0[i] * inv_lc % p;
      if (c == 0) continue;
      quot[i - d1] = c;
      for (std::size_t j = 0; j <= d1; ++j) {
        Word& x = r0[i - d1 + j];
        x = (x + p - c * r1[j] % p) % p;
      }
    }
    r0.resize(d1);
    trim_mod(r0);
    ModVec tn(std::max(t0.size(), quot.size() + t1.size() - 1), 0);
    for (std::size_t i = 0; i < t0.size(); ++i) tn[i] = t0[i];
    for (std::size_t i = 0; i < quot.size(); ++i) {
      if (quot[i] == 0) continue;
      for (std::size_t j = 0; j < t1.size(); ++j) {
        Word& x = tn[i + j];
        x = (x + p - quot[i] * t1[j] % p) % p;
      }
    }
    trim_mod(tn);
    // r0 holds the remainder; rotate so (r0, r1) = (old r1, remainder).
    std::swap(r0, r1);
    t0 = std::move(t1);
    t1 = std::move(tn);
  }
  if (r1.empty()) return std::nullopt;
  const Word c = inv_mod(r1[0], p);
  for (auto& x : t1) x = x * c % p;
  return t1;
}

// a/b with |a|, b <= sqrt(modulus / 2) and a == b * x (mod modulus).
std::optional<Rational> reconstruct(const mpz_class& x, const mpz_class& modulus, const mpz_class& bound) {
  mpz_class r0 = modulus, r1 = x, s0 = 0, s1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (sgn(s1) == 0 || abs(s1) > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
  if (g != 1) return std::nullopt;
  return Rational(r1, s1);
}

}  // namespace

Polynomial multimodular_inverse(const QuotientContext& ctx, const Polynomial& a) {
  const Polynomial& m = ctx.monic_modulus();
  const std::size_t deg = ctx.degree();
  std::vector<mpz_class> crt(deg);
  mpz_class modulus = 1;
  std::optional<Polynomial> previous;
  int unlucky = 0;
  bool gcd_checked = false;
  const Polynomial one = Polynomial::constant(1);

  for (Word p : primes()) {
    auto ap = reduce_mod(a, p);
    auto mp = reduce_mod(m, p);
    if (!ap || !mp || mp->size() != m.size()) continue;
    auto inv = inverse_mod_p(std::move(*ap), std::move(*mp), p);
    if (!inv) {
      if (++unlucky >= kUnluckyBeforeGcd && !gcd_checked) {
        if (!gcd(a, m).is_constant()) throw NotInvertible(a.str() + " is a zero divisor modulo " + ctx.modulus().str());
        gcd_checked = true;
      }
      continue;
    }
    unlucky = 0;
    inv->resize(deg, 0);

    // Garner step: x <- x + M * ((r - x) * M^-1 mod p).
    const Word m_inv = inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    for (std::size_t i = 0; i < deg; ++i) {
      const Word x = mpz_fdiv_ui(crt[i].get_mpz_t(), p);
      const Word delta = ((*inv)[i] + p - x) % p * m_inv % p;
      if (delta != 0) mpz_addmul_ui(crt[i].get_mpz_t(), modulus.get_mpz_t(), delta);
    }
    modulus *= static_cast<unsigned long>(p);

    mpz_class bound = modulus / 2;
    mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
    std::vector<Rational> coeffs;
    coeffs.reserve(deg);
    bool ok = true;
    for (const auto& x : crt) {
      auto r = reconstruct(x, modulus, bound);
      if (!r) {
        ok = false;
        break;
      }
      coeffs.push_back(std::move(*r));
    }
    if (!ok) {
      previous.reset();
      continue;
    }
    Polynomial candidate(std::move(coeffs));
    if (previous && *previous == candidate && ctx.multiply(a, candidate) == one) return candidate;
    previous = std::move(candidate);
  }
  return {};
}

Polynomial exact_inverse(const Polynomial& a, const Polynomial& m) {
  // Invariant: s_i * a == r_i (mod m); r_i kept primitive over Z.
  Polynomial r0 = primitive_part(m);
  Polynomial s0;
  Polynomial r1 = primitive_part(a % m);
  if (r1.is_zero()) throw NotInvertible("zero has no inverse modulo " + m.str());
  Polynomial s1 = Polynomial::constant(r1.leading_coefficient() / (a % m).leading_coefficient());
  while (r1.size() > 1) {
    auto [quot, rem] = divrem(r0, r1);
    Polynomial s2 = (s0 - quot * s1) % m;
    if (!rem.is_zero()) {
      Polynomial prim = primitive_part(rem);
      s2 *= prim.leading_coefficient() / rem.leading_coefficient();
      rem = std::move(prim);
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.is_zero()) throw NotInvertible(a.str() + " is a zero divisor modulo " + m.str());
  return (s1 * (Rational(1) / r1.leading_coefficient())) % m;
}

}  // namespace qwol::detail
