#include "int_poly.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace qwol::detail {

namespace {


mpz_class from_int128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class r(static_cast<unsigned long>(u >> 64));
  r <<= 64;
  r += static_cast<unsigned long>(u & 0xffffffffffffffffULL);
  if (neg) r = -r;
  return r;
}

std::size_t max_bits(const ZVec& a) {
  std::size_t bits = 0;
  for (const auto& c : a) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return bits;
}

}  // namespace

void trim(ZVec& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

Scaled to_scaled(const Polynomial& p) {
  Scaled s;
  s.den = 1;
  for (const auto& c : p.coefficients()) {
    if (c.den_ref() != 1) mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), c.den_ref().get_mpz_t());
  }
  s.num.reserve(p.size());
  for (const auto& c : p.coefficients()) {
    if (s.den == 1) {
      s.num.push_back(c.num_ref());
    } else {
      mpz_class t;
      mpz_divexact(t.get_mpz_t(), s.den.get_mpz_t(), c.den_ref().get_mpz_t());
      t *= c.num_ref();
      s.num.push_back(std::move(t));
    }
  }
  return s;
}

Polynomial from_scaled(const ZVec& num, const mpz_class& den) {
  std::vector<Rational> out;
  out.reserve(num.size());
  for (const auto& c : num) out.emplace_back(c, den);
  return Polynomial(std::move(out));
}

Polynomial from_integers(const ZVec& num) {
  std::vector<Rational> out;
  out.reserve(num.size());
  for (const auto& c : num) out.emplace_back(c);
  return Polynomial(std::move(out));
}

mpz_class content(const ZVec& a) {
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZVec mul(const ZVec& a, const ZVec& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size() + b.size() - 1;
  const std::size_t shorter = std::min(a.size(), b.size());
  const std::size_t bits = max_bits(a) + max_bits(b) + std::bit_width(shorter);
  if (bits < 126 && max_bits(a) < 63 && max_bits(b) < 63) {
    std::vector<std::int64_t> x(a.size()), y(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) x[i] = a[i].get_si();
    for (std::size_t i = 0; i < b.size(); ++i) y[i] = b[i].get_si();
    std::vector<__int128> acc(n, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j) acc[i + j] += static_cast<__int128>(x[i]) * y[j];
    }
    ZVec out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (acc[i] >= INT64_MIN && acc[i] <= INT64_MAX) {
        out[i] = static_cast<long>(acc[i]);
      } else {
        out[i] = from_int128(acc[i]);
      }
    }
    trim(out);
    return out;
  }
  ZVec out(n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(out);
  return out;
}

ZVec divrem_monic(ZVec& a, const ZVec& m, bool want_quotient) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  if (a.size() <= dm) return {};
  // Sparse moduli such as q^n - 1 and [n]^2 are common; skip their zeros.
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < dm; ++j) {
    if (sgn(m[j]) != 0) support.push_back(j);
  }
  ZVec quot;
  if (want_quotient) quot.resize(a.size() - dm);

  bool small = max_bits(a) < 62 && max_bits(m) < 31;
  if (small) {
    // int64 fast path; leaves it as soon as a value gets close to overflow.
    std::vector<std::int64_t> x(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) x[i] = a[i].get_si();
    std::vector<std::int64_t> y(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) y[j] = m[j].get_si();
    std::size_t i = x.size();
    constexpr std::int64_t kLimit = std::int64_t{1} << 61;
    while (i > dm) {
      --i;
      const std::int64_t c = x[i];
      if (c == 0) continue;
      if (c >= (std::int64_t{1} << 30) || c <= -(std::int64_t{1} << 30)) {
        ++i;
        small = false;
        break;
      }
      bool overflow = false;
      for (auto j : support) {
        std::int64_t& t = x[i - dm + j];
        t -= c * y[j];
        if (t >= kLimit || t <= -kLimit) overflow = true;
      }
      if (want_quotient) quot[i - dm] = static_cast<long>(c);
      x[i] = 0;
      if (overflow) {
        small = false;
        break;
      }
    }
    for (std::size_t k = 0; k < x.size(); ++k) a[k] = static_cast<long>(x[k]);
    if (small) {
      a.resize(std::min(a.size(), dm));
      trim(a);
      return quot;
    }
    trim(a);
  }
  for (std::size_t i = a.size(); i > dm;) {
    --i;
    if (i >= a.size() || sgn(a[i]) == 0) continue;
    const mpz_class c = a[i];
    for (auto j : support) mpz_submul(a[i - dm + j].get_mpz_t(), c.get_mpz_t(), m[j].get_mpz_t());
    if (want_quotient) quot[i - dm] = c;
    a[i] = 0;
  }
  a.resize(std::min(a.size(), dm));
  trim(a);
  return quot;
}

ZVec primitive_prem(ZVec a, const ZVec& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const mpz_class la = a.back();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
    const mpz_class fa = lb / g;
    const mpz_class fb = la / g;
    // a <- (lb/g) * a - (la/g) * q^shift * b; the leading term cancels.
    for (auto& c : a) c *= fa;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(a[shift + j].get_mpz_t(), fb.get_mpz_t(), b[j].get_mpz_t());
    trim(a);
  }
  const mpz_class g = content(a);
  if (g > 1) {
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return a;
}

}  // namespace qwol::detail
