#include "qwol/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "int_poly.hpp"
#include "qwol/errors.hpp"

namespace qwol {

namespace {

const Rational& zero_rational() {
  static const Rational zero;
  return zero;
}

// lc(b) = +-1 and integer coefficients: the whole division stays in Z.
bool integral_unit_divisor(const Polynomial& b) {
  const auto& lc = b.leading_coefficient();
  return b.has_integer_coefficients() && (lc.is_one() || lc == Rational(-1));
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::variable() { return monomial(1, 1); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

const Rational& Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_rational();
}

const Rational& Polynomial::leading_coefficient() const {
  return coeffs_.empty() ? zero_rational() : coeffs_.back();
}

Polynomial Polynomial::monic() const {
  if (coeffs_.empty() || is_monic()) return *this;
  Polynomial out = *this;
  const Rational inv = Rational(1) / coeffs_.back();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(out));
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto sa = detail::to_scaled(a);
  auto sb = detail::to_scaled(b);
  auto prod = detail::mul(sa.num, sb.num);
  return detail::from_scaled(prod, sa.den * sb.den);
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::vector<std::string> Polynomial::to_canonical() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.str());
  return out;
}

Polynomial Polynomial::from_canonical(std::span<const std::string> coefficients) {
  std::vector<Rational> v;
  v.reserve(coefficients.size());
  for (const auto& s : coefficients) v.push_back(Rational::parse(s));
  return Polynomial(std::move(v));
}

std::string Polynomial::str(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.str();
      continue;
    }
    if (!mag.is_one()) os << mag.str() << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

DivRem divrem(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZeroPolynomial();
  if (a.size() < b.size()) return {Polynomial(), a};

  if (integral_unit_divisor(b)) {
    // Divide num/den by +-B exactly in Z[q], then rescale.
    auto sa = detail::to_scaled(a);
    detail::ZVec m;
    m.reserve(b.size());
    const bool negate = b.leading_coefficient().sign() < 0;
    for (const auto& c : b.coefficients()) m.push_back(negate ? mpz_class(-c.num_ref()) : c.num_ref());
    auto quot = detail::divrem_monic(sa.num, m, true);
    if (negate) {
      for (auto& c : quot) c = -c;
    }
    detail::trim(quot);
    return {detail::from_scaled(quot, sa.den), detail::from_scaled(sa.num, sa.den)};
  }

  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  const std::size_t db = b.size() - 1;
  std::vector<Rational> quot(a.size() - db);
  const Rational inv_lead = Rational(1) / b.leading_coefficient();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].is_zero()) continue;
    const Rational c = rem[i] * inv_lead;
    for (std::size_t j = 0; j < db; ++j) {
      if (!b[j].is_zero()) rem[i - db + j] -= c * b[j];
    }
    rem[i] = Rational();
    quot[i - db] = c;
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return {};
  auto s = detail::to_scaled(p);
  const mpz_class g = detail::content(s.num);
  for (auto& c : s.num) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  if (sgn(s.num.back()) < 0) {
    for (auto& c : s.num) c = -c;
  }
  return detail::from_integers(s.num);
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw BothZero();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  // Primitive remainder sequence: each remainder is scaled back to a
  // primitive integer polynomial, which bounds coefficient growth.
  auto x = detail::to_scaled(primitive_part(a)).num;
  auto y = detail::to_scaled(primitive_part(b)).num;
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    auto r = detail::primitive_prem(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
  }
  return detail::from_integers(x).monic();
}

}  // namespace qwol
