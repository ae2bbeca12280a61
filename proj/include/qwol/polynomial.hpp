#ifndef QWOL_POLYNOMIAL_HPP
#define QWOL_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qwol/rational.hpp"

namespace qwol {

/**
 * Dense univariate polynomial over the rationals in the indeterminate q.
 *
 * Coefficient i multiplies q^i. The stored sequence never ends in a zero, so
 * the zero polynomial is the empty sequence and has no degree: degree()
 * returns std::nullopt for it rather than a negative sentinel.
 */
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t power);
  /// The indeterminate q itself.
  static Polynomial variable();

  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// True for the zero polynomial and for nonzero constants.
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
  bool has_integer_coefficients() const;

  /// Number of stored coefficients, i.e. degree + 1 (0 for the zero polynomial).
  std::size_t size() const { return coeffs_.size(); }
  /// Coefficient of q^i; zero past the end.
  const Rational& coefficient(std::size_t i) const;
  const Rational& operator[](std::size_t i) const { return coefficient(i); }
  /// Leading coefficient; zero for the zero polynomial.
  const Rational& leading_coefficient() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational evaluate(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Ascending coefficient strings, e.g. q^2 - q + 1 -> ["1","-1","1"].
  std::vector<std::string> to_canonical() const;
  static Polynomial from_canonical(std::span<const std::string> coefficients);

  /// Ascending human form, e.g. "1 - q + q^2". The zero polynomial prints "0".
  std::string str(char var = 'q') const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct DivRem {
  Polynomial quotient;
  Polynomial remainder;
};

/// a = quotient * b + remainder with deg remainder < deg b. Throws
/// DivisionByZeroPolynomial when b is zero.
DivRem divrem(const Polynomial& a, const Polynomial& b);

inline Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divrem(a, b).remainder; }

/// Monic greatest common divisor. Throws BothZero when a and b are both zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Integer polynomial with the same roots: scaled by a rational so the
/// coefficients are coprime integers with a positive leading coefficient.
Polynomial primitive_part(const Polynomial& p);

}  // namespace qwol

#endif  // QWOL_POLYNOMIAL_HPP
