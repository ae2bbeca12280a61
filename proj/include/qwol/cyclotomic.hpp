#ifndef QWOL_CYCLOTOMIC_HPP
#define QWOL_CYCLOTOMIC_HPP

#include <cstdint>
#include <memory>

#include "qwol/polynomial.hpp"
#include "qwol/rational.hpp"

namespace qwol {

/// [n] = 1 + q + ... + q^(n-1).
Polynomial q_integer(std::int64_t n);

/// n-th cyclotomic polynomial, built as (q^n - 1) / prod_{d | n, d < n} Phi_d
/// by exact division. Memoized; safe to call from several threads.
Polynomial cyclotomic(std::int64_t n);

/// [n] * Phi_n(q), for n >= 2.
Polynomial wolstenholme_modulus(std::int64_t n);

/// The quotient ring Q[q]/(M) for a fixed nonconstant modulus M.
/// Immutable once built and shared between residues through shared_ptr.
class QuotientContext {
 public:
  explicit QuotientContext(Polynomial modulus);
  static std::shared_ptr<const QuotientContext> create(Polynomial modulus);

  const Polynomial& modulus() const { return modulus_; }
  const Polynomial& monic_modulus() const { return monic_; }
  std::size_t degree() const { return monic_.size() - 1; }

  Polynomial reduce(const Polynomial& p) const;
  /// Product of two already reduced representatives, reduced.
  Polynomial multiply(const Polynomial& a, const Polynomial& b) const;
  /// q^k reduced.
  Polynomial power_of_q(std::size_t k) const;
  /// Inverse of a reduced representative; throws NotInvertible when it
  /// shares a nonconstant factor with the modulus.
  Polynomial inverse(const Polynomial& a) const;

 private:
  Polynomial modulus_;
  Polynomial monic_;
  bool integral_;
  std::vector<mpz_class> integral_monic_;
};

/// Element of Q[q]/(M), always stored fully reduced.
class ResidueClass {
 public:
  ResidueClass(std::shared_ptr<const QuotientContext> ctx, const Polynomial& p);

  static ResidueClass constant(std::shared_ptr<const QuotientContext> ctx, const Rational& c);
  /// Class of q^k.
  static ResidueClass q_power(std::shared_ptr<const QuotientContext> ctx, std::size_t k);

  const Polynomial& representative() const { return rep_; }
  const QuotientContext& context() const { return *ctx_; }
  const std::shared_ptr<const QuotientContext>& context_ptr() const { return ctx_; }
  bool is_zero() const { return rep_.is_zero(); }

  ResidueClass inverse() const;

  ResidueClass& operator+=(const ResidueClass& o);
  ResidueClass& operator-=(const ResidueClass& o);
  ResidueClass& operator*=(const ResidueClass& o);
  friend ResidueClass operator+(ResidueClass a, const ResidueClass& b) { return a += b; }
  friend ResidueClass operator-(ResidueClass a, const ResidueClass& b) { return a -= b; }
  friend ResidueClass operator*(ResidueClass a, const ResidueClass& b) { return a *= b; }

  /// Throws InvalidArgument when the moduli differ.
  friend bool operator==(const ResidueClass& a, const ResidueClass& b);

 private:
  struct Reduced {};
  ResidueClass(std::shared_ptr<const QuotientContext> ctx, Polynomial p, Reduced);
  void require_same_modulus(const ResidueClass& o) const;

  std::shared_ptr<const QuotientContext> ctx_;
  Polynomial rep_;
};

/// b with a * b == 1 in the quotient ring (extended Euclidean algorithm).
ResidueClass residue_inv(const ResidueClass& a);

namespace detail {

/// Inverse of a modulo m by the extended Euclidean algorithm over several
/// word-size primes, Chinese remaindering and rational reconstruction. The
/// candidate is accepted only after an exact check a * b == 1 (mod m).
/// Returns an empty polynomial when no candidate could be confirmed.
Polynomial multimodular_inverse(const QuotientContext& ctx, const Polynomial& a);

/// Extended Euclidean algorithm directly over Q with primitive remainders.
Polynomial exact_inverse(const Polynomial& a, const Polynomial& m);

}  // namespace detail

}  // namespace qwol

#endif  // QWOL_CYCLOTOMIC_HPP
