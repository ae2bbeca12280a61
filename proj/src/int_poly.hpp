// Integer-coefficient polynomial kernels shared by the polynomial and
// quotient-ring code. Not part of the public interface.
#ifndef QWOL_SRC_INT_POLY_HPP
#define QWOL_SRC_INT_POLY_HPP

#include <gmpxx.h>

#include <vector>

#include "qwol/polynomial.hpp"

namespace qwol::detail {

using ZVec = std::vector<mpz_class>;

/// p == num / den with den > 0 the lcm of the coefficient denominators.
struct Scaled {
  ZVec num;
  mpz_class den;
};

void trim(ZVec& a);
Scaled to_scaled(const Polynomial& p);
Polynomial from_scaled(const ZVec& num, const mpz_class& den);
Polynomial from_integers(const ZVec& num);

mpz_class content(const ZVec& a);
ZVec mul(const ZVec& a, const ZVec& b);

/// Divides a by the monic m in place; a is left holding the remainder.
/// Returns the quotient when want_quotient is set, otherwise an empty vector.
ZVec divrem_monic(ZVec& a, const ZVec& m, bool want_quotient);

/// lc(b)^e * a mod b for a suitable e, reduced to its primitive part.
ZVec primitive_prem(ZVec a, const ZVec& b);

}  // namespace qwol::detail

#endif  // QWOL_SRC_INT_POLY_HPP
