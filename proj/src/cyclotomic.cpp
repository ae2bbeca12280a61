#include "qwol/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "int_poly.hpp"
#include "qwol/arith.hpp"
#include "qwol/errors.hpp"

namespace qwol {

namespace {

class CyclotomicCache {
 public:
  Polynomial get(std::int64_t n) {
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(n);
      if (it != cache_.end()) return it->second;
    }
    Polynomial phi = build(n);
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(n, std::move(phi)).first->second;
  }

 private:
  Polynomial build(std::int64_t n) {
    Polynomial q_n_minus_1 = Polynomial::monomial(1, static_cast<std::size_t>(n)) - Polynomial::constant(1);
    if (n == 1) return q_n_minus_1;
    Polynomial proper = Polynomial::constant(1);
    for (auto d : divisors(n)) {
      if (d < n) proper *= get(d);
    }
    auto [quot, rem] = divrem(q_n_minus_1, proper);
    if (!rem.is_zero()) {
      throw InternalError("q^" + std::to_string(n) + " - 1 is not divisible by its proper cyclotomic factors");
    }
    return quot;
  }

  std::shared_mutex mutex_;
  std::map<std::int64_t, Polynomial> cache_;
};

CyclotomicCache& cache() {
  static CyclotomicCache c;
  return c;
}

}  // namespace

Polynomial q_integer(std::int64_t n) {
  if (n < 1) throw InvalidArgument("q-integer needs n >= 1, got " + std::to_string(n));
  return Polynomial(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

Polynomial cyclotomic(std::int64_t n) {
  if (n < 1) throw InvalidArgument("cyclotomic polynomial needs n >= 1, got " + std::to_string(n));
  return cache().get(n);
}

Polynomial wolstenholme_modulus(std::int64_t n) {
  if (n < 2) throw InvalidArgument("Wolstenholme modulus needs n >= 2, got " + std::to_string(n));
  return q_integer(n) * cyclotomic(n);
}

// ---- QuotientContext ----

QuotientContext::QuotientContext(Polynomial modulus)
    : modulus_(std::move(modulus)), monic_(modulus_.monic()), integral_(false) {
  if (modulus_.is_constant()) throw InvalidArgument("quotient ring modulus must be nonconstant");
  if (monic_.has_integer_coefficients()) {
    integral_ = true;
    for (const auto& c : monic_.coefficients()) integral_monic_.push_back(c.num_ref());
  }
}

std::shared_ptr<const QuotientContext> QuotientContext::create(Polynomial modulus) {
  return std::make_shared<const QuotientContext>(std::move(modulus));
}

Polynomial QuotientContext::reduce(const Polynomial& p) const {
  if (p.size() <= degree()) return p;
  if (integral_) {
    auto s = detail::to_scaled(p);
    detail::divrem_monic(s.num, integral_monic_, false);
    return detail::from_scaled(s.num, s.den);
  }
  return divrem(p, monic_).remainder;
}

Polynomial QuotientContext::multiply(const Polynomial& a, const Polynomial& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  if (!integral_) return reduce(a * b);
  auto sa = detail::to_scaled(a);
  auto sb = detail::to_scaled(b);
  auto prod = detail::mul(sa.num, sb.num);
  detail::divrem_monic(prod, integral_monic_, false);
  return detail::from_scaled(prod, sa.den * sb.den);
}

Polynomial QuotientContext::power_of_q(std::size_t k) const { return reduce(Polynomial::monomial(1, k)); }

Polynomial QuotientContext::inverse(const Polynomial& a) const {
  Polynomial r = reduce(a);
  if (r.is_zero()) throw NotInvertible("zero has no inverse modulo " + modulus_.str());
  if (r.is_constant()) return Polynomial::constant(Rational(1) / r.leading_coefficient());
  Polynomial inv = detail::multimodular_inverse(*this, r);
  if (!inv.is_zero()) return inv;
  return detail::exact_inverse(r, monic_);
}

// ---- ResidueClass ----

ResidueClass::ResidueClass(std::shared_ptr<const QuotientContext> ctx, const Polynomial& p)
    : ctx_(std::move(ctx)) {
  if (!ctx_) throw InvalidArgument("residue class without a quotient context");
  rep_ = ctx_->reduce(p);
}

ResidueClass::ResidueClass(std::shared_ptr<const QuotientContext> ctx, Polynomial p, Reduced)
    : ctx_(std::move(ctx)), rep_(std::move(p)) {}

ResidueClass ResidueClass::constant(std::shared_ptr<const QuotientContext> ctx, const Rational& c) {
  return ResidueClass(std::move(ctx), Polynomial::constant(c));
}

ResidueClass ResidueClass::q_power(std::shared_ptr<const QuotientContext> ctx, std::size_t k) {
  Polynomial p = ctx->power_of_q(k);
  return ResidueClass(std::move(ctx), std::move(p), Reduced{});
}

void ResidueClass::require_same_modulus(const ResidueClass& o) const {
  if (ctx_ != o.ctx_ && ctx_->modulus() != o.ctx_->modulus()) {
    throw InvalidArgument("residue classes under different moduli");
  }
}

ResidueClass ResidueClass::inverse() const { return ResidueClass(ctx_, ctx_->inverse(rep_), Reduced{}); }

ResidueClass& ResidueClass::operator+=(const ResidueClass& o) {
  require_same_modulus(o);
  rep_ += o.rep_;
  return *this;
}

ResidueClass& ResidueClass::operator-=(const ResidueClass& o) {
  require_same_modulus(o);
  rep_ -= o.rep_;
  return *this;
}

ResidueClass& ResidueClass::operator*=(const ResidueClass& o) {
  require_same_modulus(o);
  rep_ = ctx_->multiply(rep_, o.rep_);
  return *this;
}

bool operator==(const ResidueClass& a, const ResidueClass& b) {
  a.require_same_modulus(b);
  return a.rep_ == b.rep_;
}

ResidueClass residue_inv(const ResidueClass& a) { return a.inverse(); }

}  // namespace qwol
