#include "hlcbs/exact/bigfloat.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "hlcbs/errors.hpp"

namespace hlcbs::exact {

namespace {
constexpr mpfr_prec_t kBoundPrecision = 64;
}  // namespace

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const Rational& r, mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_q(v_, r.value().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long v, mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_double(double v, mpfr_prec_t precision) {
  BigFloat r(precision);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::parse(std::string_view text, mpfr_prec_t precision) {
  BigFloat r(precision);
  const std::string s(text);
  char* end = nullptr;
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0')
    throw ParseError("not a decimal number: '" + s + "'");
  return r;
}

BigFloat BigFloat::pi(mpfr_prec_t precision) {
  BigFloat r(precision);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp2i(long e, mpfr_prec_t precision) {
  BigFloat r(precision);
  mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::rounded(mpfr_prec_t precision) const {
  BigFloat r(precision);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

void BigFloat::grow_to(mpfr_prec_t p) {
  if (p > precision()) mpfr_prec_round(v_, p, MPFR_RNDN);
}

std::string BigFloat::str(int digits) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
  if (digits <= 0) digits = std::max(1, static_cast<int>(static_cast<double>(precision()) * 0.30103));
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  grow_to(o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  grow_to(o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  grow_to(o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  grow_to(o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::mul(const Rational& q) const {
  BigFloat r(precision());
  mpfr_mul_q(r.v_, v_, q.value().get_mpq_t(), MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

namespace {

template <typename F>
BigFloat unary(const BigFloat& x, F f) {
  BigFloat r(x.precision());
  f(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat asin(const BigFloat& x) { return unary(x, mpfr_asin); }
BigFloat gamma(const BigFloat& x) { return unary(x, mpfr_gamma); }
BigFloat digamma(const BigFloat& x) { return unary(x, mpfr_digamma); }

BigFloat pow(const BigFloat& base, const BigFloat& exponent) {
  BigFloat r(std::max(base.precision(), exponent.precision()));
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(); }

// ---------------------------------------------------------------------------
// error-bound arithmetic

namespace bound {

BigFloat add(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kBoundPrecision);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

BigFloat mul(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kBoundPrecision);
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  mpfr_abs(r.get(), r.get(), MPFR_RNDU);
  return r;
}

BigFloat div(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kBoundPrecision);
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

BigFloat relative(const BigFloat& x, long bits) {
  BigFloat r(kBoundPrecision);
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  mpfr_mul_2si(r.get(), r.get(), -bits, MPFR_RNDU);
  return r;
}

BigFloat rounding(const BigFloat& v) { return relative(v, v.precision()); }

}  // namespace bound

namespace {

BigFloat abs_up(const BigFloat& x) {
  BigFloat r(kBoundPrecision);
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  return r;
}

// Lower bound for |x| - e; may be <= 0.
BigFloat lower_magnitude(const BigFloat& x, const BigFloat& e) {
  BigFloat r(kBoundPrecision);
  BigFloat ax(kBoundPrecision);
  mpfr_abs(ax.get(), x.get(), MPFR_RNDD);
  mpfr_sub(r.get(), ax.get(), e.get(), MPFR_RNDD);
  return r;
}

BoundedFloat with_rounding(BigFloat v, BigFloat e, int ternary) {
  if (ternary != 0) e = bound::add(e, bound::rounding(v));
  return BoundedFloat{std::move(v), std::move(e)};
}

}  // namespace

BoundedFloat BoundedFloat::from_rational(const Rational& r, mpfr_prec_t precision) {
  BigFloat v(precision);
  const int t = mpfr_set_q(v.get(), r.value().get_mpq_t(), MPFR_RNDN);
  return with_rounding(std::move(v), BigFloat(kBoundPrecision), t);
}

BoundedFloat BoundedFloat::exact(const BigFloat& v) { return BoundedFloat{v, BigFloat(kBoundPrecision)}; }

BoundedFloat BoundedFloat::rounded(mpfr_prec_t p) const {
  BigFloat v(p);
  const int t = mpfr_set(v.get(), value.get(), MPFR_RNDN);
  return with_rounding(std::move(v), error, t);
}

BigFloat BoundedFloat::deviation(const BoundedFloat& other) const { return deviation(other.value); }

BigFloat BoundedFloat::deviation(const BigFloat& other) const {
  BigFloat d(std::max(value.precision(), other.precision()) + 8);
  mpfr_sub(d.get(), value.get(), other.get(), MPFR_RNDN);
  mpfr_abs(d.get(), d.get(), MPFR_RNDN);
  return d;
}

BoundedFloat operator+(const BoundedFloat& a, const BoundedFloat& b) {
  BigFloat v(std::max(a.precision(), b.precision()));
  const int t = mpfr_add(v.get(), a.value.get(), b.value.get(), MPFR_RNDN);
  return with_rounding(std::move(v), bound::add(a.error, b.error), t);
}

BoundedFloat operator-(const BoundedFloat& a, const BoundedFloat& b) {
  BigFloat v(std::max(a.precision(), b.precision()));
  const int t = mpfr_sub(v.get(), a.value.get(), b.value.get(), MPFR_RNDN);
  return with_rounding(std::move(v), bound::add(a.error, b.error), t);
}

BoundedFloat operator-(const BoundedFloat& a) { return BoundedFloat{-a.value, a.error}; }

BoundedFloat operator*(const BoundedFloat& a, const BoundedFloat& b) {
  BigFloat v(std::max(a.precision(), b.precision()));
  const int t = mpfr_mul(v.get(), a.value.get(), b.value.get(), MPFR_RNDN);
  BigFloat e = bound::add(bound::add(bound::mul(abs_up(a.value), b.error), bound::mul(abs_up(b.value), a.error)),
                          bound::mul(a.error, b.error));
  return with_rounding(std::move(v), std::move(e), t);
}

BoundedFloat operator/(const BoundedFloat& a, const BoundedFloat& b) {
  const BigFloat denom = lower_magnitude(b.value, b.error);
  if (denom.sign() <= 0) throw DomainError("division by an enclosure containing zero");
  BigFloat v(std::max(a.precision(), b.precision()));
  const int t = mpfr_div(v.get(), a.value.get(), b.value.get(), MPFR_RNDN);
  // |A/B - a/b| <= (|dA| + |a/b| |dB|) / (|b| - |dB|); |a/b| <= |v| (1 + 2^-p).
  BigFloat quotient = bound::add(abs_up(v), bound::rounding(v));
  BigFloat e = bound::div(bound::add(a.error, bound::mul(quotient, b.error)), denom);
  return with_rounding(std::move(v), std::move(e), t);
}

BoundedFloat scale(const BoundedFloat& a, const Rational& q) {
  BigFloat v(a.precision());
  const int t = mpfr_mul_q(v.get(), a.value.get(), q.value().get_mpq_t(), MPFR_RNDN);
  BigFloat aq(kBoundPrecision);
  mpfr_set_q(aq.get(), abs(q).value().get_mpq_t(), MPFR_RNDU);
  return with_rounding(std::move(v), bound::mul(a.error, aq), t);
}

BoundedFloat sqrt(const BoundedFloat& a) {
  if (a.value.sign() < 0) throw DomainError("square root of a negative enclosure");
  BigFloat v(a.precision());
  const int t = mpfr_sqrt(v.get(), a.value.get(), MPFR_RNDN);
  if (a.error.is_zero()) return with_rounding(std::move(v), BigFloat(kBoundPrecision), t);
  const BigFloat low = lower_magnitude(a.value, a.error);
  if (low.sign() <= 0) throw DomainError("square root of an enclosure touching zero");
  // |sqrt(X) - sqrt(x)| = |X - x| / (sqrt X + sqrt x) <= e / sqrt(x - e)
  BigFloat root_low(kBoundPrecision);
  mpfr_sqrt(root_low.get(), low.get(), MPFR_RNDD);
  return with_rounding(std::move(v), bound::div(a.error, root_low), t);
}

}  // namespace hlcbs::exact
