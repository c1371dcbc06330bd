#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "hlcbs/exact/rational.hpp"

namespace hlcbs::exact {

// RAII wrapper over an MPFR value. Every value carries its own precision;
// binary operations produce a result at the larger operand precision, so
// there is no global rounding context.
class BigFloat {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 128;

  explicit BigFloat(mpfr_prec_t precision = kDefaultPrecision);
  BigFloat(const Rational& r, mpfr_prec_t precision);
  BigFloat(long v, mpfr_prec_t precision);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat from_double(double v, mpfr_prec_t precision = kDefaultPrecision);
  // Decimal or scientific notation, correctly rounded.
  static BigFloat parse(std::string_view text, mpfr_prec_t precision = kDefaultPrecision);
  static BigFloat pi(mpfr_prec_t precision);
  // 2^e exactly.
  static BigFloat exp2i(long e, mpfr_prec_t precision = 64);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  // Same value rounded to another precision.
  BigFloat rounded(mpfr_prec_t precision) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Scientific notation with `digits` significant digits; 0 picks enough
  // digits for the precision.
  std::string str(int digits = 0) const;

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

  BigFloat mul(const Rational& q) const;

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

 private:
  void grow_to(mpfr_prec_t p);
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat pow(const BigFloat& base, const BigFloat& exponent);
BigFloat asin(const BigFloat& x);
BigFloat gamma(const BigFloat& x);
BigFloat digamma(const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

// A floating value together with a bound on its absolute distance from the
// true mathematical value. Bounds are propagated with upward rounding, so
// composing operations never under-reports the error.
struct BoundedFloat {
  BigFloat value;
  BigFloat error{64};

  mpfr_prec_t precision() const { return value.precision(); }

  // from an exact rational: error is zero when the rational is dyadic and
  // fits, otherwise one rounding.
  static BoundedFloat from_rational(const Rational& r, mpfr_prec_t precision);
  static BoundedFloat exact(const BigFloat& v);

  // Round to a (usually smaller) output precision, adding the rounding error.
  BoundedFloat rounded(mpfr_prec_t precision) const;

  // |true - other_true| is guaranteed <= |value - other.value| + error + other.error;
  // this returns |value - other.value|.
  BigFloat deviation(const BoundedFloat& other) const;
  BigFloat deviation(const BigFloat& other) const;
};

BoundedFloat operator+(const BoundedFloat& a, const BoundedFloat& b);
BoundedFloat operator-(const BoundedFloat& a, const BoundedFloat& b);
BoundedFloat operator*(const BoundedFloat& a, const BoundedFloat& b);
// Throws DomainError when the divisor's enclosure contains zero.
BoundedFloat operator/(const BoundedFloat& a, const BoundedFloat& b);
BoundedFloat operator-(const BoundedFloat& a);
BoundedFloat scale(const BoundedFloat& a, const Rational& q);
// Throws DomainError when the enclosure reaches negative values.
BoundedFloat sqrt(const BoundedFloat& a);

namespace bound {
// Arithmetic on error magnitudes, rounded toward +infinity.
BigFloat add(const BigFloat& a, const BigFloat& b);
BigFloat mul(const BigFloat& a, const BigFloat& b);
BigFloat div(const BigFloat& a, const BigFloat& b);
// Upper bound for |x| * 2^(-bits).
BigFloat relative(const BigFloat& x, long bits);
// Upper bound for |v| * 2^-p, the RNDN rounding error of a precision-p result.
BigFloat rounding(const BigFloat& v);
}  // namespace bound

}  // namespace hlcbs::exact
