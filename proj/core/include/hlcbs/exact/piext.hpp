#pragma once

#include <array>
#include <string>
#include <string_view>

#include "hlcbs/exact/bigfloat.hpp"
#include "hlcbs/exact/rational.hpp"

namespace hlcbs::exact {

// q0 + q1*sqrt3, the scalars PiExtValue is a module over.
struct QSqrt3 {
  Rational rational;
  Rational sqrt3;
  friend bool operator==(const QSqrt3&, const QSqrt3&) = default;
};

// Exact value c_one + c_sqrt3*sqrt3 + c_pi*pi + c_sqrt3pi*sqrt3*pi.
// The four basis elements are Q-linearly independent, so equality is
// coefficient-wise. pi/sqrt3 is represented as (1/3)*sqrt3*pi.
class PiExtValue {
 public:
  enum class Basis { one = 0, sqrt3 = 1, pi = 2, sqrt3_pi = 3 };

  PiExtValue() = default;
  PiExtValue(Rational one, Rational sqrt3, Rational pi, Rational sqrt3_pi);

  static PiExtValue rational(const Rational& c) { return {c, 0, 0, 0}; }
  static PiExtValue of(Basis b, const Rational& c = 1);
  static PiExtValue from(const QSqrt3& q) { return {q.rational, q.sqrt3, 0, 0}; }

  // Parses the canonical text form (whitespace-insensitive, terms in any
  // order, repeated terms accumulate).
  static PiExtValue parse(std::string_view text);

  const Rational& c_one() const { return c_[0]; }
  const Rational& c_sqrt3() const { return c_[1]; }
  const Rational& c_pi() const { return c_[2]; }
  const Rational& c_sqrt3pi() const { return c_[3]; }
  const Rational& coefficient(Basis b) const { return c_[static_cast<std::size_t>(b)]; }

  bool is_zero() const;
  // No pi or sqrt3*pi component.
  bool in_q_sqrt3() const { return c_[2].is_zero() && c_[3].is_zero(); }
  // No 1 or sqrt3 component.
  bool in_q_sqrt3_pi() const { return c_[0].is_zero() && c_[1].is_zero(); }

  PiExtValue& operator+=(const PiExtValue& o);
  PiExtValue& operator-=(const PiExtValue& o);
  PiExtValue operator-() const;
  friend PiExtValue operator+(PiExtValue a, const PiExtValue& b) { return a += b; }
  friend PiExtValue operator-(PiExtValue a, const PiExtValue& b) { return a -= b; }

  PiExtValue scaled(const Rational& q) const;
  // Uses sqrt3*sqrt3 = 3.
  PiExtValue scaled(const QSqrt3& q) const;

  friend bool operator==(const PiExtValue&, const PiExtValue&) = default;

  // Canonical text: "17/6 + 74/243*sqrt3*pi"; zero prints as "0".
  std::string str() const;

 private:
  std::array<Rational, 4> c_{};
};

// Product of two values. Allowed when at least one factor lies in Q(sqrt3);
// throws MultiplicationOutOfBasis when both carry pi (the product needs pi^2).
PiExtValue operator*(const PiExtValue& a, const PiExtValue& b);

// Numeric value with |error| <= 2^(2 - precision_bits) * |value|.
BoundedFloat to_float(const PiExtValue& v, mpfr_prec_t precision_bits);

std::ostream& operator<<(std::ostream& os, const PiExtValue& v);

}  // namespace hlcbs::exact
