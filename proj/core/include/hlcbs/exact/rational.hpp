#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hlcbs::exact {

// Exact rational number, always kept in lowest terms with a positive
// denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T n)  // NOLINT(google-explicit-constructor)
      : q_(to_mpz(n)) {}

  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(mpz_class integer) : q_(std::move(integer)) {}
  explicit Rational(mpq_class q);

  // Accepts "P", "P/Q" and plain decimals such as "-0.35" or "1.5e-3".
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // 2*this is an integer.
  bool is_half_integer_lattice() const;

  // Requires is_integer().
  long to_long() const;
  double to_double() const { return q_.get_d(); }

  std::string str() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  template <std::integral T>
  static mpz_class to_mpz(T n) {
    if constexpr (std::is_signed_v<T>) {
      mpz_class z;
      mpz_set_si(z.get_mpz_t(), static_cast<long>(n));
      return z;
    } else {
      mpz_class z;
      mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
      return z;
    }
  }

  mpq_class q_{0};
};

// Integer power; negative exponents invert (error on 0^negative).
Rational pow(const Rational& base, long exponent);
Rational abs(const Rational& r);

mpz_class factorial(long n);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hlcbs::exact
