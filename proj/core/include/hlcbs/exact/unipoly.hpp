#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hlcbs/exact/rational.hpp"

namespace hlcbs::exact {

// Dense univariate polynomial over Q; coefficient i multiplies x^i.
// Trailing zero coefficients are never stored, so the zero polynomial is
// the empty sequence.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(std::initializer_list<Rational> coefficients);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t degree);
  // slope*x + intercept
  static UniPoly linear(const Rational& slope, const Rational& intercept);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::span<const Rational> coefficients() const { return c_; }
  // Zero beyond the degree.
  const Rational& coefficient(std::size_t i) const;

  UniPoly derivative() const;
  Rational eval(const Rational& x) const;
  UniPoly scaled(const Rational& factor) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly operator-() const;
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& p) { return p.scaled(s); }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  // Canonical text, descending degree: "8*x^3 + 60*x^2 + 36*x + 1".
  std::string str(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UniPoly pow(const UniPoly& p, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

namespace detail {
// Appends "c*var^d" to out following the canonical sign conventions;
// `first` selects leading-term formatting.
void append_term(std::string& out, const Rational& c, std::string_view monomial, bool first);
}  // namespace detail

}  // namespace hlcbs::exact
