#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hlcbs/exact/unipoly.hpp"

namespace hlcbs::exact {

// Polynomial in x whose coefficients are polynomials in a parameter
// (called `a` for the interpolating family, `y` for Eulerian polynomials).
// Coefficient i multiplies x^i; trailing zero coefficients are stripped.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> x_coefficients);

  // Lift a polynomial in x with constant (parameter-free) coefficients.
  static BiPoly from_x(const UniPoly& p);
  // Lift a polynomial in the parameter as the x^0 coefficient.
  static BiPoly from_param(const UniPoly& p);

  bool is_zero() const { return c_.empty(); }
  int x_degree() const { return static_cast<int>(c_.size()) - 1; }
  int param_degree() const;
  std::span<const UniPoly> coefficients() const { return c_; }
  const UniPoly& coefficient(std::size_t i) const;
  // Coefficient of x^i * param^j.
  const Rational& coefficient(std::size_t i, std::size_t j) const { return coefficient(i).coefficient(j); }

  BiPoly derivative_x() const;
  // Substitute a value for the parameter.
  UniPoly substitute_param(const Rational& value) const;
  // Substitute a value for x, leaving a polynomial in the parameter.
  UniPoly substitute_x(const Rational& value) const;
  Rational eval(const Rational& param, const Rational& x) const;

  // True when every coefficient is constant in the parameter.
  bool param_free() const;
  // Requires param_free(); throws DomainError otherwise.
  UniPoly to_x() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  // "(4*a^2 - 8*a + 4)*x^2 + (-8*a^2 + 6*a + 10)*x + 4*a^2 + 2*a + 1"
  std::string str(std::string_view x_var = "x", std::string_view param_var = "a") const;

 private:
  void trim();
  std::vector<UniPoly> c_;
};

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

}  // namespace hlcbs::exact
