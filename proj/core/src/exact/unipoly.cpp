#include "hlcbs/exact/unipoly.hpp"

#include <algorithm>
#include <ostream>

namespace hlcbs::exact {

namespace {
const Rational kZero{};
}  // namespace

UniPoly::UniPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coefficients) : c_(coefficients) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear(const Rational& slope, const Rational& intercept) {
  return UniPoly(std::vector<Rational>{intercept, slope});
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& UniPoly::coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(d));
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::scaled(const Rational& factor) const {
  if (factor.is_zero()) return {};
  std::vector<Rational> v(c_);
  for (auto& c : v) c *= factor;
  return UniPoly(std::move(v));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const { return scaled(Rational(-1)); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly pow(const UniPoly& p, unsigned exponent) {
  UniPoly result = UniPoly::constant(1);
  UniPoly base = p;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

namespace detail {

void append_term(std::string& out, const Rational& c, std::string_view monomial, bool first) {
  const bool negative = c.sign() < 0;
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  const Rational mag = abs(c);
  if (monomial.empty()) {
    out += mag.str();
  } else if (mag == Rational(1)) {
    out += monomial;
  } else {
    out += mag.str();
    out += '*';
    out += monomial;
  }
}

}  // namespace detail

std::string UniPoly::str(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    std::string mono;
    if (i >= 1) {
      mono = std::string(var);
      if (i > 1) mono += "^" + std::to_string(i);
    }
    detail::append_term(out, c_[i], mono, first);
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

}  // namespace hlcbs::exact
