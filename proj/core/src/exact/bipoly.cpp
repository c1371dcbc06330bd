#include "hlcbs/exact/bipoly.hpp"

#include <algorithm>
#include <ostream>

#include "hlcbs/errors.hpp"

namespace hlcbs::exact {

namespace {
const UniPoly kZeroPoly{};
}  // namespace

BiPoly::BiPoly(std::vector<UniPoly> x_coefficients) : c_(std::move(x_coefficients)) { trim(); }

BiPoly BiPoly::from_x(const UniPoly& p) {
  std::vector<UniPoly> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) v.push_back(UniPoly::constant(c));
  return BiPoly(std::move(v));
}

BiPoly BiPoly::from_param(const UniPoly& p) { return BiPoly(std::vector<UniPoly>{p}); }

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BiPoly::param_degree() const {
  int d = -1;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

const UniPoly& BiPoly::coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : kZeroPoly; }

BiPoly BiPoly::derivative_x() const {
  if (c_.size() <= 1) return {};
  std::vector<UniPoly> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i].scaled(Rational(static_cast<long>(i)));
  return BiPoly(std::move(d));
}

UniPoly BiPoly::substitute_param(const Rational& value) const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.eval(value));
  return UniPoly(std::move(v));
}

UniPoly BiPoly::substitute_x(const Rational& value) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc.scaled(value) + *it;
  return acc;
}

Rational BiPoly::eval(const Rational& param, const Rational& x) const {
  return substitute_param(param).eval(x);
}

bool BiPoly::param_free() const {
  return std::all_of(c_.begin(), c_.end(), [](const UniPoly& c) { return c.degree() <= 0; });
}

UniPoly BiPoly::to_x() const {
  if (!param_free()) throw DomainError("polynomial depends on the parameter");
  return substitute_param(Rational(0));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UniPoly> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return BiPoly(std::move(v));
}

std::string BiPoly::str(std::string_view x_var, std::string_view param_var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const UniPoly& c = c_[i];
    if (c.is_zero()) continue;
    std::string mono;
    if (i >= 1) {
      mono = std::string(x_var);
      if (i > 1) mono += "^" + std::to_string(i);
    }
    // Count nonzero terms of the parameter polynomial.
    const auto nonzero = std::count_if(c.coefficients().begin(), c.coefficients().end(),
                                       [](const Rational& r) { return !r.is_zero(); });
    if (nonzero == 1) {
      // Single monomial in the parameter: fold it into the term.
      const std::size_t j = static_cast<std::size_t>(c.degree());
      std::string pmono;
      if (j >= 1) {
        pmono = std::string(param_var);
        if (j > 1) pmono += "^" + std::to_string(j);
      }
      std::string full = pmono;
      if (!mono.empty()) full = full.empty() ? mono : full + "*" + mono;
      detail::append_term(out, c.coefficient(j), full, first);
    } else if (mono.empty()) {
      const std::string inner = c.str(param_var);
      if (first) {
        out += inner;
      } else if (inner.front() == '-') {
        out += " + (" + inner + ")";
      } else {
        out += " + " + inner;
      }
    } else {
      out += first ? "" : " + ";
      out += "(" + c.str(param_var) + ")*" + mono;
    }
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.str(); }

}  // namespace hlcbs::exact
