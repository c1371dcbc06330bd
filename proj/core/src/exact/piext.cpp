#include "hlcbs/exact/piext.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "hlcbs/errors.hpp"
#include "hlcbs/exact/unipoly.hpp"

namespace hlcbs::exact {

namespace {

constexpr std::array<std::string_view, 4> kBasisNames = {"", "sqrt3", "pi", "sqrt3*pi"};

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

PiExtValue::PiExtValue(Rational one, Rational sqrt3, Rational pi, Rational sqrt3_pi)
    : c_{std::move(one), std::move(sqrt3), std::move(pi), std::move(sqrt3_pi)} {}

PiExtValue PiExtValue::of(Basis b, const Rational& c) {
  PiExtValue v;
  v.c_[static_cast<std::size_t>(b)] = c;
  return v;
}

bool PiExtValue::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

PiExtValue& PiExtValue::operator+=(const PiExtValue& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

PiExtValue& PiExtValue::operator-=(const PiExtValue& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

PiExtValue PiExtValue::operator-() const { return scaled(Rational(-1)); }

PiExtValue PiExtValue::scaled(const Rational& q) const {
  PiExtValue r = *this;
  for (auto& c : r.c_) c *= q;
  return r;
}

PiExtValue PiExtValue::scaled(const QSqrt3& q) const {
  // (c1 + c2 s)(q0 + q1 s) = c1 q0 + 3 c2 q1 + (c1 q1 + c2 q0) s, same for the pi pair.
  const Rational three(3);
  return {c_[0] * q.rational + three * c_[1] * q.sqrt3, c_[0] * q.sqrt3 + c_[1] * q.rational,
          c_[2] * q.rational + three * c_[3] * q.sqrt3, c_[2] * q.sqrt3 + c_[3] * q.rational};
}

PiExtValue operator*(const PiExtValue& a, const PiExtValue& b) {
  if (a.in_q_sqrt3()) return b.scaled(QSqrt3{a.c_one(), a.c_sqrt3()});
  if (b.in_q_sqrt3()) return a.scaled(QSqrt3{b.c_one(), b.c_sqrt3()});
  throw MultiplicationOutOfBasis("product " + a.str() + " * " + b.str() + " needs pi^2");
}

std::string PiExtValue::str() const {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < 4; ++i) {
    if (c_[i].is_zero()) continue;
    detail::append_term(out, c_[i], kBasisNames[i], first);
    first = false;
  }
  return first ? "0" : out;
}

PiExtValue PiExtValue::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty value");

  PiExtValue v;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("malformed value '" + std::string(text) + "'");
    }
    const std::size_t next = s.find_first_of("+-", pos);
    std::string_view term = std::string_view(s).substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    pos = next == std::string::npos ? s.size() : next;
    if (term.empty()) throw ParseError("malformed value '" + std::string(text) + "'");

    Basis basis = Basis::one;
    for (int b = 3; b >= 1; --b) {
      if (ends_with(term, kBasisNames[static_cast<std::size_t>(b)])) {
        basis = static_cast<Basis>(b);
        term.remove_suffix(kBasisNames[static_cast<std::size_t>(b)].size());
        break;
      }
    }
    Rational coeff(1);
    if (basis != Basis::one) {
      if (!term.empty()) {
        if (term.back() != '*') throw ParseError("malformed term in '" + std::string(text) + "'");
        term.remove_suffix(1);
        coeff = Rational::parse(term);
      }
    } else {
      coeff = Rational::parse(term);
    }
    v.c_[static_cast<std::size_t>(basis)] += sign < 0 ? -coeff : coeff;
  }
  return v;
}

BoundedFloat to_float(const PiExtValue& v, mpfr_prec_t precision_bits) {
  if (precision_bits < 32) throw DomainError("precision_bits must be at least 32");
  if (v.is_zero()) return BoundedFloat::exact(BigFloat(precision_bits));

  // Retry with more guard bits if cancellation ate the relative accuracy.
  for (mpfr_prec_t guard = 32;; guard *= 2) {
    const mpfr_prec_t w = precision_bits + guard;
    const BigFloat pi_value = BigFloat::pi(w);
    const BoundedFloat pi{pi_value, bound::rounding(pi_value)};
    const BoundedFloat sqrt3 = sqrt(BoundedFloat::from_rational(3, w));
    const BoundedFloat sqrt3_pi = sqrt3 * pi;

    BoundedFloat acc = BoundedFloat::from_rational(v.c_one(), w);
    acc = acc + BoundedFloat::from_rational(v.c_sqrt3(), w) * sqrt3;
    acc = acc + BoundedFloat::from_rational(v.c_pi(), w) * pi;
    acc = acc + BoundedFloat::from_rational(v.c_sqrt3pi(), w) * sqrt3_pi;

    BoundedFloat out = acc.rounded(precision_bits);
    if (out.error <= bound::relative(out.value, precision_bits - 2) || guard > 4096) return out;
  }
}

std::ostream& operator<<(std::ostream& os, const PiExtValue& v) { return os << v.str(); }

}  // namespace hlcbs::exact
