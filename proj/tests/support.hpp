#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "hlcbs/exact/bigfloat.hpp"
#include "hlcbs/exact/rational.hpp"

namespace testing {

using hlcbs::exact::BigFloat;
using hlcbs::exact::BoundedFloat;
using hlcbs::exact::Rational;

// Small seeded generator for property tests. mt19937_64 output is fixed by
// the standard, and only raw draws are used so sequences are portable.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  Rational rational(long max_num = 20, long max_den = 12) {
    return Rational(integer(-max_num, max_num), integer(1, max_den));
  }

  Rational positive(long max_num = 40, long max_den = 12) { return Rational(integer(1, max_num), integer(1, max_den)); }

  // 0 <= z < 1
  Rational unit(long max_den = 20) {
    const long d = integer(2, max_den);
    return Rational(integer(0, d - 1), d);
  }

 private:
  std::mt19937_64 rng_;
};

// |v - reference| where the reference is printed to many more digits than
// the comparison needs.
inline double gap(const BoundedFloat& v, const char* reference) {
  return v.deviation(BigFloat::parse(reference, 256)).to_double();
}

inline double gap(const BigFloat& v, const char* reference) {
  return gap(BoundedFloat::exact(v), reference);
}

// The reported bound covers the true value.
inline bool encloses(const BoundedFloat& v, const char* reference) {
  return v.deviation(BigFloat::parse(reference, 256)) <= v.error;
}

}  // namespace testing
