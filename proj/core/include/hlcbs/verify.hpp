#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hlcbs/exact/bigfloat.hpp"
#include "hlcbs/exact/rational.hpp"
#include "hlcbs/report.hpp"

// Registry of named identity checks. Each check sweeps a fixed parameter
// grid and compares two independently computed sides, exactly where the
// identity is algebraic and against error bounds where it is analytic.
namespace hlcbs::verify {

inline constexpr std::uint64_t kDefaultSeed = 0x484c434253ULL;

struct VerifyConfig {
  mpfr_prec_t precision_bits = 128;
  // Replaces every numeric tolerance, including the finite-difference ones.
  std::optional<exact::BigFloat> tolerance;
  std::uint64_t seed = kDefaultSeed;
  // Caps the polynomial index of exact sweeps (default: each check's own).
  std::optional<int> max_n;
  // Worker threads for run_all; 0 picks the hardware concurrency.
  unsigned jobs = 0;
};

struct CheckInfo {
  std::string_view id;
  std::string_view summary;
};

const std::vector<CheckInfo>& registry();

// Throws UnknownCheck.
CheckReport run_check(std::string_view check_id, const VerifyConfig& config = {});

struct Summary {
  std::vector<CheckReport> reports;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool all_passed() const { return failed == 0; }
};

// Runs the named checks in the given order. Unknown ids throw before any
// check runs; an empty list yields an empty summary.
Summary run(const std::vector<std::string>& check_ids, const VerifyConfig& config = {});
// Every registered check, reported in registry order.
Summary run_all(const VerifyConfig& config = {});

// Positive rationals with denominator 3..12 that are neither integers nor
// half-integers, drawn from mt19937_64(seed).
std::vector<exact::Rational> random_parameters(std::uint64_t seed, std::size_t count);

// Coefficient of z^{2n} in the difference of the two sides of the s = 1
// closed form, after dividing out (a)_n / (a+1/2)_n:
//   sum_{m<=n} (-1/2)_m (1/2-a-n)_m / ((1-a-n)_m m!) - (1/2)_n (a-1/2)_n / ((a)_n n!).
exact::Rational euler_coefficient_gap(int n, const exact::Rational& a);
// The same coefficient before factoring, read off the Cauchy product
//   sum_{m<=n} (-1/2)_m (a)_{n-m} / ((a+1/2)_{n-m} m!) - (1/2)_n (a-1/2)_n / ((a+1/2)_n n!).
exact::Rational euler_cauchy_gap(int n, const exact::Rational& a);

}  // namespace hlcbs::verify
