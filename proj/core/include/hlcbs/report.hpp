#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hlcbs/exact/bigfloat.hpp"

namespace hlcbs {

// Outcome of one named identity verification.
//
// Numeric comparisons each carry their own tolerance. max_abs_deviation and
// tolerance describe the worst comparison (largest deviation/tolerance
// ratio), so passed == (max_abs_deviation <= tolerance) whenever numeric
// comparisons were made and every exact comparison held. Both stay empty
// for purely exact checks.
struct CheckReport {
  std::string check_id;
  std::string parameter_grid;
  std::size_t comparisons = 0;
  std::optional<exact::BigFloat> max_abs_deviation;
  std::optional<exact::BigFloat> tolerance;
  bool passed = true;
  std::chrono::duration<double, std::milli> elapsed{};
  std::uint64_t seed = 0;
  // First few failing comparisons, human readable.
  std::vector<std::string> failures;

  bool exact_only() const { return !max_abs_deviation.has_value(); }
};

class ReportBuilder {
 public:
  ReportBuilder(std::string check_id, std::string parameter_grid, std::uint64_t seed = 0);

  void exact(bool held, std::string_view what);
  void numeric(const exact::BigFloat& deviation, const exact::BigFloat& tolerance, std::string_view what);
  // Merge another report's comparisons (used when a check composes
  // lower-level reports).
  void absorb(const CheckReport& other);

  CheckReport finish();

 private:
  void fail(std::string_view what);
  void track(const exact::BigFloat& deviation, const exact::BigFloat& tolerance);

  CheckReport report_;
  std::chrono::steady_clock::time_point start_;
  // Ratio deviation/tolerance of the worst numeric comparison so far.
  std::optional<exact::BigFloat> worst_ratio_;
};

}  // namespace hlcbs
