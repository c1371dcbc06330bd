#include "hlcbs/report.hpp"

#include <cmath>

namespace hlcbs {

namespace {
constexpr std::size_t kMaxFailureNotes = 20;
}  // namespace

ReportBuilder::ReportBuilder(std::string check_id, std::string parameter_grid, std::uint64_t seed)
    : start_(std::chrono::steady_clock::now()) {
  report_.check_id = std::move(check_id);
  report_.parameter_grid = std::move(parameter_grid);
  report_.seed = seed;
}

void ReportBuilder::fail(std::string_view what) {
  report_.passed = false;
  if (report_.failures.size() < kMaxFailureNotes) report_.failures.emplace_back(what);
}

void ReportBuilder::exact(bool held, std::string_view what) {
  ++report_.comparisons;
  if (!held) fail(what);
}

void ReportBuilder::track(const exact::BigFloat& deviation, const exact::BigFloat& tolerance) {
  exact::BigFloat ratio(64);
  if (tolerance.is_zero()) {
    ratio = deviation.is_zero() ? exact::BigFloat(64) : exact::BigFloat::from_double(HUGE_VAL, 64);
  } else {
    ratio = exact::bound::div(exact::abs(deviation), tolerance);
  }
  if (!worst_ratio_ || *worst_ratio_ < ratio) {
    worst_ratio_ = ratio;
    report_.max_abs_deviation = deviation.rounded(64);
    report_.tolerance = tolerance.rounded(64);
  }
}

void ReportBuilder::numeric(const exact::BigFloat& deviation, const exact::BigFloat& tolerance, std::string_view what) {
  ++report_.comparisons;
  track(deviation, tolerance);
  if (!(deviation <= tolerance))
    fail(std::string(what) + ": deviation " + deviation.str(6) + " > tolerance " + tolerance.str(6));
}

void ReportBuilder::absorb(const CheckReport& other) {
  report_.comparisons += other.comparisons;
  if (!other.passed) {
    report_.passed = false;
    for (const auto& f : other.failures)
      if (report_.failures.size() < kMaxFailureNotes) report_.failures.push_back(other.check_id + ": " + f);
  }
  if (other.max_abs_deviation && other.tolerance) track(*other.max_abs_deviation, *other.tolerance);
}

CheckReport ReportBuilder::finish() {
  report_.elapsed = std::chrono::steady_clock::now() - start_;
  return report_;
}

}  // namespace hlcbs
