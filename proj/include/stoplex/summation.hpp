#pragma once

#include <cmath>
#include <ranges>

namespace stoplex {

/// Neumaier's variant of Kahan summation. The result depends only on the
/// order in which terms are added, so callers reduce in index order.
class CompensatedSum {
 public:
  void add(double term) noexcept {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double term) noexcept {
    add(term);
    return *this;
  }

  [[nodiscard]] constexpr double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

template <std::ranges::input_range R>
[[nodiscard]] double compensated_sum(R&& values) {
  CompensatedSum acc;
  for (const auto& v : values) acc.add(static_cast<double>(v));
  return acc.value();
}

}  // namespace stoplex
