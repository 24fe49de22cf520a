#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>

#include "stoplex/distribution.hpp"
#include "stoplex/error.hpp"
#include "stoplex/selector.hpp"

namespace stoplex {

inline constexpr double kDefaultZCritical = 1.96;
inline constexpr double kZeroSkewTolerance = 1e-9;

/// Position of a value relative to the open interval (E - sigma, E + sigma).
enum class Side { Left, Inside, Right };

enum class Decision { RetainH0, RejectH0 };

enum class Location { Beginning, End, BothEnds };

/// How the sample mean of the Z test is chosen.
enum class SampleMeanMode {
  Midpoint,       // (N + 1) / 2
  CandidateMean,  // mean first_index of the stop-word candidates
};

struct CoverageReport {
  std::size_t left_count = 0;
  std::size_t inside_count = 0;
  std::size_t right_count = 0;
  double outside_fraction = 0.0;

  [[nodiscard]] std::size_t total() const noexcept { return left_count + inside_count + right_count; }
};

struct ZTestResult {
  std::size_t n_unique = 0;
  double sample_mean = 0.0;
  double expectation = 0.0;
  double std_dev = 0.0;
  double z = 0.0;
  double critical = kDefaultZCritical;
  Side xbar_side = Side::Inside;
  Decision decision = Decision::RejectH0;
};

struct LocationVerdict {
  Location location = Location::BothEnds;
  double asymmetry = 0.0;
};

[[nodiscard]] constexpr std::string_view to_string(Side side) noexcept {
  switch (side) {
    case Side::Left: return "left";
    case Side::Inside: return "inside";
    case Side::Right: return "right";
  }
  return "inside";
}

[[nodiscard]] constexpr std::string_view to_string(Decision decision) noexcept {
  return decision == Decision::RetainH0 ? "retain_h0" : "reject_h0";
}

[[nodiscard]] constexpr std::string_view to_string(Location location) noexcept {
  switch (location) {
    case Location::Beginning: return "beginning";
    case Location::End: return "end";
    case Location::BothEnds: return "both_ends";
  }
  return "both_ends";
}

inline void require_spread(double std_dev) {
  if (!std::isfinite(std_dev)) throw NonFinite("standard deviation is not finite");
  if (!(std_dev > 0.0)) throw DegenerateDistribution("standard deviation is zero");
}

/// Left when x <= E - sigma, Right when x >= E + sigma, Inside otherwise.
[[nodiscard]] inline Side classify(double x, double expectation, double std_dev) noexcept {
  if (x <= expectation - std_dev) return Side::Left;
  if (x >= expectation + std_dev) return Side::Right;
  return Side::Inside;
}

/// Counts candidates by the position of their first_index relative to
/// (E - sigma, E + sigma).
[[nodiscard]] inline CoverageReport interval_coverage(const StopwordSet& set,
                                                      const MomentSummary& summary) {
  require_spread(summary.std_dev);
  if (set.count() == 0) throw DomainError("coverage needs at least one candidate");

  CoverageReport report;
  for (const auto& c : set.candidates) {
    switch (classify(static_cast<double>(c.first_index), summary.expectation, summary.std_dev)) {
      case Side::Left: ++report.left_count; break;
      case Side::Inside: ++report.inside_count; break;
      case Side::Right: ++report.right_count; break;
    }
  }
  report.outside_fraction =
      static_cast<double>(report.left_count + report.right_count) / static_cast<double>(set.count());
  return report;
}

/// Z = (xbar - E) / (sigma / sqrt(N))
[[nodiscard]] inline double z_score(std::size_t n_unique, double sample_mean, double expectation,
                                    double std_dev) {
  if (n_unique == 0) throw DomainError("z-score needs N >= 1");
  require_spread(std_dev);
  return (sample_mean - expectation) / (std_dev / std::sqrt(static_cast<double>(n_unique)));
}

/// Sample mean for the Z test according to `mode`.
[[nodiscard]] inline double sample_mean(SampleMeanMode mode, std::size_t n_unique,
                                        const StopwordSet& set) {
  if (mode == SampleMeanMode::Midpoint) return (static_cast<double>(n_unique) + 1.0) / 2.0;
  if (set.count() == 0) throw DomainError("candidate mean needs at least one candidate");
  CompensatedSum acc;
  for (const auto& c : set.candidates) acc.add(static_cast<double>(c.first_index));
  return acc.value() / static_cast<double>(set.count());
}

/// H0 (candidates lie outside the one-sigma interval) is retained when the
/// sample mean lies outside (E - sigma, E + sigma) and |Z| >= critical;
/// otherwise it is rejected.
[[nodiscard]] inline ZTestResult hypothesis_decision(std::size_t n_unique, double sample_mean_value,
                                                     const MomentSummary& summary,
                                                     double critical = kDefaultZCritical) {
  if (!(critical > 0.0) || !std::isfinite(critical)) {
    throw DomainError("critical value must be positive and finite");
  }
  ZTestResult r;
  r.n_unique = n_unique;
  r.sample_mean = sample_mean_value;
  r.expectation = summary.expectation;
  r.std_dev = summary.std_dev;
  r.critical = critical;
  r.z = z_score(n_unique, sample_mean_value, summary.expectation, summary.std_dev);
  r.xbar_side = classify(sample_mean_value, summary.expectation, summary.std_dev);
  r.decision = (r.xbar_side != Side::Inside && std::abs(r.z) >= critical) ? Decision::RetainH0
                                                                          : Decision::RejectH0;
  return r;
}

/// Negative asymmetry puts the stop words at the beginning of the text,
/// positive at the end, (near) zero at both ends.
[[nodiscard]] inline LocationVerdict location_verdict(double asymmetry) {
  if (!std::isfinite(asymmetry)) throw NonFinite("asymmetry is not finite");
  LocationVerdict v;
  v.asymmetry = asymmetry;
  if (asymmetry < -kZeroSkewTolerance) {
    v.location = Location::Beginning;
  } else if (asymmetry > kZeroSkewTolerance) {
    v.location = Location::End;
  } else {
    v.location = Location::BothEnds;
  }
  return v;
}

/// Renders a fraction as a percentage with one decimal, e.g. "85.8%".
[[nodiscard]] inline std::string format_percent(double fraction) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.1f%%", fraction * 100.0);
  return buffer;
}

}  // namespace stoplex
