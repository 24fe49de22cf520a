#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stoplex/corpus.hpp"
#include "stoplex/error.hpp"
#include "stoplex/summation.hpp"

namespace stoplex {

/// Probability mass over consecutive integer indices
/// first_index, first_index + 1, ..., first_index + N - 1.
///
/// A density built from a lexicon always starts at 1; other offsets exist so
/// that translated copies can be analysed with the same code.
struct IndexDistribution {
  std::uint64_t first_index = 1;
  std::vector<double> probabilities;

  [[nodiscard]] std::size_t size() const noexcept { return probabilities.size(); }
  [[nodiscard]] double index(std::size_t k) const noexcept {
    return static_cast<double>(first_index + k);
  }
};

struct MomentSummary {
  double expectation = 0.0;
  double dispersion = 0.0;
  double std_dev = 0.0;
  double std_dev_cubed = 0.0;
  double raw_moment_1 = 0.0;
  double raw_moment_2 = 0.0;
  double raw_moment_3 = 0.0;
  double third_central_moment = 0.0;
  double asymmetry = 0.0;
};

/// f(i) = p_i over the first-appearance indices of the lexicon.
[[nodiscard]] inline IndexDistribution density(const Lexicon& lexicon) {
  IndexDistribution dist;
  dist.probabilities.reserve(lexicon.size());
  for (const auto& entry : lexicon.entries) dist.probabilities.push_back(entry.probability);
  return dist;
}

/// Checks the distribution invariants: non-empty, finite non-negative
/// masses summing to one within `tolerance`.
[[nodiscard]] inline bool is_normalized(const IndexDistribution& dist, double tolerance = 1e-12) {
  if (dist.probabilities.empty()) return false;
  CompensatedSum total;
  for (const double p : dist.probabilities) {
    if (!std::isfinite(p) || p < 0.0) return false;
    total.add(p);
  }
  return std::abs(total.value() - 1.0) <= tolerance;
}

/// E_k = sum p_i * i^k for k in 1..3.
[[nodiscard]] inline double raw_moment(const IndexDistribution& dist, int order) {
  if (order < 1 || order > 3) {
    throw DomainError("raw moment order " + std::to_string(order) + " outside 1..3");
  }
  CompensatedSum acc;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    const double i = dist.index(k);
    double power = i;
    for (int e = 1; e < order; ++e) power *= i;
    acc.add(dist.probabilities[k] * power);
  }
  return acc.value();
}

namespace detail {

/// sum p_i * (i - pivot)^order
inline double shifted_moment(const IndexDistribution& dist, double pivot, int order) {
  CompensatedSum acc;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    const double x = dist.index(k) - pivot;
    double power = x;
    for (int e = 1; e < order; ++e) power *= x;
    acc.add(dist.probabilities[k] * power);
  }
  return acc.value();
}

}  // namespace detail

/// Expectation, dispersion, standard deviation, raw moments, third central
/// moment and asymmetry of the index distribution.
///
/// D is the direct central sum. The third central moment uses the
/// raw-moment identity mu3 = M3 - 3 M1 M2 + 2 M1^3, evaluated on moments
/// taken about the integer nearest to E; the identity is translation
/// invariant and the shift keeps it from cancelling terms of order N^3.
[[nodiscard]] inline MomentSummary moment_summary(const IndexDistribution& dist) {
  if (dist.probabilities.empty()) throw DomainError("empty distribution");
  for (const double p : dist.probabilities) {
    if (!std::isfinite(p) || p < 0.0) throw DomainError("probabilities must be finite and >= 0");
  }

  MomentSummary s;
  s.raw_moment_1 = raw_moment(dist, 1);
  s.raw_moment_2 = raw_moment(dist, 2);
  s.raw_moment_3 = raw_moment(dist, 3);
  s.expectation = s.raw_moment_1;

  CompensatedSum central;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    const double delta = dist.index(k) - s.expectation;
    central.add(delta * delta * dist.probabilities[k]);
  }
  s.dispersion = central.value();
  if (!(s.dispersion > 0.0)) throw DegenerateDistribution("zero dispersion, asymmetry undefined");

  s.std_dev = std::sqrt(s.dispersion);
  s.std_dev_cubed = s.std_dev * s.std_dev * s.std_dev;

  const double pivot = std::round(s.expectation);
  const double m1 = detail::shifted_moment(dist, pivot, 1);
  const double m2 = detail::shifted_moment(dist, pivot, 2);
  const double m3 = detail::shifted_moment(dist, pivot, 3);
  s.third_central_moment = m3 - 3.0 * m1 * m2 + 2.0 * m1 * m1 * m1;
  s.asymmetry = s.third_central_moment / s.std_dev_cubed;
  return s;
}

/// One failed identity among the fields of a MomentSummary.
struct IdentityViolation {
  std::string identity;
  double reported = 0.0;   // value as stored in the summary
  double expected = 0.0;   // value implied by the other fields
  double relative_error = 0.0;
};

/// Audits a summary (typically one transcribed from a printed table) for
/// internal consistency. Each identity is compared relative to the largest
/// magnitude among its terms. Returned identities:
///   expectation           E = E_1
///   std_dev               sigma = sqrt(D)
///   std_dev_cubed         sigma^3 field = sigma * sigma * sigma
///   dispersion            D = E_2 - E_1^2
///   third_central_moment  mu3 = E_3 - 3 E_1 E_2 + 2 E_1^3
///   asymmetry             A_s = mu3 / sigma^3 field
[[nodiscard]] inline std::vector<IdentityViolation> check_table_consistency(
    const MomentSummary& s, double relative_tolerance = 1e-6) {
  std::vector<IdentityViolation> violations;
  auto check = [&](std::string name, double reported, double expected,
                   std::initializer_list<double> terms) {
    double scale = std::max(std::abs(reported), std::abs(expected));
    for (const double t : terms) scale = std::max(scale, std::abs(t));
    const double diff = std::abs(reported - expected);
    const double rel = scale > 0.0 ? diff / scale : 0.0;
    if (!(rel <= relative_tolerance)) {
      violations.push_back(IdentityViolation{std::move(name), reported, expected, rel});
    }
  };

  const double e1 = s.raw_moment_1;
  const double e2 = s.raw_moment_2;
  const double e3 = s.raw_moment_3;
  check("expectation", s.expectation, e1, {});
  check("std_dev", s.std_dev, std::sqrt(s.dispersion), {});
  check("std_dev_cubed", s.std_dev_cubed, s.std_dev * s.std_dev * s.std_dev, {});
  check("dispersion", s.dispersion, e2 - e1 * e1, {e2, e1 * e1});
  check("third_central_moment", s.third_central_moment, e3 - 3.0 * e1 * e2 + 2.0 * e1 * e1 * e1,
        {e3, 3.0 * e1 * e2, 2.0 * e1 * e1 * e1});
  check("asymmetry", s.asymmetry, s.third_central_moment / s.std_dev_cubed, {});
  return violations;
}

}  // namespace stoplex
