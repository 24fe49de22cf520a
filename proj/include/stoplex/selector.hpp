#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "stoplex/corpus.hpp"
#include "stoplex/error.hpp"

namespace stoplex {

inline constexpr double kDefaultFraction = 0.05;

struct Candidate {
  std::string surface;
  std::size_t first_index = 0;
  std::uint64_t total_count = 0;
  double probability = 0.0;
};

/// Stop-word candidates, ascending by probability.
struct StopwordSet {
  double fraction = kDefaultFraction;
  double threshold = 0.0;  // largest candidate probability (inclusive)
  std::vector<Candidate> candidates;

  [[nodiscard]] std::size_t count() const noexcept { return candidates.size(); }
};

/// ceil(fraction * N). Products within 1e-9 of an integer are treated as
/// that integer so that e.g. 0.07 * 100 gives 7 rather than 8.
[[nodiscard]] inline std::size_t candidate_count(double fraction, std::size_t lexicon_size) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw DomainError("fraction must lie in (0, 1), got " + std::to_string(fraction));
  }
  const double product = fraction * static_cast<double>(lexicon_size);
  const double nearest = std::round(product);
  const double k = std::abs(product - nearest) <= 1e-9 * std::max(1.0, product) ? nearest
                                                                               : std::ceil(product);
  return std::min(lexicon_size, static_cast<std::size_t>(k));
}

/// The ceil(fraction * N) words with the smallest probabilities. Ties go to
/// the smaller total count, then to the lexicographically smaller surface.
[[nodiscard]] inline StopwordSet select_candidates(const Lexicon& lexicon,
                                                   double fraction = kDefaultFraction) {
  if (lexicon.size() == 0) throw DomainError("cannot select from an empty lexicon");
  const std::size_t k = candidate_count(fraction, lexicon.size());

  std::vector<Candidate> pool;
  pool.reserve(lexicon.size());
  for (const auto& entry : lexicon.entries) {
    if (!std::isfinite(entry.probability)) {
      throw DomainError("probability of '" + entry.surface + "' is not set");
    }
    pool.push_back(Candidate{entry.surface, entry.first_index, entry.total_count(), entry.probability});
  }

  auto before = [](const Candidate& a, const Candidate& b) {
    if (a.probability != b.probability) return a.probability < b.probability;
    if (a.total_count != b.total_count) return a.total_count < b.total_count;
    return a.surface < b.surface;
  };
  std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k), pool.end(), before);
  pool.resize(k);

  StopwordSet set;
  set.fraction = fraction;
  set.threshold = pool.back().probability;
  set.candidates = std::move(pool);
  return set;
}

/// One surface form per line in ascending probability order.
[[nodiscard]] inline std::string export_list(const StopwordSet& set) {
  std::string out;
  for (const auto& c : set.candidates) {
    out += c.surface;
    out += '\n';
  }
  return out;
}

}  // namespace stoplex
