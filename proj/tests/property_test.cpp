// Randomized invariants over generated distributions and corpora. Each
// property runs a fixed-seed batch so failures reproduce.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "stoplex/stoplex.hpp"

namespace {

constexpr int kTrials = 1000;

std::size_t random_size(std::mt19937_64& rng, std::size_t max = 10000) { return 2 + rng() % (max - 1); }

std::vector<stoplex::Source> random_corpus(std::mt19937_64& rng) {
  static const std::vector<std::string> words{"va", "bu", "bir", "men", "sen", "u", "kitob", "maktab",
                                              "oʻqish", "gʻoya", "daryo", "tog", "shahar", "bola", "ona"};
  std::vector<stoplex::Source> sources;
  const std::size_t n = 2 + rng() % 5;
  for (std::size_t d = 0; d < n; ++d) {
    std::string text = "va ";  // keeps one word in every document
    const std::size_t len = 5 + rng() % 30;
    for (std::size_t t = 0; t < len; ++t) text += words[rng() % words.size()] + " ";
    sources.push_back({"d" + std::to_string(d), text});
  }
  return sources;
}

/// Weighted and normalised lexicon of a random corpus that has at least one
/// word missing from some document.
stoplex::Lexicon random_lexicon(std::mt19937_64& rng) {
  for (;;) {
    auto lex = stoplex::build_lexicon(stoplex::load_corpus(random_corpus(rng)));
    stoplex::assign_weights(lex);
    if (std::ranges::none_of(lex.entries, [](const auto& e) { return e.weight > 0.0; })) continue;
    stoplex::assign_probabilities(lex);
    return lex;
  }
}

}  // namespace

TEST(Property, ShiftLeavesCentralMomentsUnchanged) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = oracle::random_distribution(rng, random_size(rng, 2000));
    const std::uint64_t shift = rng() % 5000;
    const auto base = stoplex::moment_summary({1, p});
    const auto moved = stoplex::moment_summary({1 + shift, p});
    const auto o = oracle::moments(p, 1 + shift);

    EXPECT_NEAR(moved.expectation, base.expectation + static_cast<double>(shift),
                1e-9 * std::max(1.0, moved.expectation));
    EXPECT_NEAR(moved.dispersion, base.dispersion, 1e-9 * base.dispersion);
    EXPECT_NEAR(moved.asymmetry, base.asymmetry, 1e-9 * std::max(1.0, std::abs(base.asymmetry)));
    // brute-force central moments at the shifted location
    EXPECT_NEAR(moved.third_central_moment, static_cast<double>(o.central3),
                1e-9 * std::max(1.0, static_cast<double>(o.abs_central3)));
  }
}

TEST(Property, SymmetricCoveragePlacementBalances) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = random_size(rng, 3000);
    const auto p = oracle::random_symmetric(rng, n);
    const auto summary = stoplex::moment_summary({1, p});
    stoplex::StopwordSet set;
    for (int c = 0; c < 20; ++c) {
      const std::size_t i = 1 + rng() % n;
      set.candidates.push_back({"a", i, 1, 0.0});
      set.candidates.push_back({"b", n + 1 - i, 1, 0.0});
    }
    const auto report = stoplex::interval_coverage(set, summary);
    EXPECT_EQ(report.left_count, report.right_count);
    EXPECT_EQ(report.total(), set.count());
  }
}

TEST(Property, CoverageInvariantUnderWeightScaling) {
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> log_scale(-30.0, 30.0);
  for (int trial = 0; trial < 200; ++trial) {
    auto lex = random_lexicon(rng);
    const auto dist = stoplex::density(lex);
    const auto summary = stoplex::moment_summary(dist);
    const auto set = stoplex::select_candidates(lex, 0.2);
    const auto coverage = stoplex::interval_coverage(set, summary);

    const double c = std::exp(log_scale(rng));
    for (auto& e : lex.entries) e.weight *= c;
    stoplex::assign_probabilities(lex);
    const auto scaled_summary = stoplex::moment_summary(stoplex::density(lex));
    const auto scaled = stoplex::interval_coverage(stoplex::select_candidates(lex, 0.2), scaled_summary);
    EXPECT_EQ(scaled.left_count, coverage.left_count);
    EXPECT_EQ(scaled.inside_count, coverage.inside_count);
    EXPECT_EQ(scaled.right_count, coverage.right_count);
  }
}

TEST(Property, ConsistencyAuditPassesOnComputedSummaries) {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < kTrials; ++trial) {
    const auto p = oracle::random_distribution(rng, random_size(rng, 5000));
    const auto summary = stoplex::moment_summary({1, p});
    EXPECT_TRUE(stoplex::check_table_consistency(summary).empty());
  }
}

TEST(Property, CandidatesNeverOutrankNonCandidates) {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 300; ++trial) {
    auto lex = random_lexicon(rng);
    const double fraction = std::uniform_real_distribution<double>(0.01, 0.99)(rng);
    const auto set = stoplex::select_candidates(lex, fraction);
    EXPECT_EQ(set.count(), stoplex::candidate_count(fraction, lex.size()));
    const auto everywhere = static_cast<std::size_t>(std::ranges::count_if(
        lex.entries, [&](const auto& e) { return e.doc_frequency == lex.doc_count; }));
    for (const auto& e : lex.entries) {
      const bool chosen = std::ranges::any_of(set.candidates, [&](const auto& c) { return c.surface == e.surface; });
      if (!chosen) {
        EXPECT_GE(e.probability, set.threshold);
      }
      // words in every document have probability zero and come first
      if (e.doc_frequency == lex.doc_count && set.count() >= everywhere) {
        EXPECT_TRUE(chosen);
      }
    }
  }
}
