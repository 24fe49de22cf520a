#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "stoplex/distribution.hpp"

namespace {

stoplex::IndexDistribution make(std::vector<double> p, std::uint64_t first = 1) {
  return stoplex::IndexDistribution{first, std::move(p)};
}

bool flags(const std::vector<stoplex::IdentityViolation>& v, const std::string& name) {
  return std::ranges::any_of(v, [&](const auto& x) { return x.identity == name; });
}

// Printed statistics of the single-book sample.
stoplex::MomentSummary printed_book_table() {
  stoplex::MomentSummary s;
  s.expectation = 7076.623;
  s.dispersion = 11981425;
  s.std_dev = 3461.41;
  s.std_dev_cubed = 414472396507;
  s.raw_moment_1 = 7076.623;
  s.raw_moment_2 = 602060020;
  s.raw_moment_3 = 598084106956;
  s.third_central_moment = -10667328016;
  s.asymmetry = -0.251;
  return s;
}

}  // namespace

TEST(Density, CopiesProbabilitiesInIndexOrder) {
  stoplex::Lexicon lex;
  lex.doc_count = 3;
  for (double p : {0.375, 0.25, 0.375}) {
    stoplex::WordEntry e;
    e.first_index = lex.entries.size() + 1;
    e.probability = p;
    lex.entries.push_back(e);
  }
  const auto dist = stoplex::density(lex);
  EXPECT_EQ(dist.first_index, 1u);
  EXPECT_EQ(dist.probabilities, (std::vector<double>{0.375, 0.25, 0.375}));
  EXPECT_EQ(dist.size(), lex.size());
  EXPECT_TRUE(stoplex::is_normalized(dist));
}

TEST(RawMoment, ToyDistribution) {
  const auto toy = make({0.375, 0.25, 0.375});
  EXPECT_DOUBLE_EQ(stoplex::raw_moment(toy, 1), 2.0);
  EXPECT_DOUBLE_EQ(stoplex::raw_moment(toy, 2), 4.75);
  EXPECT_DOUBLE_EQ(stoplex::raw_moment(toy, 3), 12.5);
}

TEST(RawMoment, PointMassAndUniform) {
  EXPECT_DOUBLE_EQ(stoplex::raw_moment(make({1.0}, 7), 3), 343.0);
  EXPECT_DOUBLE_EQ(stoplex::raw_moment(make({0.5, 0.5}), 2), 2.5);
}

TEST(RawMoment, OrderOutsideRange) {
  const auto d = make({1.0});
  EXPECT_THROW((void)stoplex::raw_moment(d, 0), stoplex::DomainError);
  EXPECT_THROW((void)stoplex::raw_moment(d, 4), stoplex::DomainError);
}

TEST(MomentSummary, ToyDistributionIsSymmetric) {
  const auto s = stoplex::moment_summary(make({0.375, 0.25, 0.375}));
  EXPECT_DOUBLE_EQ(s.expectation, 2.0);
  EXPECT_DOUBLE_EQ(s.dispersion, 0.75);
  EXPECT_NEAR(s.std_dev, 0.8660254, 5e-8);
  EXPECT_DOUBLE_EQ(s.raw_moment_3, 12.5);
  EXPECT_EQ(s.third_central_moment, 0.0);
  EXPECT_EQ(s.asymmetry, 0.0);
  EXPECT_TRUE(stoplex::check_table_consistency(s).empty());
}

TEST(MomentSummary, SkewedThreePointDistribution) {
  const auto s = stoplex::moment_summary(make({0.6, 0.3, 0.1}));
  EXPECT_NEAR(s.expectation, 1.5, 1e-14);
  EXPECT_NEAR(s.dispersion, 0.45, 1e-14);
  EXPECT_NEAR(s.std_dev, 0.6708204, 5e-8);
  EXPECT_NEAR(s.raw_moment_2, 2.7, 1e-14);
  EXPECT_NEAR(s.raw_moment_3, 5.7, 1e-14);
  EXPECT_NEAR(s.third_central_moment, 0.3, 1e-14);
  EXPECT_NEAR(s.asymmetry, 0.9938080, 5e-8);

  const auto o = oracle::moments({0.6, 0.3, 0.1});
  EXPECT_NEAR(s.third_central_moment, static_cast<double>(o.central3), 1e-14);
}

TEST(MomentSummary, PointMassIsDegenerate) {
  EXPECT_THROW((void)stoplex::moment_summary(make({1.0}, 5)), stoplex::DegenerateDistribution);
  EXPECT_THROW((void)stoplex::moment_summary(make({0.0, 1.0, 0.0})), stoplex::DegenerateDistribution);
}

TEST(MomentSummary, RejectsEmptyOrInvalid) {
  EXPECT_THROW((void)stoplex::moment_summary(make({})), stoplex::DomainError);
  EXPECT_THROW((void)stoplex::moment_summary(make({0.5, -0.1, 0.6})), stoplex::DomainError);
}

TEST(MomentSummary, ConcentratedSymmetricMassFarFromOrigin) {
  // Two equal masses at 49999 and 50001: the raw moments are ~1e14 but the
  // skew must still come out as zero.
  std::vector<double> p(50001, 0.0);
  p[49998] = 0.5;
  p[50000] = 0.5;
  const auto s = stoplex::moment_summary(make(p));
  EXPECT_DOUBLE_EQ(s.expectation, 50000.0);
  EXPECT_DOUBLE_EQ(s.dispersion, 1.0);
  EXPECT_LE(std::abs(s.asymmetry), 1e-9);
}

TEST(TableConsistency, PrintedBookTableFlagsSigmaCubedAndSecondMoment) {
  const auto violations = stoplex::check_table_consistency(printed_book_table());
  EXPECT_TRUE(flags(violations, "std_dev_cubed"));
  EXPECT_TRUE(flags(violations, "dispersion"));  // D = E_2 - E_1^2 fails through E_2
  EXPECT_TRUE(flags(violations, "asymmetry"));
  EXPECT_FALSE(flags(violations, "expectation"));
}

TEST(TableConsistency, CorrectedBookTablePassesThirdMomentIdentity) {
  auto s = printed_book_table();
  s.raw_moment_2 = 62060018;
  s.std_dev_cubed = 4.1472e10;
  const auto violations = stoplex::check_table_consistency(s);
  EXPECT_FALSE(flags(violations, "third_central_moment"));
  EXPECT_FALSE(flags(violations, "dispersion"));

  // Identity residual relative to mu3 itself.
  const double mu3 = s.raw_moment_3 - 3.0 * s.raw_moment_1 * s.raw_moment_2 +
                     2.0 * std::pow(s.raw_moment_1, 3);
  EXPECT_LE(std::abs(mu3 - s.third_central_moment) / std::abs(s.third_central_moment), 1e-3);
}

TEST(TableConsistency, ReportsValues) {
  auto s = printed_book_table();
  const auto violations = stoplex::check_table_consistency(s);
  const auto it = std::ranges::find_if(violations, [](const auto& v) { return v.identity == "std_dev_cubed"; });
  ASSERT_NE(it, violations.end());
  EXPECT_EQ(it->reported, 414472396507.0);
  EXPECT_NEAR(it->expected, 3461.41 * 3461.41 * 3461.41, 1.0);
  EXPECT_GT(it->relative_error, 0.8);
}
