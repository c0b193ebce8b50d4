#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "qswitch/errors.hpp"
#include "qswitch/protocol.hpp"
#include "qswitch/sweep.hpp"

namespace qswitch {
namespace {

SweepConfig small_config() {
  SweepConfig c;
  c.grid_n = 3;
  c.coarse_n = 2048;
  return c;
}

TEST(SweepConfig, Validation) {
  EXPECT_NO_THROW(SweepConfig{}.validate());
  auto c = SweepConfig{};
  c.grid_n = 1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = SweepConfig{};
  c.r_range = {2.0, 1.0};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = SweepConfig{};
  c.t_max = -1.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = SweepConfig{};
  c.coarse_n = 1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = SweepConfig{};
  c.refine_candidates = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(GridAxis, Endpoints) {
  const auto a = grid_axis({0.5, 5.0}, 64);
  ASSERT_EQ(a.size(), 64u);
  EXPECT_EQ(a.front(), 0.5);
  EXPECT_EQ(a.back(), 5.0);
  EXPECT_NEAR(a[7], 1.0, 1e-15);
}

TEST(DefaultHorizon, SlowestFrequency) {
  const auto p = ProtocolParams::from_ratio(1.0, 2.0, 0.5);
  EXPECT_DOUBLE_EQ(default_horizon(p), 8.0 * std::numbers::pi / 0.5);
  const auto q = ProtocolParams::from_ratio(0.1, 0.5, 2.0);  // Theta < omega
  EXPECT_DOUBLE_EQ(default_horizon(q), 8.0 * std::numbers::pi / q.theta());
}

TEST(MaximizeOverTime, FindsSmoothPeak) {
  SweepConfig c;
  c.coarse_n = 100;
  const auto m = maximize_over_time([](double t) { return std::exp(-(t - 3.3) * (t - 3.3)); }, 10.0, c);
  EXPECT_NEAR(m.t_star, 3.3, 1e-6);
  EXPECT_NEAR(m.p_star, 1.0, 1e-12);
  EXPECT_GE(m.p_star, m.coarse_max);
}

TEST(MaximizeOverTime, TiesGoToSmallestTime) {
  SweepConfig c;
  c.coarse_n = 1000;
  c.refine_candidates = 8;
  // Equal peaks at t = pi/2 and 5 pi/2.
  const auto m = maximize_over_time([](double t) { return std::sin(t); }, 10.0, c);
  EXPECT_NEAR(m.t_star, std::numbers::pi / 2, 1e-6);
}

TEST(MaximizeOverTime, DegenerateThrows) {
  SweepConfig c;
  c.coarse_n = 50;
  EXPECT_THROW(maximize_over_time([](double) { return 0.0; }, 1.0, c), DegeneratePointError);
}

TEST(MaximizePMinus, RefinedAgreesWithFinerGrid) {
  SweepConfig c;
  c.coarse_n = 4096;
  const auto p = ProtocolParams::from_ratio(2.0, 1.5, 0.5);
  const auto m = maximize_p_minus(p, c);
  SweepConfig fine = c;
  fine.coarse_n = 40960;
  const auto mf = maximize_p_minus(p, fine);
  EXPECT_GE(m.p_star, mf.coarse_max - 1e-6);
  EXPECT_NEAR(m.p_star, ProtocolEvaluator(p).probability(m.t_star, Sign::minus), 1e-9);
}

TEST(MaximizePMinus, BoundedByHalfAtUnitRatio) {
  SweepConfig c;
  c.coarse_n = 4096;
  for (double r : {1.0, -1.0})
    for (double k : {0.5, 1.0, 3.0, 5.0}) {
      const auto m = maximize_p_minus(ProtocolParams::from_ratio(r, k, 0.5), c);
      EXPECT_LE(m.p_star, 0.5 + 1e-9);
    }
}

TEST(MaximizePMinus, ReachesHalfOnExtendedHorizon) {
  // R = 1, K = 2 at omega_z = 1/2; 1/2 is approached quasi-periodically, so
  // the default horizon is not enough.
  const auto p = ProtocolParams::from_ratio(1.0, 2.0, 0.5);
  SweepConfig c;
  c.coarse_n = 8192;
  EXPECT_LT(maximize_p_minus(p, c).p_star, 0.5 - 1e-3);

  c.t_max = 8000.0 / p.omega_z;
  c.coarse_n = 320000;
  c.refine_candidates = 32;
  const auto m = maximize_p_minus(p, c);
  EXPECT_NEAR(m.p_star, 0.5, 1e-6);
}

TEST(RunSweep, RecordsAndInvariants) {
  const auto c = small_config();
  const auto recs = run_sweep(c);
  ASSERT_EQ(recs.size(), 9u);
  EXPECT_EQ(recs[0].r, 0.5);
  EXPECT_EQ(recs[0].k, 0.5);
  EXPECT_EQ(recs[1].k, 2.75);  // R-major
  for (const auto& r : recs) {
    ASSERT_FALSE(r.degenerate());
    const auto p = ProtocolParams::from_ratio(r.r, r.k, c.omega_z);
    EXPECT_NEAR(r.p_star, ProtocolEvaluator(p).probability(r.t_star, Sign::minus), 1e-9);
    EXPECT_GE(r.concurrence_at_t_star, 0.0);
    EXPECT_LE(r.concurrence_at_t_star, 1.0 + 1e-12);
  }
}

TEST(RunSweep, UnitRatioColumnIsMaximallyEntangled) {
  SweepConfig c;
  c.r_range = {0.5, 1.5};
  c.grid_n = 3;
  c.coarse_n = 2048;
  int checked = 0;
  for (const auto& r : run_sweep(c)) {
    if (r.r != 1.0) continue;
    EXPECT_NEAR(r.concurrence_at_t_star, 1.0, 1e-8) << r.k;
    ++checked;
  }
  EXPECT_EQ(checked, 3);
}

TEST(RunSweep, WorkerCountDoesNotChangeResults) {
  auto c = small_config();
  c.workers = 1;
  const auto a = run_sweep(c);
  c.workers = 4;
  const auto b = run_sweep(c);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].t_star, b[i].t_star);
    EXPECT_EQ(a[i].p_star, b[i].p_star);
    EXPECT_EQ(a[i].concurrence_at_t_star, b[i].concurrence_at_t_star);
  }
}

TEST(Csv, HeaderAndFormatting) {
  std::vector<SweepRecord> recs(2);
  recs[0] = {0.5, 1.0, 2.25, 0.1, 1.0};
  recs[1] = {1.0, 2.0, std::numeric_limits<double>::quiet_NaN(), 0.0, 0.0};
  std::ostringstream os;
  write_sweep_csv(os, recs);
  EXPECT_EQ(os.str(), "r,k,t_star,p_star,concurrence\n0.5,1,2.25,0.10000000000000001,1\n1,2,,0,0\n");
  EXPECT_TRUE(recs[1].degenerate());
}

TEST(Csv, DoublesRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 0.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(std::numeric_limits<double>::quiet_NaN()), "");
}

TEST(Spearman, KnownValues) {
  const double x[] = {1, 2, 3, 4, 5};
  const double up[] = {2, 4, 6, 8, 10};
  const double down[] = {5, 4, 3, 2, 1};
  EXPECT_NEAR(spearman_rank_correlation(x, up), 1.0, 1e-15);
  EXPECT_NEAR(spearman_rank_correlation(x, down), -1.0, 1e-15);
  // ties: ranks (1, 2.5, 2.5, 4) vs (1, 2, 3, 4)
  const double a[] = {1, 2, 2, 3};
  const double b[] = {1, 2, 3, 4};
  EXPECT_NEAR(spearman_rank_correlation(a, b), 0.9486832980505138, 1e-12);
  EXPECT_THROW(spearman_rank_correlation(std::span<const double>(x, 1), std::span<const double>(up, 1)),
               std::invalid_argument);
  EXPECT_THROW(spearman_rank_correlation(std::span<const double>(x, 3), std::span<const double>(up, 2)),
               std::invalid_argument);
}

TEST(Spearman, AverageRanks) {
  const double v[] = {10, 30, 20, 30};
  const auto r = average_ranks(v);
  EXPECT_EQ(r, (std::vector<double>{1, 3.5, 2, 3.5}));
}

TEST(Summary, StripeAndCorrelation) {
  std::vector<SweepRecord> recs = {
      {0.5, 1.0, 1.0, 0.4, 0.2}, {0.5, 2.0, 1.0, 0.3, 0.3}, {1.1, 1.0, 1.0, 0.2, 0.99}, {1.1, 2.0, 1.0, 0.1, 0.995}};
  const auto s = summarize(recs);
  EXPECT_EQ(s.records, 4u);
  EXPECT_EQ(s.degenerate, 0u);
  EXPECT_EQ(s.stripe_r, 1.1);
  EXPECT_EQ(s.stripe_min_concurrence, 0.99);
  EXPECT_NEAR(s.spearman, -1.0, 1e-12);
}

}  // namespace
}  // namespace qswitch
