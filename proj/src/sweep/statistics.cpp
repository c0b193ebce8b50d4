#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "qswitch/sweep.hpp"

namespace qswitch {

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    // positions i..j-1 share ranks i+1..j
    const double mean_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t m = i; m < j; ++m) ranks[order[m]] = mean_rank;
    i = j;
  }
  return ranks;
}

double spearman_rank_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("spearman_rank_correlation: length mismatch");
  if (x.size() < 2) throw std::invalid_argument("spearman_rank_correlation: need at least two samples");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mean = (n + 1.0) / 2.0;

  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    const double dx = rx[i] - mean;
    const double dy = ry[i] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw std::invalid_argument("spearman_rank_correlation: constant input");
  return sxy / std::sqrt(sxx * syy);
}


SweepSummary summarize(std::span<const SweepRecord> records) {
  if (records.empty()) throw std::invalid_argument("summarize: no records");
  SweepSummary s;
  s.records = records.size();
  std::vector<double> p, c;
  p.reserve(records.size());
  c.reserve(records.size());
  double best_gap = std::numeric_limits<double>::infinity();
  for (const auto& rec : records) {
    if (rec.degenerate()) ++s.degenerate;
    p.push_back(rec.p_star);
    c.push_back(rec.concurrence_at_t_star);
    const double gap = std::abs(rec.r - 1.0);
    if (gap < best_gap) {
      best_gap = gap;
      s.stripe_r = rec.r;
    }
  }
  s.spearman = spearman_rank_correlation(p, c);
  s.stripe_min_concurrence = std::numeric_limits<double>::infinity();
  for (const auto& rec : records)
    if (rec.r == s.stripe_r) s.stripe_min_concurrence = std::min(s.stripe_min_concurrence, rec.concurrence_at_t_star);
  return s;
}

}  // namespace qswitch
