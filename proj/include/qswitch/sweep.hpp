#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qswitch/protocol.hpp"

namespace qswitch {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct SweepConfig {
  double omega_z = 0.5;
  Interval r_range{0.5, 5.0};
  Interval k_range{0.5, 5.0};
  std::size_t grid_n = 64;
  // Search horizon for the time maximization. Unset: 8 pi / min(omega_z,
  // Theta), evaluated per grid point.
  std::optional<double> t_max;
  std::size_t coarse_n = 8192;
  // Number of coarse local maxima handed to golden-section refinement.
  std::size_t refine_candidates = 1;
  double refine_tol = 1e-9;
  // Threads used by run_sweep; does not affect results.
  std::size_t workers = 1;

  // Throws std::invalid_argument on an unusable configuration.
  void validate() const;
};

// 8 pi / min(omega_z, Theta)
double default_horizon(const ProtocolParams& params);

struct TimeMaximum {
  double t_star = 0.0;
  double p_star = 0.0;
  double coarse_max = 0.0;  // best value on the uniform grid
};

// Maximizes f over (0, t_max]: uniform scan of coarse_n points, then
// golden-section refinement (to refine_tol) of the best refine_candidates
// local maxima. The result never falls below the coarse maximum; ties go to
// the smallest t. Throws DegeneratePointError if f < tol::kEmptyBranch on the
// whole grid.
TimeMaximum maximize_over_time(const std::function<double(double)>& f, double t_max, const SweepConfig& config);

// P(-) at params (t ignored) maximized over time, with the horizon from
// config.t_max or default_horizon(params).
TimeMaximum maximize_p_minus(const ProtocolParams& params, const SweepConfig& config);

struct SweepRecord {
  double r = 0.0;
  double k = 0.0;
  double t_star = 0.0;  // NaN for a degenerate point
  double p_star = 0.0;
  double concurrence_at_t_star = 0.0;

  bool degenerate() const;
};

// n evenly spaced values lo + i (hi - lo) / (n - 1).
std::vector<double> grid_axis(Interval range, std::size_t n);

// One record per (R, K) grid point, R-major. Identical configs give
// identical records regardless of config.workers.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

// CSV with header "r,k,t_star,p_star,concurrence", 17 significant digits,
// an empty t_star field for degenerate points, '\n' line endings.
inline constexpr const char* kSweepCsvHeader = "r,k,t_star,p_star,concurrence";
void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records);

// Shortest decimal that round-trips through 17 significant digits ("%.17g").
std::string format_double(double v);

// Spearman correlation with average ranks for ties. Throws
// std::invalid_argument for fewer than two samples or mismatched lengths.
double spearman_rank_correlation(std::span<const double> x, std::span<const double> y);

// Fractional ranks starting at 1, ties sharing their mean rank.
std::vector<double> average_ranks(std::span<const double> values);

// Headline numbers of a sweep: the rank correlation between p_star and
// concurrence over all records, and the worst concurrence along the grid
// column whose R is nearest to 1.
struct SweepSummary {
  std::size_t records = 0;
  std::size_t degenerate = 0;
  double spearman = 0.0;
  double stripe_r = 0.0;
  double stripe_min_concurrence = 0.0;
};

SweepSummary summarize(std::span<const SweepRecord> records);

}  // namespace qswitch
