#include "qswitch/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <fmt/core.h>

#include "qswitch/entanglement.hpp"
#include "qswitch/errors.hpp"
#include "qswitch/tolerances.hpp"

namespace qswitch {

namespace {

struct Sample {
  double t;
  double p;
};

// Golden-section search for a maximum of f on [a, b].
Sample golden_section_max(const std::function<double(double)>& f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  Sample best = fc >= fd ? Sample{c, fc} : Sample{d, fd};
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    const Sample s = fc >= fd ? Sample{c, fc} : Sample{d, fd};
    if (s.p > best.p || (s.p == best.p && s.t < best.t)) best = s;
  }
  return best;
}

}  // namespace

void SweepConfig::validate() const {
  if (!(r_range.lo <= r_range.hi) || !(k_range.lo <= k_range.hi)) throw std::invalid_argument("SweepConfig: empty range");
  if (grid_n < 2) throw std::invalid_argument("SweepConfig: grid_n must be at least 2");
  if (coarse_n < 3) throw std::invalid_argument("SweepConfig: coarse_n must be at least 3");
  if (t_max && !(*t_max > 0.0 && std::isfinite(*t_max))) throw std::invalid_argument("SweepConfig: t_max must be positive");
  if (refine_candidates < 1) throw std::invalid_argument("SweepConfig: refine_candidates must be at least 1");
  if (!(refine_tol > 0.0)) throw std::invalid_argument("SweepConfig: refine_tol must be positive");
  if (!std::isfinite(omega_z) || omega_z == 0.0) throw std::invalid_argument("SweepConfig: omega_z must be finite and nonzero");
}

double default_horizon(const ProtocolParams& params) {
  const double slowest = std::min(std::abs(params.omega_z), params.theta());
  if (slowest == 0.0) throw std::invalid_argument("default_horizon: omega_z and Theta must be nonzero");
  return 8.0 * std::numbers::pi / slowest;
}

TimeMaximum maximize_over_time(const std::function<double(double)>& f, double t_max, const SweepConfig& config) {
  const std::size_t n = config.coarse_n;
  const double step = t_max / static_cast<double>(n);
  std::vector<double> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = f(step * static_cast<double>(i + 1));

  const auto best_it = std::max_element(p.begin(), p.end());  // first maximum
  const double coarse_max = *best_it;
  if (!(coarse_max >= tol::kEmptyBranch)) {
    throw DegeneratePointError(fmt::format("P(-) stays below {:.0e} on (0, {}]", tol::kEmptyBranch, t_max));
  }

  // Local maxima of the coarse scan, best first, earlier first on ties.
  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i > 0 ? p[i - 1] : -1.0;
    const double right = i + 1 < n ? p[i + 1] : -1.0;
    if (p[i] >= left && p[i] >= right) peaks.push_back(i);
  }
  const std::size_t keep = std::min(config.refine_candidates, peaks.size());
  std::partial_sort(peaks.begin(), peaks.begin() + static_cast<std::ptrdiff_t>(keep), peaks.end(),
                    [&](std::size_t a, std::size_t b) { return p[a] > p[b] || (p[a] == p[b] && a < b); });
  peaks.resize(keep);

  Sample best{step * static_cast<double>(best_it - p.begin() + 1), coarse_max};
  std::vector<Sample> refined;
  for (std::size_t i : peaks) {
    const double lo = step * static_cast<double>(i);  // grid point i-1, or 0
    const double hi = step * static_cast<double>(std::min(i + 2, n));
    refined.push_back(golden_section_max(f, lo, hi, config.refine_tol));
  }
  for (const Sample& s : refined)
    if (s.p > best.p) best = s;
  // Among values equal to the best within floating-point noise of the
  // refinement, report the earliest time.
  for (const Sample& s : refined)
    if (s.p >= best.p - 1e-15 && s.t < best.t && s.p >= coarse_max) best = s;

  return TimeMaximum{best.t, best.p, coarse_max};
}

TimeMaximum maximize_p_minus(const ProtocolParams& params, const SweepConfig& config) {
  config.validate();
  const double horizon = config.t_max.value_or(default_horizon(params));
  const ProtocolEvaluator eval(params);
  return maximize_over_time([&](double t) { return eval.probability(t, Sign::minus); }, horizon, config);
}

bool SweepRecord::degenerate() const { return std::isnan(t_star); }

std::vector<double> grid_axis(Interval range, std::size_t n) {
  if (n < 2) throw std::invalid_argument("grid_axis: need at least two points");
  std::vector<double> axis(n);
  const double step = (range.hi - range.lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) axis[i] = range.lo + static_cast<double>(i) * step;
  axis.back() = range.hi;
  return axis;
}

namespace {

SweepRecord evaluate_point(double r, double k, const SweepConfig& config) {
  const ProtocolParams params = ProtocolParams::from_ratio(r, k, config.omega_z);
  SweepRecord rec{r, k, std::numeric_limits<double>::quiet_NaN(), 0.0, 0.0};
  try {
    const double horizon = config.t_max.value_or(default_horizon(params));
    const ProtocolEvaluator eval(params);
    const TimeMaximum best =
        maximize_over_time([&](double t) { return eval.probability(t, Sign::minus); }, horizon, config);
    const SwitchOutcome out = eval.outcome(best.t_star, Sign::minus);
    rec.t_star = best.t_star;
    rec.p_star = best.p_star;
    rec.concurrence_at_t_star = concurrence(out.reduced_state).value;
  } catch (const DegeneratePointError&) {
    // recorded as degenerate
  } catch (const EmptyBranchError&) {
  }
  return rec;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  config.validate();
  const auto rs = grid_axis(config.r_range, config.grid_n);
  const auto ks = grid_axis(config.k_range, config.grid_n);
  const std::size_t total = rs.size() * ks.size();
  std::vector<SweepRecord> records(total);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t idx = next.fetch_add(1); idx < total; idx = next.fetch_add(1)) {
      try {
        records[idx] = evaluate_point(rs[idx / ks.size()], ks[idx % ks.size()], config);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(total);
      }
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(config.workers, total));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::string format_double(double v) {
  if (std::isnan(v)) return {};
  return fmt::format("{:.17g}", v);
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records) {
  out << kSweepCsvHeader << '\n';
  for (const auto& rec : records) {
    out << format_double(rec.r) << ',' << format_double(rec.k) << ',' << format_double(rec.t_star) << ','
        << format_double(rec.p_star) << ',' << format_double(rec.concurrence_at_t_star) << '\n';
  }
}

}  // namespace qswitch
