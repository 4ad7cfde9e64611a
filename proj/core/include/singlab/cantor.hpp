#pragma once

// Random nested-interval systems on the circle.
//
// Rank 0 is the full circle [0, 2*pi].  Each rank-n interval of length
// sigma_n spawns two rank-(n+1) children of length sigma_{n+1}, one in
// each half, displaced by tau_{n+1}*(1 + s) where s is a per-child
// offset in [0, 1].  The scale schedule is
//
//     sigma_0 = 2*pi,  sigma_n = 2*pi / (n * 2^n)   (n >= 1),
//     tau_n   = (sigma_{n-1} - 2*sigma_n) / 6       (n >= 1),
//
// so tau_1 = 0 and tau_n / sigma_n = 1 / (3(n-1)) for n >= 2.  The union
// K_n of the 2^n rank-n intervals has total length 2*pi/n, and the
// normalized indicator densities g_n = 1_{K_n} / |K_n| form the stage
// measures whose weak limit is the singular measure under study.

#include <cstdint>
#include <vector>

#include "singlab/common.hpp"
#include "singlab/interval.hpp"
#include "singlab/measure.hpp"

namespace singlab::cantor {

/// Largest admissible rank: 2^24 intervals.
inline constexpr int kRankCap = 24;

struct Schedule {
  int n_max = 0;
  std::vector<double> sigma;  // sigma[0] = 2*pi
  std::vector<double> tau;    // tau[0] unused (0)
};

/// Throws std::invalid_argument for n_max < 1 or n_max > kRankCap.
Schedule schedule(int n_max);

enum class OffsetMode { random, zero };

struct OffsetTable {
  uint64_t seed = 0;
  OffsetMode mode = OffsetMode::zero;

  /// s(n, k): uniform on [0,1), a pure function of (seed, n, k).
  double s(int n, long k) const {
    if (mode == OffsetMode::zero) return 0.0;
    return uniform01(counter_key(seed, static_cast<uint64_t>(n), static_cast<uint64_t>(k)));
  }
};

class RankedIntervalSystem {
 public:
  const Schedule& sched() const { return sched_; }
  const OffsetTable& offsets() const { return offsets_; }
  int n_max() const { return sched_.n_max; }

  static long count(int n) { return 1L << n; }

  /// Left endpoint of the rank-n interval with index k.
  double a(int n, long k) const { return a_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]; }

  Interval interval(int n, long k) const;

  /// All left endpoints of rank n, in index order (equals angular order).
  const std::vector<double>& endpoints(int n) const { return a_[static_cast<std::size_t>(n)]; }

  /// K_n as an interval union.
  IntervalUnion rank_union(int n) const;

  friend RankedIntervalSystem build(uint64_t seed, int n_max, OffsetMode mode);

 private:
  Schedule sched_;
  OffsetTable offsets_;
  std::vector<std::vector<double>> a_;  // a_[n][k]

  void check_rank(int n) const;
};

/// Builds all ranks 0..n_max and verifies the nesting, margin, and
/// measure invariants before returning; a violation raises
/// std::runtime_error (construction bug, never silent).
RankedIntervalSystem build(uint64_t seed, int n_max, OffsetMode mode);

/// Estimated resident bytes for a build with this n_max.
std::size_t build_memory_estimate(int n_max);

/// g_n: uniform probability density n/(2*pi) on K_n.
CircleMeasure stage_density(const RankedIntervalSystem& sys, int n);

// Gauge functions h for premeasure sums.
struct Gauge {
  enum class Kind { t_log_1_over_t, t_pow } kind;
  double alpha = 1.0;  // t_pow exponent in (0, 1]

  static Gauge t_log() { return {Kind::t_log_1_over_t, 1.0}; }
  static Gauge t_pow(double a) { return {Kind::t_pow, a}; }
};

/// 2^n * h(sigma_n): the natural rank-n cover's premeasure sum.
/// The log gauge requires sigma_n < 1; outside its domain the call
/// throws std::domain_error("gauge undefined").
double gauge_cover_sum(const RankedIntervalSystem& sys, int n, Gauge gauge);

/// max_t | integral_0^t (g_{n+1} - g_n) |, exact from the piecewise
/// structure (extrema lie at density breakpoints; extra probe angles
/// may be supplied).  Bounded by 2^{-n} for these systems.
double partial_mass_delta(const RankedIntervalSystem& sys, int n,
                          const std::vector<double>& t_grid = {});

}  // namespace singlab::cantor
