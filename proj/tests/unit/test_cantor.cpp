#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "singlab/cantor.hpp"
#include "singlab/measure.hpp"

using namespace singlab;
using namespace singlab::cantor;

TEST_CASE("scale schedule closed forms") {
  auto s = schedule(12);
  CHECK(s.sigma[0] == kTwoPi);
  CHECK(s.tau[1] == 0.0);
  CHECK(s.sigma[1] == doctest::Approx(kPi));
  CHECK(s.sigma[3] == doctest::Approx(kPi / 12.0).epsilon(1e-15));
  CHECK(s.tau[3] == doctest::Approx(kPi / 72.0).epsilon(1e-15));
  CHECK(s.tau[4] / s.sigma[4] == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
  for (int n = 2; n <= 12; ++n)
    CHECK(s.tau[n] / s.sigma[n] ==
          doctest::Approx(1.0 / (3.0 * (n - 1))).epsilon(1e-14));
  for (int n = 1; n <= 12; ++n) CHECK(s.sigma[n] < s.sigma[n - 1]);

  CHECK_THROWS_AS(schedule(0), std::invalid_argument);
  CHECK_THROWS_AS(schedule(25), std::invalid_argument);
}

TEST_CASE("zero-offset construction tiles rank one exactly") {
  auto sys = build(0, 4, OffsetMode::zero);
  CHECK(sys.a(1, 0) == doctest::Approx(0.0));
  CHECK(sys.a(1, 1) == doctest::Approx(kPi));
  CHECK(sys.interval(1, 0).length == doctest::Approx(kPi));
  CHECK(sys.rank_union(1).is_full_circle());
}

TEST_CASE("rank unions carry total length 2*pi/n") {
  for (uint64_t seed : {7ull, 99ull}) {
    auto sys = build(seed, 10, OffsetMode::random);
    for (int n = 1; n <= 10; ++n) {
      CHECK(std::fabs(sys.rank_union(n).total_length() - kTwoPi / n) < 1e-12);
      CHECK(sys.rank_union(n).size() == static_cast<std::size_t>(1L << n) -
                                            (n == 1 ? 1 : 0));  // rank 1 may merge
    }
  }
}

TEST_CASE("margins and sibling gaps stay in the tau bands") {
  auto sys = build(2024, 12, OffsetMode::random);
  const auto& sch = sys.sched();
  for (int n = 0; n < 12; ++n) {
    double sn = sch.sigma[n];
    double sn1 = sch.sigma[n + 1];
    double tau = sch.tau[n + 1];
    for (long k = 0; k < RankedIntervalSystem::count(n); ++k) {
      double pa = sys.a(n, k);
      double even = sys.a(n + 1, 2 * k);
      double odd = sys.a(n + 1, 2 * k + 1);
      CHECK(even - pa >= tau - 1e-12);
      CHECK(even - pa <= 2 * tau + 1e-12);
      CHECK(odd - (pa + sn / 2) >= tau - 1e-12);
      CHECK(odd - (pa + sn / 2) <= 2 * tau + 1e-12);
      // Gap between the two children of one parent.
      double gap = odd - (even + sn1);
      CHECK(gap >= 2 * tau - 1e-12);
      CHECK(gap <= 4 * tau + 1e-12);
    }
    // Consecutive rank-(n+1) gaps across the whole circle.
    if (n + 1 >= 2) {
      const auto& ends = sys.endpoints(n + 1);
      for (std::size_t k = 0; k + 1 < ends.size(); ++k)
        CHECK(ends[k + 1] - (ends[k] + sn1) >= 2 * tau - 1e-12);
    }
  }
}

TEST_CASE("construction is deterministic across thread counts") {
  auto one = build(31337, 12, OffsetMode::random);
  set_thread_count(4);
  auto four = build(31337, 12, OffsetMode::random);
  set_thread_count(1);
  for (int n = 0; n <= 12; ++n)
    for (long k = 0; k < RankedIntervalSystem::count(n); ++k)
      CHECK(one.a(n, k) == four.a(n, k));
}

TEST_CASE("offsets are reproducible and uniform-ish") {
  OffsetTable t{123, OffsetMode::random};
  CHECK(t.s(3, 5) == t.s(3, 5));
  CHECK(t.s(3, 5) != t.s(3, 6));
  double mean = 0.0;
  int cnt = 0;
  for (int n = 1; n <= 10; ++n)
    for (long k = 0; k < (1L << n); ++k) {
      double v = t.s(n, k);
      CHECK(v >= 0.0);
      CHECK(v < 1.0);
      mean += v;
      ++cnt;
    }
  CHECK(std::fabs(mean / cnt - 0.5) < 0.02);
}

TEST_CASE("stage densities are probability measures with density n/(2*pi)") {
  auto sys = build(5, 8, OffsetMode::random);
  auto g2 = stage_density(sys, 2);
  CHECK(g2.support_union().size() == 4);
  for (const auto& w : g2.piece_weights())
    CHECK(w.real() == doctest::Approx(2.0 / kTwoPi).epsilon(1e-12));
  CHECK(std::abs(g2.total_mass() - cx(1.0, 0.0)) < 1e-12);
  auto w = fourier_coeffs(g2, 0, 0);
  CHECK(std::abs(w.at(0) - cx(1.0, 0.0)) < 1e-12);

  // Zero-offset rank 1 is the full circle, so nonzero coefficients vanish.
  auto zsys = build(0, 2, OffsetMode::zero);
  auto g1 = stage_density(zsys, 1);
  auto w1 = fourier_coeffs(g1, -3, 3);
  for (long m = 1; m <= 3; ++m) {
    CHECK(std::abs(w1.at(m)) < 1e-14);
    CHECK(std::abs(w1.at(-m)) < 1e-14);
  }

  CHECK_THROWS_AS(stage_density(sys, 9), std::out_of_range);
}

TEST_CASE("gauge premeasure sums") {
  auto sys = build(77, 20, OffsetMode::random);

  // Direct evaluation at n = 10.
  double v10 = gauge_cover_sum(sys, 10, Gauge::t_log());
  double expect10 = (kTwoPi / 10.0) * std::log(10.0 * 1024.0 / kTwoPi);
  CHECK(v10 == doctest::Approx(expect10).epsilon(1e-14));
  CHECK(v10 == doctest::Approx(4.6469).epsilon(1e-4));

  // Large-n plateau near 2*pi*log(2).
  for (int n = 15; n <= 20; ++n) {
    double v = gauge_cover_sum(sys, n, Gauge::t_log());
    CHECK(v >= 4.3);
    CHECK(v <= 4.8);
  }
  for (int n = 2; n <= 20; ++n) CHECK(gauge_cover_sum(sys, n, Gauge::t_log()) < 5.0);

  // Linear gauge recovers the Lebesgue content of K_n.
  for (int n : {1, 4, 13})
    CHECK(gauge_cover_sum(sys, n, Gauge::t_pow(1.0)) ==
          doctest::Approx(kTwoPi / n).epsilon(1e-14));

  // sigma_1 = pi >= 1: the log gauge is undefined there.
  CHECK_THROWS_WITH_AS(gauge_cover_sum(sys, 1, Gauge::t_log()), "gauge undefined",
                       std::domain_error);
  CHECK_THROWS_AS(gauge_cover_sum(sys, 3, Gauge::t_pow(1.5)), std::domain_error);
}

TEST_CASE("stage-to-stage mass deltas obey the 2^-n bound") {
  for (uint64_t seed : {1ull, 42ull}) {
    auto sys = build(seed, 12, OffsetMode::random);
    for (int n = 1; n < 12; ++n) {
      double d = partial_mass_delta(sys, n);
      CHECK(d <= std::ldexp(1.0, -n) + 1e-12);
      CHECK(d > 0.0);
    }
  }
}

TEST_CASE("zero-offset rank-1 mass delta matches a dense integration oracle") {
  auto sys = build(0, 2, OffsetMode::zero);
  double reported = partial_mass_delta(sys, 1);
  CHECK(reported <= 0.5 + 1e-15);

  // Oracle: cumulative difference of the two densities on a dense grid.
  auto g1 = stage_density(sys, 1);
  auto g2 = stage_density(sys, 2);
  int grid = 200000;
  double best = 0.0;
  for (int i = 1; i <= grid; ++i) {
    double t = kTwoPi * i / (grid + 1);
    best = std::max(best, std::fabs(cumulative_mass(g2, t) - cumulative_mass(g1, t)));
  }
  CHECK(reported >= best - 1e-12);
  CHECK(reported <= best + 1e-3);
}

TEST_CASE("memory estimate grows like the interval count") {
  CHECK(build_memory_estimate(1) == 3 * sizeof(double));
  CHECK(build_memory_estimate(10) == ((std::size_t{2} << 10) - 1) * sizeof(double));
}
