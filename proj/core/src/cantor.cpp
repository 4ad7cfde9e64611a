#include "singlab/cantor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace singlab::cantor {

Schedule schedule(int n_max) {
  if (n_max < 1) throw std::invalid_argument("schedule requires n_max >= 1");
  if (n_max > kRankCap)
    throw std::invalid_argument("n_max exceeds the rank cap of " + std::to_string(kRankCap));
  Schedule s;
  s.n_max = n_max;
  s.sigma.resize(static_cast<std::size_t>(n_max) + 1);
  s.tau.resize(static_cast<std::size_t>(n_max) + 1);
  s.sigma[0] = kTwoPi;
  s.tau[0] = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    s.sigma[static_cast<std::size_t>(n)] =
        kTwoPi / (static_cast<double>(n) * std::ldexp(1.0, n));
    s.tau[static_cast<std::size_t>(n)] =
        (s.sigma[static_cast<std::size_t>(n - 1)] - 2.0 * s.sigma[static_cast<std::size_t>(n)]) / 6.0;
  }
  return s;
}

Interval RankedIntervalSystem::interval(int n, long k) const {
  check_rank(n);
  if (k < 0 || k >= count(n)) throw std::out_of_range("interval index out of range");
  return Interval(a(n, k), sched_.sigma[static_cast<std::size_t>(n)]);
}

IntervalUnion RankedIntervalSystem::rank_union(int n) const {
  check_rank(n);
  std::vector<Interval> arcs;
  arcs.reserve(static_cast<std::size_t>(count(n)));
  double len = sched_.sigma[static_cast<std::size_t>(n)];
  for (long k = 0; k < count(n); ++k) arcs.emplace_back(a(n, k), len);
  return IntervalUnion(std::move(arcs));
}

void RankedIntervalSystem::check_rank(int n) const {
  if (n < 0 || n > sched_.n_max) throw std::out_of_range("rank out of range");
}

std::size_t build_memory_estimate(int n_max) {
  // Endpoint arrays for every rank: sum over n of 2^n doubles.
  std::size_t doubles = (std::size_t{2} << n_max) - 1;
  return doubles * sizeof(double);
}

namespace {

void verify_invariants(const RankedIntervalSystem& sys) {
  const auto& sch = sys.sched();
  const double tol = kAngleTol;
  for (int n = 0; n < sch.n_max; ++n) {
    double sn = sch.sigma[static_cast<std::size_t>(n)];
    double sn1 = sch.sigma[static_cast<std::size_t>(n + 1)];
    double tn1 = sch.tau[static_cast<std::size_t>(n + 1)];
    for (long k = 0; k < RankedIntervalSystem::count(n); ++k) {
      double pa = sys.a(n, k);
      double even = sys.a(n + 1, 2 * k);
      double odd = sys.a(n + 1, 2 * k + 1);
      // Nesting: even child in the first half, odd child in the second.
      if (even < pa - tol || even + sn1 > pa + sn / 2 + tol)
        throw std::runtime_error("internal error: even child escapes its half");
      if (odd < pa + sn / 2 - tol || odd + sn1 > pa + sn + tol)
        throw std::runtime_error("internal error: odd child escapes its half");
      // Margins: both children sit tau..2*tau from their half's ends.
      double m1 = even - pa;
      double m2 = pa + sn / 2 - (even + sn1);
      double m3 = odd - (pa + sn / 2);
      double m4 = pa + sn - (odd + sn1);
      for (double m : {m1, m2, m3, m4})
        if (m < tn1 - tol || m > 2 * tn1 + tol)
          throw std::runtime_error("internal error: child margin outside [tau, 2*tau]");
    }
    // All 2^n pieces share the stored length, so the rank's total length
    // is the exact product 2^n * sigma_n.
    if (n >= 1 && std::fabs(std::ldexp(sn, n) - kTwoPi / n) > 1e-12)
      throw std::runtime_error("internal error: rank length sum drifts from 2*pi/n");
  }
}

}  // namespace

RankedIntervalSystem build(uint64_t seed, int n_max, OffsetMode mode) {
  RankedIntervalSystem sys;
  sys.sched_ = schedule(n_max);
  sys.offsets_.seed = seed;
  sys.offsets_.mode = mode;
  sys.a_.resize(static_cast<std::size_t>(n_max) + 1);
  sys.a_[0] = {0.0};
  for (int n = 0; n < n_max; ++n) {
    const auto& parent = sys.a_[static_cast<std::size_t>(n)];
    auto& child = sys.a_[static_cast<std::size_t>(n + 1)];
    child.resize(parent.size() * 2);
    double half = sys.sched_.sigma[static_cast<std::size_t>(n)] / 2.0;
    double tau = sys.sched_.tau[static_cast<std::size_t>(n + 1)];
    const OffsetTable& off = sys.offsets_;
    int rank = n + 1;
    parallel_for(0, parent.size(), [&](std::size_t k) {
      long k2 = static_cast<long>(2 * k);
      child[2 * k] = parent[k] + tau * (1.0 + off.s(rank, k2));
      child[2 * k + 1] = parent[k] + half + tau * (1.0 + off.s(rank, k2 + 1));
    });
  }
  verify_invariants(sys);
  return sys;
}

CircleMeasure stage_density(const RankedIntervalSystem& sys, int n) {
  if (n < 1 || n > sys.n_max()) throw std::out_of_range("rank out of range");
  return CircleMeasure::uniform(sys.rank_union(n), 1.0);
}

double gauge_cover_sum(const RankedIntervalSystem& sys, int n, Gauge gauge) {
  if (n < 1 || n > sys.n_max()) throw std::out_of_range("rank out of range");
  double sn = sys.sched().sigma[static_cast<std::size_t>(n)];
  double h;
  switch (gauge.kind) {
    case Gauge::Kind::t_log_1_over_t:
      if (sn >= 1.0) throw std::domain_error("gauge undefined");
      h = sn * std::log(1.0 / sn);
      break;
    case Gauge::Kind::t_pow:
      if (!(gauge.alpha > 0.0) || gauge.alpha > 1.0)
        throw std::domain_error("gauge undefined");
      h = std::pow(sn, gauge.alpha);
      break;
    default:
      throw std::domain_error("gauge undefined");
  }
  return std::ldexp(1.0, n) * h;
}

double partial_mass_delta(const RankedIntervalSystem& sys, int n,
                          const std::vector<double>& t_grid) {
  if (n < 1 || n + 1 > sys.n_max()) throw std::out_of_range("rank out of range");
  return cumulative_delta(stage_density(sys, n + 1), stage_density(sys, n), t_grid);
}

}  // namespace singlab::cantor
