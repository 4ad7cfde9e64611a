#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "singlab/cantor.hpp"
#include "singlab/conjugate.hpp"
#include "singlab/fft.hpp"
#include "singlab/measure.hpp"
#include "singlab/nufft.hpp"
#include "singlab/quadrature.hpp"

using namespace singlab;

namespace {

std::vector<cx> dft_direct(const std::vector<cx>& x, int sign) {
  const std::size_t n = x.size();
  std::vector<cx> out(n, cx{0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      out[k] += x[j] * std::polar(1.0, sign * kTwoPi * static_cast<double>(j) *
                                           static_cast<double>(k) / static_cast<double>(n));
  return out;
}

std::vector<cx> random_signal(std::size_t n, uint64_t seed) {
  std::vector<cx> x(n);
  for (std::size_t j = 0; j < n; ++j)
    x[j] = cx{2.0 * uniform01(counter_key(seed, j, 1)) - 1.0,
              2.0 * uniform01(counter_key(seed, j, 2)) - 1.0};
  return x;
}

}  // namespace

TEST_CASE("next_pow2 basics") {
  CHECK(next_pow2(0) == 1);
  CHECK(next_pow2(1) == 1);
  CHECK(next_pow2(2) == 2);
  CHECK(next_pow2(3) == 4);
  CHECK(next_pow2(1024) == 1024);
  CHECK(next_pow2(1025) == 2048);
}

TEST_CASE("fft matches the direct transform and inverts") {
  for (std::size_t n : {1u, 2u, 8u, 64u}) {
    auto x = random_signal(n, 11 + n);
    auto ref = dft_direct(x, -1);
    auto a = x;
    fft_pow2(a, -1);
    for (std::size_t k = 0; k < n; ++k)
      CHECK(std::abs(a[k] - ref[k]) < 1e-11 * static_cast<double>(n + 1));

    // Round trip recovers n * x.
    auto b = a;
    fft_pow2(b, +1);
    for (std::size_t j = 0; j < n; ++j)
      CHECK(std::abs(b[j] / static_cast<double>(n) - x[j]) < 1e-12);
  }
}

TEST_CASE("fft preserves energy") {
  auto x = random_signal(256, 5);
  double time_e = 0.0;
  for (const auto& v : x) time_e += std::norm(v);
  auto a = x;
  fft_pow2(a, -1);
  double freq_e = 0.0;
  for (const auto& v : a) freq_e += std::norm(v);
  CHECK(freq_e / 256.0 == doctest::Approx(time_e).epsilon(1e-13));
}

TEST_CASE("fft rejects bad arguments") {
  std::vector<cx> x(6);
  CHECK_THROWS_AS(fft_pow2(x, -1), std::invalid_argument);
  std::vector<cx> y(8);
  CHECK_THROWS_AS(fft_pow2(y, 3), std::invalid_argument);
  std::vector<cx> z;
  CHECK_THROWS_AS(fft_pow2(z, -1), std::invalid_argument);
}

TEST_CASE("nufft agrees with the direct nonuniform sum") {
  const std::size_t npts = 300;
  const long M = 40;
  std::vector<double> t(npts);
  std::vector<cx> w(npts);
  double abs_w = 0.0;
  for (std::size_t j = 0; j < npts; ++j) {
    t[j] = kTwoPi * uniform01(counter_key(21, j, 0));
    w[j] = cx{2.0 * uniform01(counter_key(21, j, 1)) - 1.0,
              2.0 * uniform01(counter_key(21, j, 2)) - 1.0};
    abs_w += std::abs(w[j]);
  }
  auto fast = nufft_type1(t, w, M);
  auto ref = nudft_direct(t, w, M);
  NufftAccumulator acc(M);
  acc.add_many(t, w);
  const double bound = acc.mode_error_bound();
  CHECK(bound < 1e-11 * abs_w);
  double worst = 0.0;
  for (long m = -M; m <= M; ++m)
    worst = std::max(worst, std::abs(fast.at(m) - ref.at(m)));
  CHECK(worst < bound + 1e-12 * abs_w);
}

TEST_CASE("nufft streaming accumulation matches one-shot") {
  const long M = 12;
  std::vector<double> t{0.1, 1.7, 3.3, 4.1, 5.9, 6.2};
  std::vector<cx> w{{1, 0}, {0, 1}, {-2, 0.5}, {0.3, 0}, {1, 1}, {-0.7, 0.2}};
  auto once = nufft_type1(t, w, M);
  NufftAccumulator acc(M);
  for (std::size_t j = 0; j < 3; ++j) acc.add(t[j], w[j]);
  for (std::size_t j = 3; j < t.size(); ++j) acc.add(t[j], w[j]);
  auto split = acc.finish();
  for (long m = -M; m <= M; ++m)
    CHECK(std::abs(once.at(m) - split.at(m)) == 0.0);
}

TEST_CASE("nufft handles the zeroth mode and rejects misuse") {
  std::vector<double> t{0.5, 2.5};
  std::vector<cx> w{{2.0, 0.0}, {3.0, 0.0}};
  auto win = nufft_type1(t, w, 0);
  CHECK(std::abs(win.at(0) - (w[0] * std::polar(1.0, -0.0 * t[0]) + w[1])) < 1e-13);

  CHECK_THROWS_AS(NufftAccumulator(-1), std::invalid_argument);
  NufftAccumulator acc(2);
  acc.add(0.3, cx{1.0, 0.0});
  (void)acc.finish();
  CHECK_THROWS_AS(acc.finish(), std::logic_error);
  std::vector<cx> short_w{{1.0, 0.0}};
  CHECK_THROWS_AS(nufft_type1(t, short_w, 2), std::invalid_argument);
}

TEST_CASE("gauss-legendre rules integrate polynomials exactly") {
  for (int order : {2, 5, 12, 16}) {
    const auto& r = gl_rule(order);
    double total = 0.0;
    for (double wi : r.w) total += wi;
    CHECK(total == doctest::Approx(2.0).epsilon(1e-14));
    for (int k = 0; k <= 2 * order - 1; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < r.x.size(); ++i)
        s += r.w[i] * std::pow(r.x[i], k);
      const double exact = (k % 2 == 1) ? 0.0 : 2.0 / (k + 1.0);
      CHECK(s == doctest::Approx(exact).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(gl_rule(1), std::invalid_argument);
  CHECK_THROWS_AS(gl_rule(49), std::invalid_argument);
}

TEST_CASE("graded panels resolve a logarithmic endpoint singularity") {
  PanelScheme ps;
  ps.depth = 40;
  ps.gl_order = 12;
  ps.singular_left = true;
  QuadNodes q;
  emit_panels(0.0, 1.0, ps, q);
  const cx val = integrate(q, [](double x) { return cx{std::log(x), 0.0}; });
  CHECK(std::abs(val.real() + 1.0) < 1e-10);  // integral of ln on (0,1) is -1
  CHECK(q.dropped_len == doctest::Approx(std::ldexp(1.0, -41)).epsilon(1e-12));
}

TEST_CASE("graded panels handle both ends and report dropped mass") {
  PanelScheme ps;
  ps.depth = 24;
  ps.singular_left = true;
  ps.singular_right = true;
  QuadNodes q;
  emit_panels(0.0, 1.0, ps, q);
  // Constant integrand: the only defect is the two dropped remnants.
  const cx one = integrate(q, [](double) { return cx{1.0, 0.0}; });
  CHECK(one.real() == doctest::Approx(1.0 - q.dropped_len).epsilon(1e-13));
  CHECK(q.dropped_len == doctest::Approx(std::ldexp(1.0, -25)).epsilon(1e-12));

  // ln|2 sin(t/2)| integrates to zero over the full circle.
  QuadNodes circ;
  PanelScheme pc = ps;
  pc.depth = 40;
  emit_panels(0.0, kTwoPi, pc, circ);
  const cx lam = integrate(circ, [](double x) {
    return cx{std::log(std::fabs(2.0 * std::sin(0.5 * x))), 0.0};
  });
  CHECK(std::abs(lam.real()) < 1e-9);
}

TEST_CASE("oscillation cap keeps high-frequency integrals accurate") {
  const double m = 137.0;
  PanelScheme ps;
  ps.osc_cap = 12.0 / m;
  QuadNodes q;
  emit_panels(0.0, 1.0, ps, q);
  const cx val = integrate(q, [m](double x) { return std::polar(1.0, m * x); });
  const cx exact = (std::polar(1.0, m) - cx{1.0, 0.0}) / cx{0.0, m};
  CHECK(std::abs(val - exact) < 1e-12);
  CHECK(q.dropped_len == 0.0);
}

TEST_CASE("panel stream and collected nodes coincide") {
  PanelScheme ps;
  ps.depth = 8;
  ps.singular_right = true;
  ps.osc_cap = 0.05;
  QuadNodes q;
  emit_panels(0.2, 0.9, ps, q);
  std::size_t idx = 0;
  double drop = emit_panels_stream(0.2, 0.9, ps, [&](double t, double w) {
    REQUIRE(idx < q.t.size());
    CHECK(t == q.t[idx]);
    CHECK(w == q.w[idx]);
    ++idx;
  });
  CHECK(idx == q.t.size());
  CHECK(drop == q.dropped_len);
  CHECK_THROWS_AS(emit_panels(1.0, 0.5, ps, q), std::invalid_argument);
}

TEST_CASE("circle potential fast path matches direct summation") {
  const std::size_t n = 600;  // above the direct-evaluation cutoff
  std::vector<double> ang(n);
  std::vector<double> chg(n);
  double abs_q = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    ang[s] = kTwoPi * uniform01(counter_key(77, s, 0));
    chg[s] = uniform01(counter_key(77, s, 1)) < 0.5 ? -1.0 : 1.0;
    abs_q += 1.0;
  }
  CirclePotential pot(ang, chg);
  REQUIRE(pot.uses_fast_path());
  double worst = 0.0;
  for (std::size_t i = 0; i < 160; ++i) {
    const double th = kTwoPi * uniform01(counter_key(78, i, 0));
    worst = std::max(worst, std::fabs(pot(th) - pot.eval_direct(th)));
  }
  // Points crowding a charge stress the near-field path.
  for (std::size_t i = 0; i < 40; ++i) {
    const double th = ang[i * 7] + 1e-9;
    worst = std::max(worst, std::fabs(pot(th) - pot.eval_direct(th)));
  }
  CHECK(worst < 1e-10 * abs_q);
}

TEST_CASE("small charge sets use the direct path verbatim") {
  std::vector<double> ang{0.3, 1.1, 4.0};
  std::vector<double> chg{1.0, -2.0, 0.5};
  CirclePotential pot(ang, chg);
  CHECK(!pot.uses_fast_path());
  CHECK(pot(2.2) == pot.eval_direct(2.2));
  CHECK_THROWS_AS(CirclePotential({0.1}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("conjugate field is the harmonic dual of the stage density") {
  auto sys = cantor::build(3, 6, cantor::OffsetMode::random);
  const int n = 6;
  ConjugateField conj(sys, n);
  CHECK(conj.density() == doctest::Approx(n / kTwoPi).epsilon(1e-15));

  // Fourier check: coefficients of the conjugate equal -i*sign(m) times
  // those of the density itself.
  auto g_hat = fourier_coeffs(cantor::stage_density(sys, n), -12, 12);

  const double sigma = sys.sched().sigma[n];
  std::vector<double> cuts;
  for (long k = 0; k < cantor::RankedIntervalSystem::count(n); ++k) {
    cuts.push_back(wrap_angle(sys.a(n, k)));
    cuts.push_back(wrap_angle(sys.a(n, k) + sigma));
  }
  std::sort(cuts.begin(), cuts.end());

  PanelScheme ps;
  ps.depth = 30;
  ps.singular_left = true;
  ps.singular_right = true;
  ps.osc_cap = 0.5;
  QuadNodes q;
  for (std::size_t j = 0; j < cuts.size(); ++j) {
    const double a = cuts[j];
    const double b = j + 1 < cuts.size() ? cuts[j + 1] : cuts[0] + kTwoPi;
    if (b - a > 1e-13) emit_panels(a, b, ps, q);
  }
  for (long m : {0L, 1L, 5L, 12L}) {
    const cx lhs = integrate(q, [&](double t) {
      return conj(t) * std::polar(1.0, -static_cast<double>(m) * t);
    });
    const cx rhs = m == 0 ? cx{0.0, 0.0} : cx{0.0, -1.0} * g_hat.at(m);
    CHECK(std::abs(lhs - rhs) < 2e-6);
  }
}
