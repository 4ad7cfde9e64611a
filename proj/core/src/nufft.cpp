#include "singlab/nufft.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "singlab/fft.hpp"

namespace singlab {

namespace {

constexpr int kMomentOrder = 14;

double factorial_tail_bound(double theta, int P) {
  // sum_{p >= P} theta^p / p! <= theta^P/P! * 1/(1 - theta/(P+1))
  double lead = 1.0;
  for (int p = 1; p <= P; ++p) lead *= theta / static_cast<double>(p);
  return lead / (1.0 - theta / static_cast<double>(P + 1));
}

}  // namespace

NufftAccumulator::NufftAccumulator(std::int64_t M) : M_(M), P_(kMomentOrder) {
  if (M < 0) throw std::invalid_argument("nufft: M must be >= 0");
  const double need = kTwoPi * static_cast<double>(M);
  nb_ = next_pow2(static_cast<std::size_t>(std::ceil(need)) + 1);
  if (nb_ < 64) nb_ = 64;
  moments_.assign(static_cast<std::size_t>(P_) * nb_, cx{0.0, 0.0});
}

void NufftAccumulator::add(double t, cx w) {
  t = wrap_angle(t);
  const double scaled = t / kTwoPi * static_cast<double>(nb_);
  std::size_t b = static_cast<std::size_t>(scaled);
  if (b >= nb_) b = nb_ - 1;
  const double cb = kTwoPi * (static_cast<double>(b) + 0.5) / static_cast<double>(nb_);
  const double dt = t - cb;
  cx u = w;
  for (int p = 0; p < P_; ++p) {
    moments_[static_cast<std::size_t>(p) * nb_ + b] += u;
    u *= dt;
  }
  abs_weight_ += std::abs(w);
}

void NufftAccumulator::add_many(const std::vector<double>& t, const std::vector<cx>& w) {
  if (t.size() != w.size())
    throw std::invalid_argument("nufft: point/weight length mismatch");
  for (std::size_t j = 0; j < t.size(); ++j) add(t[j], w[j]);
}

double NufftAccumulator::mode_error_bound() const {
  const double theta = kPi * static_cast<double>(M_) / static_cast<double>(nb_);
  const double trunc = theta > 0.0 ? factorial_tail_bound(theta, P_) : 0.0;
  const double rounding =
      5.0 * std::log2(static_cast<double>(nb_)) * 2.22e-16;
  return (trunc + rounding) * abs_weight_;
}

CoeffWindow NufftAccumulator::finish() {
  if (finished_) throw std::logic_error("nufft: finish() called twice");
  finished_ = true;

  const std::int64_t M = M_;
  const std::size_t nmodes = static_cast<std::size_t>(2 * M + 1);
  std::vector<cx> vals(nmodes, cx{0.0, 0.0});
  std::vector<cx> powacc(nmodes, cx{1.0, 0.0});  // (-ik)^p / p!

  std::vector<cx> row(nb_);
  for (int p = 0; p < P_; ++p) {
    for (std::size_t b = 0; b < nb_; ++b)
      row[b] = moments_[static_cast<std::size_t>(p) * nb_ + b];
    fft_pow2(row, -1);
    for (std::int64_t k = -M; k <= M; ++k) {
      const std::size_t idx = static_cast<std::size_t>(k + M);
      const std::size_t bin = static_cast<std::size_t>(
          ((k % static_cast<std::int64_t>(nb_)) + static_cast<std::int64_t>(nb_)) %
          static_cast<std::int64_t>(nb_));
      vals[idx] += powacc[idx] * row[bin];
      powacc[idx] *= cx{0.0, -static_cast<double>(k)} / static_cast<double>(p + 1);
    }
  }
  // Bin centers sit at half-grid offsets.
  for (std::int64_t k = -M; k <= M; ++k)
    vals[static_cast<std::size_t>(k + M)] *=
        std::polar(1.0, -kPi * static_cast<double>(k) / static_cast<double>(nb_));

  moments_.clear();
  moments_.shrink_to_fit();
  return CoeffWindow(-M, M, std::move(vals));
}

CoeffWindow nufft_type1(const std::vector<double>& t, const std::vector<cx>& w,
                        std::int64_t M) {
  NufftAccumulator acc(M);
  acc.add_many(t, w);
  return acc.finish();
}

CoeffWindow nudft_direct(const std::vector<double>& t, const std::vector<cx>& w,
                         std::int64_t M) {
  if (t.size() != w.size())
    throw std::invalid_argument("nufft: point/weight length mismatch");
  const std::size_t nmodes = static_cast<std::size_t>(2 * M + 1);
  std::vector<cx> vals(nmodes, cx{0.0, 0.0});
  parallel_for(0, nmodes, [&](std::size_t idx) {
    const double k = static_cast<double>(static_cast<std::int64_t>(idx) - M);
    cx s{0.0, 0.0};
    for (std::size_t j = 0; j < t.size(); ++j)
      s += w[j] * std::polar(1.0, -k * t[j]);
    vals[idx] = s;
  });
  return CoeffWindow(-M, M, std::move(vals));
}

}  // namespace singlab
