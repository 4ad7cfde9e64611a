#include "singlab/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace singlab {

double lp_norm(const CoeffWindow& w, double p, Side side) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp exponent must be >= 1");
  long a = 0, b = -1;
  switch (side.kind) {
    case Side::Kind::negatives:
      if (w.lo() > -1) throw std::out_of_range("window insufficient");
      a = w.lo();
      b = -1;
      break;
    case Side::Kind::positives:
      if (w.hi() < 1) throw std::out_of_range("window insufficient");
      a = 1;
      b = w.hi();
      break;
    case Side::Kind::full:
      a = w.lo();
      b = w.hi();
      break;
    case Side::Kind::range:
      if (side.b < side.a) throw std::invalid_argument("lp range: b < a");
      if (!w.covers(side.a, side.b)) throw std::out_of_range("window insufficient");
      a = side.a;
      b = side.b;
      break;
  }
  double s = 0.0;
  for (long m = a; m <= b; ++m) s += std::pow(std::abs(w.at(m)), p);
  return std::pow(s, 1.0 / p);
}

std::vector<double> weighted_energy(const CoeffWindow& w, double alpha, EnergySide side) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("energy exponent alpha must lie in (0, 1]");
  std::vector<double> sums;
  if (side == EnergySide::two_sided) {
    if (w.lo() > 0 || w.hi() < 0) throw std::out_of_range("window insufficient");
    long N = std::min(-w.lo(), w.hi());
    sums.reserve(static_cast<std::size_t>(N + 1));
    double s = std::norm(w.at(0));  // |n|^{1-alpha} + 1 = 1 at n = 0
    sums.push_back(s);
    for (long n = 1; n <= N; ++n) {
      double d = std::pow(static_cast<double>(n), 1.0 - alpha) + 1.0;
      s += (std::norm(w.at(n)) + std::norm(w.at(-n))) / d;
      sums.push_back(s);
    }
  } else {
    if (w.lo() > -1) throw std::out_of_range("window insufficient");
    long N = -w.lo();
    sums.reserve(static_cast<std::size_t>(N));
    double s = 0.0;
    for (long n = 1; n <= N; ++n) {
      s += std::norm(w.at(-n)) / std::pow(static_cast<double>(n), 1.0 - alpha);
      sums.push_back(s);
    }
  }
  return sums;
}

double wiener_average(const CoeffWindow& w, long N) {
  if (N < 0) throw std::invalid_argument("wiener average: N must be >= 0");
  if (!w.covers(-N, N)) throw std::out_of_range("window insufficient");
  double s = 0.0;
  for (long n = -N; n <= N; ++n) s += std::norm(w.at(n));
  return s / static_cast<double>(2 * N + 1);
}

std::vector<cx> pair(const CoeffWindow& s, const SmoothBump& psi, long M) {
  if (M < 0) throw std::invalid_argument("pairing order must be >= 0");
  if (!s.covers(-M, M)) throw std::out_of_range("window insufficient");
  std::vector<cx> sums;
  sums.reserve(static_cast<std::size_t>(M + 1));
  const double inv2pi = 1.0 / kTwoPi;
  cx acc = s.at(0) * psi.coeff(0) * inv2pi;
  sums.push_back(acc);
  for (long m = 1; m <= M; ++m) {
    acc += (s.at(m) * psi.coeff(-m) + s.at(-m) * psi.coeff(m)) * inv2pi;
    sums.push_back(acc);
  }
  return sums;
}

std::vector<double> dyadic_block_sums(const std::vector<double>& terms) {
  std::vector<double> blocks;
  std::size_t n = terms.size();  // terms[i] belongs to index i+1
  for (std::size_t j = 0;; ++j) {
    std::size_t first = 1ull << j;          // inclusive index
    std::size_t last = (1ull << (j + 1));   // exclusive index
    if (last - 1 > n) break;                // block incomplete
    double s = 0.0;
    for (std::size_t i = first; i < last; ++i) s += terms[i - 1];
    blocks.push_back(s);
  }
  return blocks;
}

Verdict convergence_verdict(const std::vector<double>& block_sums) {
  Verdict v;
  std::size_t J = block_sums.size();
  v.block_means.reserve(J);
  for (std::size_t j = 0; j < J; ++j)
    v.block_means.push_back(block_sums[j] / std::pow(2.0, static_cast<double>(j)));
  if (J < 5) {
    v.converging = false;
    v.note = "insufficient blocks";
    return v;
  }
  // Zero tail: nothing left to sum.
  if (v.block_means[J - 1] == 0.0 && v.block_means[J - 2] == 0.0 &&
      v.block_means[J - 3] == 0.0) {
    v.converging = true;
    v.note = "tail exhausted";
    return v;
  }
  bool ok = true;
  for (std::size_t j = J - 3; j < J; ++j) {
    double prev = v.block_means[j - 1];
    double cur = v.block_means[j];
    if (!(cur <= 0.5 * prev * (1.0 + 1e-9) + 1e-300)) {
      ok = false;
      break;
    }
  }
  v.converging = ok;
  v.note = ok ? "halving block means" : "block means not halving";
  return v;
}

}  // namespace singlab
