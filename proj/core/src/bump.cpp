#include "singlab/bump.hpp"

#include <cmath>
#include <stdexcept>

namespace singlab {

SmoothBump::SmoothBump(double center, double eps, int q)
    : center_(wrap_angle(center)), eps_(eps), q_(q) {
  bool constant = q == 0 && std::fabs(eps - kPi) <= kAngleTol;
  if (!constant && q < 2)
    throw std::invalid_argument("bump order must be >= 2 (q = 0 only for the constant)");
  if (q > 25)
    throw std::invalid_argument("bump order too large for exact binomial weights");
  if (!(eps > 0.0) || eps > kPi + kAngleTol)
    throw std::invalid_argument("bump half-width must lie in (0, pi]");
  if (eps > kPi) eps_ = kPi;
  // Pascal row C(2q, j), exact in binary64 for q <= 25, scaled by 4^-q.
  int n = 2 * q_;
  std::vector<double> row(static_cast<std::size_t>(n + 1), 0.0);
  row[0] = 1.0;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
  binom_ = row;
  double scale = std::pow(0.25, q_);
  for (auto& c : binom_) c *= scale;
}

double SmoothBump::operator()(double t) const {
  double d = circle_dist(t, center_);
  if (d > eps_) return 0.0;
  if (q_ == 0) return 1.0;
  double omega = kPi / eps_;
  double c = std::cos(0.5 * omega * d);
  double v = 1.0;
  double cc = c * c;
  for (int i = 0; i < q_; ++i) v *= cc;
  return v;
}

cx SmoothBump::coeff(long m) const {
  if (q_ == 0) return m == 0 ? cx(kTwoPi, 0.0) : cx(0.0, 0.0);
  double omega = kPi / eps_;
  double total = 0.0;
  for (int l = -q_; l <= q_; ++l) {
    double c = binom_[static_cast<std::size_t>(l + q_)];
    double x = static_cast<double>(l) * omega - static_cast<double>(m);
    double integral;
    if (std::fabs(x) * eps_ < 1e-9) {
      // sin(x*eps)/x -> eps with O((x*eps)^2) error; keep one more term.
      double xe = x * eps_;
      integral = 2.0 * eps_ * (1.0 - xe * xe / 6.0);
    } else {
      integral = 2.0 * std::sin(x * eps_) / x;
    }
    total += c * integral;
  }
  cx phase = std::exp(cx(0.0, -static_cast<double>(m) * center_));
  return phase * total;
}

CoeffWindow SmoothBump::coeffs(long lo, long hi) const {
  CoeffWindow w(lo, hi);
  for (long m = lo; m <= hi; ++m) w.at(m) = coeff(m);
  return w;
}

}  // namespace singlab
