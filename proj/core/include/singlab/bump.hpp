#pragma once

// Compactly supported smooth test functions on the circle.
//
// SmoothBump is a raised-cosine power: on [center - eps, center + eps]
//
//     psi(t) = ((1 + cos(omega*(t - center))) / 2)^q,   omega = pi/eps,
//
// and 0 elsewhere.  It peaks at 1, is C^{2q-1} across the support
// boundary, and its coefficients decay like |m|^{-q} up to constants.
// Coefficients come from the binomial expansion
//     psi(t) = 4^{-q} * sum_{l=-q}^{q} C(2q, q+l) e^{i*l*omega*(t-center)}
// integrated in closed form, so no quadrature error enters.
//
// The degenerate pair (q = 0, eps = pi) is the constant function 1 on
// the whole circle.

#include <vector>

#include "singlab/coeff_window.hpp"
#include "singlab/common.hpp"

namespace singlab {

class SmoothBump {
 public:
  /// q >= 2 for the decay guarantee; q == 0 is allowed only together
  /// with eps == pi (the constant function).
  SmoothBump(double center, double eps, int q = 6);

  double center() const { return center_; }
  double eps() const { return eps_; }
  int order() const { return q_; }

  /// Pointwise evaluation (0 outside the support).
  double operator()(double t) const;

  /// psi_hat(m) = integral psi(t) exp(-i*m*t) dt, exact closed form.
  cx coeff(long m) const;

  /// Window of coefficients [lo, hi].
  CoeffWindow coeffs(long lo, long hi) const;

 private:
  double center_;
  double eps_;
  int q_;
  std::vector<double> binom_;  // 4^{-q} * C(2q, q+l) for l = -q..q
};

}  // namespace singlab
