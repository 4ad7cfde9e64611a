#pragma once

// Logarithmic potentials of signed charges on the unit circle,
//
//     phi(theta) = sum_s q_s * ln|2 sin((theta - theta_s)/2)|
//                = sum_s q_s * ln|e^{i theta} - e^{i theta_s}|,
//
// evaluated fast via a hierarchical multipole scheme on the angular
// binary tree (complex multipoles of the 2-D log kernel; only the real
// part of every expansion is consumed, so branch choices are immaterial).
// Charge counts up to a few million and ~1e8 evaluation points are the
// design load; per-point cost is one local-expansion Horner plus a short
// direct sum over the adjacent leaf cells.
//
// The conjugate field of a stage density g_n (uniform on the rank-n
// union K_n) is a scaled pair potential with +1 charges at left and -1
// at right interval endpoints:
//
//     conj_n(theta) = n/(2*pi^2) * sum_k [lambda(theta - a_k) - lambda(theta - b_k)],
//     lambda(x)     = ln|2 sin(x/2)|.
//
// It is the harmonic conjugate of g_n: the boundary imaginary part of
// the analytic completion of g_n's Poisson extension.

#include <cstddef>
#include <vector>

#include "singlab/cantor.hpp"
#include "singlab/common.hpp"

namespace singlab {

class CirclePotential {
 public:
  /// Angles are reduced mod 2*pi; charges are arbitrary reals.
  CirclePotential(const std::vector<double>& angles,
                  const std::vector<double>& charges);

  /// phi(theta).  Evaluating exactly at a charge returns -inf * sign(q).
  double operator()(double theta) const;

  /// Plain O(n) sum, for verification.
  double eval_direct(double theta) const;

  std::size_t size() const { return th_.size(); }
  bool uses_fast_path() const { return !locals_.empty(); }

 private:
  void build_tree();
  double eval_near(double theta, std::size_t leaf) const;

  std::vector<double> th_, q_;  // sorted by angle
  int lmax_ = 0;
  std::size_t nleaf_ = 0;
  std::vector<std::size_t> leaf_start_;  // nleaf_ + 1 entries
  std::vector<cx> locals_;               // nleaf_ * (order + 1)
  std::vector<cx> centers_;              // leaf centers on the unit circle
};

/// tilde-g_n for a ranked interval system (see header comment).
class ConjugateField {
 public:
  ConjugateField(const cantor::RankedIntervalSystem& sys, int n);

  double operator()(double t) const { return scale_ * pot_(t); }
  double density() const { return density_; }
  const CirclePotential& potential() const { return pot_; }

 private:
  static CirclePotential make_potential(const cantor::RankedIntervalSystem& sys, int n);
  CirclePotential pot_;
  double scale_;
  double density_;
};

}  // namespace singlab
