#pragma once

// Nonuniform-to-uniform spectral sums on the circle ("type 1"):
//
//     s_hat(k) = sum_j w_j exp(-i k t_j),   k = -M..M,
//
// for scattered points t_j in [0, 2*pi).  Points are binned on a uniform
// grid and each bin keeps the first P local moments sum_j w_j (t_j - c_b)^p;
// one FFT per moment order then assembles every mode.  The truncation error
// per unit weight is bounded by theta^P / P! * 1/(1 - theta/(P+1)) with
// theta = pi*M/grid_size <= 1/2, i.e. ~7e-16 at the default P = 14.
//
// The accumulator is streaming: points can be added in any order without
// being stored, so quadrature rules with ~1e8 nodes stay within memory.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "singlab/coeff_window.hpp"
#include "singlab/common.hpp"

namespace singlab {

class NufftAccumulator {
 public:
  /// Prepares a plan for modes -M..M (M >= 0).
  explicit NufftAccumulator(std::int64_t M);

  /// Adds one point; t is reduced to [0, 2*pi) internally.
  void add(double t, cx w);

  /// Adds a batch of points.
  void add_many(const std::vector<double>& t, const std::vector<cx>& w);

  /// Total sum of |w| added so far (for error reporting).
  double abs_weight() const { return abs_weight_; }

  /// Rigorous bound on |computed - exact| per mode, given the points so far.
  double mode_error_bound() const;

  /// Assembles all modes.  The accumulator is spent afterwards.
  CoeffWindow finish();

  std::size_t grid_size() const { return nb_; }

 private:
  std::int64_t M_;
  std::size_t nb_;
  int P_;
  double abs_weight_ = 0.0;
  bool finished_ = false;
  std::vector<cx> moments_;  // P rows of nb bins, row-major
};

/// One-shot convenience wrapper.
CoeffWindow nufft_type1(const std::vector<double>& t, const std::vector<cx>& w,
                        std::int64_t M);

/// Direct O(n*M) evaluation, for cross-checking.
CoeffWindow nudft_direct(const std::vector<double>& t, const std::vector<cx>& w,
                         std::int64_t M);

}  // namespace singlab
