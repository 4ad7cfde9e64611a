#pragma once

// Measures on the circle: piecewise-constant densities on interval
// unions, finite atomic combinations, and weighted empirical samples.

#include <complex>
#include <vector>

#include "singlab/coeff_window.hpp"
#include "singlab/common.hpp"
#include "singlab/interval.hpp"

namespace singlab {

enum class MeasureKind { piecewise, atomic, empirical };

class CircleMeasure {
 public:
  /// Density weights[i] (possibly complex) on support[i].
  static CircleMeasure piecewise(IntervalUnion support, std::vector<cx> weights);

  /// Uniform density on the union, scaled so the total mass is `mass`.
  static CircleMeasure uniform(const IntervalUnion& support, double mass = 1.0);

  static CircleMeasure atomic(std::vector<double> positions, std::vector<cx> masses);

  /// Positive weights; total mass is their sum.
  static CircleMeasure empirical(std::vector<double> positions, std::vector<double> weights);

  /// Equal-weight samples of total mass 1.
  static CircleMeasure empirical_uniform(std::vector<double> positions);

  MeasureKind kind() const { return kind_; }
  bool empty() const;

  cx total_mass() const;
  double total_variation() const;

  const IntervalUnion& support_union() const { return support_; }
  const std::vector<cx>& piece_weights() const { return weights_; }
  const std::vector<double>& positions() const { return positions_; }
  const std::vector<cx>& atom_masses() const { return masses_; }
  const std::vector<double>& sample_weights() const { return sample_weights_; }

  /// True when all weights/masses are real and nonnegative.
  bool is_nonnegative() const;

  friend CircleMeasure operator+(const CircleMeasure& a, const CircleMeasure& b);

 private:
  CircleMeasure() = default;

  MeasureKind kind_ = MeasureKind::atomic;
  IntervalUnion support_;             // piecewise
  std::vector<cx> weights_;           // piecewise: density per interval
  std::vector<double> positions_;     // atomic / empirical
  std::vector<cx> masses_;            // atomic
  std::vector<double> sample_weights_;  // empirical
};

/// Exact closed-form coefficients of the measure on the window [lo, hi].
/// Throws std::invalid_argument("zero measure") for an empty measure.
CoeffWindow fourier_coeffs(const CircleMeasure& mu, long lo, long hi);

/// mu([0, t]): cumulative mass from angle 0, for real piecewise measures.
/// Piecewise linear in t; used by the stage-to-stage mass comparisons.
double cumulative_mass(const CircleMeasure& mu, double t);

/// max_t |mu_a([0,t]) - mu_b([0,t])| over all density breakpoints of both
/// measures plus any extra probe angles.  Exact for piecewise measures
/// because the difference is piecewise linear between breakpoints.
double cumulative_delta(const CircleMeasure& a, const CircleMeasure& b,
                        const std::vector<double>& extra_grid = {});

}  // namespace singlab
