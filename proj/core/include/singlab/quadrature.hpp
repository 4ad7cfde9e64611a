#pragma once

// Panel quadrature for integrands that are smooth inside a segment but may
// carry integrable (e.g. logarithmic) singularities at its endpoints, and
// may oscillate at a known top frequency.
//
// A segment [a, b] is covered by geometrically graded panels (ratio 1/2)
// toward each end flagged singular; the innermost remnant there, of relative
// length 2^-(depth+1), is dropped and its length reported so callers can
// certify |error| <= dropped_len * sup|f|.  Every panel is then split
// uniformly so no piece exceeds osc_cap, and a fixed-order Gauss-Legendre
// rule is laid on each piece.

#include <functional>
#include <limits>
#include <vector>

#include "singlab/common.hpp"

namespace singlab {

/// Gauss-Legendre rule on [-1, 1]; order in [2, 48].  Cached and reused.
struct GlRule {
  std::vector<double> x;
  std::vector<double> w;
};
const GlRule& gl_rule(int order);

struct PanelScheme {
  int depth = 30;      // grading levels per singular end
  int gl_order = 12;   // Gauss-Legendre points per piece
  double osc_cap = std::numeric_limits<double>::infinity();  // max piece length
  bool singular_left = false;
  bool singular_right = false;
};

struct QuadNodes {
  std::vector<double> t;
  std::vector<double> w;
  double dropped_len = 0.0;
};

/// Appends nodes/weights for [a, b] to `out` (b > a; lengths up to 2*pi).
void emit_panels(double a, double b, const PanelScheme& ps, QuadNodes& out);

/// Streaming variant: sink(t, w) per node.  Returns the dropped length.
double emit_panels_stream(double a, double b, const PanelScheme& ps,
                          const std::function<void(double, double)>& sink);

/// Sum of w_i * f(t_i).
cx integrate(const QuadNodes& q, const std::function<cx(double)>& f);

}  // namespace singlab
