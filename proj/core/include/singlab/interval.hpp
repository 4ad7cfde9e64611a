#pragma once

// Arcs on the circle and finite disjoint unions of them.
//
// An Interval is half-open [start, start+length) with start in [0, 2*pi)
// and 0 < length <= 2*pi.  An interval whose end passes 2*pi wraps around.
// IntervalUnion normalizes its members to non-wrapping pieces sorted by
// start; pieces that touch (within kAngleTol) are merged, so gaps between
// consecutive members are strictly positive.  The full circle is the
// single piece [0, 2*pi).

#include <cstddef>
#include <vector>

#include "singlab/common.hpp"

namespace singlab {

struct Interval {
  double start = 0.0;   // radians in [0, 2*pi)
  double length = 0.0;  // radians, > 0 and <= 2*pi

  Interval() = default;
  Interval(double s, double len);

  double end() const { return start + length; }  // may exceed 2*pi (wrap)
  bool wraps() const { return start + length > kTwoPi + kAngleTol; }
  bool contains(double t) const;
};

class IntervalUnion {
 public:
  IntervalUnion() = default;

  /// Normalizes: splits wrapping intervals at the seam, sorts, merges
  /// overlapping or touching pieces (tolerance kAngleTol).
  explicit IntervalUnion(std::vector<Interval> pieces);

  static IntervalUnion full_circle();

  const std::vector<Interval>& pieces() const { return pieces_; }
  std::size_t size() const { return pieces_.size(); }
  bool empty() const { return pieces_.empty(); }
  const Interval& operator[](std::size_t i) const { return pieces_[i]; }

  double total_length() const;
  bool contains(double t) const;
  bool is_full_circle() const;

  /// Open gaps of the cyclic complement, sorted by start.  Empty for the
  /// full circle.
  std::vector<Interval> gaps() const;

  /// Minkowski sum modulo 2*pi: every pairwise interval sum, re-merged.
  /// Saturates to the full circle when the pieces cover everything.
  static IntervalUnion sumset(const IntervalUnion& a, const IntervalUnion& b);

 private:
  std::vector<Interval> pieces_;  // non-wrapping, sorted, disjoint
};

}  // namespace singlab
