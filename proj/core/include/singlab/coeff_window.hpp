#pragma once

// A finite window of Fourier coefficients indexed lo..hi.
//
// The convention is fixed repo-wide and tagged on the type: for a
// measure mu, mu_hat(m) = integral exp(-i*m*t) d mu(t); a density h is
// the measure h(t) dt.  Windows never extend silently; any query outside
// [lo, hi] throws with message "window insufficient".

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "singlab/common.hpp"

namespace singlab {

class CoeffWindow {
 public:
  CoeffWindow() = default;

  CoeffWindow(long lo, long hi)
      : lo_(lo), hi_(hi), values_(static_cast<std::size_t>(hi - lo + 1)) {
    if (hi < lo) throw std::invalid_argument("coefficient window: hi < lo");
  }

  CoeffWindow(long lo, long hi, std::vector<cx> values)
      : lo_(lo), hi_(hi), values_(std::move(values)) {
    if (hi < lo) throw std::invalid_argument("coefficient window: hi < lo");
    if (values_.size() != static_cast<std::size_t>(hi - lo + 1))
      throw std::invalid_argument("coefficient window: value count mismatch");
  }

  long lo() const { return lo_; }
  long hi() const { return hi_; }
  bool covers(long m) const { return m >= lo_ && m <= hi_; }
  bool covers(long a, long b) const { return covers(a) && covers(b); }

  const cx& at(long m) const {
    if (!covers(m)) throw std::out_of_range("window insufficient");
    return values_[static_cast<std::size_t>(m - lo_)];
  }
  cx& at(long m) {
    if (!covers(m)) throw std::out_of_range("window insufficient");
    return values_[static_cast<std::size_t>(m - lo_)];
  }

  const std::vector<cx>& values() const { return values_; }
  std::vector<cx>& values() { return values_; }

  static constexpr const char* convention() { return "measure"; }

  /// Window-wise sum; both windows must have identical bounds.
  friend CoeffWindow operator+(const CoeffWindow& a, const CoeffWindow& b) {
    if (a.lo_ != b.lo_ || a.hi_ != b.hi_)
      throw std::invalid_argument("window insufficient");
    CoeffWindow r(a.lo_, a.hi_);
    for (std::size_t i = 0; i < r.values_.size(); ++i)
      r.values_[i] = a.values_[i] + b.values_[i];
    return r;
  }

 private:
  long lo_ = 0;
  long hi_ = 0;
  std::vector<cx> values_{cx(0.0, 0.0)};
};

}  // namespace singlab
