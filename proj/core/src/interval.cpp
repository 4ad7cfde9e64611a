#include "singlab/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace singlab {

Interval::Interval(double s, double len) {
  if (!(len > 0.0)) throw std::invalid_argument("interval length must be positive");
  if (len > kTwoPi + kAngleTol) throw std::invalid_argument("interval length exceeds full circle");
  start = wrap_angle(s);
  length = std::min(len, kTwoPi);
}

bool Interval::contains(double t) const {
  double x = wrap_angle(t);
  double e = start + length;
  if (e <= kTwoPi) return x >= start && x < e;
  return x >= start || x < e - kTwoPi;  // wrapping arc
}

namespace {

// Splits a possibly wrapping interval into non-wrapping pieces.
void append_unwrapped(const Interval& iv, std::vector<Interval>& out) {
  if (iv.length >= kTwoPi - kAngleTol) {
    out.push_back({});
    out.back().start = 0.0;
    out.back().length = kTwoPi;
    return;
  }
  double e = iv.start + iv.length;
  if (e <= kTwoPi + kAngleTol) {
    Interval p;
    p.start = iv.start;
    p.length = std::min(e, kTwoPi) - iv.start;
    if (p.length > 0) out.push_back(p);
  } else {
    Interval p1;
    p1.start = iv.start;
    p1.length = kTwoPi - iv.start;
    if (p1.length > 0) out.push_back(p1);
    Interval p2;
    p2.start = 0.0;
    p2.length = e - kTwoPi;
    out.push_back(p2);
  }
}

}  // namespace

IntervalUnion::IntervalUnion(std::vector<Interval> input) {
  std::vector<Interval> flat;
  flat.reserve(input.size() + 1);
  for (const auto& iv : input) {
    if (!(iv.length > 0.0)) throw std::invalid_argument("interval length must be positive");
    Interval norm;
    norm.start = wrap_angle(iv.start);
    norm.length = std::min(iv.length, kTwoPi);
    append_unwrapped(norm, flat);
  }
  if (flat.empty()) return;
  std::sort(flat.begin(), flat.end(),
            [](const Interval& a, const Interval& b) { return a.start < b.start; });
  for (const auto& iv : flat) {
    if (!pieces_.empty() && iv.start <= pieces_.back().end() + kAngleTol) {
      double e = std::max(pieces_.back().end(), iv.end());
      pieces_.back().length = e - pieces_.back().start;
    } else {
      pieces_.push_back(iv);
    }
  }
  // Collapse to the canonical full circle when the cyclic gaps all vanish.
  bool full = true;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    double cur_end = pieces_[i].end();
    double next_start =
        i + 1 < pieces_.size() ? pieces_[i + 1].start : pieces_.front().start + kTwoPi;
    if (next_start - cur_end > kAngleTol) {
      full = false;
      break;
    }
  }
  if (full) {
    pieces_.clear();
    Interval all;
    all.start = 0.0;
    all.length = kTwoPi;
    pieces_.push_back(all);
  }
}

IntervalUnion IntervalUnion::full_circle() {
  IntervalUnion u;
  Interval all;
  all.start = 0.0;
  all.length = kTwoPi;
  u.pieces_.push_back(all);
  return u;
}

double IntervalUnion::total_length() const {
  // Compensated summation: unions can hold millions of equal-scale
  // pieces and naive accumulation drifts past the angle tolerance.
  double s = 0.0, c = 0.0;
  for (const auto& iv : pieces_) {
    double y = iv.length - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

bool IntervalUnion::contains(double t) const {
  double x = wrap_angle(t);
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](double v, const Interval& iv) { return v < iv.start; });
  if (it == pieces_.begin()) return false;
  --it;
  return x < it->end();
}

bool IntervalUnion::is_full_circle() const {
  return pieces_.size() == 1 && pieces_[0].start == 0.0 &&
         pieces_[0].length >= kTwoPi - kAngleTol;
}

std::vector<Interval> IntervalUnion::gaps() const {
  std::vector<Interval> out;
  if (pieces_.empty()) {
    Interval all;
    all.start = 0.0;
    all.length = kTwoPi;
    out.push_back(all);
    return out;
  }
  if (is_full_circle()) return out;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    double cur_end = pieces_[i].end();
    double next_start =
        i + 1 < pieces_.size() ? pieces_[i + 1].start : pieces_.front().start + kTwoPi;
    double len = next_start - cur_end;
    if (len > kAngleTol) {
      Interval g;
      g.start = wrap_angle(cur_end);
      g.length = len;
      out.push_back(g);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Interval& a, const Interval& b) { return a.start < b.start; });
  return out;
}

IntervalUnion IntervalUnion::sumset(const IntervalUnion& a, const IntervalUnion& b) {
  if (a.empty() || b.empty()) return IntervalUnion{};
  if (a.is_full_circle() || b.is_full_circle()) return full_circle();
  std::vector<Interval> sums;
  sums.reserve(a.size() * b.size());
  for (const auto& p : a.pieces_) {
    for (const auto& q : b.pieces_) {
      Interval s;
      s.start = wrap_angle(p.start + q.start);
      s.length = std::min(p.length + q.length, kTwoPi);
      sums.push_back(s);
    }
  }
  return IntervalUnion(std::move(sums));
}

}  // namespace singlab
