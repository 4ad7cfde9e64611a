#include "singlab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace singlab {

CircleMeasure CircleMeasure::piecewise(IntervalUnion support, std::vector<cx> weights) {
  if (support.size() != weights.size())
    throw std::invalid_argument("piecewise measure: one density per interval required");
  CircleMeasure mu;
  mu.kind_ = MeasureKind::piecewise;
  mu.support_ = std::move(support);
  mu.weights_ = std::move(weights);
  return mu;
}

CircleMeasure CircleMeasure::uniform(const IntervalUnion& support, double mass) {
  double len = support.total_length();
  if (support.empty() || len <= 0.0) throw std::invalid_argument("zero measure");
  std::vector<cx> w(support.size(), cx(mass / len, 0.0));
  return piecewise(support, std::move(w));
}

CircleMeasure CircleMeasure::atomic(std::vector<double> positions, std::vector<cx> masses) {
  if (positions.size() != masses.size())
    throw std::invalid_argument("atomic measure: one mass per position required");
  CircleMeasure mu;
  mu.kind_ = MeasureKind::atomic;
  mu.positions_ = std::move(positions);
  for (auto& t : mu.positions_) t = wrap_angle(t);
  mu.masses_ = std::move(masses);
  return mu;
}

CircleMeasure CircleMeasure::empirical(std::vector<double> positions,
                                       std::vector<double> weights) {
  if (positions.size() != weights.size())
    throw std::invalid_argument("empirical measure: one weight per sample required");
  for (double w : weights)
    if (!(w > 0.0)) throw std::invalid_argument("empirical measure: weights must be positive");
  CircleMeasure mu;
  mu.kind_ = MeasureKind::empirical;
  mu.positions_ = std::move(positions);
  for (auto& t : mu.positions_) t = wrap_angle(t);
  mu.sample_weights_ = std::move(weights);
  return mu;
}

CircleMeasure CircleMeasure::empirical_uniform(std::vector<double> positions) {
  if (positions.empty()) throw std::invalid_argument("zero measure");
  std::vector<double> w(positions.size(), 1.0 / static_cast<double>(positions.size()));
  return empirical(std::move(positions), std::move(w));
}

bool CircleMeasure::empty() const { return total_variation() == 0.0; }

cx CircleMeasure::total_mass() const {
  cx s(0.0, 0.0);
  for (std::size_t i = 0; i < support_.size(); ++i) s += weights_[i] * support_[i].length;
  for (const auto& m : masses_) s += m;
  for (double w : sample_weights_) s += w;
  return s;
}

double CircleMeasure::total_variation() const {
  double s = 0.0;
  for (std::size_t i = 0; i < support_.size(); ++i) s += std::abs(weights_[i]) * support_[i].length;
  for (const auto& m : masses_) s += std::abs(m);
  for (double w : sample_weights_) s += w;
  return s;
}

bool CircleMeasure::is_nonnegative() const {
  for (const auto& w : weights_)
    if (w.imag() != 0.0 || w.real() < 0.0) return false;
  for (const auto& m : masses_)
    if (m.imag() != 0.0 || m.real() < 0.0) return false;
  return true;
}

CircleMeasure operator+(const CircleMeasure& a, const CircleMeasure& b) {
  if (!a.masses_.empty() && !b.sample_weights_.empty())
    throw std::invalid_argument("measure sum: mixed atomic/empirical kinds unsupported");
  if (!a.sample_weights_.empty() && !b.masses_.empty())
    throw std::invalid_argument("measure sum: mixed atomic/empirical kinds unsupported");
  CircleMeasure r;
  std::vector<Interval> pieces;
  std::vector<cx> weights;
  for (std::size_t i = 0; i < a.support_.size(); ++i) {
    pieces.push_back(a.support_[i]);
    weights.push_back(a.weights_[i]);
  }
  for (std::size_t i = 0; i < b.support_.size(); ++i) {
    pieces.push_back(b.support_[i]);
    weights.push_back(b.weights_[i]);
  }
  if (!pieces.empty()) {
    r.support_ = IntervalUnion(pieces);
    if (r.support_.size() != pieces.size())
      throw std::invalid_argument(
          "measure sum: overlapping piecewise supports are not representable");
    // Normalization sorts pieces by start; re-associate the densities.
    std::vector<std::size_t> order(pieces.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
      return pieces[i].start < pieces[j].start;
    });
    r.weights_.resize(pieces.size());
    for (std::size_t i = 0; i < order.size(); ++i) r.weights_[i] = weights[order[i]];
  }
  r.positions_ = a.positions_;
  r.masses_ = a.masses_;
  r.sample_weights_ = a.sample_weights_;
  for (double t : b.positions_) r.positions_.push_back(t);
  for (const auto& m : b.masses_) r.masses_.push_back(m);
  for (double w : b.sample_weights_) r.sample_weights_.push_back(w);
  if (!r.support_.empty())
    r.kind_ = MeasureKind::piecewise;
  else if (!r.sample_weights_.empty())
    r.kind_ = MeasureKind::empirical;
  else
    r.kind_ = MeasureKind::atomic;
  return r;
}

CoeffWindow fourier_coeffs(const CircleMeasure& mu, long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("coefficient window: hi < lo");
  if (mu.empty()) throw std::invalid_argument("zero measure");
  CoeffWindow w(lo, hi);
  const auto& uni = mu.support_union();
  const auto& dens = mu.piece_weights();
  const auto& pos = mu.positions();
  const auto& am = mu.atom_masses();
  const auto& ew = mu.sample_weights();
  for (long m = lo; m <= hi; ++m) {
    cx acc(0.0, 0.0);
    for (std::size_t i = 0; i < uni.size(); ++i) {
      double a = uni[i].start, b = uni[i].end();
      if (m == 0) {
        acc += dens[i] * (b - a);
      } else if (uni[i].length >= kTwoPi - kAngleTol) {
        // Full-circle piece: the integral vanishes exactly; evaluating
        // exp at the rounded 2*pi endpoint would leave ~1e-17 residue.
      } else {
        cx im(0.0, static_cast<double>(m));
        acc += dens[i] * (std::exp(-im * a) - std::exp(-im * b)) / im;
      }
    }
    for (std::size_t j = 0; j < am.size(); ++j)
      acc += am[j] * std::exp(cx(0.0, -static_cast<double>(m) * pos[j]));
    for (std::size_t j = 0; j < ew.size(); ++j)
      acc += ew[j] * std::exp(cx(0.0, -static_cast<double>(m) * pos[am.size() + j]));
    w.at(m) = acc;
  }
  return w;
}

namespace {

// Sorted-carrier evaluator of t -> mu([0, t]), real part.  Pieces are
// non-wrapping by construction of the factories.
struct CumulativeEval {
  std::vector<double> piece_start, piece_end, piece_density, piece_prefix;
  std::vector<double> point_pos, point_mass, point_prefix;

  explicit CumulativeEval(const CircleMeasure& mu) {
    const auto& uni = mu.support_union();
    const auto& dens = mu.piece_weights();
    // IntervalUnion pieces are already sorted by start.
    piece_prefix.push_back(0.0);
    for (std::size_t i = 0; i < uni.size(); ++i) {
      piece_start.push_back(uni[i].start);
      piece_end.push_back(uni[i].end());
      piece_density.push_back(dens[i].real());
      piece_prefix.push_back(piece_prefix.back() + dens[i].real() * uni[i].length);
    }
    std::vector<std::pair<double, double>> pts;
    for (std::size_t j = 0; j < mu.atom_masses().size(); ++j)
      pts.push_back({mu.positions()[j], mu.atom_masses()[j].real()});
    std::size_t atom_count = mu.atom_masses().size();
    for (std::size_t j = 0; j < mu.sample_weights().size(); ++j)
      pts.push_back({mu.positions()[atom_count + j], mu.sample_weights()[j]});
    std::sort(pts.begin(), pts.end());
    point_prefix.push_back(0.0);
    for (const auto& p : pts) {
      point_pos.push_back(p.first);
      point_mass.push_back(p.second);
      point_prefix.push_back(point_prefix.back() + p.second);
    }
  }

  // mu([0, t]) with the endpoint atom included (closed right end) or
  // excluded (left limit).
  double operator()(double t, bool include_endpoint_atom = true) const {
    double s = 0.0;
    auto it = std::upper_bound(piece_start.begin(), piece_start.end(), t);
    std::size_t k = static_cast<std::size_t>(it - piece_start.begin());
    s += piece_prefix[k];
    if (k > 0 && t < piece_end[k - 1])
      s -= piece_density[k - 1] * (piece_end[k - 1] - t);
    auto pit = include_endpoint_atom
                   ? std::upper_bound(point_pos.begin(), point_pos.end(), t)
                   : std::lower_bound(point_pos.begin(), point_pos.end(), t);
    s += point_prefix[static_cast<std::size_t>(pit - point_pos.begin())];
    return s;
  }
};

}  // namespace

double cumulative_mass(const CircleMeasure& mu, double t) {
  return CumulativeEval(mu)(wrap_angle(t) == 0.0 && t > 0.0 ? kTwoPi : wrap_angle(t));
}

double cumulative_delta(const CircleMeasure& a, const CircleMeasure& b,
                        const std::vector<double>& extra_grid) {
  CumulativeEval fa(a), fb(b);
  std::vector<double> probes;
  auto add_breaks = [&probes](const CircleMeasure& mu) {
    const auto& uni = mu.support_union();
    for (std::size_t i = 0; i < uni.size(); ++i) {
      probes.push_back(uni[i].start);
      probes.push_back(uni[i].end());
    }
    for (double t : mu.positions()) probes.push_back(t);
  };
  add_breaks(a);
  add_breaks(b);
  for (double t : extra_grid) probes.push_back(wrap_angle(t));
  probes.push_back(0.0);
  probes.push_back(kTwoPi);
  double best = 0.0;
  for (double t : probes) {
    best = std::max(best, std::fabs(fa(t, true) - fb(t, true)));
    best = std::max(best, std::fabs(fa(t, false) - fb(t, false)));
  }
  return best;
}

}  // namespace singlab
