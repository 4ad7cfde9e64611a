#include "singlab/conjugate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

namespace singlab {

namespace {

constexpr int kOrder = 30;               // expansion order
constexpr std::size_t kDirectCutoff = 256;  // below this, plain summation
constexpr int kLmin = 4;                 // coarsest interaction level
constexpr int kLmaxCap = 17;             // leaf-level cap (memory bound)

// C(i, j) for i, j <= 2*kOrder + 1.
const double* binom_row(int i) {
  static const std::vector<std::vector<double>> table = [] {
    const int n = 2 * kOrder + 2;
    std::vector<std::vector<double>> b(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int r = 0; r < n; ++r) {
      b[static_cast<std::size_t>(r)][0] = 1.0;
      for (int c = 1; c <= r; ++c)
        b[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            b[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] +
            (c <= r - 1 ? b[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] : 0.0);
    }
    return b;
  }();
  return table[static_cast<std::size_t>(i)].data();
}

// e^{i th1} - e^{i th2}, evaluated without cancellation.
cx chord_diff(double th1, double th2) {
  const double sd = 2.0 * std::sin(0.5 * (th1 - th2));
  const double ph = 0.5 * (th1 + th2);
  return cx{-sd * std::sin(ph), sd * std::cos(ph)};
}

std::size_t circ_dist(std::size_t i, std::size_t j, std::size_t n) {
  const std::size_t d = i > j ? i - j : j - i;
  return std::min(d, n - d);
}

double center_angle(std::size_t i, std::size_t ncells) {
  return kTwoPi * (static_cast<double>(i) + 0.5) / static_cast<double>(ncells);
}

// Multipole (about c_src) -> local (about c_tgt) across t = c_tgt - c_src.
void m2l(const cx* src, cx* tgt, cx t) {
  const cx Q = src[0];
  cx invpow[2 * kOrder + 1];
  const cx inv = cx{1.0, 0.0} / t;
  invpow[0] = cx{1.0, 0.0};
  for (int m = 1; m <= 2 * kOrder; ++m) invpow[m] = invpow[m - 1] * inv;

  cx b0 = Q * std::log(t);
  for (int k = 1; k <= kOrder; ++k) b0 += src[k] * invpow[k];
  tgt[0] += b0;

  for (int l = 1; l <= kOrder; ++l) {
    const double sgn = (l % 2 == 0) ? 1.0 : -1.0;
    cx bl = -sgn * Q * invpow[l] / static_cast<double>(l);
    cx s{0.0, 0.0};
    for (int k = 1; k <= kOrder; ++k)
      s += src[k] * binom_row(k + l - 1)[l] * invpow[k + l];
    bl += sgn * s;
    tgt[l] += bl;
  }
}

// Child multipole (about c_child) -> parent (about c_par), d = c_child - c_par.
void m2m(const cx* child, cx* par, cx d) {
  cx dpow[kOrder + 1];
  dpow[0] = cx{1.0, 0.0};
  for (int m = 1; m <= kOrder; ++m) dpow[m] = dpow[m - 1] * d;

  par[0] += child[0];
  for (int p = 1; p <= kOrder; ++p) {
    cx ap = -child[0] * dpow[p] / static_cast<double>(p);
    for (int k = 1; k <= p; ++k)
      ap += child[k] * binom_row(p - 1)[k - 1] * dpow[p - k];
    par[p] += ap;
  }
}

// Parent local (about c_par) -> child (about c_child), s = c_child - c_par.
void l2l(const cx* par, cx* child, cx s) {
  cx spow[kOrder + 1];
  spow[0] = cx{1.0, 0.0};
  for (int m = 1; m <= kOrder; ++m) spow[m] = spow[m - 1] * s;

  for (int l = 0; l <= kOrder; ++l) {
    cx bl{0.0, 0.0};
    for (int j = l; j <= kOrder; ++j)
      bl += par[j] * binom_row(j)[l] * spow[j - l];
    child[l] += bl;
  }
}

}  // namespace

CirclePotential::CirclePotential(const std::vector<double>& angles,
                                 const std::vector<double>& charges) {
  if (angles.size() != charges.size())
    throw std::invalid_argument("CirclePotential: angle/charge length mismatch");
  const std::size_t n = angles.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> wrapped(n);
  for (std::size_t s = 0; s < n; ++s) wrapped[s] = wrap_angle(angles[s]);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return wrapped[a] < wrapped[b]; });
  th_.resize(n);
  q_.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    th_[s] = wrapped[order[s]];
    q_[s] = charges[order[s]];
  }
  if (n > kDirectCutoff) build_tree();
}

void CirclePotential::build_tree() {
  const std::size_t n = th_.size();
  int lmax = kLmin + 2;
  while ((std::size_t{1} << lmax) * 4 < n && lmax < kLmaxCap) ++lmax;
  lmax_ = lmax;
  nleaf_ = std::size_t{1} << lmax_;
  const int P1 = kOrder + 1;

  leaf_start_.resize(nleaf_ + 1);
  for (std::size_t i = 0; i <= nleaf_; ++i) {
    const double edge = kTwoPi * static_cast<double>(i) / static_cast<double>(nleaf_);
    leaf_start_[i] = static_cast<std::size_t>(
        std::lower_bound(th_.begin(), th_.end(), edge) - th_.begin());
  }
  leaf_start_[nleaf_] = n;

  // Upward pass: multipoles for every level, leaves first.
  std::vector<std::vector<cx>> mult(static_cast<std::size_t>(lmax_ + 1));
  mult[static_cast<std::size_t>(lmax_)].assign(nleaf_ * static_cast<std::size_t>(P1), cx{0.0, 0.0});
  {
    auto& leaf = mult[static_cast<std::size_t>(lmax_)];
    for (std::size_t i = 0; i < nleaf_; ++i) {
      cx* m = &leaf[i * static_cast<std::size_t>(P1)];
      const double thc = center_angle(i, nleaf_);
      for (std::size_t s = leaf_start_[i]; s < leaf_start_[i + 1]; ++s) {
        const cx u = chord_diff(th_[s], thc);
        m[0] += q_[s];
        cx up = u;
        for (int p = 1; p <= kOrder; ++p) {
          m[p] -= q_[s] * up / static_cast<double>(p);
          up *= u;
        }
      }
    }
  }
  for (int l = lmax_ - 1; l >= kLmin; --l) {
    const std::size_t ncells = std::size_t{1} << l;
    mult[static_cast<std::size_t>(l)].assign(ncells * static_cast<std::size_t>(P1), cx{0.0, 0.0});
    for (std::size_t i = 0; i < ncells; ++i) {
      cx* par = &mult[static_cast<std::size_t>(l)][i * static_cast<std::size_t>(P1)];
      const double thp = center_angle(i, ncells);
      for (std::size_t c = 0; c < 2; ++c) {
        const std::size_t ic = 2 * i + c;
        const cx* ch =
            &mult[static_cast<std::size_t>(l + 1)][ic * static_cast<std::size_t>(P1)];
        m2m(ch, par, chord_diff(center_angle(ic, 2 * ncells), thp));
      }
    }
  }

  // Downward pass: locals, coarsest level interacts with every
  // non-neighbor; deeper cells add children of the parent's neighbors.
  std::vector<cx> prev, cur;
  {
    const std::size_t ncells = std::size_t{1} << kLmin;
    cur.assign(ncells * static_cast<std::size_t>(P1), cx{0.0, 0.0});
    for (std::size_t i = 0; i < ncells; ++i) {
      for (std::size_t j = 0; j < ncells; ++j) {
        if (circ_dist(i, j, ncells) <= 1) continue;
        m2l(&mult[kLmin][j * static_cast<std::size_t>(P1)],
            &cur[i * static_cast<std::size_t>(P1)],
            chord_diff(center_angle(i, ncells), center_angle(j, ncells)));
      }
    }
    mult[kLmin].clear();
    mult[kLmin].shrink_to_fit();
  }
  for (int l = kLmin + 1; l <= lmax_; ++l) {
    const std::size_t ncells = std::size_t{1} << l;
    const std::size_t nhalf = ncells / 2;
    prev.swap(cur);
    cur.assign(ncells * static_cast<std::size_t>(P1), cx{0.0, 0.0});
    for (std::size_t i = 0; i < ncells; ++i) {
      const double thc = center_angle(i, ncells);
      const std::size_t p = i / 2;
      l2l(&prev[p * static_cast<std::size_t>(P1)],
          &cur[i * static_cast<std::size_t>(P1)],
          chord_diff(thc, center_angle(p, nhalf)));
      for (std::size_t dp = 0; dp < 3; ++dp) {
        const std::size_t pp = (p + nhalf + dp - 1) % nhalf;
        for (std::size_t c = 0; c < 2; ++c) {
          const std::size_t j = 2 * pp + c;
          if (circ_dist(i, j, ncells) <= 1) continue;
          m2l(&mult[static_cast<std::size_t>(l)][j * static_cast<std::size_t>(P1)],
              &cur[i * static_cast<std::size_t>(P1)],
              chord_diff(thc, center_angle(j, ncells)));
        }
      }
    }
    mult[static_cast<std::size_t>(l)].clear();
    mult[static_cast<std::size_t>(l)].shrink_to_fit();
  }

  locals_.swap(cur);
  centers_.resize(nleaf_);
  for (std::size_t i = 0; i < nleaf_; ++i) {
    const double thc = center_angle(i, nleaf_);
    centers_[i] = cx{std::cos(thc), std::sin(thc)};
  }
}

double CirclePotential::eval_near(double theta, std::size_t leaf) const {
  double sum = 0.0;
  for (std::size_t d = 0; d < 3; ++d) {
    const std::size_t j = (leaf + nleaf_ + d - 1) % nleaf_;
    for (std::size_t s = leaf_start_[j]; s < leaf_start_[j + 1]; ++s)
      sum += q_[s] * std::log(std::fabs(2.0 * std::sin(0.5 * (theta - th_[s]))));
  }
  return sum;
}

double CirclePotential::operator()(double theta) const {
  theta = wrap_angle(theta);
  if (locals_.empty()) return eval_direct(theta);
  std::size_t leaf = static_cast<std::size_t>(
      theta / kTwoPi * static_cast<double>(nleaf_));
  if (leaf >= nleaf_) leaf = nleaf_ - 1;
  const int P1 = kOrder + 1;
  const cx* b = &locals_[leaf * static_cast<std::size_t>(P1)];
  const cx y = cx{std::cos(theta), std::sin(theta)} - centers_[leaf];
  cx acc = b[kOrder];
  for (int l = kOrder - 1; l >= 0; --l) acc = acc * y + b[l];
  return acc.real() + eval_near(theta, leaf);
}

double CirclePotential::eval_direct(double theta) const {
  theta = wrap_angle(theta);
  double sum = 0.0;
  for (std::size_t s = 0; s < th_.size(); ++s)
    sum += q_[s] * std::log(std::fabs(2.0 * std::sin(0.5 * (theta - th_[s]))));
  return sum;
}

CirclePotential ConjugateField::make_potential(const cantor::RankedIntervalSystem& sys,
                                               int n) {
  const long cnt = cantor::RankedIntervalSystem::count(n);
  const double sigma = sys.sched().sigma[static_cast<std::size_t>(n)];
  std::vector<double> angles;
  std::vector<double> charges;
  angles.reserve(static_cast<std::size_t>(2 * cnt));
  charges.reserve(static_cast<std::size_t>(2 * cnt));
  for (long k = 0; k < cnt; ++k) {
    const double a = sys.a(n, k);
    angles.push_back(a);
    charges.push_back(1.0);
    angles.push_back(a + sigma);
    charges.push_back(-1.0);
  }
  return CirclePotential(angles, charges);
}

ConjugateField::ConjugateField(const cantor::RankedIntervalSystem& sys, int n)
    : pot_(make_potential(sys, n)),
      scale_(static_cast<double>(n) / (2.0 * kPi * kPi)),
      density_(static_cast<double>(n) / kTwoPi) {}

}  // namespace singlab
