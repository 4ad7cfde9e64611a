#pragma once

// Norms, energies, averages, and pairings on coefficient windows, plus
// the repo-wide dyadic-block convergence verdict.

#include <string>
#include <vector>

#include "singlab/bump.hpp"
#include "singlab/coeff_window.hpp"
#include "singlab/common.hpp"

namespace singlab {

// Index sets for window reductions.  "positives" is m >= 1 and
// "negatives" is m <= -1; index 0 is included only by "full" and by an
// explicit [a, b] range containing it.
struct Side {
  enum class Kind { negatives, positives, full, range } kind;
  long a = 0, b = 0;

  static Side negatives() { return {Kind::negatives, 0, 0}; }
  static Side positives() { return {Kind::positives, 0, 0}; }
  static Side full() { return {Kind::full, 0, 0}; }
  static Side range(long a, long b) { return {Kind::range, a, b}; }
};

/// (sum |w(m)|^p)^(1/p) over the requested side.  The side must lie
/// inside the window: throws "window insufficient" otherwise.
double lp_norm(const CoeffWindow& w, double p, Side side);

enum class EnergySide { two_sided, anti_analytic };

/// Frostman-type energy partial sums.
///
/// two_sided: S_N = sum_{|n| <= N} |w(n)|^2 / (|n|^{1-alpha} + 1) for
/// N = 0 .. min(-lo, hi), over growing symmetric windows.
/// anti_analytic: S_N = sum_{n = -N}^{-1} |w(n)|^2 / |n|^{1-alpha} for
/// N = 1 .. -lo.
/// Both sequences are nondecreasing.
std::vector<double> weighted_energy(const CoeffWindow& w, double alpha,
                                    EnergySide side);

/// (1 / (2N+1)) * sum_{|n| <= N} |w(n)|^2.
double wiener_average(const CoeffWindow& w, long N);

/// Distribution-against-test-function pairing by coefficients:
///
///     P_M = (1 / (2*pi)) * sum_{|m| <= M} s(m) * psi_hat(-m),
///
/// returned as the sequence P_0, P_1, ..., P_M so the caller can inspect
/// convergence.  The 1/(2*pi) factor is the Parseval bridge of the
/// measure-style convention: pairing the unit atom at c against psi
/// converges to psi(c).
std::vector<cx> pair(const CoeffWindow& s, const SmoothBump& psi, long M);

// ---------------------------------------------------------------------------
// Dyadic-block summaries and the convergence verdict.

/// Block sums B_j = sum over 2^j <= |index distance| < 2^(j+1) of the
/// supplied nonnegative terms, where terms[i] is the contribution of
/// index i+1 (the caller has already folded signs / weights).  Returns
/// the list of complete blocks only.
std::vector<double> dyadic_block_sums(const std::vector<double>& terms);

struct Verdict {
  bool converging = false;
  std::string note;                 // short reason string
  std::vector<double> block_means;  // B_j / 2^j, diagnostic
};

/// Verdict rule, applied uniformly across the repo: with per-index block
/// means m_j = B_j / 2^j, the series is declared "converging" when the
/// last three ratios m_{j+1}/m_j are each <= 0.5 (an exhausted tail of
/// zero blocks also converges), and "diverging" otherwise.  At least five
/// blocks are required for any verdict.
Verdict convergence_verdict(const std::vector<double>& block_sums);

}  // namespace singlab
