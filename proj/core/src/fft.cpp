#include "singlab/fft.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace singlab {

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft_pow2(std::vector<cx>& a, int sign) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft_pow2: size must be a power of two");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("fft_pow2: sign must be +1 or -1");
  if (n == 1) return;

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  // Half-size twiddle table, each entry from polar form so the table stays
  // accurate for large transforms (no multiplicative drift).
  std::vector<cx> tw(n / 2);
  const double step = static_cast<double>(sign) * kTwoPi / static_cast<double>(n);
  for (std::size_t j = 0; j < n / 2; ++j)
    tw[j] = std::polar(1.0, step * static_cast<double>(j));

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t blk = 0; blk < n; blk += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cx w = tw[j * stride];
        const cx u = a[blk + j];
        const cx v = a[blk + j + len / 2] * w;
        a[blk + j] = u + v;
        a[blk + j + len / 2] = u - v;
      }
    }
  }
}

}  // namespace singlab
