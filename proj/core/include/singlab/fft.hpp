#pragma once

// Power-of-two complex FFT.  Unnormalized:
//     sign = -1:  X[k] = sum_j x[j] exp(-2*pi*i*j*k/n)
//     sign = +1:  X[k] = sum_j x[j] exp(+2*pi*i*j*k/n)
// so fft(fft(x, -1), +1) = n * x.

#include <cstddef>
#include <vector>

#include "singlab/common.hpp"

namespace singlab {

/// Smallest power of two >= max(n, 1).
std::size_t next_pow2(std::size_t n);

/// In-place transform; a.size() must be a power of two.
void fft_pow2(std::vector<cx>& a, int sign);

}  // namespace singlab
