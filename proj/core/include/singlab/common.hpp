#pragma once

// Shared conventions for the whole library.
//
// Angles live on the circle [0, 2*pi), stored as binary64 radians.
// Equality of angles is tested with absolute tolerance 1e-12 unless a
// routine documents otherwise.
//
// Fourier transforms are measure-style throughout:
//     mu_hat(m) = integral of exp(-i*m*t) d mu(t),
// with no 1/(2*pi) factor.  Lebesgue measure therefore has
// mu_hat(0) = 2*pi.  Where Taylor coefficients of an analytic function
// on the disk appear, they are plain power-series coefficients; the
// bridge between the two conventions is the factor 2*pi and is always
// written out explicitly at the call site.

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace singlab {

using cx = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.1415926535897932384626433832795;

/// Absolute tolerance for angle comparisons (binary64 radians).
inline constexpr double kAngleTol = 1e-12;

/// Absolute tolerance used when two independent evaluation routes for
/// the same quantity are compared.
inline constexpr double kOracleTol = 1e-8;

/// Wraps an angle into [0, 2*pi).
double wrap_angle(double t);

/// Shortest circular distance between two angles, in [0, pi].
double circle_dist(double a, double b);

// ---------------------------------------------------------------------------
// Counter-based random numbers.
//
// Every random draw in the library is a pure function of a 64-bit key
// tuple, so results never depend on evaluation order or thread count.
// The mixer is the splitmix64 finalizer applied twice with distinct
// round constants; statistical quality is far beyond what the sampling
// here needs.

uint64_t mix64(uint64_t x);

/// Combines up to four words into a single well-mixed 64-bit value.
uint64_t counter_key(uint64_t seed, uint64_t a, uint64_t b = 0, uint64_t c = 0);

/// Uniform double in [0, 1) derived from a key.
double uniform01(uint64_t key);

/// Standard normal via Box-Muller from two derived keys.
double gauss(uint64_t key);

// ---------------------------------------------------------------------------
// Deterministic parallel loop.
//
// Results must be written to index-addressed slots by the body; the
// scheduler only partitions the index range.  With n_threads == 1 the
// loop degenerates to a plain for, which is also the default.

void set_thread_count(int n);
int thread_count();

void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& body);

// ---------------------------------------------------------------------------
// FNV-1a, used for config and manifest hashes.

uint64_t fnv1a64(const void* data, std::size_t len);
uint64_t fnv1a64(const std::string& s);

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_g17(double x);

}  // namespace singlab
