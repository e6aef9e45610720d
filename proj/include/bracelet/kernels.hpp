#pragma once

// Data-parallel inner loops. Each kernel has a serial reference and an OpenMP
// version that run the same per-element code, so both backends return
// bitwise-identical results; tests compare them directly.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace bracelet::kernels {

enum class Backend { serial, openmp };

/// Threads used by the OpenMP backend (1 when built without OpenMP support).
int max_threads();
void set_threads(int n);

// ---------------------------------------------------------------------------
// Polynomial evaluation for the simultaneous root iteration.

/// p(z)/p'(z) together with the normalized residual |p(z)| / max(1,|z|)^deg and
/// the running rounding-error bound sum |c_i| |z|^i / max(1,|z|)^deg. For
/// |z| > 1 the reversed polynomial is evaluated at 1/z so nothing overflows.
struct Evaluation {
  std::complex<double> newton_ratio;
  double residual = 0.0;
  double magnitude = 0.0;
};

/// `coeffs` is low-order first with coeffs.back() != 0.
Evaluation evaluate(std::span<const double> coeffs, std::complex<double> z);

/// One Jacobi sweep of the Aberth iteration: for every i with active[i] != 0,
/// computes the correction delta[i] from the current iterate z (z is not
/// modified) and the evaluation data at z[i]. Inactive slots are left as is.
void aberth_sweep(std::span<const double> coeffs, std::span<const std::complex<double>> z,
                  std::span<const std::uint8_t> active, std::span<std::complex<double>> delta,
                  std::span<Evaluation> eval, Backend backend);

// ---------------------------------------------------------------------------
// Exhaustive 2^n scans.

/// Admissible marked linear arrays.
enum class ArrayRule {
  /// no two adjacent marks; arrays identified with their reflection
  no_adjacent,
  /// adjacent marks only as one prefix run of length >= 2 (counted as is);
  /// arrays without adjacent marks are identified with their reflection
  medallion_left,
  /// runs of length >= 2 only if they touch an end; reflection identifies all
  full,
};

/// counts[k] = number of admissible classes with k marks, 0 <= k <= n. n <= 28.
std::vector<std::uint64_t> configuration_counts(int n, ArrayRule rule, Backend backend);

enum class CyclicRule {
  any,
  /// no two cyclically adjacent reds (a single bead is adjacent to itself)
  no_adjacent_reds,
};

/// counts[k] = number of rotation classes of n-bead binary necklaces with k reds
/// satisfying `rule`. n <= 28.
std::vector<std::uint64_t> necklace_counts(int n, CyclicRule rule, Backend backend);

/// Bit reversal of the low n bits.
std::uint32_t reverse_bits(std::uint32_t m, int n);
/// True iff m (n bits) is the smallest of its n cyclic rotations.
bool is_min_rotation(std::uint32_t m, int n);

}  // namespace bracelet::kernels
