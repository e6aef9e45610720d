#include "bracelet/kernels.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bracelet::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

Evaluation evaluate(std::span<const double> coeffs, std::complex<double> z) {
  using cd = std::complex<double>;
  const std::size_t deg = coeffs.size() - 1;
  const double az = std::abs(z);
  cd p = 0.0;
  cd dp = 0.0;
  double mag = 0.0;
  Evaluation out;
  if (az <= 1.0) {
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      dp = dp * z + p;
      p = p * z + coeffs[i];
      mag = mag * az + std::abs(coeffs[i]);
    }
    out.newton_ratio = p / dp;
  } else {
    // p(z) = z^deg q(w) with w = 1/z and q the reversed polynomial, so
    // p/p' = z / (deg - w q'(w)/q(w)).
    const cd w = 1.0 / z;
    const double aw = 1.0 / az;
    for (double c : coeffs) {
      dp = dp * w + p;
      p = p * w + c;
      mag = mag * aw + std::abs(c);
    }
    out.newton_ratio = z / (static_cast<double>(deg) - w * dp / p);
  }
  out.residual = std::abs(p);
  out.magnitude = mag;
  return out;
}

namespace {

inline void aberth_one(std::span<const double> coeffs, std::span<const std::complex<double>> z, std::size_t i,
                       std::span<std::complex<double>> delta, std::span<Evaluation> eval) {
  const Evaluation e = evaluate(coeffs, z[i]);
  eval[i] = e;
  if (e.residual == 0.0) {
    delta[i] = 0.0;
    return;
  }
  std::complex<double> repulsion = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (j != i) repulsion += 1.0 / (z[i] - z[j]);
  }
  const std::complex<double> r = e.newton_ratio;
  delta[i] = r / (1.0 - r * repulsion);
}

}  // namespace

void aberth_sweep(std::span<const double> coeffs, std::span<const std::complex<double>> z,
                  std::span<const std::uint8_t> active, std::span<std::complex<double>> delta,
                  std::span<Evaluation> eval, Backend backend) {
  const auto n = static_cast<std::ptrdiff_t>(z.size());
  if (backend == Backend::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      if (active[i]) aberth_one(coeffs, z, static_cast<std::size_t>(i), delta, eval);
    }
    return;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (active[i]) aberth_one(coeffs, z, static_cast<std::size_t>(i), delta, eval);
  }
}

std::uint32_t reverse_bits(std::uint32_t m, int n) {
  m = ((m >> 1) & 0x55555555U) | ((m & 0x55555555U) << 1);
  m = ((m >> 2) & 0x33333333U) | ((m & 0x33333333U) << 2);
  m = ((m >> 4) & 0x0F0F0F0FU) | ((m & 0x0F0F0F0FU) << 4);
  m = ((m >> 8) & 0x00FF00FFU) | ((m & 0x00FF00FFU) << 8);
  m = (m >> 16) | (m << 16);
  return n == 0 ? 0U : m >> (32 - n);
}

namespace {

inline std::uint32_t rotate(std::uint32_t m, int n, std::uint32_t full) {
  return ((m >> 1) | (m << (n - 1))) & full;
}

}  // namespace

bool is_min_rotation(std::uint32_t m, int n) {
  const std::uint32_t full = n == 32 ? ~0U : (1U << n) - 1U;
  std::uint32_t r = m;
  for (int s = 1; s < n; ++s) {
    r = rotate(r, n, full);
    if (r < m) return false;
  }
  return true;
}

namespace {

inline bool no_adjacent(std::uint32_t m) { return (m & (m >> 1)) == 0; }

// Bit i is array position i + 1. Returns whether m counts toward the class total.
inline bool counts_configuration(std::uint32_t m, int n, ArrayRule rule) {
  switch (rule) {
    case ArrayRule::no_adjacent:
      return no_adjacent(m) && m <= reverse_bits(m, n);
    case ArrayRule::medallion_left: {
      const int run = std::countr_one(m);
      if (run >= 2) return no_adjacent(run >= 32 ? 0U : m >> run);
      return no_adjacent(m) && m <= reverse_bits(m, n);
    }
    case ArrayRule::full: {
      const std::uint32_t full = n == 32 ? ~0U : (1U << n) - 1U;
      const int lead = std::countr_one(m);
      if (lead >= n) return true;
      const int trail = std::countl_one(m << (32 - n));
      const std::uint32_t prefix = lead == 0 ? 0U : (1U << lead) - 1U;
      const std::uint32_t suffix = trail == 0 ? 0U : full & ~((1U << (n - trail)) - 1U);
      return no_adjacent(m & ~prefix & ~suffix) && m <= reverse_bits(m, n);
    }
  }
  return false;
}

inline bool counts_necklace(std::uint32_t m, int n, CyclicRule rule) {
  if (rule == CyclicRule::no_adjacent_reds) {
    const std::uint32_t full = (1U << n) - 1U;
    if ((m & rotate(m, n, full)) != 0) return false;
  }
  return is_min_rotation(m, n);
}

}  // namespace

std::vector<std::uint64_t> configuration_counts(int n, ArrayRule rule, Backend backend) {
  if (n < 0 || n > 28) throw std::invalid_argument("configuration_counts: n must be in [0, 28], got " + std::to_string(n));
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  if (n == 0) {
    counts[0] = 1;
    return counts;
  }
  const std::int64_t total = std::int64_t{1} << n;
  std::uint64_t* c = counts.data();
  if (backend == Backend::serial) {
    for (std::int64_t m = 0; m < total; ++m) {
      const auto mm = static_cast<std::uint32_t>(m);
      if (counts_configuration(mm, n, rule)) ++c[std::popcount(mm)];
    }
    return counts;
  }
  const int len = n + 1;
#pragma omp parallel for schedule(static) reduction(+ : c[:len])
  for (std::int64_t m = 0; m < total; ++m) {
    const auto mm = static_cast<std::uint32_t>(m);
    if (counts_configuration(mm, n, rule)) ++c[std::popcount(mm)];
  }
  return counts;
}

std::vector<std::uint64_t> necklace_counts(int n, CyclicRule rule, Backend backend) {
  if (n < 1 || n > 28) throw std::invalid_argument("necklace_counts: n must be in [1, 28], got " + std::to_string(n));
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  const std::int64_t total = std::int64_t{1} << n;
  std::uint64_t* c = counts.data();
  if (backend == Backend::serial) {
    for (std::int64_t m = 0; m < total; ++m) {
      const auto mm = static_cast<std::uint32_t>(m);
      if (counts_necklace(mm, n, rule)) ++c[std::popcount(mm)];
    }
    return counts;
  }
  const int len = n + 1;
#pragma omp parallel for schedule(dynamic, 4096) reduction(+ : c[:len])
  for (std::int64_t m = 0; m < total; ++m) {
    const auto mm = static_cast<std::uint32_t>(m);
    if (counts_necklace(mm, n, rule)) ++c[std::popcount(mm)];
  }
  return counts;
}

}  // namespace bracelet::kernels
