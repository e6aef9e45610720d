#pragma once

// Counting marked linear arrays ("broken necklaces"), the necklace binomial
// coefficients they lead to, and the generating functions of the triangle.
//
// Every closed form here has an exhaustive counterpart in brute_configurations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bracelet/bigint.hpp"
#include "bracelet/kernels.hpp"
#include "bracelet/polynomial.hpp"

namespace bracelet::config {

/// Linear array of n positions (1..n) with a set of marked positions.
struct BinaryArray {
  int n = 0;
  std::vector<int> marks;  // increasing, 1-based

  [[nodiscard]] BinaryArray reflected() const;
  [[nodiscard]] bool has_adjacent_marks() const;
  [[nodiscard]] std::string to_string(char marked = 'r', char unmarked = 'w') const;
};

/// Arrays of n vertices with k marks, no two adjacent, reflections distinct: C(n-k+1, k).
BigInt f(std::int64_t k, std::int64_t n);

/// Arrays of n vertices with k marks, no two adjacent, up to reflection.
/// Release builds use the closed form binom_N(n-k+1, k); debug builds also run
/// g_recurrence and throw std::logic_error if the two disagree. Defined for n >= -1.
BigInt g(std::int64_t k, std::int64_t n);

/// g_k(n) = g_k(n-2) + g_{k-2}(n-4) + C(n-k-1, k-1) from the base cases
/// g_0(n) = 1 (n >= -1), g_1(n) = ceil(n/2), g_k(n) = 0 for n < 2k-1.
/// Memoized per thread.
BigInt g_recurrence(std::int64_t k, std::int64_t n);

/// g(k, m + 2k - 1)
BigInt gbar(std::int64_t k, std::int64_t m);

/// Necklace binomial coefficient: 0 outside 0 <= k <= t, otherwise
/// C(t,k)/2 for t even and k odd, else (C(t,k) + C(t/2, k/2))/2 (floors).
BigInt necklace_binomial(std::int64_t t, std::int64_t k);

/// Arrays cut with the medallion at the left end:
/// binom_N(t-k+1, k) + sum_{r=2}^{k} C(t-k, r-2).
BigInt beta(std::int64_t k, std::int64_t t);
/// Same count as g_k(t) + sum_{r=2}^{k} f_{k-r}(t-r-1).
BigInt beta_from_g(std::int64_t k, std::int64_t t);

/// All configurations of k marks on t nodes up to reflection.
/// For k < t this is the two-sum formula (z_formula); the all-marked array
/// (k == t) is a single configuration.
BigInt Z(std::int64_t k, std::int64_t t);
/// sum_j binom_N(t-k-1, k-2j) + sum_j floor((j+1)/2) C(t-k-1, k-j), evaluated as written.
BigInt z_formula(std::int64_t k, std::int64_t t);

enum class ConfigMode { no_adjacent, medallion_left, full };

/// Exhaustive count over all C(n,k) mark sets; n <= 28.
BigInt brute_configurations(std::int64_t k, std::int64_t n, ConfigMode mode,
                            kernels::Backend backend = kernels::Backend::openmp);
/// All k at once: counts[k] for 0 <= k <= n.
std::vector<BigInt> brute_configuration_row(std::int64_t n, ConfigMode mode,
                                            kernels::Backend backend = kernels::Backend::openmp);

/// rows[t][k] = binom_N(t, k) for 0 <= k <= t <= tmax.
struct NecklaceTriangle {
  int tmax = 0;
  std::vector<std::vector<BigInt>> rows;

  static NecklaceTriangle build(int tmax);
  [[nodiscard]] const BigInt& at(int t, int k) const { return rows.at(t).at(k); }
};

/// N_t(y) = ((1+y)^t + (1+y^2)^{floor(t/2)} (1+y)^{t mod 2}) / 2
poly::IntPolynomial necklace_poly(std::int64_t t);

/// Column generating function
/// [(1+x)^a + (1-x)^a] / [2 (1-x)^c (1-x^2)^a], a = floor((k+1)/2), c = ceil((k+1)/2).
poly::RationalFunction column_gf(std::int64_t k);

struct ColumnCheck {
  bool ok = true;
  std::optional<std::size_t> mismatch;  // first t with series[t] != binom_N(t+k, k)
  std::vector<Rational> series;
};

/// Compares the column generating function with binom_N(t+k, k), t < count.
ColumnCheck gf_column_check(std::int64_t k, std::size_t count);

/// Bivariate coefficient comparison for 1/(2(1-x-y)) + (2+x)/(2(1-x^2-y)).
struct BivariateCell {
  int t = 0;
  int k = 0;
  Rational first_term;   // coefficient of x^t y^k in 1/(2(1-x-y))
  Rational second_term;  // coefficient of x^t y^k in (2+x)/(2(1-x^2-y))
  Rational printed;      // first_term + second_term
  Rational derived;      // coefficient of the derived form
};

struct BivariateConvention {
  std::string name;
  std::size_t agree = 0;
  std::size_t cells = 0;
  std::vector<std::pair<int, int>> disagreements;
};

struct BivariateReport {
  int tmax = 0;
  std::vector<BivariateCell> cells;  // 0 <= t, k <= tmax
  std::vector<BivariateConvention> conventions;
  /// derived closed form, which reproduces binom_N(t, k) in every cell
  std::string derived_form;
  bool derived_agrees = false;
};

/// Coefficient extraction on a tmax x tmax grid. tmax <= 12.
BivariateReport gf_bivariate_check(int tmax);

struct BetaSumReport {
  std::int64_t t = 0;
  BigInt lhs;                  // sum_k beta(k, t)
  std::int64_t t_tilde = 0;    // floor(t/2) + 2 + (-1)^{t+1}
  Rational rhs_offset_one;     // (L_{t+2} + F_{t~})/2 - 1 with F_0 = F_1 = 1
  Rational rhs_offset_zero;    // same with F_0 = 0, F_1 = 1
  bool holds_offset_one = false;
  bool holds_offset_zero = false;
};

BetaSumReport beta_sum_check(std::int64_t t);

}  // namespace bracelet::config
