#pragma once

// Circular counts: all two-colour necklaces, the allowed/forbidden split of the
// sign-shift procedure, and necklaces without two adjacent reds.

#include <cstdint>
#include <string>
#include <vector>

#include "bracelet/bigint.hpp"
#include "bracelet/kernels.hpp"
#include "bracelet/polynomial.hpp"

namespace bracelet::necklaces {

/// (1/n) sum_{d|n} phi(d) 2^{n/d}
BigInt macmahon(std::uint64_t n);
/// (1/n) sum over odd d | n of phi(d) 2^{n/d}
BigInt allowed(std::uint64_t n);
/// (1/n) sum over even d | n of phi(d) 2^{n/d}
BigInt forbidden(std::uint64_t n);

struct NecklaceClass {
  int n = 0;
  std::string representative;  // lexicographically smallest rotation
  int period = 0;              // smallest p > 0 with rotation by p fixing the string
  int sign = 1;                // accumulated sign after `period` shifts
  [[nodiscard]] bool is_forbidden() const { return sign < 0; }
};

struct SusyClassification {
  std::vector<NecklaceClass> allowed;
  std::vector<NecklaceClass> forbidden;
};

/// Moves the last digit to the front `period` times. Moving a 1 past the other
/// ones contributes (-1)^(ones - 1). Classes sorted by representative. n in [1, 20].
SusyClassification classify_susy(int n);

/// The sign trace of a single string: entries are (sign, string) after each shift.
std::vector<std::pair<int, std::string>> susy_trace(const std::string& s);

/// Necklaces of n beads with no two cyclically adjacent reds:
/// (1/n) sum_{d|n} phi(n/d) L_d.
BigInt W(std::uint64_t n);

/// Same, with exactly k reds: (1/(n-k)) sum_{d | gcd(n,k)} phi(d) C((n-k)/d, k/d).
/// W_k(n, 0) = 1; 0 for k < 0 or k > floor(n/2).
BigInt W_k(std::uint64_t n, std::int64_t k);

struct CountRow {
  std::uint64_t n = 0;
  std::vector<BigInt> values;  // values[k] = W_k(n), 0 <= k <= floor(n/2)
};

CountRow count_row(std::uint64_t n);

/// V_0 = 2, V_1 = 1, V_m = V_{m-1} + x V_{m-2}.
poly::IntPolynomial V_poly(std::uint64_t m);

/// F_n(x) = sum_k W_k(n) x^k from the W_k values.
poly::IntPolynomial rowsum_poly(std::uint64_t n);
/// F_n(x) = (1/n) sum_{d|n} phi(n/d) V_d(x^{n/d}).
poly::IntPolynomial rowsum_poly_via_V(std::uint64_t n);
/// For prime p: ((p-1) + V_p(x)) / p.
poly::IntPolynomial rowsum_poly_prime(std::uint64_t p);

/// sum_{k} C(n-k, k) / (n-k), 0 <= k <= floor(n/2), as an exact rational.
Rational lucas_ratio_sum(std::uint64_t n);

/// (1/k) sum_{d|k} phi(d) x^{2k} / (1-x^d)^{k/d} over the common denominator
/// k * prod_{d|k} (1-x^d)^{phi(k/d)}.
poly::RationalFunction diagonal_gf(std::uint64_t k);
/// prod_{d|k} (1-x^d)^{phi(k/d)}
poly::IntPolynomial diagonal_denominator(std::uint64_t k);

/// (1/(n+k)) sum_{d | gcd(n,k)} phi(d) C((n+k)/d, k/d), with value 1 at n = 0.
BigInt molien_zk(std::uint64_t n, std::uint64_t k);
/// (1/k) sum_{d|k} phi(d) / (1-x^d)^{k/d}
poly::RationalFunction molien_series(std::uint64_t k);

/// First `count` coefficients of (1/2)(1-z)^{-2m} + (1/2)(1-z^2)^{-m}.
std::vector<Rational> molien_s2(std::uint64_t m, std::size_t count);

struct NecklacePredicate {
  bool no_red_red = false;
  /// -1 means any number of reds
  int reds = -1;
};

/// Exhaustive rotation-class count, n in [1, 28].
BigInt brute_necklaces(int n, NecklacePredicate pred, kernels::Backend backend = kernels::Backend::openmp);

}  // namespace bracelet::necklaces
