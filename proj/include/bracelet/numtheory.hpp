#pragma once

#include <cstdint>
#include <vector>

#include "bracelet/bigint.hpp"
#include "bracelet/polynomial.hpp"

namespace bracelet::numtheory {

/// n together with its complete, strictly increasing divisor list.
struct FactorizationView {
  std::uint64_t n = 1;
  std::vector<std::uint64_t> divisors;
};

/// Sorted divisors of n. Throws std::invalid_argument for n == 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);
FactorizationView factorization_view(std::uint64_t n);

/// Distinct prime factors in increasing order (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime(std::uint64_t n);

BigInt euler_phi(std::uint64_t n);
std::uint64_t euler_phi_u64(std::uint64_t n);
int moebius(std::uint64_t n);

/// C(n, k), with the total convention: 0 whenever n < 0, k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Fibonacci numbers with F_0 = F_1 = 1 (so fibonacci(n) is F_{n+1} in the
/// OEIS A000045 offset). Throws std::invalid_argument for n < 0.
BigInt fibonacci(std::int64_t n);
/// Fibonacci numbers with F_0 = 0, F_1 = 1.
BigInt fibonacci_standard(std::int64_t n);
/// Lucas numbers, L_0 = 2, L_1 = 1.
BigInt lucas(std::int64_t n);

/// Catalan number C(2k, k) / (k + 1).
BigInt catalan(std::uint64_t k);

/// Monic d-th cyclotomic polynomial, built by exact division
/// (x^d - 1) / prod_{c | d, c < d} Phi_c.
poly::IntPolynomial cyclotomic(std::uint64_t d);

}  // namespace bracelet::numtheory
