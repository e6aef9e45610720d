#include "bracelet/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace bracelet::numtheory {

namespace {

void require_positive(std::uint64_t n, const char* fn) {
  if (n == 0) throw std::invalid_argument(std::string(fn) + ": argument must be >= 1");
}

void require_nonnegative(std::int64_t n, const char* fn) {
  if (n < 0) throw std::invalid_argument(std::string(fn) + ": negative index " + std::to_string(n));
}

}  // namespace

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  require_positive(n, "divisors");
  std::vector<std::uint64_t> lo, hi;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

FactorizationView factorization_view(std::uint64_t n) { return {n, divisors(n)}; }

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  require_positive(n, "prime_factors");
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::uint64_t euler_phi_u64(std::uint64_t n) {
  require_positive(n, "euler_phi");
  std::uint64_t r = n;
  for (std::uint64_t p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

BigInt euler_phi(std::uint64_t n) { return from_u64(euler_phi_u64(n)); }

int moebius(std::uint64_t n) {
  require_positive(n, "moebius");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt fibonacci(std::int64_t n) {
  require_nonnegative(n, "fibonacci");
  BigInt r;
  mpz_fib_ui(r.get_mpz_t(), static_cast<unsigned long>(n + 1));
  return r;
}

BigInt fibonacci_standard(std::int64_t n) {
  require_nonnegative(n, "fibonacci_standard");
  BigInt r;
  mpz_fib_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt lucas(std::int64_t n) {
  require_nonnegative(n, "lucas");
  BigInt r;
  mpz_lucnum_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt catalan(std::uint64_t k) {
  return exact_div(binomial(static_cast<std::int64_t>(2 * k), static_cast<std::int64_t>(k)), from_u64(k + 1),
                   "catalan");
}

poly::IntPolynomial cyclotomic(std::uint64_t d) {
  require_positive(d, "cyclotomic");
  // Shared cache; entries are immutable once inserted.
  static std::mutex mu;
  static std::map<std::uint64_t, poly::IntPolynomial> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  poly::IntPolynomial x_d_minus_1 = poly::IntPolynomial::monomial(1, d) - poly::IntPolynomial::constant(1);
  poly::IntPolynomial divisor = poly::IntPolynomial::constant(1);
  for (std::uint64_t c : divisors(d)) {
    if (c != d) divisor = divisor * cyclotomic(c);
  }
  poly::IntPolynomial phi = poly::exact_quotient(x_d_minus_1, divisor);
  std::lock_guard lock(mu);
  return cache.emplace(d, std::move(phi)).first->second;
}

}  // namespace bracelet::numtheory
