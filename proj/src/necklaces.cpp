#include "bracelet/necklaces.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bracelet/numtheory.hpp"

namespace bracelet::necklaces {

using numtheory::binomial;
using numtheory::divisors;
using numtheory::euler_phi;
using poly::IntPolynomial;
using poly::RationalFunction;

namespace {

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

enum class Parity { any, odd, even };

BigInt burnside_two_colour(std::uint64_t n, Parity parity, const char* what) {
  require_positive(n, what);
  BigInt s = 0;
  for (auto d : divisors(n)) {
    if (parity == Parity::odd && d % 2 == 0) continue;
    if (parity == Parity::even && d % 2 == 1) continue;
    s += euler_phi(d) * pow2(n / d);
  }
  return exact_div(s, from_u64(n), what);
}

}  // namespace

BigInt macmahon(std::uint64_t n) { return burnside_two_colour(n, Parity::any, "macmahon"); }
BigInt allowed(std::uint64_t n) { return burnside_two_colour(n, Parity::odd, "allowed"); }
BigInt forbidden(std::uint64_t n) { return burnside_two_colour(n, Parity::even, "forbidden"); }

std::vector<std::pair<int, std::string>> susy_trace(const std::string& s) {
  const auto ones = std::count(s.begin(), s.end(), '1');
  const int flip = (ones - 1) % 2 == 0 ? 1 : -1;
  std::vector<std::pair<int, std::string>> out;
  std::string cur = s;
  int sign = 1;
  do {
    const char last = cur.back();
    cur.pop_back();
    cur.insert(cur.begin(), last);
    if (last == '1') sign *= flip;
    out.emplace_back(sign, cur);
  } while (cur != s);
  return out;
}

SusyClassification classify_susy(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("classify_susy: n must be in [1, 20], got " + std::to_string(n));
  SusyClassification out;
  const std::uint32_t total = 1U << n;
  for (std::uint32_t m = 0; m < total; ++m) {
    // Bit n-1-i is character i, so numeric order is lexicographic order and
    // bit rotations are string rotations.
    if (!kernels::is_min_rotation(m, n)) continue;
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
      if (m >> (n - 1 - i) & 1U) s[static_cast<std::size_t>(i)] = '1';
    }
    const auto trace = susy_trace(s);
    NecklaceClass c{n, s, static_cast<int>(trace.size()), trace.back().first};
    (c.is_forbidden() ? out.forbidden : out.allowed).push_back(std::move(c));
  }
  return out;
}

BigInt W(std::uint64_t n) {
  require_positive(n, "W");
  BigInt s = 0;
  for (auto d : divisors(n)) s += euler_phi(n / d) * numtheory::lucas(static_cast<std::int64_t>(d));
  return exact_div(s, from_u64(n), "W");
}

BigInt W_k(std::uint64_t n, std::int64_t k) {
  require_positive(n, "W_k");
  if (k == 0) return 1;
  if (k < 0 || static_cast<std::uint64_t>(k) > n / 2) return 0;
  const auto uk = static_cast<std::uint64_t>(k);
  const std::uint64_t rest = n - uk;
  BigInt s = 0;
  for (auto d : divisors(std::gcd(n, uk))) {
    s += euler_phi(d) * binomial(static_cast<std::int64_t>(rest / d), static_cast<std::int64_t>(uk / d));
  }
  return exact_div(s, from_u64(rest), "W_k");
}

CountRow count_row(std::uint64_t n) {
  CountRow row{n, {}};
  for (std::uint64_t k = 0; k <= n / 2; ++k) row.values.push_back(W_k(n, static_cast<std::int64_t>(k)));
  return row;
}

IntPolynomial V_poly(std::uint64_t m) {
  IntPolynomial prev{2};
  if (m == 0) return prev;
  IntPolynomial cur{1};
  const IntPolynomial x = IntPolynomial::monomial(1, 1);
  for (std::uint64_t i = 2; i <= m; ++i) {
    IntPolynomial next = cur + x * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPolynomial rowsum_poly(std::uint64_t n) {
  auto row = count_row(n);
  return IntPolynomial(std::move(row.values));
}

IntPolynomial rowsum_poly_via_V(std::uint64_t n) {
  require_positive(n, "rowsum_poly_via_V");
  IntPolynomial s;
  for (auto d : divisors(n)) s += V_poly(d).substitute_power(n / d) * euler_phi(n / d);
  return s.divide_exact(from_u64(n));
}

IntPolynomial rowsum_poly_prime(std::uint64_t p) {
  if (!numtheory::is_prime(p)) throw std::invalid_argument("rowsum_poly_prime: p must be prime");
  return (V_poly(p) + IntPolynomial::constant(from_u64(p - 1))).divide_exact(from_u64(p));
}

Rational lucas_ratio_sum(std::uint64_t n) {
  require_positive(n, "lucas_ratio_sum");
  Rational s = 0;
  for (std::uint64_t k = 0; k <= n / 2; ++k) {
    const auto rest = static_cast<std::int64_t>(n - k);
    s += Rational(binomial(rest, static_cast<std::int64_t>(k)), from_i64(rest));
  }
  s.canonicalize();
  return s;
}

namespace {

// 1 - x^d
IntPolynomial one_minus_power(std::uint64_t d) {
  return IntPolynomial::constant(1) - IntPolynomial::monomial(1, d);
}

// sum_{d|k} phi(d) x^shift / (1-x^d)^{k/d}, over k * diagonal_denominator(k).
RationalFunction cyclic_sum(std::uint64_t k, std::size_t shift) {
  const IntPolynomial den = diagonal_denominator(k);
  IntPolynomial num;
  for (auto d : divisors(k)) {
    num += poly::exact_quotient(den, one_minus_power(d).pow(k / d)) * euler_phi(d);
  }
  if (shift > 0) num = num * IntPolynomial::monomial(1, shift);
  return {std::move(num), den * from_u64(k)};
}

}  // namespace

IntPolynomial diagonal_denominator(std::uint64_t k) {
  require_positive(k, "diagonal_denominator");
  IntPolynomial den{1};
  for (auto d : divisors(k)) den = den * one_minus_power(d).pow(numtheory::euler_phi_u64(k / d));
  return den;
}

RationalFunction diagonal_gf(std::uint64_t k) {
  require_positive(k, "diagonal_gf");
  return cyclic_sum(k, 2 * k);
}

BigInt molien_zk(std::uint64_t n, std::uint64_t k) {
  require_positive(k, "molien_zk");
  const std::uint64_t total = n + k;
  BigInt s = 0;
  for (auto d : divisors(std::gcd(n, k))) {
    s += euler_phi(d) * binomial(static_cast<std::int64_t>(total / d), static_cast<std::int64_t>(k / d));
  }
  return exact_div(s, from_u64(total), "molien_zk");
}

RationalFunction molien_series(std::uint64_t k) {
  require_positive(k, "molien_series");
  return cyclic_sum(k, 0);
}

std::vector<Rational> molien_s2(std::uint64_t m, std::size_t count) {
  if (m == 0) throw std::invalid_argument("molien_s2: m must be >= 1");
  const RationalFunction a{IntPolynomial{1}, IntPolynomial::binomial_power(1, -1, 2 * m) * BigInt(2)};
  const RationalFunction b{IntPolynomial{1}, IntPolynomial{1, 0, -1}.pow(m) * BigInt(2)};
  return poly::series_coefficients(a + b, count);
}

BigInt brute_necklaces(int n, NecklacePredicate pred, kernels::Backend backend) {
  const auto counts = kernels::necklace_counts(
      n, pred.no_red_red ? kernels::CyclicRule::no_adjacent_reds : kernels::CyclicRule::any, backend);
  if (pred.reds >= 0) {
    return pred.reds <= n ? from_u64(counts[static_cast<std::size_t>(pred.reds)]) : BigInt(0);
  }
  BigInt s = 0;
  for (auto c : counts) s += from_u64(c);
  return s;
}

}  // namespace bracelet::necklaces
