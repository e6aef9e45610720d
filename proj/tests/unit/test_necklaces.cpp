#include <doctest.h>

#include <functional>

#include "bracelet/configurations.hpp"
#include "bracelet/necklaces.hpp"
#include "bracelet/numtheory.hpp"
#include "oracles.hpp"

using namespace bracelet;
namespace nk = bracelet::necklaces;

namespace {

BigInt big(std::uint64_t v) { return from_u64(v); }

// Sign-shift procedure on a string: the last digit moves to the front; moving
// a 1 past the other ones flips the sign once per 1 passed. Forbidden iff the
// string comes back with a minus sign.
bool forbidden_by_shifting(const std::string& s) {
  const auto ones = std::count(s.begin(), s.end(), '1');
  std::string cur = s;
  int sign = 1;
  do {
    const char last = cur.back();
    cur = last + cur.substr(0, cur.size() - 1);
    if (last == '1' && (ones - 1) % 2 == 1) sign = -sign;
  } while (cur != s);
  return sign < 0;
}

// Degree-n monomials in k variables modulo cyclic shift of the variables.
std::uint64_t cyclic_monomials(int n, int k) {
  std::set<std::vector<int>> seen;
  std::vector<int> e(k, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == k - 1) {
      e[i] = left;
      auto best = e;
      for (int r = 1; r < k; ++r) {
        std::vector<int> rot(e.begin() + r, e.end());
        rot.insert(rot.end(), e.begin(), e.begin() + r);
        best = std::min(best, rot);
      }
      seen.insert(best);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, n);
  return seen.size();
}

}  // namespace

TEST_CASE("necklace counts against enumeration") {
  for (int n = 1; n <= 14; ++n) {
    std::uint64_t all = 0, w = 0;
    const auto row = nk::count_row(n);
    for (int k = 0; k <= n; ++k) {
      all += oracle::necklaces(n, k, false);
      const auto wk = oracle::necklaces(n, k, true);
      w += wk;
      REQUIRE(nk::W_k(n, k) == big(wk));
      if (k < static_cast<int>(row.values.size())) REQUIRE(row.values[k] == big(wk));
    }
    REQUIRE(nk::macmahon(n) == big(all));
    REQUIRE(nk::W(n) == big(w));
  }
  CHECK(nk::W(5) == 3);
  CHECK(nk::W(7) == 5);
  CHECK(nk::W_k(7, 2) == 2);
  CHECK(nk::W_k(10, 3) == 5);
  CHECK(nk::W_k(4, 0) == 1);
  CHECK(nk::W_k(4, 3) == 0);
  CHECK(nk::W(1) == 1);
  CHECK_THROWS_AS(nk::W(0), std::invalid_argument);
}

TEST_CASE("library brute force") {
  for (int n = 1; n <= 12; ++n) {
    CHECK(nk::brute_necklaces(n, {}) == nk::macmahon(n));
    CHECK(nk::brute_necklaces(n, {true, -1}) == nk::W(n));
    for (int k = 0; k <= n / 2; ++k) CHECK(nk::brute_necklaces(n, {true, k}) == nk::W_k(n, k));
  }
}

TEST_CASE("sign-shift classification") {
  for (int n = 1; n <= 12; ++n) {
    std::set<std::string> classes;
    std::uint64_t bad = 0;
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
      const auto rep = oracle::min_rotation(oracle::bits(m, n));
      if (classes.insert(rep).second && forbidden_by_shifting(rep)) ++bad;
    }
    const auto c = nk::classify_susy(n);
    REQUIRE(c.allowed.size() + c.forbidden.size() == classes.size());
    REQUIRE(c.forbidden.size() == bad);
    REQUIRE(nk::forbidden(n) == big(bad));
    REQUIRE(nk::allowed(n) == big(classes.size() - bad));
  }
  const auto c4 = nk::classify_susy(4);
  std::set<std::string> f;
  for (const auto& x : c4.forbidden) f.insert(x.representative);
  CHECK(f == std::set<std::string>{"0101", "1111"});
  CHECK_THROWS_AS(nk::classify_susy(21), std::invalid_argument);
}

TEST_CASE("sign-shift trace") {
  const auto tr = nk::susy_trace("0011");
  REQUIRE(tr.size() == 4);
  CHECK(tr[0] == std::pair<int, std::string>{-1, "1001"});
  CHECK(tr[1] == std::pair<int, std::string>{1, "1100"});
  CHECK(tr[3] == std::pair<int, std::string>{1, "0011"});
  CHECK(nk::susy_trace("0101").back().first == -1);
}

TEST_CASE("row-sum polynomial routes") {
  CHECK(nk::rowsum_poly(5) == poly::IntPolynomial{1, 1, 1});
  CHECK(nk::rowsum_poly_via_V(5) == poly::IntPolynomial{1, 1, 1});
  CHECK(nk::rowsum_poly_prime(5) == poly::IntPolynomial{1, 1, 1});
  for (std::uint64_t n = 1; n <= 60; ++n) {
    REQUIRE(nk::rowsum_poly(n) == nk::rowsum_poly_via_V(n));
    REQUIRE(nk::rowsum_poly(n).evaluate(BigInt(1)) == nk::W(n));
    if (numtheory::is_prime(n)) REQUIRE(nk::rowsum_poly_prime(n) == nk::rowsum_poly(n));
  }
  CHECK_THROWS_AS(nk::rowsum_poly_prime(9), std::invalid_argument);
  // V_m(1) is the Lucas number L_m.
  for (std::uint64_t m = 1; m <= 40; ++m) REQUIRE(nk::V_poly(m).evaluate(BigInt(1)) == oracle::lucas(static_cast<int>(m)));
}

TEST_CASE("Catalan diagonal and Lucas sums") {
  for (std::uint64_t k = 0; k <= 30; ++k) REQUIRE(nk::W_k(3 * k + 1, static_cast<std::int64_t>(k)) == numtheory::catalan(k));
  for (std::uint64_t n = 1; n <= 100; ++n) {
    BigInt s = 0;
    for (auto d : oracle::divisors(n)) s += numtheory::euler_phi(n / d) * oracle::lucas(static_cast<int>(d));
    REQUIRE(s == nk::W(n) * big(n));
    Rational want(oracle::lucas(static_cast<int>(n)), big(n));
    want.canonicalize();
    REQUIRE(nk::lucas_ratio_sum(n) == want);
  }
}

TEST_CASE("diagonal generating functions") {
  // k = 2: W_2(n) for n = 4, 5, ...
  const auto s = poly::series_coefficients(nk::diagonal_gf(2), 12);
  for (std::uint64_t n = 4; n < 12; ++n) CHECK(s[n] == Rational(nk::W_k(n, 2)));
  for (std::uint64_t k = 1; k <= 8; ++k) {
    const auto sk = poly::series_coefficients(nk::diagonal_gf(k), 2 * k + 30);
    for (std::uint64_t n = 0; n < 2 * k + 30; ++n) {
      const BigInt want = n >= 1 ? nk::W_k(n, static_cast<std::int64_t>(k)) : BigInt(0);
      REQUIRE(sk[n] == Rational(want));
    }
  }
  // the denominator is a signed product of cyclotomic powers
  for (std::uint64_t k = 1; k <= 12; ++k) {
    poly::IntPolynomial prod{1};
    for (auto d : oracle::divisors(k)) prod = prod * numtheory::cyclotomic(d).pow(k / d);
    if (k % 2) prod = -prod;
    REQUIRE(nk::diagonal_denominator(k) == prod);
  }
}

TEST_CASE("Molien series") {
  for (int k = 1; k <= 5; ++k) {
    const auto s = poly::series_coefficients(nk::molien_series(k), 12);
    for (int n = 0; n < 12; ++n) {
      REQUIRE(s[n] == Rational(big(cyclic_monomials(n, k))));
      REQUIRE(nk::molien_zk(n, k) == big(cyclic_monomials(n, k)));
    }
  }
  const auto s1 = nk::molien_s2(1, 5);
  CHECK(s1 == std::vector<Rational>{1, 1, 2, 2, 3});
  for (std::uint64_t m = 1; m <= 5; ++m) {
    const auto s = nk::molien_s2(m, 30);
    const auto col = static_cast<std::int64_t>(2 * m - 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
      REQUIRE(s[i] == Rational(config::necklace_binomial(static_cast<std::int64_t>(i) + col, col)));
    }
  }
  CHECK_THROWS_AS(nk::molien_s2(0, 3), std::invalid_argument);
}
