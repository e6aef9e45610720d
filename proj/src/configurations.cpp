#include "bracelet/configurations.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "bracelet/numtheory.hpp"

namespace bracelet::config {

using numtheory::binomial;
using poly::IntPolynomial;
using poly::RationalFunction;

BinaryArray BinaryArray::reflected() const {
  BinaryArray r{n, {}};
  for (auto it = marks.rbegin(); it != marks.rend(); ++it) r.marks.push_back(n + 1 - *it);
  return r;
}

bool BinaryArray::has_adjacent_marks() const {
  for (std::size_t i = 1; i < marks.size(); ++i) {
    if (marks[i] == marks[i - 1] + 1) return true;
  }
  return false;
}

std::string BinaryArray::to_string(char marked, char unmarked) const {
  std::string s(static_cast<std::size_t>(n), unmarked);
  for (int m : marks) s[static_cast<std::size_t>(m - 1)] = marked;
  return s;
}

BigInt f(std::int64_t k, std::int64_t n) { return binomial(n - k + 1, k); }

BigInt necklace_binomial(std::int64_t t, std::int64_t k) {
  if (k < 0 || k > t) return 0;
  const BigInt c = binomial(t, k);
  if (t % 2 == 0 && k % 2 == 1) return exact_div(c, 2, "necklace_binomial");
  return exact_div(c + binomial(t / 2, k / 2), 2, "necklace_binomial");
}

BigInt g_recurrence(std::int64_t k, std::int64_t n) {
  if (k < 0) return 0;
  if (k == 0) return n >= -1 ? BigInt(1) : BigInt(0);
  if (n < 2 * k - 1) return 0;
  if (k == 1) return from_i64((n + 1) / 2);
  thread_local std::map<std::pair<std::int64_t, std::int64_t>, BigInt> memo;
  const auto key = std::make_pair(k, n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigInt v = g_recurrence(k, n - 2) + g_recurrence(k - 2, n - 4) + binomial(n - k - 1, k - 1);
  memo.emplace(key, v);
  return v;
}

BigInt g(std::int64_t k, std::int64_t n) {
  BigInt closed = necklace_binomial(n - k + 1, k);
  if (n < -1) closed = 0;
#ifndef NDEBUG
  if (closed != g_recurrence(k, n)) {
    throw std::logic_error("g(" + std::to_string(k) + ", " + std::to_string(n) +
                           "): closed form and recurrence disagree");
  }
#endif
  return closed;
}

BigInt gbar(std::int64_t k, std::int64_t m) { return g(k, m + 2 * k - 1); }

BigInt beta(std::int64_t k, std::int64_t t) {
  BigInt s = necklace_binomial(t - k + 1, k);
  for (std::int64_t r = 2; r <= k; ++r) s += binomial(t - k, r - 2);
  return s;
}

BigInt beta_from_g(std::int64_t k, std::int64_t t) {
  BigInt s = g(k, t);
  for (std::int64_t r = 2; r <= k; ++r) s += f(k - r, t - r - 1);
  return s;
}

BigInt z_formula(std::int64_t k, std::int64_t t) {
  BigInt s = 0;
  // Both sums vanish once k - 2j < 0 or k - j < 0.
  for (std::int64_t j = 0; 2 * j <= k; ++j) s += necklace_binomial(t - k - 1, k - 2 * j);
  for (std::int64_t j = 0; j <= k; ++j) s += binomial(t - k - 1, k - j) * static_cast<long>((j + 1) / 2);
  return s;
}

BigInt Z(std::int64_t k, std::int64_t t) {
  if (k < 0 || k > t) return 0;
  if (k == t) return 1;
  return z_formula(k, t);
}

namespace {

kernels::ArrayRule to_rule(ConfigMode mode) {
  switch (mode) {
    case ConfigMode::no_adjacent:
      return kernels::ArrayRule::no_adjacent;
    case ConfigMode::medallion_left:
      return kernels::ArrayRule::medallion_left;
    case ConfigMode::full:
      return kernels::ArrayRule::full;
  }
  throw std::invalid_argument("unknown ConfigMode");
}

}  // namespace

std::vector<BigInt> brute_configuration_row(std::int64_t n, ConfigMode mode, kernels::Backend backend) {
  if (n < 0 || n > 28) {
    throw std::invalid_argument("brute_configurations: n must be in [0, 28], got " + std::to_string(n));
  }
  const auto counts = kernels::configuration_counts(static_cast<int>(n), to_rule(mode), backend);
  std::vector<BigInt> out;
  out.reserve(counts.size());
  for (auto c : counts) out.push_back(from_u64(c));
  return out;
}

BigInt brute_configurations(std::int64_t k, std::int64_t n, ConfigMode mode, kernels::Backend backend) {
  auto row = brute_configuration_row(n, mode, backend);
  if (k < 0 || k > n) return 0;
  return row[static_cast<std::size_t>(k)];
}

NecklaceTriangle NecklaceTriangle::build(int tmax) {
  if (tmax < 0) throw std::invalid_argument("NecklaceTriangle: tmax must be >= 0");
  NecklaceTriangle tri;
  tri.tmax = tmax;
  tri.rows.resize(static_cast<std::size_t>(tmax) + 1);
  for (int t = 0; t <= tmax; ++t) {
    auto& row = tri.rows[static_cast<std::size_t>(t)];
    row.reserve(static_cast<std::size_t>(t) + 1);
    for (int k = 0; k <= t; ++k) row.push_back(necklace_binomial(t, k));
  }
  return tri;
}

IntPolynomial necklace_poly(std::int64_t t) {
  if (t < 0) throw std::invalid_argument("necklace_poly: t must be >= 0");
  const auto ut = static_cast<std::size_t>(t);
  IntPolynomial sym = IntPolynomial{1, 0, 1}.pow(ut / 2);
  if (ut % 2 == 1) sym = sym * IntPolynomial{1, 1};
  return (IntPolynomial::binomial_power(1, 1, ut) + sym).divide_exact(2);
}

RationalFunction column_gf(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("column_gf: k must be >= 0");
  const auto a = static_cast<std::size_t>((k + 1) / 2);
  const auto c = static_cast<std::size_t>((k + 2) / 2);
  IntPolynomial num = IntPolynomial::binomial_power(1, 1, a) + IntPolynomial::binomial_power(1, -1, a);
  IntPolynomial den = IntPolynomial::binomial_power(1, -1, c) * IntPolynomial{1, 0, -1}.pow(a) * BigInt(2);
  return {std::move(num), std::move(den)};
}

ColumnCheck gf_column_check(std::int64_t k, std::size_t count) {
  ColumnCheck out;
  out.series = poly::series_coefficients(column_gf(k), count);
  for (std::size_t t = 0; t < count; ++t) {
    if (out.series[t] != Rational(necklace_binomial(static_cast<std::int64_t>(t) + k, k))) {
      out.ok = false;
      out.mismatch = t;
      break;
    }
  }
  return out;
}

namespace {

// Dense bivariate series of A/B on [0, n] x [0, n]; grid[i][j] is the
// coefficient of x^i y^j. Requires B(0,0) != 0.
using Grid = std::vector<std::vector<Rational>>;

Grid bivariate_series(const Grid& a, const Grid& b, int n) {
  const auto sz = static_cast<std::size_t>(n) + 1;
  auto at = [](const Grid& g, std::size_t i, std::size_t j) -> Rational {
    return i < g.size() && j < g[i].size() ? g[i][j] : Rational(0);
  };
  const Rational b00 = at(b, 0, 0);
  Grid c(sz, std::vector<Rational>(sz));
  for (std::size_t i = 0; i < sz; ++i) {
    for (std::size_t j = 0; j < sz; ++j) {
      Rational acc = at(a, i, j);
      for (std::size_t p = 0; p <= i && p < b.size(); ++p) {
        for (std::size_t q = 0; q <= j && q < b[p].size(); ++q) {
          if ((p == 0 && q == 0) || b[p][q] == 0) continue;
          acc -= b[p][q] * c[i - p][j - q];
        }
      }
      c[i][j] = acc / b00;
    }
  }
  return c;
}

Grid grid(std::initializer_list<std::tuple<int, int, long>> terms) {
  Grid g;
  for (auto [i, j, v] : terms) {
    if (g.size() <= static_cast<std::size_t>(i)) g.resize(static_cast<std::size_t>(i) + 1);
    auto& row = g[static_cast<std::size_t>(i)];
    if (row.size() <= static_cast<std::size_t>(j)) row.resize(static_cast<std::size_t>(j) + 1);
    row[static_cast<std::size_t>(j)] += v;
  }
  return g;
}

}  // namespace

BivariateReport gf_bivariate_check(int tmax) {
  if (tmax < 0 || tmax > 12) throw std::invalid_argument("gf_bivariate_check: tmax must be in [0, 12]");
  BivariateReport rep;
  rep.tmax = tmax;
  // 1 / (2(1 - x - y)) and (2 + x) / (2(1 - x^2 - y)) as printed.
  const Grid first = bivariate_series(grid({{0, 0, 1}}), grid({{0, 0, 2}, {1, 0, -2}, {0, 1, -2}}), tmax);
  const Grid second =
      bivariate_series(grid({{0, 0, 2}, {1, 0, 1}}), grid({{0, 0, 2}, {2, 0, -2}, {0, 1, -2}}), tmax);
  // Summing (1+y)^t x^t / 2 and the (1+y^2)^{floor(t/2)} (1+y)^{t mod 2} x^t / 2 part
  // term by term gives 1/(2(1 - x - xy)) + (1 + x + xy) / (2(1 - x^2 - x^2 y^2)).
  const Grid d1 = bivariate_series(grid({{0, 0, 1}}), grid({{0, 0, 2}, {1, 0, -2}, {1, 1, -2}}), tmax);
  const Grid d2 = bivariate_series(grid({{0, 0, 1}, {1, 0, 1}, {1, 1, 1}}),
                                   grid({{0, 0, 2}, {2, 0, -2}, {2, 2, -2}}), tmax);
  rep.derived_form = "1/(2(1-x-xy)) + (1+x+xy)/(2(1-x^2-x^2y^2))";

  struct Convention {
    const char* name;
    std::int64_t (*row)(int i, int j);
  };
  const Convention conventions[] = {
      {"x^t y^k", [](int i, int) -> std::int64_t { return i; }},
      {"x^(t-k) y^k", [](int i, int j) -> std::int64_t { return i + j; }},
      {"x^(t-1) y^k", [](int i, int) -> std::int64_t { return i + 1; }},
  };
  for (const auto& conv : conventions) rep.conventions.push_back({conv.name, 0, 0, {}});

  rep.derived_agrees = true;
  for (int t = 0; t <= tmax; ++t) {
    for (int k = 0; k <= tmax; ++k) {
      BivariateCell cell;
      cell.t = t;
      cell.k = k;
      cell.first_term = first[t][k];
      cell.second_term = second[t][k];
      cell.printed = cell.first_term + cell.second_term;
      cell.derived = d1[t][k] + d2[t][k];
      if (cell.derived != Rational(necklace_binomial(t, k))) rep.derived_agrees = false;
      for (std::size_t c = 0; c < std::size(conventions); ++c) {
        auto& summary = rep.conventions[c];
        ++summary.cells;
        if (cell.printed == Rational(necklace_binomial(conventions[c].row(t, k), k))) {
          ++summary.agree;
        } else {
          summary.disagreements.emplace_back(t, k);
        }
      }
      rep.cells.push_back(std::move(cell));
    }
  }
  return rep;
}

BetaSumReport beta_sum_check(std::int64_t t) {
  if (t < 1) throw std::invalid_argument("beta_sum_check: t must be >= 1");
  BetaSumReport rep;
  rep.t = t;
  for (std::int64_t k = 0; k <= t; ++k) rep.lhs += beta(k, t);
  rep.t_tilde = t / 2 + 2 + (t % 2 == 1 ? 1 : -1);
  const BigInt lt = numtheory::lucas(t + 2);
  rep.rhs_offset_one = Rational(lt + numtheory::fibonacci(rep.t_tilde), 2) - 1;
  rep.rhs_offset_zero = Rational(lt + numtheory::fibonacci_standard(rep.t_tilde), 2) - 1;
  rep.rhs_offset_one.canonicalize();
  rep.rhs_offset_zero.canonicalize();
  rep.holds_offset_one = Rational(rep.lhs) == rep.rhs_offset_one;
  rep.holds_offset_zero = Rational(rep.lhs) == rep.rhs_offset_zero;
  return rep;
}

}  // namespace bracelet::config
