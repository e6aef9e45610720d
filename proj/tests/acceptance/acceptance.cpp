// Acceptance harness: one PASS/FAIL line per check, grouped by criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run one (N = 1..12, or "exempt")
//   acceptance --long          also scan the octic against N_t for t <= 1000

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bracelet/configurations.hpp"
#include "bracelet/curve.hpp"
#include "bracelet/io.hpp"
#include "bracelet/necklaces.hpp"
#include "bracelet/numtheory.hpp"
#include "bracelet/roots.hpp"
#include "bracelet/shape.hpp"
#include "bracelet/verify.hpp"
#include "cli.hpp"

using namespace bracelet;
namespace nt = bracelet::numtheory;
namespace nk = bracelet::necklaces;

namespace {

// Pinned budgets (seconds) and tolerances.
constexpr double kBudgetTriangle = 1.0;
constexpr double kBudgetRowSum = 1.0;
constexpr double kBudgetOracles = 30.0;
constexpr double kBudgetSusy = 60.0;
constexpr double kBudgetWLayer = 60.0;
constexpr double kBudgetLargeRoots = 600.0;
constexpr double kCurveResidualTol = 1e-9;
constexpr double kGroupTol = 1e-8;
constexpr double kOcticTol = 1e-6;
constexpr double kShiftUlps = 8.0;
constexpr double kRootTol = 1e-12;  // CLI default --tol

struct Line {
  std::string id;
  bool pass = false;
  std::string detail;
};

using Lines = std::vector<Line>;

class Stopwatch {
 public:
  [[nodiscard]] double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <class... Ts>
std::string cat(const Ts&... parts) {
  std::ostringstream os;
  os.precision(12);
  (os << ... << parts);
  return os.str();
}

std::string timing(double s, double budget) { return cat(" (", s, " s, budget ", budget, " s)"); }

int run(const std::vector<std::string>& args, std::string& out) {
  std::ostringstream o, e;
  const int code = cli::run_cli(args, o, e);
  out = o.str();
  return code;
}

// The printed table of necklace binomials, rows 1..10.
const std::vector<std::vector<int>> kPrintedTriangle = {
    {1, 1},
    {1, 1, 1},
    {1, 2, 2, 1},
    {1, 2, 4, 2, 1},
    {1, 3, 6, 6, 3, 1},
    {1, 3, 9, 10, 9, 3, 1},
    {1, 4, 12, 19, 19, 12, 4, 1},
    {1, 4, 16, 28, 38, 28, 16, 4, 1},
    {1, 5, 20, 44, 66, 66, 44, 20, 5, 1},
    {1, 5, 25, 60, 110, 126, 110, 60, 25, 5, 1},
};

Lines criterion1() {
  Stopwatch sw;
  std::string out;
  const int code = run({"triangle", "--tmax", "10"}, out);
  std::istringstream is(out);
  const auto tri = io::read_triangle_csv(is);
  std::string bad;
  for (int t = 1; t <= 10 && bad.empty(); ++t) {
    const auto& want = kPrintedTriangle[static_cast<std::size_t>(t - 1)];
    const auto& got = tri.rows[static_cast<std::size_t>(t)];
    if (got.size() != want.size()) bad = cat("row ", t, " length");
    for (std::size_t k = 0; k < want.size() && bad.empty(); ++k) {
      if (got[k] != want[k]) bad = cat("row ", t, " column ", k, ": ", got[k].get_str(), " != ", want[k]);
    }
  }
  const double s = sw.seconds();
  return {{"1", code == 0 && tri.tmax == 10 && bad.empty() && s < kBudgetTriangle,
           cat("triangle rows 1-10 equal the printed table", bad.empty() ? "" : ": " + bad, timing(s, kBudgetTriangle))}};
}

Lines criterion2() {
  Stopwatch sw;
  const auto tri = config::NecklaceTriangle::build(200);
  std::string bad;
  for (int t = 1; t <= 200 && bad.empty(); ++t) {
    BigInt sum = 0;
    for (const auto& v : tri.rows[static_cast<std::size_t>(t)]) sum += v;
    BigInt want = 1;
    want <<= static_cast<mp_bitcnt_t>(t - 1);
    BigInt half = 1;
    half <<= static_cast<mp_bitcnt_t>((t - 1) / 2);
    if (sum != want + half) bad = cat("t=", t);
  }
  const double s = sw.seconds();
  return {{"2", bad.empty() && s < kBudgetRowSum,
           cat("row sums equal 2^(t-1) + 2^floor((t-1)/2), t <= 200", bad.empty() ? "" : ": " + bad,
               timing(s, kBudgetRowSum))}};
}

Lines criterion3() {
  Stopwatch sw;
  std::string bad;
  for (int n = 0; n <= 14 && bad.empty(); ++n) {
    const auto g = config::brute_configuration_row(n, config::ConfigMode::no_adjacent);
    const auto b = config::brute_configuration_row(n, config::ConfigMode::medallion_left);
    const auto z = config::brute_configuration_row(n, config::ConfigMode::full);
    for (int k = 0; k <= n && bad.empty(); ++k) {
      if (config::g(k, n) != g[static_cast<std::size_t>(k)]) bad = cat("g k=", k, " n=", n);
      if (config::beta(k, n) != b[static_cast<std::size_t>(k)]) bad = cat("beta k=", k, " n=", n);
      if (config::Z(k, n) != z[static_cast<std::size_t>(k)]) bad = cat("Z k=", k, " n=", n);
    }
  }
  const double s = sw.seconds();
  return {{"3", bad.empty() && s < kBudgetOracles,
           cat("g, beta, Z equal exhaustive counts for 0 <= k <= n <= 14", bad.empty() ? "" : ": " + bad,
               timing(s, kBudgetOracles))}};
}

Lines criterion4() {
  const bool ok = config::g(2, 4) == 2 && config::g(3, 7) == 6 && config::g(2, 6) == 6;
  return {{"4", ok,
           cat("g_2(4) = ", config::g(2, 4).get_str(), ", g_3(7) = ", config::g(3, 7).get_str(),
               ", g_2(6) = ", config::g(2, 6).get_str())}};
}

Lines criterion5() {
  Stopwatch sw;
  std::string bad;
  for (int n = 1; n <= 16 && bad.empty(); ++n) {
    const auto c = nk::classify_susy(n);
    if (from_u64(c.allowed.size()) != nk::allowed(static_cast<std::uint64_t>(n)) ||
        from_u64(c.forbidden.size()) != nk::forbidden(static_cast<std::uint64_t>(n))) {
      bad = cat("n=", n);
    }
  }
  std::set<std::string> f4;
  for (const auto& x : nk::classify_susy(4).forbidden) f4.insert(x.representative);
  const bool set_ok = f4 == std::set<std::string>{"0101", "1111"};
  const double s = sw.seconds();
  return {{"5a", bad.empty() && s < kBudgetSusy,
           cat("sign-shift class counts equal the allowed/forbidden formulas, n <= 16", bad.empty() ? "" : ": " + bad,
               timing(s, kBudgetSusy))},
          {"5b", set_ok, "forbidden classes for n = 4 are exactly {0101, 1111}"}};
}

Lines criterion6() {
  Stopwatch sw;
  std::string a, b, c;
  for (std::uint64_t n = 1; n <= 300 && a.empty(); ++n) {
    BigInt sum = 0;
    for (std::int64_t k = 0; k <= static_cast<std::int64_t>(n / 2); ++k) sum += nk::W_k(n, k);
    if (sum != nk::W(n)) a = cat("n=", n);
  }
  for (std::uint64_t k = 0; k <= 40 && b.empty(); ++k) {
    if (nk::W_k(3 * k + 1, static_cast<std::int64_t>(k)) != nt::catalan(k)) b = cat("k=", k);
  }
  for (int n = 1; n <= 20 && c.empty(); ++n) {
    if (nk::brute_necklaces(n, {true, -1}) != nk::W(static_cast<std::uint64_t>(n))) c = cat("W n=", n);
    for (int k = 0; k <= n / 2 && c.empty(); ++k) {
      if (nk::brute_necklaces(n, {true, k}) != nk::W_k(static_cast<std::uint64_t>(n), k)) c = cat("W_k n=", n, " k=", k);
    }
  }
  const double s = sw.seconds();
  const bool in_time = s < kBudgetWLayer;
  return {{"6a", a.empty(), cat("sum_k W_k(n) = W(n), n <= 300", a.empty() ? "" : ": " + a)},
          {"6b", b.empty(), cat("W_k(3k+1) = Catalan(k), k <= 40", b.empty() ? "" : ": " + b)},
          {"6c", c.empty() && in_time,
           cat("brute necklace oracle matches W and W_k, n <= 20", c.empty() ? "" : ": " + c, timing(s, kBudgetWLayer))}};
}

Lines criterion7() {
  std::string a;
  for (std::uint64_t p = 2; p < 1000 && a.empty(); ++p) {
    if (!nt::is_prime(p)) continue;
    if ((nt::lucas(static_cast<std::int64_t>(p)) - 1) % from_u64(p) != 0) a = cat("p=", p);
  }
  std::string b;
  std::size_t primes = 0;
  std::size_t failing = 0;
  std::set<std::string> residues;
  for (std::uint64_t p = 2; p <= 31; ++p) {
    if (!nt::is_prime(p)) continue;
    ++primes;
    const BigInt m = from_u64(p * p);
    // signed residue in (-m/2, m/2]
    BigInt r = (nt::lucas(static_cast<std::int64_t>(p * p)) - nt::lucas(static_cast<std::int64_t>(p)) - 1) % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    if (r == 0) continue;
    ++failing;
    residues.insert(r.get_str());
    if (b.empty()) b = cat("first p=", p, ": L_", p * p, " - L_", p, " - 1 = ", r.get_str(), " mod ", m.get_str());
  }
  if (failing) {
    b += cat("; fails for ", failing, " of ", primes, " primes, signed residues {");
    for (const auto& r : residues) b += (r == *residues.begin() ? "" : ",") + r;
    b += "}";
  }
  return {{"7a", a.empty(), cat("L_p = 1 mod p for primes p < 1000", a.empty() ? "" : ": " + a)},
          {"7b", b.empty(), cat("L_{p^2} = L_p + 1 mod p^2 for primes p <= 31", b.empty() ? "" : ": " + b)}};
}

Lines criterion8() {
  std::string a, b, c;
  for (int k = 0; k <= 20 && a.empty(); ++k) {
    const auto r = config::gf_column_check(k, 60);
    if (!r.ok) a = cat("k=", k, " t=", *r.mismatch);
  }
  for (std::uint64_t m = 1; m <= 10 && b.empty(); ++m) {
    const auto s = nk::molien_s2(m, 60);
    const auto col = static_cast<std::int64_t>(2 * m - 1);
    for (std::size_t i = 0; i < s.size() && b.empty(); ++i) {
      if (s[i] != Rational(config::necklace_binomial(static_cast<std::int64_t>(i) + col, col))) b = cat("m=", m, " i=", i);
    }
  }
  for (std::uint64_t k = 1; k <= 20 && c.empty(); ++k) {
    const std::size_t terms = 2 * k + 61;
    const auto s = poly::series_coefficients(nk::diagonal_gf(k), terms);
    for (std::uint64_t n = 1; n < terms && c.empty(); ++n) {
      if (s[n] != Rational(nk::W_k(n, static_cast<std::int64_t>(k)))) c = cat("k=", k, " n=", n);
    }
  }
  return {{"8a", a.empty(), cat("column generating functions, k <= 20, 60 terms", a.empty() ? "" : ": " + a)},
          {"8b", b.empty(), cat("S2 Molien coefficients, m <= 10, 60 terms", b.empty() ? "" : ": " + b)},
          {"8c", c.empty(), cat("diagonal generating functions equal W_k(n), k <= 20", c.empty() ? "" : ": " + c)}};
}

Lines criterion9(bool long_scan) {
  std::string a;
  std::size_t failures = 0;
  for (int j = 1; j <= 120; ++j) {
    const auto nj = config::necklace_poly(j);
    for (int m = 3; m * j <= 120; m += 2) {
      if (!poly::divides(nj, config::necklace_poly(m * j))) {
        ++failures;
        if (a.empty()) a = cat("N_", j, " does not divide N_", m * j);
      }
    }
  }
  if (failures) a += cat(" (", failures, " failing pairs)");
  const auto scan = curve::octic_divisibility_scan(300);
  Lines out{{"9a", failures == 0, cat("N_j | N_{(2s-1)j} for all products <= 120", a.empty() ? "" : ": " + a)},
            {"9b", scan.dividing_t.empty(),
             cat("octic divides no N_t, t <= 300", scan.dividing_t.empty() ? "" : cat(": t=", scan.dividing_t.front()))}};
  if (long_scan) {
    const auto big = curve::octic_divisibility_scan(1000);
    out.push_back({"9c", big.dividing_t.empty(), "octic divides no N_t, t <= 1000"});
  }
  return out;
}

Lines criterion10() {
  std::string bad;
  std::size_t points = 0;
  const auto sweep = curve::necklace_point_sweep(2, 120);
  for (const auto& recs : sweep) {
    for (const auto& r : recs) {
      if (r.root.re < -1.0 || r.root.re > 0.0) {
        if (bad.empty()) bad = cat("t=", r.t, " root re ", r.root.re);
      }
      if (!r.point) continue;
      ++points;
      const double nres = std::abs(r.residual) / curve::residual_scale(*r.point);
      if (!(nres <= kCurveResidualTol) && bad.empty()) bad = cat("t=", r.t, " normalized residual ", nres);
    }
  }
  const auto n2 = curve::necklace_points(2);
  const auto p1 = n2.front();
  const auto p2 = n2.back();
  const auto doubled = curve::add(p1, p1);
  const bool b = curve::approx_equal(doubled, curve::CurvePoint::affine(1.0, 0.0), kGroupTol);
  curve::CurvePoint p3 = curve::CurvePoint::at_infinity();
  for (const auto& p : curve::necklace_points(6)) {
    if (p.v < 0.0 && (p3.infinity || p.u < p3.u)) p3 = p;
  }
  const auto twice = curve::add(p3, p3);
  const bool c = curve::approx_equal(twice, p2, kGroupTol);
  double worst_shift = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  for (const auto& recs : sweep) {
    for (const auto& r : recs) {
      if (!r.point) continue;
      const auto q = curve::shift_48a4(*r.point);
      const double d = std::abs(curve::residual_48a4(q) - curve::residual(*r.point)) / curve::residual_scale(*r.point);
      worst_shift = std::max(worst_shift, d / eps);
    }
  }
  const auto oc = curve::octic_check();
  return {{"10a", bad.empty() && points > 0,
           cat(points, " necklace points for 2 <= t <= 120: normalized residual <= ", kCurveResidualTol,
               " and re in [-1, 0]", bad.empty() ? "" : ": " + bad)},
          {"10b", b, cat("P1 + P1 = (1, 0) within ", kGroupTol, ": got (", doubled.u, ", ", doubled.v, ")")},
          {"10c", c, cat("2 P3 = P2 within ", kGroupTol, ": got (", twice.u, ", ", twice.v, ")")},
          {"10d", worst_shift <= kShiftUlps,
           cat("48a4 shift preserves the residual: worst difference ", worst_shift, " eps * scale (bound ", kShiftUlps, ")")},
          {"10e", oc.normalized_value <= kOcticTol,
           cat("octic at P1 + P7: ", oc.normalized_value, " (bound ", kOcticTol, ")")}};
}

Lines criterion11() {
  Stopwatch sw;
  std::string out;
  const int code = run({"roots", "--family", "necklace", "--t", "100"}, out);
  std::istringstream is(out);
  const auto rows = io::read_points_csv(is);
  std::size_t outside = 0;
  for (const auto& r : rows) {
    if (r.root_re < -1.0 || r.root_re > 0.0) ++outside;
  }
  poly::RootOptions opt;
  opt.tol = kRootTol;
  const auto f1000 = poly::find_roots(nk::rowsum_poly(1000), opt);
  double worst = 0.0;
  for (double e : f1000.backward_error) worst = std::max(worst, e);
  const double s = sw.seconds();
  const auto f200 = poly::find_roots(nk::rowsum_poly(200), opt);
  return {{"11a", code == 0 && rows.size() == 100 && outside == 0,
           cat("N_100 dump: ", rows.size(), " rows, ", outside, " with re outside [-1, 0]")},
          {"11b", f1000.converged() && f1000.roots.size() == 500 && s < kBudgetLargeRoots,
           cat("F_1000: ", f1000.roots.size(), " roots, ", f1000.failed.size(), " above backward error ", kRootTol,
               ", worst ", worst, timing(s, kBudgetLargeRoots))},
          {"11c", f200.converged() && f200.roots.size() == 100,
           cat("F_200: ", f200.roots.size(), " roots, ", f200.failed.size(), " above backward error ", kRootTol)}};
}

Lines criterion12() {
  std::string a;
  for (int t = 0; t <= 200 && a.empty(); ++t) {
    const auto row = config::NecklaceTriangle::build(t).rows.back();
    if (!poly::is_unimodal(row)) a = cat("t=", t, " not unimodal");
    if (!poly::is_logconcave(row)) a = cat("t=", t, " not log-concave");
  }
  std::vector<int> shallow;
  const auto tri = config::NecklaceTriangle::build(60);
  for (int t = 0; t <= 60; ++t) {
    if (poly::logconcave_depth(tri.rows[static_cast<std::size_t>(t)], 3) < 3) shallow.push_back(t);
  }
  std::string b;
  if (!shallow.empty()) {
    b = cat(shallow.size(), " rows below depth 3, first t =");
    for (std::size_t i = 0; i < shallow.size() && i < 6; ++i) b += cat(" ", shallow[i]);
    const auto& r8 = tri.rows[8];
    b += cat("; row 8 has binom_N(8,1)^2 = binom_N(8,0) binom_N(8,2) = ", BigInt(r8[1] * r8[1]).get_str(),
             " so the first iterate has a zero and the second goes negative");
  }
  return {{"12a", a.empty(), cat("rows t <= 200 are unimodal and log-concave", a.empty() ? "" : ": " + a)},
          {"12b", shallow.empty(), cat("logconcave_depth >= 3 for rows t <= 60", b.empty() ? "" : ": " + b)}};
}

// Disputed items: the report must be produced and be identical across runs.
Lines exempt() {
  auto gen = [] {
    std::vector<std::string> all;
    for (auto&& v : {verify::gen3_notes(6), verify::beta_sum_notes(12), verify::point_table_notes()}) {
      all.insert(all.end(), v.begin(), v.end());
    }
    return all;
  };
  const auto a = gen();
  const auto b = gen();
  Lines out{{"E", !a.empty() && a == b, cat("discrepancy reports are deterministic (", a.size(), " lines)")}};
  for (const auto& n : a) out.push_back({"E.note", true, n});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string only;
  bool long_scan = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      only = argv[++i];
    } else if (a == "--long") {
      long_scan = true;
    } else {
      std::cerr << "usage: acceptance [--criterion N|exempt] [--long]\n";
      return 2;
    }
  }
  const std::vector<std::pair<std::string, std::function<Lines()>>> criteria = {
      {"1", criterion1},   {"2", criterion2},   {"3", criterion3},
      {"4", criterion4},   {"5", criterion5},   {"6", criterion6},
      {"7", criterion7},   {"8", criterion8},   {"9", [&] { return criterion9(long_scan); }},
      {"10", criterion10}, {"11", criterion11}, {"12", criterion12},
      {"exempt", exempt},
  };
  bool any = false;
  bool all_pass = true;
  for (const auto& [id, fn] : criteria) {
    if (!only.empty() && only != id) continue;
    any = true;
    Lines lines;
    try {
      lines = fn();
    } catch (const std::exception& e) {
      lines = {{id, false, cat("exception: ", e.what())}};
    }
    for (const auto& l : lines) {
      if (l.id == "E.note") {
        std::cout << "REPORT " << l.detail << '\n';
        continue;
      }
      std::cout << (l.pass ? "PASS " : "FAIL ") << l.id << ' ' << l.detail << '\n';
      all_pass = all_pass && l.pass;
    }
  }
  if (!any) {
    std::cerr << "unknown criterion '" << only << "'\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}
