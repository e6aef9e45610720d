#include "bracelet/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bracelet/configurations.hpp"
#include "bracelet/curve.hpp"
#include "bracelet/necklaces.hpp"
#include "bracelet/numtheory.hpp"
#include "bracelet/shape.hpp"

namespace bracelet::verify {

namespace nt = numtheory;
using config::necklace_binomial;
using poly::IntPolynomial;

Suite parse_suite(std::string_view name) {
  if (name == "identities") return Suite::identities;
  if (name == "oracles") return Suite::oracles;
  if (name == "curve") return Suite::curve;
  if (name == "all") return Suite::all;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "' (identities, oracles, curve, all)");
}

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

void Report::print(std::ostream& os) const {
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass && !c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  for (const auto& n : notes) os << "REPORT " << n << '\n';
}

namespace {

using Probe = std::function<std::optional<std::string>()>;

template <class... Ts>
std::string cat(const Ts&... parts) {
  std::ostringstream os;
  os.precision(12);
  (os << ... << parts);
  return os.str();
}

void check(Report& r, std::string name, const Probe& probe) {
  try {
    auto ce = probe();
    r.checks.push_back({std::move(name), !ce.has_value(), ce.value_or("")});
  } catch (const std::exception& e) {
    r.checks.push_back({std::move(name), false, cat("exception: ", e.what())});
  }
}

std::vector<BigInt> triangle_row(int t) {
  std::vector<BigInt> row;
  for (int k = 0; k <= t; ++k) row.push_back(necklace_binomial(t, k));
  return row;
}

void append(Report& into, Report&& from) {
  for (auto& c : from.checks) into.checks.push_back(std::move(c));
  for (auto& n : from.notes) into.notes.push_back(std::move(n));
}

}  // namespace

Report identities(const Caps& caps) {
  Report r;
  const int T = caps.tmax;

  check(r, "numtheory.phi_divisor_sum n<=10000", []() -> std::optional<std::string> {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
      BigInt s = 0;
      for (auto d : nt::divisors(n)) s += nt::euler_phi(d);
      if (s != from_u64(n)) return cat("n=", n, " sum=", s.get_str());
    }
    return std::nullopt;
  });
  check(r, "numtheory.moebius_divisor_sum n<=10000", []() -> std::optional<std::string> {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
      long s = 0;
      for (auto d : nt::divisors(n)) s += nt::moebius(d);
      if (s != (n == 1 ? 1 : 0)) return cat("n=", n, " sum=", s);
    }
    return std::nullopt;
  });
  check(r, "numtheory.binomial_pascal n<=200", []() -> std::optional<std::string> {
    for (int n = 1; n <= 200; ++n) {
      for (int k = 0; k <= n; ++k) {
        if (nt::binomial(n, k) != nt::binomial(n - 1, k - 1) + nt::binomial(n - 1, k)) return cat("n=", n, " k=", k);
      }
    }
    return std::nullopt;
  });
  check(r, cat("triangle.symmetry t<=", T), [T]() -> std::optional<std::string> {
    for (int t = 0; t <= T; ++t) {
      for (int k = 0; k <= t; ++k) {
        if (necklace_binomial(t, k) != necklace_binomial(t, t - k)) return cat("t=", t, " k=", k);
      }
    }
    return std::nullopt;
  });
  check(r, cat("triangle.pascal_type 2<=t<=", T), [T]() -> std::optional<std::string> {
    for (int t = 2; t <= T; ++t) {
      for (int k = 0; k <= t; ++k) {
        const BigInt rhs = necklace_binomial(t - 2, k - 2) + nt::binomial(t - 2, k - 1) + necklace_binomial(t - 2, k);
        if (necklace_binomial(t, k) != rhs) return cat("t=", t, " k=", k);
      }
    }
    return std::nullopt;
  });
  check(r, cat("triangle.row_sum t<=", T), [T]() -> std::optional<std::string> {
    for (int t = 1; t <= T; ++t) {
      BigInt s = 0;
      for (int k = 0; k <= t; ++k) s += necklace_binomial(t, k);
      if (s != pow2(t - 1) + pow2((t - 1) / 2)) return cat("t=", t, " sum=", s.get_str());
    }
    return std::nullopt;
  });
  check(r, "gbar.symmetry k,m<=60", []() -> std::optional<std::string> {
    for (int k = 0; k <= 60; ++k) {
      for (int m = 0; m <= 60; ++m) {
        if (config::gbar(k, m) != config::gbar(m, k)) return cat("k=", k, " m=", m);
        if (config::gbar(k, m) != necklace_binomial(m + k, k)) return cat("gbar(", k, ",", m, ") != binom_N");
      }
    }
    return std::nullopt;
  });
  check(r, cat("necklace_poly.coefficients t<=", T), [T]() -> std::optional<std::string> {
    for (int t = 0; t <= T; ++t) {
      if (config::necklace_poly(t) != IntPolynomial(triangle_row(t))) return cat("t=", t);
    }
    return std::nullopt;
  });
  // The odd-multiple divisibility holds for j = 1 and even j only; odd j >= 3
  // goes to a REPORT.
  check(r, "necklace_poly.divisibility j even or 1, j(2s-1)<=120", []() -> std::optional<std::string> {
    for (int j = 1; j <= 120; j += (j == 1 ? 1 : 2)) {
      for (int m = 3; m * j <= 120; m += 2) {
        if (!poly::divides(config::necklace_poly(j), config::necklace_poly(m * j))) return cat("j=", j, " t=", m * j);
      }
    }
    return std::nullopt;
  });
  check(r, cat("triangle.unimodal_logconcave t<=", T), [T]() -> std::optional<std::string> {
    for (int t = 0; t <= T; ++t) {
      const auto row = triangle_row(t);
      if (!poly::is_unimodal(row)) return cat("t=", t, " not unimodal");
      if (!poly::is_logconcave(row)) return cat("t=", t, " not log-concave");
    }
    return std::nullopt;
  });
  check(r, "gen2.column k<=20 terms=60", []() -> std::optional<std::string> {
    for (int k = 0; k <= 20; ++k) {
      const auto c = config::gf_column_check(k, 60);
      if (!c.ok) return cat("k=", k, " t=", *c.mismatch);
    }
    return std::nullopt;
  });
  check(r, "molien_s2.column m<=10 terms=60", []() -> std::optional<std::string> {
    for (std::uint64_t m = 1; m <= 10; ++m) {
      const auto s = necklaces::molien_s2(m, 60);
      for (std::size_t i = 0; i < s.size(); ++i) {
        const auto col = static_cast<std::int64_t>(2 * m - 1);
        if (s[i] != Rational(necklace_binomial(static_cast<std::int64_t>(i) + col, col))) return cat("m=", m, " i=", i);
      }
    }
    return std::nullopt;
  });
  check(r, "necklaces.allowed_plus_forbidden n<=500", []() -> std::optional<std::string> {
    for (std::uint64_t n = 1; n <= 500; ++n) {
      if (necklaces::allowed(n) + necklaces::forbidden(n) != necklaces::macmahon(n)) return cat("n=", n);
    }
    return std::nullopt;
  });
  check(r, "W.row_sum n<=300", []() -> std::optional<std::string> {
    for (std::uint64_t n = 1; n <= 300; ++n) {
      BigInt s = 0;
      for (const auto& v : necklaces::count_row(n).values) s += v;
      if (s != necklaces::W(n)) return cat("n=", n);
    }
    return std::nullopt;
  });
  check(r, "W.catalan k<=40", []() -> std::optional<std::string> {
    for (std::int64_t k = 1; k <= 40; ++k) {
      if (necklaces::W_k(static_cast<std::uint64_t>(3 * k + 1), k) != nt::catalan(static_cast<std::uint64_t>(k))) {
        return cat("k=", k);
      }
    }
    return std::nullopt;
  });
  check(r, "W.lucas_ratio_sum n<=300", []() -> std::optional<std::string> {
    for (std::uint64_t n = 1; n <= 300; ++n) {
      Rational want(nt::lucas(static_cast<std::int64_t>(n)), from_u64(n));
      want.canonicalize();
      if (necklaces::lucas_ratio_sum(n) != want) return cat("n=", n);
    }
    return std::nullopt;
  });
  check(r, "rowsum.V_route_and_lucas_value n<=100", []() -> std::optional<std::string> {
    for (std::uint64_t n = 1; n <= 100; ++n) {
      const auto f = necklaces::rowsum_poly(n);
      if (f != necklaces::rowsum_poly_via_V(n)) return cat("n=", n, " W_k row != V route");
      if (f.evaluate(BigInt(1)) != necklaces::W(n)) return cat("n=", n, " F_n(1) != W(n)");
    }
    return std::nullopt;
  });
  check(r, "rowsum.prime_case p<=31", []() -> std::optional<std::string> {
    for (std::uint64_t p = 2; p <= 31; ++p) {
      if (!nt::is_prime(p)) continue;
      if (necklaces::rowsum_poly_prime(p) != necklaces::rowsum_poly_via_V(p)) return cat("p=", p);
    }
    return std::nullopt;
  });
  check(r, "diagonal_gf.series k<=20 n<=2k+60", []() -> std::optional<std::string> {
    for (std::uint64_t k = 1; k <= 20; ++k) {
      const auto s = poly::series_coefficients(necklaces::diagonal_gf(k), 2 * k + 61);
      for (std::uint64_t n = 2 * k; n <= 2 * k + 60; ++n) {
        if (s[n] != Rational(necklaces::W_k(n, static_cast<std::int64_t>(k)))) return cat("k=", k, " n=", n);
      }
    }
    return std::nullopt;
  });
  check(r, "diagonal_gf.cyclotomic_denominator k<=40", []() -> std::optional<std::string> {
    for (std::uint64_t k = 1; k <= 40; ++k) {
      IntPolynomial prod{1};
      for (auto d : nt::divisors(k)) prod = prod * nt::cyclotomic(d).pow(k / d);
      // (1 - x^d) = -(x^d - 1), so the two products differ by (-1)^k.
      if (k % 2 == 1) prod = -prod;
      if (necklaces::diagonal_denominator(k) != prod) return cat("k=", k);
    }
    return std::nullopt;
  });
  check(r, "molien_zk.series k<=10 n<60", []() -> std::optional<std::string> {
    for (std::uint64_t k = 1; k <= 10; ++k) {
      const auto s = poly::series_coefficients(necklaces::molien_series(k), 60);
      for (std::uint64_t n = 0; n < 60; ++n) {
        if (s[n] != Rational(necklaces::molien_zk(n, k))) return cat("k=", k, " n=", n);
      }
    }
    return std::nullopt;
  });
  check(r, "lucas.congruence_p p<1000", []() -> std::optional<std::string> {
    for (std::uint64_t p = 2; p < 1000; ++p) {
      if (!nt::is_prime(p)) continue;
      const BigInt lp = nt::lucas(static_cast<std::int64_t>(p));
      if ((lp - 1) % from_u64(p) != 0) return cat("p=", p);
    }
    return std::nullopt;
  });
  // L_{p^2} = L_p mod p^2, which follows from p^2 W(p^2) = L_{p^2} + (p-1) L_p + p(p-1).
  check(r, "lucas.congruence_p2 p<=31", []() -> std::optional<std::string> {
    for (std::uint64_t p = 2; p <= 31; ++p) {
      if (!nt::is_prime(p)) continue;
      const BigInt lp = nt::lucas(static_cast<std::int64_t>(p));
      const BigInt lp2 = nt::lucas(static_cast<std::int64_t>(p * p));
      if ((lp2 - lp) % from_u64(p * p) != 0) return cat("p=", p);
    }
    return std::nullopt;
  });

  for (auto& n : gen3_notes(6)) r.notes.push_back(std::move(n));
  for (auto& n : beta_sum_notes(12)) r.notes.push_back(std::move(n));
  for (auto& n : depth_notes(std::min(T, 60), 3)) r.notes.push_back(std::move(n));
  for (auto& n : divisibility_notes(120)) r.notes.push_back(std::move(n));
  for (auto& n : lucas_p2_notes(31)) r.notes.push_back(std::move(n));
  // Small N_{2^j}: any earlier N_t (degree >= 1) dividing them.
  for (int j = 1; j <= 6; ++j) {
    const int t = 1 << j;
    const auto target = config::necklace_poly(t);
    std::string found;
    for (int s = 1; s < t; ++s) {
      if (poly::divides(config::necklace_poly(s), target)) found += cat(found.empty() ? "" : ",", s);
    }
    r.notes.push_back(cat("N_", t, " exact divisors among N_1..N_", t - 1, ": ", found.empty() ? "none" : found));
  }
  return r;
}

Report oracles(const Caps& caps) {
  Report r;
  const int N = caps.oracle_n;
  using config::ConfigMode;

  check(r, "g.closed_vs_recurrence n<=60", []() -> std::optional<std::string> {
    for (int n = -1; n <= 60; ++n) {
      for (int k = 0; k <= n + 1; ++k) {
        if (config::necklace_binomial(n - k + 1, k) != config::g_recurrence(k, n)) return cat("k=", k, " n=", n);
      }
    }
    return std::nullopt;
  });
  check(r, "g.worked_examples", []() -> std::optional<std::string> {
    if (config::g(2, 4) != 2) return std::string("g(2,4)");
    if (config::g(3, 7) != 6) return std::string("g(3,7)");
    if (config::g(2, 6) != 6) return std::string("g(2,6)");
    return std::nullopt;
  });
  auto brute_check = [&](const char* label, ConfigMode mode, BigInt (*closed)(std::int64_t, std::int64_t)) {
    check(r, cat(label, ".brute 0<=k<=n<=", N), [=]() -> std::optional<std::string> {
      for (int n = 0; n <= N; ++n) {
        const auto row = config::brute_configuration_row(n, mode);
        for (int k = 0; k <= n; ++k) {
          if (closed(k, n) != row[static_cast<std::size_t>(k)]) {
            return cat("k=", k, " n=", n, " closed=", closed(k, n).get_str(), " brute=", row[static_cast<std::size_t>(k)].get_str());
          }
        }
      }
      return std::nullopt;
    });
  };
  brute_check("g", ConfigMode::no_adjacent, &config::g);
  brute_check("beta", ConfigMode::medallion_left, &config::beta);
  brute_check("Z", ConfigMode::full, &config::Z);
  check(r, cat("beta.via_g 0<=k<=n<=", N), [N]() -> std::optional<std::string> {
    for (int n = 0; n <= N; ++n) {
      for (int k = 0; k <= n; ++k) {
        if (config::beta(k, n) != config::beta_from_g(k, n)) return cat("k=", k, " n=", n);
      }
    }
    return std::nullopt;
  });
  check(r, cat("susy.classify n<=", caps.susy_n), [&caps]() -> std::optional<std::string> {
    for (int n = 1; n <= caps.susy_n; ++n) {
      const auto c = necklaces::classify_susy(n);
      const auto un = static_cast<std::uint64_t>(n);
      if (from_u64(c.allowed.size()) != necklaces::allowed(un)) return cat("n=", n, " allowed");
      if (from_u64(c.forbidden.size()) != necklaces::forbidden(un)) return cat("n=", n, " forbidden");
    }
    const auto c4 = necklaces::classify_susy(4);
    if (c4.forbidden.size() != 2 || c4.forbidden[0].representative != "0101" ||
        c4.forbidden[1].representative != "1111") {
      return std::string("n=4 forbidden set");
    }
    return std::nullopt;
  });
  check(r, cat("necklaces.brute n<=", caps.necklace_n), [&caps]() -> std::optional<std::string> {
    for (int n = 1; n <= caps.necklace_n; ++n) {
      const auto un = static_cast<std::uint64_t>(n);
      const auto all = kernels::necklace_counts(n, kernels::CyclicRule::any, kernels::Backend::openmp);
      BigInt total = 0;
      for (auto c : all) total += from_u64(c);
      if (total != necklaces::macmahon(un)) return cat("macmahon n=", n);
      const auto nr = kernels::necklace_counts(n, kernels::CyclicRule::no_adjacent_reds, kernels::Backend::openmp);
      BigInt w = 0;
      for (std::size_t k = 0; k < nr.size(); ++k) {
        w += from_u64(nr[k]);
        if (from_u64(nr[k]) != necklaces::W_k(un, static_cast<std::int64_t>(k))) return cat("W_k n=", n, " k=", k);
      }
      if (w != necklaces::W(un)) return cat("W n=", n);
    }
    return std::nullopt;
  });
  return r;
}

Report curve_suite(const Caps& caps) {
  Report r;
  const int T = caps.curve_tmax;
  std::vector<std::vector<curve::PointRecord>> sweep;
  check(r, cat("curve.roots_converge 1<=t<=", T), [&]() -> std::optional<std::string> {
    sweep = curve::necklace_point_sweep(1, T);
    return std::nullopt;
  });
  if (sweep.empty()) return r;

  check(r, cat("curve.residual 2<=t<=", T, " tol=1e-9"), [&]() -> std::optional<std::string> {
    for (const auto& recs : sweep) {
      for (const auto& rec : recs) {
        if (rec.t < 2 || !rec.point) continue;
        const double nr = curve::normalized_residual(*rec.point);
        if (!(nr <= 1e-9)) return cat("t=", rec.t, " root=", rec.root.re, "+", rec.root.im, "i residual=", nr);
      }
    }
    return std::nullopt;
  });
  check(r, cat("curve.real_part_in_[-1,0] t<=", T), [&]() -> std::optional<std::string> {
    constexpr double slack = 1e-12;
    for (const auto& recs : sweep) {
      for (const auto& rec : recs) {
        if (!(rec.root.re >= -1.0 - slack && rec.root.re <= slack)) return cat("t=", rec.t, " re=", rec.root.re);
        if (std::hypot(rec.root.re, rec.root.im) == 0.0) return cat("t=", rec.t, " zero root");
      }
    }
    return std::nullopt;
  });
  check(r, cat("curve.pole_guard t<=", T), [&]() -> std::optional<std::string> {
    for (const auto& recs : sweep) {
      std::size_t poles = 0;
      for (const auto& rec : recs) poles += rec.point ? 0 : 1;
      const auto t = recs.front().t;
      if (poles != static_cast<std::size_t>(t % 2)) return cat("t=", t, " poles=", poles);
    }
    return std::nullopt;
  });
  check(r, cat("curve.constraint t<=", T, " tol=1e-9"), [&]() -> std::optional<std::string> {
    for (const auto& recs : sweep) {
      for (const auto& rec : recs) {
        if (!rec.point) continue;
        const double a = rec.root.re;
        const double scale = std::max({1.0, rec.root.im * rec.root.im, std::abs(a * (a * a + a + 1.0) / (1.0 + a))});
        const double c = curve::curve_constraint_check(rec.root);
        if (!(std::abs(c) <= 1e-9 * scale)) return cat("t=", rec.t, " value=", c);
      }
    }
    return std::nullopt;
  });
  check(r, "curve.shift_48a4_residual tol=8eps*scale", [&]() -> std::optional<std::string> {
    const double eps = std::numeric_limits<double>::epsilon();
    for (const auto& recs : sweep) {
      for (const auto& rec : recs) {
        if (!rec.point) continue;
        const auto& p = *rec.point;
        const double d = std::abs(curve::residual_48a4(curve::shift_48a4(p)) - curve::residual(p));
        if (!(d <= 8.0 * eps * curve::residual_scale(p))) return cat("t=", rec.t, " diff=", d);
      }
    }
    return std::nullopt;
  });

  const double s3 = std::sqrt(3.0);
  const auto p0 = curve::CurvePoint::affine(1.0, 0.0);
  const auto p1 = curve::CurvePoint::affine(2.0, -s3);
  const auto p2 = curve::CurvePoint::affine(2.0, s3);
  check(r, "curve.P1+P1=P0 tol=1e-8", [&]() -> std::optional<std::string> {
    const auto s = curve::add(p1, p1);
    if (!curve::approx_equal(s, p0, 1e-8)) return cat("got (", s.u, ", ", s.v, ")");
    return std::nullopt;
  });
  check(r, "curve.2P3=P2 tol=1e-8", [&]() -> std::optional<std::string> {
    const auto table = curve::point_table_report(1e-9);
    const auto p3 = table.at(2).nearest;
    const auto s = curve::add(p3, p3);
    if (!curve::approx_equal(s, p2, 1e-8)) return cat("got (", s.u, ", ", s.v, ")");
    return std::nullopt;
  });
  check(r, "curve.group_law t<=8", [&]() -> std::optional<std::string> {
    std::vector<curve::CurvePoint> pts;
    for (int t = 2; t <= 8; ++t) {
      for (const auto& p : curve::necklace_points(t)) pts.push_back(p);
    }
    const auto inf = curve::CurvePoint::at_infinity();
    for (const auto& p : pts) {
      if (!(curve::add(p, inf) == p) || !(curve::add(inf, p) == p)) return cat("identity at u=", p.u);
      if (!curve::add(p, curve::negate(p)).infinity) return cat("inverse at u=", p.u);
      for (const auto& q : pts) {
        if (!curve::approx_equal(curve::add(p, q), curve::add(q, p), 1e-8)) return cat("commutativity u=", p.u, ",", q.u);
      }
    }
    return std::nullopt;
  });
  check(r, "curve.table_P1-P6 tol=1e-9", []() -> std::optional<std::string> {
    const auto table = curve::point_table_report(1e-9);
    for (std::size_t i = 0; i < 6; ++i) {
      if (!table[i].matches) return cat(table[i].name, " distance=", table[i].distance);
    }
    return std::nullopt;
  });
  check(r, "curve.octic_check tol=1e-6", []() -> std::optional<std::string> {
    const auto o = curve::octic_check();
    if (!(o.normalized_value <= 1e-6)) return cat("value=", o.normalized_value);
    return std::nullopt;
  });
  check(r, cat("curve.octic_divides_no_N_t t<=", caps.octic_tmax), [&caps]() -> std::optional<std::string> {
    const auto scan = curve::octic_divisibility_scan(caps.octic_tmax);
    if (!scan.dividing_t.empty()) return cat("t=", scan.dividing_t.front());
    return std::nullopt;
  });

  for (auto& n : point_table_notes()) r.notes.push_back(std::move(n));
  for (auto& n : closure_notes(T, caps.closure_tpairs)) r.notes.push_back(std::move(n));
  return r;
}

Report run(Suite suite, const Caps& caps) {
  Report r;
  if (suite == Suite::identities || suite == Suite::all) append(r, identities(caps));
  if (suite == Suite::oracles || suite == Suite::all) append(r, oracles(caps));
  if (suite == Suite::curve || suite == Suite::all) append(r, curve_suite(caps));
  return r;
}

std::vector<std::string> gen3_notes(int tmax) {
  const auto rep = config::gf_bivariate_check(tmax);
  std::vector<std::string> out;
  for (const auto& c : rep.conventions) {
    std::string first;
    if (!c.disagreements.empty()) {
      const auto [t, k] = c.disagreements.front();
      const auto& cell = rep.cells[static_cast<std::size_t>(t * (tmax + 1) + k)];
      first = cat("; first disagreement at (", t, ",", k, "): printed ", cell.printed.get_str());
    }
    out.push_back(cat("gen3 convention ", c.name, ": ", c.agree, "/", c.cells, " cells agree", first));
  }
  const auto& c00 = rep.cells.front();
  out.push_back(cat("gen3 cell (0,0): first term ", c00.first_term.get_str(), ", second term ",
                    c00.second_term.get_str()));
  out.push_back(cat("gen3 derived form ", rep.derived_form, ": ", rep.derived_agrees ? "agrees" : "disagrees",
                    " on all ", rep.cells.size(), " cells"));
  return out;
}

std::vector<std::string> beta_sum_notes(int tmax) {
  std::vector<std::string> out;
  int one = 0;
  int zero = 0;
  for (int t = 1; t <= tmax; ++t) {
    const auto b = config::beta_sum_check(t);
    one += b.holds_offset_one ? 1 : 0;
    zero += b.holds_offset_zero ? 1 : 0;
    out.push_back(cat("beta-sum t=", t, ": lhs=", b.lhs.get_str(), " t~=", b.t_tilde,
                      " rhs(F0=F1=1)=", b.rhs_offset_one.get_str(), " rhs(F0=0,F1=1)=", b.rhs_offset_zero.get_str()));
  }
  out.push_back(cat("beta-sum summary t<=", tmax, ": holds with F0=F1=1 for ", one, " values, with F0=0,F1=1 for ",
                    zero, " values"));
  return out;
}

std::vector<std::string> point_table_notes() {
  std::vector<std::string> out;
  for (const auto& row : curve::point_table_report(1e-9)) {
    out.push_back(cat("table ", row.name, " (N_", row.t, "): printed (", row.printed.u, ", ", row.printed.v,
                      ") normalized residual ", row.printed_residual,
                      row.matches ? "; matches computed point"
                                  : cat("; no computed point within tolerance, computed/printed ratio u ", row.ratio_u,
                                        " v ", row.ratio_v)));
  }
  return out;
}

std::vector<std::string> closure_notes(int tcatalog, int tpairs) {
  const auto c = curve::closure_report(tcatalog, tpairs);
  std::vector<std::string> out;
  out.push_back(cat("closure: ", c.pairs, " sums of points from N_t, t<=", tpairs, " against ", c.catalog_size,
                    " points of N_t, t<=", tcatalog, ": ", c.in_catalog, " necklace points, ", c.to_p0, " equal P0, ",
                    c.to_infinity, " at infinity, ", c.outside, " outside the catalogue"));
  std::string ex;
  for (const auto& [a, b, s] : c.examples) ex += cat(ex.empty() ? "" : " ", "N", a, "+N", b, "->N", s);
  if (!ex.empty()) out.push_back("closure examples: " + ex);
  return out;
}

std::vector<std::string> depth_notes(int tmax, int maxdepth) {
  std::map<int, std::vector<int>> by_depth;
  for (int t = 1; t <= tmax; ++t) {
    const auto row = triangle_row(t);
    by_depth[poly::logconcave_depth(row, maxdepth)].push_back(t);
  }
  std::vector<std::string> out;
  for (const auto& [d, ts] : by_depth) {
    std::string list;
    for (std::size_t i = 0; i < ts.size() && i < 12; ++i) list += cat(i ? "," : "", ts[i]);
    if (ts.size() > 12) list += ",...";
    out.push_back(cat("logconcave depth ", d, " (maxdepth ", maxdepth, ", t<=", tmax, "): ", ts.size(), " rows [", list, "]"));
  }
  return out;
}

std::vector<IndexPair> odd_multiple_failures(int tmax) {
  std::vector<IndexPair> out;
  for (int j = 1; j <= tmax; ++j) {
    const auto nj = config::necklace_poly(j);
    for (int m = 3; m * j <= tmax; m += 2) {
      if (!poly::divides(nj, config::necklace_poly(m * j))) out.emplace_back(j, m * j);
    }
  }
  return out;
}

std::vector<std::string> divisibility_notes(int tmax) {
  const auto fails = odd_multiple_failures(tmax);
  std::string list;
  std::set<int> js;
  for (std::size_t i = 0; i < fails.size(); ++i) {
    js.insert(fails[i].first);
    if (i < 8) list += cat(i ? " " : "", "N_", fails[i].first, "!|N_", fails[i].second);
  }
  bool all_odd = true;
  for (int j : js) all_odd = all_odd && j % 2 == 1 && j >= 3;
  return {cat("odd-multiple divisibility (t<=", tmax, "): ", fails.size(), " failing pairs",
              fails.empty() ? "" : cat(", first ", list), "; failing j all odd >= 3: ", all_odd ? "yes" : "no")};
}

std::vector<std::string> lucas_p2_notes(int pmax) {
  std::string bad;
  std::string residues;
  int count = 0;
  for (std::uint64_t p = 2; p <= static_cast<std::uint64_t>(pmax); ++p) {
    if (!nt::is_prime(p)) continue;
    const BigInt m = from_u64(p * p);
    BigInt res = (nt::lucas(static_cast<std::int64_t>(p * p)) - nt::lucas(static_cast<std::int64_t>(p)) - 1) % m;
    if (res < 0) res += m;
    if (res != 0) {
      ++count;
      bad += cat(bad.empty() ? "" : ",", p);
      residues += cat(residues.empty() ? "" : ",", BigInt(res - m).get_str());
    }
  }
  return {cat("lucas L_{p^2} - L_p - 1 mod p^2 (p<=", pmax, "): nonzero for ", count, " primes [", bad,
              "], signed residues [", residues, "]")};
}

}  // namespace bracelet::verify
