#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "bracelet/configurations.hpp"
#include "bracelet/curve.hpp"
#include "bracelet/io.hpp"
#include "bracelet/kernels.hpp"
#include "bracelet/necklaces.hpp"
#include "bracelet/roots.hpp"
#include "bracelet/verify.hpp"

namespace bracelet::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  int tmax = 0;
  std::int64_t n = 0;
  std::int64_t k = -1;
  std::int64_t t = 0;
  std::int64_t tmin = 0;
  std::int64_t m = 0;
  std::size_t terms = 20;
  std::string family = "necklace";
  double tol = 1e-12;
  std::string out = "-";
  std::string in;
  std::string format = "csv";
  std::string window = "-2,2,-2,2";
  std::string coords = "root";
  std::string title;
  std::string suite = "all";
  std::string report = "points";
  int jobs = 0;
};

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    io::write_file(path, content);
  }
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw UsageError(msg);
}

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s;
}

int cmd_triangle(const Options& o, std::ostream& out) {
  require(o.tmax >= 1 && o.tmax <= kTriangleMax, "triangle: --tmax must be in [1, " + std::to_string(kTriangleMax) + "]");
  const auto tri = config::NecklaceTriangle::build(o.tmax);
  std::ostringstream os;
  if (o.format == "json") {
    io::write_triangle_json(os, tri);
  } else {
    io::write_triangle_csv(os, tri);
  }
  emit(o.out, os.str(), out);
  return kOk;
}

int cmd_counts(const Options& o, std::ostream& out, std::ostream& err) {
  require(o.n >= 1, "counts: --n must be >= 1");
  const auto n = static_cast<std::uint64_t>(o.n);
  const auto row = necklaces::count_row(n);
  std::ostringstream os;
  int status = kOk;
  if (o.format == "csv") {
    io::write_count_rows_csv(os, {row});
  } else {
    os << "n " << n << '\n'
       << "macmahon " << necklaces::macmahon(n) << '\n'
       << "allowed " << necklaces::allowed(n) << '\n'
       << "forbidden " << necklaces::forbidden(n) << '\n'
       << "W " << necklaces::W(n) << '\n'
       << "W_k " << join(row.values) << '\n';
    if (o.n <= kBruteMax) {
      const int ni = static_cast<int>(o.n);
      const auto all = kernels::necklace_counts(ni, kernels::CyclicRule::any, kernels::Backend::openmp);
      const auto free = kernels::necklace_counts(ni, kernels::CyclicRule::no_adjacent_reds, kernels::Backend::openmp);
      BigInt total = 0;
      BigInt w = 0;
      bool row_ok = true;
      for (std::size_t k = 0; k < all.size(); ++k) {
        total += BigInt(static_cast<unsigned long>(all[k]));
        w += BigInt(static_cast<unsigned long>(free[k]));
        const BigInt want = k < row.values.size() ? row.values[k] : BigInt(0);
        row_ok = row_ok && BigInt(static_cast<unsigned long>(free[k])) == want;
      }
      const bool ok = total == necklaces::macmahon(n) && w == necklaces::W(n) && row_ok;
      os << "oracle macmahon " << total << " W " << w << " W_k " << (row_ok ? "match" : "MISMATCH") << ": "
         << (ok ? "PASS" : "FAIL") << '\n';
      if (!ok) status = kVerifyFailed;
      if (ni <= 20) {
        const auto c = necklaces::classify_susy(ni);
        const bool sok = BigInt(static_cast<unsigned long>(c.allowed.size())) == necklaces::allowed(n) &&
                         BigInt(static_cast<unsigned long>(c.forbidden.size())) == necklaces::forbidden(n);
        os << "oracle allowed " << c.allowed.size() << " forbidden " << c.forbidden.size() << ": "
           << (sok ? "PASS" : "FAIL") << '\n';
        if (!sok) status = kVerifyFailed;
      }
    } else {
      os << "oracle skipped (n > " << kBruteMax << ")\n";
    }
  }
  emit(o.out, os.str(), out);
  if (status != kOk) err << "counts: oracle disagreement for n = " << n << '\n';
  return status;
}

poly::IntPolynomial family_poly(const std::string& family, std::int64_t t) {
  require(t >= 0, "--t must be >= 0");
  if (family == "necklace") return config::necklace_poly(t);
  if (family == "octic") return curve::octic();
  require(t >= 1, "--t must be >= 1 for family " + family);
  if (family == "rowsum") return necklaces::rowsum_poly(static_cast<std::uint64_t>(t));
  if (family == "V") return necklaces::V_poly(static_cast<std::uint64_t>(t));
  throw UsageError("unknown family '" + family + "'");
}

int cmd_poly(const Options& o, std::ostream& out) {
  const auto p = family_poly(o.family, o.t);
  std::ostringstream os;
  if (o.format == "json") {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& v : p.coefficients()) c.push_back(v.get_str());
    nlohmann::json doc;
    doc["family"] = o.family;
    doc["t"] = o.t;
    doc["coefficients"] = std::move(c);
    os << doc.dump() << '\n';
  } else {
    os << "k,coefficient\n";
    for (std::size_t k = 0; k < p.size(); ++k) os << k << ',' << p.coeff(k).get_str() << '\n';
  }
  emit(o.out, os.str(), out);
  return kOk;
}

int cmd_roots(const Options& o, std::ostream& out, std::ostream& err) {
  require(o.family == "necklace" || o.family == "rowsum", "roots: --family must be necklace or rowsum");
  const bool necklace = o.family == "necklace";
  const std::int64_t tmax = o.t;
  const std::int64_t tmin = o.tmin > 0 ? o.tmin : tmax;
  const std::int64_t first_ok = necklace ? 1 : 2;
  const std::int64_t cap = necklace ? kRootDegreeMax : 2 * kRootDegreeMax + 1;
  require(tmin >= first_ok && tmin <= tmax && tmax <= cap,
          "roots: need " + std::to_string(first_ok) + " <= --tmin <= --t <= " + std::to_string(cap) + " for family " +
              o.family);

  const auto count = static_cast<std::ptrdiff_t>(tmax - tmin + 1);
  std::vector<poly::RootReport> reports(static_cast<std::size_t>(count));
  poly::RootOptions opt;
  opt.tol = o.tol;
  opt.backend = count > 1 ? kernels::Backend::serial : kernels::Backend::openmp;
#pragma omp parallel for schedule(dynamic, 1) if (count > 1)
  for (std::ptrdiff_t i = count - 1; i >= 0; --i) {
    const std::int64_t t = tmin + i;
    const auto p = necklace ? config::necklace_poly(t) : necklaces::rowsum_poly(static_cast<std::uint64_t>(t));
    reports[static_cast<std::size_t>(i)] = poly::find_roots(p, opt);
  }

  std::vector<io::PointRow> rows;
  std::size_t failed = 0;
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const std::int64_t t = tmin + i;
    const auto& rep = reports[static_cast<std::size_t>(i)];
    for (std::size_t j : rep.failed) {
      const auto& r = rep.roots[j];
      err << "roots: " << o.family << " t=" << t << " root " << j << " (" << io::format_double(r.re) << ", "
          << io::format_double(r.im) << ") backward error " << io::format_double(rep.backward_error[j]) << " > "
          << io::format_double(o.tol) << '\n';
    }
    failed += rep.failed.size();
    if (necklace) {
      for (const auto& y : rep.roots) {
        io::PointRow row{"necklace", t, y.re, y.im, {}, {}, {}};
        if (std::abs(1.0 + y.re) >= curve::kPoleEps) {
          const auto p = curve::root_to_point(y);
          row.u = p.u;
          row.v = p.v;
          row.residual = curve::residual(p);
        }
        rows.push_back(std::move(row));
      }
    } else {
      auto more = io::rowsum_rows(t, rep.roots);
      rows.insert(rows.end(), more.begin(), more.end());
    }
  }
  std::ostringstream os;
  io::write_points_csv(os, rows);
  emit(o.out, os.str(), out);
  return failed ? kVerifyFailed : kOk;
}

std::string point_text(const curve::CurvePoint& p) {
  if (p.infinity) return "O";
  return "(" + io::format_double(p.u) + ", " + io::format_double(p.v) + ")";
}

int cmd_curve(const Options& o, std::ostream& out) {
  std::ostringstream os;
  if (o.report == "points") {
    require(o.t >= 1 && o.t <= kRootDegreeMax, "curve: --t must be in [1, " + std::to_string(kRootDegreeMax) + "]");
    os << "t,u,v,residual,normalized_residual\n";
    auto pts = curve::necklace_points(o.t, 1e300);
    for (const auto& p : pts) {
      os << o.t << ',' << io::format_double(p.u) << ',' << io::format_double(p.v) << ','
         << io::format_double(curve::residual(p)) << ',' << io::format_double(curve::normalized_residual(p)) << '\n';
    }
  } else if (o.report == "table") {
    for (const auto& row : curve::point_table_report()) {
      os << row.name << " N_" << row.t << " printed " << point_text(row.printed) << " residual "
         << io::format_double(row.printed_residual) << " nearest " << point_text(row.nearest) << " distance "
         << io::format_double(row.distance);
      if (!row.matches) os << " ratio_u " << io::format_double(row.ratio_u) << " ratio_v " << io::format_double(row.ratio_v);
      os << (row.matches ? " match" : " mismatch") << '\n';
    }
  } else if (o.report == "octic") {
    const auto rep = curve::octic_check();
    os << "P1 " << point_text(rep.p1) << '\n'
       << "P7 " << point_text(rep.p7) << '\n'
       << "P1+P7 " << point_text(rep.sum) << '\n'
       << "octic(w)/scale " << io::format_double(rep.normalized_value) << '\n';
  } else if (o.report == "closure") {
    const std::int64_t tcat = o.tmax > 0 ? o.tmax : 40;
    const std::int64_t tpairs = o.t > 0 ? o.t : 12;
    require(tpairs <= tcat && tcat <= 400, "curve: closure needs --t <= --tmax <= 400");
    const auto rep = curve::closure_report(tcat, tpairs);
    os << "catalogue " << rep.catalog_size << " pairs " << rep.pairs << " infinity " << rep.to_infinity << " P0 "
       << rep.to_p0 << " in_catalogue " << rep.in_catalog << " outside " << rep.outside << '\n';
    for (const auto& [a, b, c] : rep.examples) os << "N" << a << "+N" << b << "->N" << c << '\n';
  } else if (o.report == "divisibility") {
    const std::int64_t tmax = o.tmax > 0 ? o.tmax : 300;
    require(tmax <= 1000, "curve: divisibility scan needs --tmax <= 1000");
    const auto scan = curve::octic_divisibility_scan(tmax);
    os << "octic divides N_t for t <= " << tmax << ":";
    if (scan.dividing_t.empty()) os << " none";
    for (auto t : scan.dividing_t) os << ' ' << t;
    os << '\n';
  } else {
    throw UsageError("curve: unknown --report '" + o.report + "'");
  }
  emit(o.out, os.str(), out);
  return kOk;
}

int cmd_molien(const Options& o, std::ostream& out) {
  std::ostringstream os;
  os << "n,coefficient\n";
  if (o.m > 0) {
    const auto c = necklaces::molien_s2(static_cast<std::uint64_t>(o.m), o.terms);
    for (std::size_t i = 0; i < c.size(); ++i) os << i << ',' << c[i].get_str() << '\n';
  } else {
    require(o.k >= 1, "molien: give --k >= 1 (cyclic group) or --m >= 1 (S2 action)");
    const auto c = poly::series_coefficients(necklaces::molien_series(static_cast<std::uint64_t>(o.k)), o.terms);
    for (std::size_t i = 0; i < c.size(); ++i) os << i << ',' << c[i].get_str() << '\n';
  }
  emit(o.out, os.str(), out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  verify::Caps caps;
  if (o.tmax > 0) caps.tmax = o.tmax;
  if (o.n > 0) caps.oracle_n = static_cast<int>(o.n);
  if (o.t > 0) caps.curve_tmax = static_cast<int>(o.t);
  require(caps.tmax <= kTriangleMax, "verify: --tmax must be <= " + std::to_string(kTriangleMax));
  require(caps.oracle_n <= kBruteMax, "verify: --n must be <= " + std::to_string(kBruteMax));
  require(caps.curve_tmax >= 2 && caps.curve_tmax <= 400, "verify: --t must be in [2, 400]");
  const auto rep = verify::run(verify::parse_suite(o.suite), caps);
  std::ostringstream os;
  rep.print(os);
  emit(o.out, os.str(), out);
  return rep.ok() ? kOk : kVerifyFailed;
}

int cmd_plot(const Options& o, std::ostream& out) {
  require(!o.in.empty(), "plot: --in is required");
  const auto window = io::parse_window(o.window);
  std::istringstream is(io::read_file(o.in));
  const auto rows = io::read_points_csv(is);
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : rows) {
    if (o.coords == "uv") {
      if (r.u) pts.emplace_back(*r.u, *r.v);
    } else {
      pts.emplace_back(r.root_re, r.root_im);
    }
  }
  io::ScatterOptions so;
  so.title = o.title;
  if (o.coords == "uv") {
    so.xlabel = "u";
    so.ylabel = "v";
  }
  const auto res = io::render_scatter(std::move(pts), window, so);
  emit(o.out, res.svg, out);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Necklace counting, polynomials, roots and curve points"};
  app.name("bracelet");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--jobs", o.jobs, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);

  auto* tri = app.add_subcommand("triangle", "rows 1..tmax of the necklace binomials");
  tri->add_option("--tmax", o.tmax)->required();
  tri->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  tri->add_option("--out", o.out)->capture_default_str();

  auto* cnt = app.add_subcommand("counts", "necklace counts for n beads, with brute-force cross-check");
  cnt->add_option("--n", o.n)->required();
  cnt->add_option("--format", o.format, "text or csv (the W_k row)")->check(CLI::IsMember({"text", "csv"}));
  cnt->add_option("--out", o.out);

  auto* pol = app.add_subcommand("poly", "coefficients of N_t, F_n, V_m or the octic");
  pol->add_option("--family", o.family)->check(CLI::IsMember({"necklace", "rowsum", "V", "octic"}))->capture_default_str();
  pol->add_option("--t,--n", o.t, "index t (or n, m)");
  pol->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  pol->add_option("--out", o.out);

  auto* rts = app.add_subcommand("roots", "roots of N_t or F_n as a point-dump CSV");
  rts->add_option("--family", o.family)->check(CLI::IsMember({"necklace", "rowsum"}))->capture_default_str();
  rts->add_option("--t,--n", o.t, "index (upper end of a sweep)")->required();
  rts->add_option("--tmin", o.tmin, "lower end of a sweep");
  rts->add_option("--tol", o.tol, "per-root backward-error bound")->check(CLI::PositiveNumber)->capture_default_str();
  rts->add_option("--out", o.out);

  auto* crv = app.add_subcommand("curve", "necklace points and curve reports");
  crv->add_option("--report", o.report)
      ->check(CLI::IsMember({"points", "table", "octic", "closure", "divisibility"}))
      ->capture_default_str();
  crv->add_option("--t", o.t);
  crv->add_option("--tmax", o.tmax);
  crv->add_option("--out", o.out);

  auto* mol = app.add_subcommand("molien", "Molien series coefficients (cyclic Z_k, or S2 with --m)");
  mol->add_option("--k", o.k);
  mol->add_option("--m", o.m);
  mol->add_option("--terms", o.terms)->check(CLI::Range(1, 100000))->capture_default_str();
  mol->add_option("--out", o.out);

  auto* ver = app.add_subcommand("verify", "run invariant suites; exit 1 on any FAIL");
  ver->add_option("--suite", o.suite)->check(CLI::IsMember({"identities", "oracles", "curve", "all"}))->capture_default_str();
  ver->add_option("--tmax", o.tmax, "triangle rows for identity checks");
  ver->add_option("--n", o.n, "brute-force oracle size");
  ver->add_option("--t", o.t, "largest necklace polynomial for curve checks");
  ver->add_option("--out", o.out);

  auto* plt = app.add_subcommand("plot", "SVG scatter of a point-dump CSV");
  plt->add_option("--in", o.in)->required();
  plt->add_option("--out", o.out);
  plt->add_option("--window", o.window, "xmin,xmax,ymin,ymax")->capture_default_str();
  plt->add_option("--coords", o.coords, "root (re, im) or uv (curve point)")->check(CLI::IsMember({"root", "uv"}));
  plt->add_option("--title", o.title);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (o.jobs > 0) kernels::set_threads(o.jobs);
    if (cnt->parsed() && o.format == "csv" && cnt->count("--format") == 0) o.format = "text";
    if (tri->parsed()) return cmd_triangle(o, out);
    if (cnt->parsed()) return cmd_counts(o, out, err);
    if (pol->parsed()) return cmd_poly(o, out);
    if (rts->parsed()) return cmd_roots(o, out, err);
    if (crv->parsed()) return cmd_curve(o, out);
    if (mol->parsed()) return cmd_molien(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (plt->parsed()) return cmd_plot(o, out);
  } catch (const io::IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const io::FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}

}  // namespace bracelet::cli
