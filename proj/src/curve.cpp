#include "bracelet/curve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "bracelet/configurations.hpp"

namespace bracelet::curve {

bool point_order(const CurvePoint& a, const CurvePoint& b) {
  if (a.infinity != b.infinity) return b.infinity;
  if (a.u != b.u) return a.u < b.u;
  return a.v < b.v;
}

CurvePoint root_to_point(const ComplexPoint& y, double eps) {
  const double s = 1.0 + y.re;
  if (std::abs(s) < eps) {
    std::ostringstream os;
    os.precision(17);
    os << "root_to_point: y = " << y.re << (y.im < 0 ? " - " : " + ") << std::abs(y.im)
       << "i lies on the pole |1 + re(y)| < " << eps;
    throw PoleError(os.str());
  }
  return CurvePoint::affine(1.0 / s, y.im / s);
}

double residual(const CurvePoint& p) {
  if (p.infinity) throw std::invalid_argument("residual: point at infinity");
  const double u = p.u;
  return p.v * p.v - (((u - 2.0) * u + 2.0) * u - 1.0);
}

double residual_scale(const CurvePoint& p) {
  if (p.infinity) throw std::invalid_argument("residual_scale: point at infinity");
  const double au = std::abs(p.u);
  return p.v * p.v + au * au * au + 2.0 * au * au + 2.0 * au + 1.0;
}

double normalized_residual(const CurvePoint& p) { return std::abs(residual(p)) / residual_scale(p); }

double curve_constraint_check(const ComplexPoint& y) {
  const double a = y.re;
  const double b = y.im;
  return b * b + a * (a * a + a + 1.0) / (1.0 + a);
}

CurvePoint negate(const CurvePoint& p) {
  if (p.infinity) return p;
  return CurvePoint::affine(p.u, -p.v);
}

namespace {

// Relative tolerance for "same abscissa" in the chord/tangent case split.
constexpr double kSameX = 1e-12;

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace

CurvePoint add(const CurvePoint& p, const CurvePoint& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  const double x1 = p.u, y1 = p.v, x2 = q.u, y2 = q.v;
  double lambda = 0.0;
  double nu = 0.0;
  if (!close(x1, x2, kSameX)) {
    lambda = (y2 - y1) / (x2 - x1);
    nu = (y1 * x2 - y2 * x1) / (x2 - x1);
  } else {
    if (close(y1, -y2, kSameX)) return CurvePoint::at_infinity();
    lambda = (3.0 * x1 * x1 - 4.0 * x1 + 2.0) / (2.0 * y1);
    nu = (-x1 * x1 * x1 + 2.0 * x1 - 2.0) / (2.0 * y1);
  }
  const double x3 = lambda * lambda + 2.0 - x1 - x2;
  return CurvePoint::affine(x3, -lambda * x3 - nu);
}

CurvePoint shift_48a4(const CurvePoint& p) {
  if (p.infinity) return p;
  return CurvePoint::affine(p.u - 1.0, p.v);
}

double residual_48a4(const CurvePoint& p) {
  if (p.infinity) throw std::invalid_argument("residual_48a4: point at infinity");
  const double u = p.u;
  return p.v * p.v - ((u + 1.0) * u + 1.0) * u;
}

bool approx_equal(const CurvePoint& p, const CurvePoint& q, double tol) {
  if (p.infinity || q.infinity) return p.infinity == q.infinity;
  return close(p.u, q.u, tol) && close(p.v, q.v, tol);
}

std::vector<PointRecord> necklace_point_records(std::int64_t t, double root_tol, kernels::Backend backend) {
  if (t < 1) throw std::invalid_argument("necklace_point_records: t must be >= 1");
  poly::RootOptions opt;
  opt.tol = root_tol;
  opt.backend = backend;
  poly::RootReport rep = poly::find_roots(config::necklace_poly(t), opt);
  if (!rep.converged()) {
    std::ostringstream os;
    os << "necklace roots for t = " << t << ": " << rep.failed.size() << " roots exceed backward error " << root_tol;
    throw poly::RootFindingError(os.str(), std::move(rep));
  }
  std::vector<PointRecord> out;
  out.reserve(rep.roots.size());
  for (const auto& y : rep.roots) {
    PointRecord r{t, y, std::nullopt, 0.0};
    if (std::abs(1.0 + y.re) >= kPoleEps) {
      r.point = root_to_point(y);
      r.residual = residual(*r.point);
    }
    out.push_back(r);
  }
  return out;
}

std::vector<CurvePoint> necklace_points(std::int64_t t, double tol) {
  std::vector<CurvePoint> pts;
  for (const auto& r : necklace_point_records(t)) {
    if (!r.point) continue;
    if (!(std::abs(r.residual) <= tol * residual_scale(*r.point))) {
      std::ostringstream os;
      os.precision(17);
      os << "necklace_points(" << t << "): point (" << r.point->u << ", " << r.point->v << ") has residual "
         << r.residual << " above " << tol << " * scale";
      throw std::runtime_error(os.str());
    }
    pts.push_back(*r.point);
  }
  std::sort(pts.begin(), pts.end(), point_order);
  return pts;
}

std::vector<std::vector<PointRecord>> necklace_point_sweep(std::int64_t tmin, std::int64_t tmax, double root_tol) {
  if (tmin < 1 || tmax < tmin) throw std::invalid_argument("necklace_point_sweep: need 1 <= tmin <= tmax");
  const auto count = static_cast<std::ptrdiff_t>(tmax - tmin + 1);
  std::vector<std::vector<PointRecord>> out(static_cast<std::size_t>(count));
  std::vector<std::string> errors(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = count - 1; i >= 0; --i) {
    try {
      out[static_cast<std::size_t>(i)] = necklace_point_records(tmin + i, root_tol, kernels::Backend::serial);
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(i)] = e.what();
    }
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw std::runtime_error(e);
  }
  return out;
}

poly::IntPolynomial octic() { return {2245, -6040, 7156, -3988, 4858, -5236, 1948, -28, 1}; }

OcticReport octic_check() {
  OcticReport rep;
  const auto n2 = necklace_points(2);
  const auto n4 = necklace_points(4);
  rep.p1 = n2.front();  // v < 0
  rep.p7 = CurvePoint::affine(-std::numeric_limits<double>::infinity(), 0.0);
  for (const auto& p : n4) {
    if (p.v > 0.0 && p.u > rep.p7.u) rep.p7 = p;
  }
  rep.sum = add(rep.p1, rep.p7);
  rep.w = {rep.sum.u, rep.sum.v};
  using cld = std::complex<long double>;
  const cld w(rep.w.re, rep.w.im);
  cld acc = 0.0L;
  const auto oc = octic();
  for (std::size_t i = oc.size(); i-- > 0;) acc = acc * w + static_cast<long double>(oc.coeff(i).get_d());
  const long double scale = 7156.0L * std::pow(std::max(1.0L, std::abs(w)), 8.0L);
  rep.normalized_value = static_cast<double>(std::abs(acc) / scale);
  return rep;
}

DivisibilityScan octic_divisibility_scan(std::int64_t tmax) {
  if (tmax < 1 || tmax > 1000) throw std::invalid_argument("octic_divisibility_scan: tmax must be in [1, 1000]");
  DivisibilityScan scan;
  scan.tmax = tmax;
  const auto q = octic();
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(tmax) + 1, 0);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t t = tmax; t >= 1; --t) {
    hit[static_cast<std::size_t>(t)] = poly::divides(q, config::necklace_poly(t)) ? 1 : 0;
  }
  for (std::int64_t t = 1; t <= tmax; ++t) {
    if (hit[static_cast<std::size_t>(t)]) scan.dividing_t.push_back(t);
  }
  return scan;
}

std::vector<TableRow> point_table_report(double tol) {
  const double s3 = std::sqrt(3.0);
  const double s5 = std::sqrt(5.0);
  const double gamma = std::sqrt(3.0 + 2.0 * s3);
  const double delta = std::sqrt(s5 - 2.0);
  const double tau = std::sqrt(24.0 + 14.0 * s3);
  const double sigma = 2.0 * std::sqrt(2.0 * (11.0 + 5.0 * s5));
  const double w1 = 2.0 + s3;
  const double w2 = 2.0 * (3.0 + s5);
  const double w3 = 3.0 + 2.0 * s3;
  struct Printed {
    const char* name;
    std::int64_t t;
    double u, v;
  };
  const Printed printed[] = {
      {"P1", 2, 2.0, -s3},
      {"P2", 2, 2.0, s3},
      {"P3", 6, w1 - gamma, w3 - tau},
      {"P4", 6, w1 - gamma, -w3 + tau},
      {"P5", 6, w1 + gamma, -w3 - tau},
      {"P6", 6, w1 + gamma, w3 + tau},
      {"P7", 4, (1.0 + delta) * w2, w2 + sigma},
      {"P8", 4, (1.0 + delta) * w2, -(w2 + sigma)},
      {"P9", 4, (1.0 - delta) * w2, w2 - sigma},
      {"P10", 4, (1.0 - delta) * w2, -(w2 - sigma)},
  };
  std::vector<TableRow> rows;
  for (const auto& p : printed) {
    TableRow row;
    row.name = p.name;
    row.t = p.t;
    row.printed = CurvePoint::affine(p.u, p.v);
    row.printed_residual = normalized_residual(row.printed);
    row.distance = std::numeric_limits<double>::infinity();
    for (const auto& q : necklace_points(p.t)) {
      const double d = std::hypot(q.u - p.u, q.v - p.v);
      if (d < row.distance) {
        row.distance = d;
        row.nearest = q;
      }
    }
    // Pair with the computed point of matching signs and ordering by u.
    if (row.distance > tol * std::max({1.0, std::abs(p.u), std::abs(p.v)})) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : necklace_points(p.t)) {
        if ((q.v < 0) != (p.v < 0)) continue;
        const double d = std::abs(std::log(q.u / p.u) - std::log(std::abs(q.v / p.v)));
        if (d < best) {
          best = d;
          row.ratio_u = q.u / p.u;
          row.ratio_v = q.v / p.v;
        }
      }
      row.matches = false;
    } else {
      row.matches = true;
    }
    rows.push_back(row);
  }
  return rows;
}

namespace {

struct CatalogEntry {
  CurvePoint p;
  std::int64_t t;
};

// Smallest t among catalogue points within tol of p, or -1.
std::int64_t lookup(const std::vector<CatalogEntry>& cat, const CurvePoint& p, double tol) {
  const double slack = tol * std::max(1.0, std::abs(p.u));
  auto it = std::lower_bound(cat.begin(), cat.end(), p.u - slack,
                             [](const CatalogEntry& e, double u) { return e.p.u < u; });
  std::int64_t best = -1;
  for (; it != cat.end() && it->p.u <= p.u + slack; ++it) {
    if (approx_equal(it->p, p, tol) && (best < 0 || it->t < best)) best = it->t;
  }
  return best;
}

}  // namespace

ClosureReport closure_report(std::int64_t tcatalog, std::int64_t tpairs, double tol) {
  if (tpairs < 1 || tcatalog < tpairs) throw std::invalid_argument("closure_report: need 1 <= tpairs <= tcatalog");
  ClosureReport rep;
  rep.tcatalog = tcatalog;
  rep.tpairs = tpairs;
  const auto sweep = necklace_point_sweep(1, tcatalog);
  std::vector<CatalogEntry> cat;
  std::vector<CatalogEntry> base;
  for (const auto& recs : sweep) {
    for (const auto& r : recs) {
      if (!r.point) continue;
      cat.push_back({*r.point, r.t});
      if (r.t <= tpairs) base.push_back({*r.point, r.t});
    }
  }
  auto order = [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.p.u != b.p.u) return a.p.u < b.p.u;
    if (a.p.v != b.p.v) return a.p.v < b.p.v;
    return a.t < b.t;
  };
  std::sort(cat.begin(), cat.end(), order);
  std::sort(base.begin(), base.end(), order);
  rep.catalog_size = cat.size();

  struct Local {
    std::size_t pairs = 0, inf = 0, p0 = 0, in = 0, out = 0;
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> examples;
  };
  constexpr std::size_t kExamples = 12;
  const auto nb = static_cast<std::ptrdiff_t>(base.size());
  std::vector<Local> local(base.size());
  const CurvePoint p0 = CurvePoint::affine(1.0, 0.0);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < nb; ++i) {
    Local& l = local[static_cast<std::size_t>(i)];
    for (std::ptrdiff_t j = i; j < nb; ++j) {
      ++l.pairs;
      const auto& a = base[static_cast<std::size_t>(i)];
      const auto& b = base[static_cast<std::size_t>(j)];
      const CurvePoint s = approx_equal(a.p, negate(b.p), tol) ? CurvePoint::at_infinity() : add(a.p, b.p);
      if (s.infinity) {
        ++l.inf;
      } else if (approx_equal(s, p0, tol)) {
        ++l.p0;
      } else if (const auto t = lookup(cat, s, tol); t >= 0) {
        ++l.in;
        if (l.examples.size() < kExamples) l.examples.emplace_back(a.t, b.t, t);
      } else {
        ++l.out;
      }
    }
  }
  for (const auto& l : local) {
    rep.pairs += l.pairs;
    rep.to_infinity += l.inf;
    rep.to_p0 += l.p0;
    rep.in_catalog += l.in;
    rep.outside += l.out;
    for (const auto& e : l.examples) {
      if (rep.examples.size() < kExamples) rep.examples.push_back(e);
    }
  }
  return rep;
}

}  // namespace bracelet::curve
