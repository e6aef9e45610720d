#pragma once

// Necklace-polynomial roots as points on v^2 = u^3 - 2u^2 + 2u - 1, and the
// group law on that curve.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bracelet/polynomial.hpp"
#include "bracelet/roots.hpp"

namespace bracelet::curve {

using poly::ComplexPoint;

struct CurvePoint {
  bool infinity = false;
  double u = 0.0;
  double v = 0.0;

  static CurvePoint at_infinity() { return {true, 0.0, 0.0}; }
  static CurvePoint affine(double u, double v) { return {false, u, v}; }
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Order by (infinity last, u, v).
bool point_order(const CurvePoint& a, const CurvePoint& b);

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kPoleEps = 1e-8;

/// (u, v) = (1/(1+a), b/(1+a)) for y = a + ib. Throws PoleError if |1+a| < eps.
CurvePoint root_to_point(const ComplexPoint& y, double eps = kPoleEps);

/// v^2 - (u^3 - 2u^2 + 2u - 1). Throws std::invalid_argument at infinity.
double residual(const CurvePoint& p);
/// v^2 + |u|^3 + 2u^2 + 2|u| + 1, the size of the terms in `residual`.
double residual_scale(const CurvePoint& p);
double normalized_residual(const CurvePoint& p);

/// b^2 + a(a^2+a+1)/(1+a): zero exactly when (a, b) maps onto the curve.
double curve_constraint_check(const ComplexPoint& y);

CurvePoint negate(const CurvePoint& p);
/// Chord-and-tangent addition; the point at infinity is the identity.
CurvePoint add(const CurvePoint& p, const CurvePoint& q);

/// (u - 1, v), a point of v^2 = u^3 + u^2 + u.
CurvePoint shift_48a4(const CurvePoint& p);
/// v^2 - (u^3 + u^2 + u)
double residual_48a4(const CurvePoint& p);

/// Componentwise |difference| <= tol * max(1, |coordinate|); both infinite also matches.
bool approx_equal(const CurvePoint& p, const CurvePoint& q, double tol = 1e-8);

/// One root of N_t and, unless it sits on the pole, its curve point.
struct PointRecord {
  std::int64_t t = 0;
  ComplexPoint root;
  std::optional<CurvePoint> point;
  double residual = 0.0;  // raw residual of `point`
};

/// Roots of N_t (sorted by (re, im)) with their images. Roots come from
/// poly::find_roots; a root missing `root_tol` raises poly::RootFindingError.
std::vector<PointRecord> necklace_point_records(std::int64_t t, double root_tol = 1e-13,
                                                kernels::Backend backend = kernels::Backend::openmp);

/// Images of the non-pole roots of N_t, sorted by point_order. Throws
/// std::runtime_error if a point has |residual| > tol * residual_scale.
std::vector<CurvePoint> necklace_points(std::int64_t t, double tol = 1e-9);

/// necklace_point_records for every t in [tmin, tmax], parallel over t.
std::vector<std::vector<PointRecord>> necklace_point_sweep(std::int64_t tmin, std::int64_t tmax,
                                                           double root_tol = 1e-13);

/// y^8 - 28y^7 + 1948y^6 - 5236y^5 + 4858y^4 - 3988y^3 + 7156y^2 - 6040y + 2245
poly::IntPolynomial octic();

struct OcticReport {
  CurvePoint p1;
  CurvePoint p7;
  CurvePoint sum;
  ComplexPoint w;  // sum.u + i sum.v
  double normalized_value = 0.0;
};

/// P1 = (2, -sqrt 3) plus the N_4 point with the larger u and v > 0; the octic
/// at w = u3 + i v3 over 7156 * max(1,|w|)^8.
OcticReport octic_check();

struct DivisibilityScan {
  std::int64_t tmax = 0;
  std::vector<std::int64_t> dividing_t;  // t with octic | N_t, increasing
};

DivisibilityScan octic_divisibility_scan(std::int64_t tmax);

/// Printed table values against directly computed necklace points.
struct TableRow {
  std::string name;
  std::int64_t t = 0;
  CurvePoint printed;
  double printed_residual = 0.0;  // normalized
  CurvePoint nearest;             // closest necklace point of N_t
  double distance = 0.0;
  /// computed / printed for P7..P10 (u and v); 1 for rows that agree
  double ratio_u = 1.0;
  double ratio_v = 1.0;
  bool matches = false;  // within tol
};

std::vector<TableRow> point_table_report(double tol = 1e-9);

struct ClosureReport {
  std::int64_t tcatalog = 0;
  std::int64_t tpairs = 0;
  std::size_t catalog_size = 0;
  std::size_t pairs = 0;        // unordered pairs including doubles
  std::size_t to_infinity = 0;  // P + (-P) and doubled 2-torsion
  std::size_t to_p0 = 0;        // sums equal to (1, 0)
  std::size_t in_catalog = 0;
  std::size_t outside = 0;
  /// first few catalogued sums: (t_P, t_Q, t of the sum)
  std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> examples;
};

/// Sums P + Q of necklace points from N_t, t <= tpairs, looked up among the
/// necklace points of every N_t with t <= tcatalog.
ClosureReport closure_report(std::int64_t tcatalog, std::int64_t tpairs, double tol = 1e-8);

}  // namespace bracelet::curve
