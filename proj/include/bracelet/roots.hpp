#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bracelet/kernels.hpp"
#include "bracelet/polynomial.hpp"

namespace bracelet::poly {

struct ComplexPoint {
  double re = 0.0;
  double im = 0.0;

  [[nodiscard]] std::complex<double> value() const { return {re, im}; }
  friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;
};

/// Lexicographic (re, im) order used for every root listing.
bool root_order(const ComplexPoint& a, const ComplexPoint& b);

struct RootOptions {
  /// Per-root bound on |p(r)| / (max|c_i| * max(1,|r|)^deg).
  double tol = 1e-13;
  int max_iterations = 500;
  kernels::Backend backend = kernels::Backend::openmp;
};

struct RootReport {
  /// deg(p) roots with multiplicity, sorted by (re, im)
  std::vector<ComplexPoint> roots;
  /// scaled residual of each root, aligned with `roots`
  std::vector<double> backward_error;
  /// indices into `roots` whose backward error exceeds the tolerance
  std::vector<std::size_t> failed;
  int iterations = 0;

  [[nodiscard]] bool converged() const { return failed.empty(); }
};

class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(const std::string& what, RootReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  [[nodiscard]] const RootReport& report() const { return report_; }

 private:
  RootReport report_;
};

/// All complex roots by simultaneous (Aberth) iteration: a double-precision
/// pass on normalized coefficients, then a pass with p/p' evaluated in
/// adaptive-precision GMP floats.
/// Never throws on non-convergence; inspect `failed`. Throws
/// std::invalid_argument for deg < 1.
RootReport find_roots(const IntPolynomial& p, const RootOptions& options = {});

/// As find_roots, but throws RootFindingError naming the roots that missed the bound.
std::vector<ComplexPoint> roots(const IntPolynomial& p, double tol = 1e-13);

/// Coefficients scaled by 1 / max|c_i| and rounded to double.
std::vector<double> normalized_coefficients(const IntPolynomial& p);

/// The scaled residual |p(z)| / (max|c_i| * max(1,|z|)^deg). p(z) is evaluated
/// in GMP floats from the exact coefficients, raising the precision until the
/// value clears its rounding bound.
double backward_error(const IntPolynomial& p, std::complex<double> z);

/// Unique positive root of |c_n| x^n = sum_{i<n} |c_i| x^i; every root has modulus <= it.
double cauchy_radius(std::span<const double> coeffs);

/// Initial iterate: for each edge of the upper convex hull of (i, log|c_i|),
/// j - i points on the circle of the matching radius, capped by the Cauchy radius.
std::vector<std::complex<double>> initial_layout(std::span<const double> coeffs);

}  // namespace bracelet::poly
