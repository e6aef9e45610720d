#include "bracelet/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

namespace bracelet::poly {

bool root_order(const ComplexPoint& a, const ComplexPoint& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

namespace {

// Coefficient c as m * 2^e with 64 significant bits.
long double to_long_double_scaled(const BigInt& c, long exponent_shift) {
  if (c == 0) return 0.0L;
  const long bits = static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2));
  BigInt top = abs(c);
  long drop = 0;
  if (bits > 64) {
    drop = bits - 64;
    mpz_tdiv_q_2exp(top.get_mpz_t(), top.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
  }
  unsigned long long word = 0;
  mpz_export(&word, nullptr, -1, sizeof word, 0, 0, top.get_mpz_t());
  long double v = std::ldexp(static_cast<long double>(word), static_cast<int>(drop - exponent_shift));
  return c < 0 ? -v : v;
}

long max_bits(const IntPolynomial& p) {
  long mb = 0;
  for (const auto& c : p.coefficients()) {
    if (c != 0) mb = std::max(mb, static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2)));
  }
  return mb;
}

using cld = std::complex<long double>;

// Complex value of p and p' at a long double point, computed in GMP floats
// from the exact coefficients. Magnitudes are kept as base-2 logarithms since
// coefficient ranges may exceed every hardware type.
struct MpValue {
  cld ratio;                 // p / p'
  double log2_p = 0.0;       // log2 |p(z)|, -inf when exactly zero
  double log2_dp = 0.0;      // log2 |p'(z)|
  double log2_scale = 0.0;   // log2 sum |c_i| |z|^i
  double log2_noise = 0.0;   // log2 of the rounding bound on p(z)
};

double log2_of(const mpf_t x) {
  if (mpf_sgn(x) == 0) return -std::numeric_limits<double>::infinity();
  long e = 0;
  const double m = mpf_get_d_2exp(&e, x);
  return std::log2(std::abs(m)) + static_cast<double>(e);
}

long double to_long_double(const mpf_t x, mpf_t scratch) {
  const double hi = mpf_get_d(x);
  mpf_set_d(scratch, hi);
  mpf_sub(scratch, x, scratch);
  return static_cast<long double>(hi) + static_cast<long double>(mpf_get_d(scratch));
}

void set_long_double(mpf_t dst, long double v, mpf_t scratch) {
  const double hi = static_cast<double>(v);
  mpf_set_d(dst, hi);
  mpf_set_d(scratch, static_cast<double>(v - static_cast<long double>(hi)));
  mpf_add(dst, dst, scratch);
}

class MpEvaluator {
 public:
  explicit MpEvaluator(const IntPolynomial& p) : c_(p.coefficients()) {
    for (auto* x : {pr_, pi_, dr_, di_, zr_, zi_, a_, b_, s_}) mpf_init2(x, 64);
    abs_.reserve(c_.size());
    log2_max_ = -std::numeric_limits<double>::infinity();
    for (const auto& c : c_) {
      long e = 0;
      const double m = c == 0 ? 0.0 : mpz_get_d_2exp(&e, c.get_mpz_t());
      abs_.push_back({std::abs(m), e});
      if (c != 0) log2_max_ = std::max(log2_max_, std::log2(std::abs(m)) + static_cast<double>(e));
    }
  }
  MpEvaluator(const MpEvaluator&) = delete;
  MpEvaluator& operator=(const MpEvaluator&) = delete;
  ~MpEvaluator() {
    for (auto* x : {pr_, pi_, dr_, di_, zr_, zi_, a_, b_, s_}) mpf_clear(x);
  }

  [[nodiscard]] std::size_t degree() const { return c_.size() - 1; }
  [[nodiscard]] double log2_max() const { return log2_max_; }

  MpValue eval(cld z, mp_bitcnt_t prec) {
    for (auto* x : {pr_, pi_, dr_, di_, zr_, zi_, a_, b_, s_}) mpf_set_prec(x, prec);
    set_long_double(zr_, z.real(), s_);
    set_long_double(zi_, z.imag(), s_);
    mpf_set_ui(pr_, 0);
    mpf_set_ui(pi_, 0);
    mpf_set_ui(dr_, 0);
    mpf_set_ui(di_, 0);
    for (std::size_t i = c_.size(); i-- > 0;) {
      // d <- d z + p
      mul_add(dr_, di_, pr_, pi_);
      // p <- p z + c_i
      mpf_set_z(s_, c_[i].get_mpz_t());
      mul_add(pr_, pi_, s_, nullptr);
    }
    MpValue out;
    out.log2_p = log2_hypot(pr_, pi_);
    out.log2_dp = log2_hypot(dr_, di_);
    out.log2_scale = log2_scale(std::abs(z));
    out.log2_noise = out.log2_scale + std::log2(4.0 * double(c_.size())) - double(prec);
    if (std::isfinite(out.log2_p) && std::isfinite(out.log2_dp)) {
      // p / p' = p conj(p') / |p'|^2
      mpf_mul(a_, pr_, dr_);
      mpf_mul(b_, pi_, di_);
      mpf_add(a_, a_, b_);
      mpf_mul(b_, pi_, dr_);
      mpf_mul(s_, pr_, di_);
      mpf_sub(b_, b_, s_);
      mpf_mul(s_, dr_, dr_);
      mpf_mul(zr_, di_, di_);
      mpf_add(s_, s_, zr_);
      mpf_div(a_, a_, s_);
      mpf_div(b_, b_, s_);
      out.ratio = {to_long_double(a_, zr_), to_long_double(b_, zr_)};
    }
    return out;
  }

 private:
  // (xr + i xi) <- (xr + i xi) z + (ar + i ai); ai may be null for a real addend.
  void mul_add(mpf_t xr, mpf_t xi, mpf_t ar, mpf_t ai) {
    mpf_mul(a_, xr, zr_);
    mpf_mul(b_, xi, zi_);
    mpf_sub(a_, a_, b_);
    mpf_mul(b_, xr, zi_);
    mpf_mul(xi, xi, zr_);
    mpf_add(xi, xi, b_);
    mpf_add(xr, a_, ar);
    if (ai) mpf_add(xi, xi, ai);
  }

  double log2_hypot(mpf_t re, mpf_t im) {
    const double lr = log2_of(re);
    const double li = log2_of(im);
    const double hi = std::max(lr, li);
    if (!std::isfinite(hi)) return hi;
    return hi + 0.5 * std::log2(1.0 + std::exp2(2.0 * (std::min(lr, li) - hi)));
  }

  // log2 sum |c_i| r^i in doubles with a running exponent.
  double log2_scale(long double r) {
    const double lr = std::log2(static_cast<double>(r));
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < abs_.size(); ++i) {
      if (abs_[i].first == 0.0) continue;
      best = std::max(best, std::log2(abs_[i].first) + double(abs_[i].second) + double(i) * lr);
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < abs_.size(); ++i) {
      if (abs_[i].first == 0.0) continue;
      sum += std::exp2(std::log2(abs_[i].first) + double(abs_[i].second) + double(i) * lr - best);
    }
    return best + std::log2(sum);
  }

  std::span<const BigInt> c_;
  std::vector<std::pair<double, long>> abs_;
  double log2_max_;
  mpf_t pr_, pi_, dr_, di_, zr_, zi_, a_, b_, s_;
};

constexpr mp_bitcnt_t kStartPrecision = 128;

mp_bitcnt_t precision_cap(const IntPolynomial& p) {
  return static_cast<mp_bitcnt_t>(16 * (max_bits(p) + 64) + 4 * p.size());
}

// Raises `prec` until p(z) is resolved or the root position is pinned below
// long double resolution.
MpValue resolved_eval(MpEvaluator& ev, cld z, mp_bitcnt_t& prec, mp_bitcnt_t cap) {
  constexpr double kMargin = 6.0;  // |p| must clear the bound by 2^6
  const double target = std::log2(std::numeric_limits<long double>::epsilon() * std::max(std::abs(z), 1e-300L));
  for (;;) {
    MpValue v = ev.eval(z, prec);
    if (v.log2_p > v.log2_noise + kMargin) return v;
    if (v.log2_noise - v.log2_dp <= target || prec >= cap) return v;
    prec = std::min(cap, 2 * prec);
  }
}

// Aberth iteration with p/p' from resolved_eval; the roots move in long
// double, only the polynomial values need the wide floats.
int refine_multiprecision(const IntPolynomial& p, std::vector<cld>& z, int max_iterations, bool parallel) {
  constexpr long double eps = std::numeric_limits<long double>::epsilon();
  const std::size_t n = z.size();
  const mp_bitcnt_t cap = precision_cap(p);
  std::vector<mp_bitcnt_t> prec(n, kStartPrecision);
  std::vector<cld> delta(n);
  std::vector<std::uint8_t> done(n, 0);
  std::vector<std::size_t> pending(n);
  std::iota(pending.begin(), pending.end(), std::size_t{0});
  int it = 0;
  for (; it < max_iterations && !pending.empty(); ++it) {
    const auto np = static_cast<std::ptrdiff_t>(pending.size());
#pragma omp parallel if (parallel)
    {
      MpEvaluator ev(p);
#pragma omp for schedule(dynamic, 1)
      for (std::ptrdiff_t q = 0; q < np; ++q) {
        const std::size_t i = pending[static_cast<std::size_t>(q)];
        const MpValue v = resolved_eval(ev, z[i], prec[i], cap);
        if (!(v.log2_p > v.log2_noise + 6.0)) {
          done[i] = 1;
          delta[i] = 0.0L;
          continue;
        }
        cld repulsion = 0.0L;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i) repulsion += 1.0L / (z[i] - z[j]);
        }
        delta[i] = v.ratio / (1.0L - v.ratio * repulsion);
      }
    }
    std::vector<std::size_t> next;
    for (std::size_t i : pending) {
      if (done[i]) continue;
      z[i] -= delta[i];
      if (std::abs(delta[i]) > 2.0L * eps * std::abs(z[i])) next.push_back(i);
    }
    pending = std::move(next);
  }
  return it;
}

// log2 |p(z)| resolved as far as the precision cap allows; below that the
// rounding bound is returned, which overstates the residual.
double log2_residual(MpEvaluator& ev, cld z, mp_bitcnt_t cap) {
  mp_bitcnt_t prec = kStartPrecision;
  for (;;) {
    const MpValue v = ev.eval(z, prec);
    if (v.log2_p > v.log2_noise + 6.0) return v.log2_p;
    if (prec >= cap) return std::max(v.log2_p, v.log2_noise);
    prec = std::min(cap, 2 * prec);
  }
}

double scaled_residual(MpEvaluator& ev, std::complex<double> z, mp_bitcnt_t cap) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return std::numeric_limits<double>::infinity();
  const double lp = log2_residual(ev, cld(z.real(), z.imag()), cap);
  const double lz = std::log2(std::max(1.0, std::abs(z)));
  return std::exp2(lp - ev.log2_max() - double(ev.degree()) * lz);
}

}  // namespace

std::vector<double> normalized_coefficients(const IntPolynomial& p) {
  const long shift = max_bits(p);
  std::vector<double> out;
  out.reserve(p.size());
  double mx = 0.0;
  for (const auto& c : p.coefficients()) {
    out.push_back(static_cast<double>(to_long_double_scaled(c, shift)));
    mx = std::max(mx, std::abs(out.back()));
  }
  for (auto& v : out) v /= mx;
  return out;
}

double backward_error(const IntPolynomial& p, std::complex<double> z) {
  if (p.degree() < 1) throw std::invalid_argument("backward_error: polynomial degree must be >= 1");
  MpEvaluator ev(p);
  return scaled_residual(ev, z, precision_cap(p));
}

namespace {

std::vector<double> logs_of(std::span<const double> coeffs) {
  std::vector<double> lg(coeffs.size(), -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0.0) lg[i] = std::log(std::abs(coeffs[i]));
  }
  return lg;
}

// log|c_i| straight from the integers, so no coefficient range is too wide.
std::vector<double> logs_of(const IntPolynomial& p) {
  std::vector<double> lg;
  lg.reserve(p.size());
  for (const auto& c : p.coefficients()) {
    if (c == 0) {
      lg.push_back(-std::numeric_limits<double>::infinity());
      continue;
    }
    long e = 0;
    const double m = mpz_get_d_2exp(&e, c.get_mpz_t());
    lg.push_back(std::log(std::abs(m)) + static_cast<double>(e) * std::numbers::ln2);
  }
  return lg;
}

double log_cauchy_radius(std::span<const double> lg) {
  const std::size_t deg = lg.size() - 1;
  // f(s) = log sum_{i<n} |c_i| e^{(i-n)s} - log|c_n| is decreasing in s = log x.
  auto f = [&](double s) {
    double mx = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < deg; ++i) mx = std::max(mx, lg[i] + (double(i) - double(deg)) * s);
    if (!std::isfinite(mx)) return -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (std::size_t i = 0; i < deg; ++i) {
      if (std::isfinite(lg[i])) sum += std::exp(lg[i] + (double(i) - double(deg)) * s - mx);
    }
    return mx + std::log(sum) - lg[deg];
  };
  double lo = -800.0;
  double hi = 800.0;
  if (f(lo) <= 0.0) return -std::numeric_limits<double>::infinity();
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return hi;
}

std::vector<std::complex<double>> layout_from_logs(std::span<const double> lg) {
  const std::size_t deg = lg.size() - 1;
  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i <= deg; ++i) {
    if (!std::isfinite(lg[i])) continue;
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull.back();
      // drop b unless it lies strictly above the chord a -> i
      if ((lg[b] - lg[a]) * double(i - a) <= (lg[i] - lg[a]) * double(b - a)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }
  const double log_bound = log_cauchy_radius(lg);
  constexpr double kOffset = 0.4;
  std::vector<std::complex<double>> z;
  z.reserve(deg);
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const std::size_t i = hull[s];
    const std::size_t j = hull[s + 1];
    const std::size_t count = j - i;
    const double radius = std::exp(std::min((lg[i] - lg[j]) / double(count), log_bound));
    for (std::size_t q = 0; q < count; ++q) {
      const double theta = 2.0 * std::numbers::pi * (double(q) / double(count) + double(s) / double(deg)) + kOffset;
      z.push_back(std::polar(radius, theta));
    }
  }
  return z;
}

}  // namespace

double cauchy_radius(std::span<const double> coeffs) { return std::exp(log_cauchy_radius(logs_of(coeffs))); }

std::vector<std::complex<double>> initial_layout(std::span<const double> coeffs) {
  return layout_from_logs(logs_of(coeffs));
}

RootReport find_roots(const IntPolynomial& p, const RootOptions& options) {
  if (p.degree() < 1) throw std::invalid_argument("find_roots: polynomial degree must be >= 1");
  RootReport report;

  // Exact zero roots first.
  std::size_t zeros = 0;
  while (p.coeff(zeros) == 0) ++zeros;
  IntPolynomial reduced = p;
  if (zeros > 0) {
    auto c = p.coefficients();
    reduced = IntPolynomial(std::vector<BigInt>(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end()));
  }

  std::vector<std::complex<double>> z;
  if (reduced.degree() >= 1) {
    const std::vector<double> coeffs = normalized_coefficients(reduced);
    const std::size_t deg = coeffs.size() - 1;
    // Some coefficient underflows after scaling: skip the double phase and
    // go straight to the multiprecision phase.
    bool wide = false;
    for (std::size_t i = 0; i <= deg; ++i) wide = wide || (reduced.coeff(i) != 0 && !std::isnormal(coeffs[i]));
    z = layout_from_logs(logs_of(reduced));
    std::vector<std::uint8_t> active(deg, 1);
    std::vector<std::complex<double>> delta(deg);
    std::vector<kernels::Evaluation> eval(deg);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double noise = 4.0 * double(deg) * eps;
    int it = 0;
    for (; it < options.max_iterations && !wide; ++it) {
      kernels::aberth_sweep(coeffs, z, active, delta, eval, options.backend);
      std::size_t still_active = 0;
      for (std::size_t i = 0; i < deg; ++i) {
        if (!active[i]) continue;
        if (eval[i].residual <= noise * eval[i].magnitude) {
          active[i] = 0;
          continue;
        }
        z[i] -= delta[i];
        if (std::abs(delta[i]) <= eps * std::abs(z[i])) {
          active[i] = 0;
          continue;
        }
        ++still_active;
      }
      if (still_active == 0) {
        ++it;
        break;
      }
    }
    report.iterations = it;

    // The double phase only places the iterates: where |p(z)| is far below
    // sum |c_i||z|^i its stopping test sees rounding noise, not p.
    std::vector<cld> zl(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) zl[i] = {z[i].real(), z[i].imag()};
    report.iterations += refine_multiprecision(reduced, zl, options.max_iterations,
                                               options.backend == kernels::Backend::openmp);
    for (std::size_t i = 0; i < z.size(); ++i) {
      z[i] = {static_cast<double>(zl[i].real()), static_cast<double>(zl[i].imag())};
    }
  }

  std::vector<ComplexPoint> pts;
  pts.reserve(zeros + z.size());
  for (std::size_t i = 0; i < zeros; ++i) pts.push_back({0.0, 0.0});
  for (const auto& v : z) pts.push_back({v.real(), v.imag()});
  std::sort(pts.begin(), pts.end(), root_order);

  report.roots = std::move(pts);
  report.backward_error.resize(report.roots.size());
  const mp_bitcnt_t cap = precision_cap(p);
  const auto nr = static_cast<std::ptrdiff_t>(report.roots.size());
#pragma omp parallel if (options.backend == kernels::Backend::openmp)
  {
    MpEvaluator ev(p);
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < nr; ++i) {
      const auto& r = report.roots[static_cast<std::size_t>(i)];
      report.backward_error[static_cast<std::size_t>(i)] = scaled_residual(ev, r.value(), cap);
    }
  }
  for (std::size_t i = 0; i < report.roots.size(); ++i) {
    if (!(report.backward_error[i] <= options.tol)) report.failed.push_back(i);
  }
  return report;
}

std::vector<ComplexPoint> roots(const IntPolynomial& p, double tol) {
  RootOptions opt;
  opt.tol = tol;
  RootReport rep = find_roots(p, opt);
  if (!rep.converged()) {
    std::ostringstream os;
    os << "roots: " << rep.failed.size() << " of " << rep.roots.size()
       << " roots exceed the backward-error bound " << tol << " after " << rep.iterations << " iterations; indices:";
    for (std::size_t i : rep.failed) os << ' ' << i;
    throw RootFindingError(os.str(), std::move(rep));
  }
  return std::move(rep.roots);
}

}  // namespace bracelet::poly
