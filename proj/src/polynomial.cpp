#include "bracelet/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bracelet::poly {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t power) {
  std::vector<BigInt> v(power + 1);
  v[power] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::binomial_power(long a, long b, std::size_t e) {
  // sum_j C(e, j) a^(e-j) b^j x^j
  std::vector<BigInt> v(e + 1);
  BigInt c = 1;
  BigInt ap, bp;
  for (std::size_t j = 0; j <= e; ++j) {
    mpz_pow_ui(ap.get_mpz_t(), BigInt(a).get_mpz_t(), e - j);
    mpz_pow_ui(bp.get_mpz_t(), BigInt(b).get_mpz_t(), j);
    v[j] = c * ap * bp;
    c = c * static_cast<unsigned long>(e - j) / static_cast<unsigned long>(j + 1);
  }
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

IntPolynomial IntPolynomial::substitute_power(std::size_t m) const {
  if (m == 0) throw std::invalid_argument("substitute_power: m must be positive");
  if (is_zero()) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(degree()) * m + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * m] = coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::pow(std::size_t e) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& s) {
  for (auto& c : coeffs_) c *= s;
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

IntPolynomial IntPolynomial::divide_exact(const BigInt& d) const {
  std::vector<BigInt> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(exact_div(c, d, "IntPolynomial::divide_exact"));
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q) { return p + q; }
IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

DivRem poly_divrem(const IntPolynomial& p, const IntPolynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("poly_divrem: division by the zero polynomial");
  DivRem out;
  if (p.degree() < q.degree()) {
    out.remainder = p;
    out.exact = p.is_zero();
    return out;
  }
  std::vector<BigInt> rem(p.coefficients().begin(), p.coefficients().end());
  const auto qc = q.coefficients();
  const std::size_t dq = static_cast<std::size_t>(q.degree());
  const BigInt& lc = q.leading();
  std::vector<BigInt> quot(rem.size() - dq);
  BigInt step;
  for (std::size_t i = rem.size(); i-- > dq;) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lc.get_mpz_t())) {
      out.integral = false;
      break;
    }
    mpz_divexact(step.get_mpz_t(), rem[i].get_mpz_t(), lc.get_mpz_t());
    quot[i - dq] = step;
    for (std::size_t j = 0; j <= dq; ++j) {
      mpz_submul(rem[i - dq + j].get_mpz_t(), step.get_mpz_t(), qc[j].get_mpz_t());
    }
  }
  out.quotient = IntPolynomial(std::move(quot));
  out.remainder = IntPolynomial(std::move(rem));
  out.exact = out.integral && out.remainder.is_zero();
  return out;
}

bool divides(const IntPolynomial& q, const IntPolynomial& p) { return poly_divrem(p, q).exact; }

IntPolynomial exact_quotient(const IntPolynomial& p, const IntPolynomial& q) {
  DivRem dr = poly_divrem(p, q);
  if (!dr.exact) {
    throw InexactDivision("exact_quotient: (" + q.to_string() + ") does not divide (" + p.to_string() + ")");
  }
  return std::move(dr.quotient);
}

namespace {

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt c = p.content();
  if (p.leading() < 0) c = -c;
  return p.divide_exact(c);
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[x].
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> r(a.coefficients().begin(), a.coefficients().end());
  const auto bc = b.coefficients();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const BigInt& lc = b.leading();
  for (std::size_t i = r.size(); i-- > db;) {
    BigInt lead = r[i];
    for (auto& c : r) c *= lc;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= lead * bc[j];
    r.pop_back();
  }
  return IntPolynomial(std::move(r));
}

}  // namespace

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.is_zero()) return primitive_part(a);
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    IntPolynomial r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return primitive_part(a);
}

RationalFunction::RationalFunction(IntPolynomial n, IntPolynomial d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
}

RationalFunction RationalFunction::reduced() const {
  if (num.is_zero()) return {IntPolynomial{}, IntPolynomial::constant(1)};
  IntPolynomial g = poly_gcd(num, den);
  if (g.degree() == 0) g = IntPolynomial::constant(1);
  return {exact_quotient(num, g), exact_quotient(den, g)};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

std::vector<Rational> series_coefficients(const RationalFunction& rf, std::size_t count) {
  const BigInt d0 = rf.den.coeff(0);
  if (d0 == 0) throw std::domain_error("series_coefficients: denominator vanishes at 0 (pole at origin)");
  const auto den = rf.den.coefficients();
  std::vector<Rational> out(count);
  Rational acc;
  for (std::size_t n = 0; n < count; ++n) {
    acc = Rational(rf.num.coeff(n));
    const std::size_t jmax = std::min(n, den.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j) {
      if (den[j] != 0) acc -= Rational(den[j]) * out[n - j];
    }
    out[n] = acc / Rational(d0);
  }
  return out;
}

}  // namespace bracelet::poly
