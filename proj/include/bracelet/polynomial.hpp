#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bracelet/bigint.hpp"

namespace bracelet::poly {

/// Dense univariate polynomial with BigInt coefficients; index i holds the
/// coefficient of x^i. The stored vector never ends in a zero, so the zero
/// polynomial is the empty vector and degree() == -1 for it.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t power);
  /// (a + b x)^e
  static IntPolynomial binomial_power(long a, long b, std::size_t e);

  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
  /// Coefficient of x^i, zero past the degree.
  [[nodiscard]] BigInt coeff(std::size_t i) const;
  [[nodiscard]] const BigInt& leading() const { return coeffs_.back(); }
  [[nodiscard]] std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

  [[nodiscard]] BigInt evaluate(const BigInt& x) const;
  [[nodiscard]] Rational evaluate(const Rational& x) const;
  /// p(x^m)
  [[nodiscard]] IntPolynomial substitute_power(std::size_t m) const;
  [[nodiscard]] IntPolynomial derivative() const;
  [[nodiscard]] IntPolynomial pow(std::size_t e) const;
  /// gcd of the coefficients (non-negative; 0 for the zero polynomial)
  [[nodiscard]] BigInt content() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& s);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend IntPolynomial operator-(IntPolynomial a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  /// Divides every coefficient by `d`; throws InexactDivision if any is not a multiple.
  [[nodiscard]] IntPolynomial divide_exact(const BigInt& d) const;

  [[nodiscard]] std::string to_string(char var = 'x') const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);

/// Outcome of integer long division p = quotient * q + remainder.
///
/// Division proceeds while each leading coefficient of the running remainder
/// is a multiple of lc(q); this always completes for monic q. If a step would
/// need a non-integer quotient coefficient, division stops there, `integral`
/// is false and `remainder` holds the partial remainder (its degree may then
/// be >= deg q). `exact` is true iff q divides p in Z[x].
struct DivRem {
  IntPolynomial quotient;
  IntPolynomial remainder;
  bool integral = true;
  bool exact = false;
};

/// Throws std::invalid_argument for q == 0.
DivRem poly_divrem(const IntPolynomial& p, const IntPolynomial& q);

/// True iff q | p in Z[x].
bool divides(const IntPolynomial& q, const IntPolynomial& p);

/// p / q, throwing InexactDivision when q does not divide p.
IntPolynomial exact_quotient(const IntPolynomial& p, const IntPolynomial& q);

/// Primitive gcd over Z[x] with positive leading coefficient.
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b);

/// num / den, kept unreduced; reduced() gives the view with a constant gcd.
struct RationalFunction {
  IntPolynomial num;
  IntPolynomial den;

  RationalFunction(IntPolynomial n, IntPolynomial d);

  [[nodiscard]] RationalFunction reduced() const;
};

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);

/// First `count` Taylor coefficients at 0. Throws std::domain_error when den(0) == 0.
std::vector<Rational> series_coefficients(const RationalFunction& rf, std::size_t count);

}  // namespace bracelet::poly
