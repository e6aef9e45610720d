#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bracelet {

/// Arbitrary-precision signed integer used for every count in the library.
using BigInt = mpz_class;
/// Exact rational (canonical form maintained by GMP).
using Rational = mpq_class;

/// Thrown when a quantity that must be an exact integer quotient is not.
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Divides `num` by `den`, throwing InexactDivision unless the quotient is exact.
/// `what` names the formula for the error message.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  if (den == 0) throw InexactDivision(std::string(what) + ": division by zero");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw InexactDivision(std::string(what) + ": " + num.get_str() + " is not divisible by " +
                          den.get_str());
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline BigInt pow2(std::uint64_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline BigInt from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return r;
}

inline BigInt from_i64(std::int64_t v) {
  if (v >= 0) return from_u64(static_cast<std::uint64_t>(v));
  BigInt r = from_u64(static_cast<std::uint64_t>(-(v + 1)));
  r += 1;
  return -r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace bracelet
