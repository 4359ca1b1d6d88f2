// Exact scalars. Every quantity in the library (eigenvalues, norms, matrix
// entries, polynomial values) is carried as a GMP rational in lowest terms.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace burnside {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p/q", "p" or "-p/q". The result is canonicalized and the
// denominator must be nonzero.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + std::string(text));
  r.canonicalize();
  return r;
}

// num/den in lowest terms (gmpxx does not reduce on construction).
inline Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "p/q" in lowest terms, or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

// C(a, b) with the convention C(a, b) = 0 whenever b < 0, a < 0 or b > a.
inline Integer binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

inline Integer factorial(std::int64_t a) {
  if (a < 0) throw std::domain_error("factorial of a negative integer");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(a));
  return r;
}

inline Integer pow_int(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational pow(const Rational& base, unsigned long e) {
  Integer num = pow_int(base.get_num(), e);
  Integer den = pow_int(base.get_den(), e);
  return ratio(num, den);
}

inline int sign_of_parity(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

// beta_k = C(2k, k)^2 / 2^(4k), the nonzero eigenvalues of the chain.
inline Rational beta(std::int64_t k) {
  if (k < 0) throw std::domain_error("beta index must be nonnegative");
  Integer c = binomial(2 * k, k);
  return ratio(c * c, pow_int(Integer(2), static_cast<unsigned long>(4 * k)));
}

}  // namespace burnside
