/**
 * Exact integer and rational scalars.
 *
 * Both are thin aliases over GMP's C++ classes; mpq_class keeps itself in
 * lowest terms with a positive denominator as long as every value is built
 * through the helpers below (or canonicalize() is called after raw edits).
 */

#ifndef OMEGALAB_RATIONAL_HPP
#define OMEGALAB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace omegalab {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den = 1);

// Accepts "p" or "p/q" with optional leading sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer binomial(long n, long k);

// Scales a rational vector by a positive factor to a primitive integer vector
// (gcd of entries 1). The zero vector maps to the zero vector.
IntVector primitive_integer_vector(const RationalVector& v);
IntVector primitive_integer_vector(const IntVector& v);

long to_long(const Integer& z);

}  // namespace omegalab

#endif
