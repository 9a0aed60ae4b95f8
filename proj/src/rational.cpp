#include "omegalab/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace omegalab {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("not a rational number: '" + s + "'");
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

IntVector primitive_integer_vector(const RationalVector& v) {
  Integer den = 1;
  for (const auto& q : v) den = lcm(den, q.get_den());
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(Integer(q.get_num() * (den / q.get_den())));
  return primitive_integer_vector(out);
}

IntVector primitive_integer_vector(const IntVector& v) {
  Integer g = 0;
  for (const auto& z : v) g = gcd(g, z);
  if (g == 0) return v;
  IntVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.push_back(Integer(z / g));
  return out;
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + z.get_str());
  return z.get_si();
}

}  // namespace omegalab
