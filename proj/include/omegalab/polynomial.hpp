/**
 * Exponent vectors and sparse multivariate polynomials over Q.
 *
 * Terms are kept in a map sorted by graded reverse lexicographic order,
 * largest monomial first, with x1 > x2 > ... > xn. Zero coefficients are never
 * stored, so the map's key set is the support.
 */

#ifndef OMEGALAB_POLYNOMIAL_HPP
#define OMEGALAB_POLYNOMIAL_HPP

#include "omegalab/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace omegalab {

class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  explicit ExponentVector(std::vector<int> e);
  ExponentVector(std::initializer_list<int> e) : ExponentVector(std::vector<int>(e)) {}

  static ExponentVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  int& operator[](std::size_t i) { return e_[i]; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  const std::vector<int>& entries() const { return e_; }

  int degree() const;
  bool divides(const ExponentVector& o) const;

  // Entrywise sum and difference; the difference may go negative, callers
  // that need a monomial check nonnegative() themselves.
  ExponentVector operator+(const ExponentVector& o) const;
  ExponentVector operator-(const ExponentVector& o) const;
  bool nonnegative() const;

  // Lexicographic on entries; used for sets and deterministic output.
  auto operator<=>(const ExponentVector&) const = default;
  bool operator==(const ExponentVector&) const = default;

  std::string to_string() const;  // "(1,0,2)"

 private:
  std::vector<int> e_;
};

// Positive iff a > b in graded reverse lexicographic order (x1 > ... > xn).
int grevlex_compare(const ExponentVector& a, const ExponentVector& b);

struct GrevlexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return grevlex_compare(a, b) > 0;
  }
};

using ExponentSet = std::set<ExponentVector>;

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class SparsePolynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational, GrevlexGreater>;

  explicit SparsePolynomial(std::size_t nvars);
  SparsePolynomial(std::size_t nvars, const TermMap& terms);

  static SparsePolynomial constant(std::size_t nvars, const Rational& c);
  static SparsePolynomial monomial(const ExponentVector& e, const Rational& c = 1);
  static SparsePolynomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Coefficient of x^e, zero when absent.
  Rational coefficient(const ExponentVector& e) const;

  // Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  SparsePolynomial operator+(const SparsePolynomial& o) const;
  SparsePolynomial operator-(const SparsePolynomial& o) const;
  SparsePolynomial operator-() const;
  SparsePolynomial operator*(const SparsePolynomial& o) const;
  SparsePolynomial operator*(const Rational& c) const;
  bool operator==(const SparsePolynomial& o) const;

  Rational evaluate(const RationalVector& point) const;

  // Keeps only the terms whose exponent is in `keep`.
  SparsePolynomial restrict_to(const ExponentSet& keep) const;

  // Canonical text form, e.g. "2*x1*x2 - 1/3*x3^2"; "0" for zero.
  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;  // default names x1..xn

 private:
  std::size_t nvars_;
  TermMap terms_;
};

std::vector<std::string> default_variable_names(std::size_t n);

// Grammar: expression := ['+'|'-'] product (('+'|'-') product)*
//          product    := power ('*' power)*
//          power      := primary ['^' integer in 1..64]
//          primary    := integer ['/' positive-integer] | varname | '(' expression ')'
// Whitespace is ignored. Constants are accepted so callers can reject them
// with a semantic message instead of a syntax error.
SparsePolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variable_order);

// Splits "x,y,z" into names; rejects empty or duplicate names.
std::vector<std::string> parse_variable_list(std::string_view text);

SparsePolynomial partial_derivative(const SparsePolynomial& p, std::size_t i);

// D_e p = sum_i e_i dp/dx_i
SparsePolynomial directional_derivative(const SparsePolynomial& p, const RationalVector& e);

ExponentSet support(const SparsePolynomial& p);

// Coefficients of t -> p(e + t v), ascending in t, trailing zeros trimmed.
// The zero polynomial in t is the empty vector.
RationalVector substitute_line(const SparsePolynomial& p, const RationalVector& e, const RationalVector& v);

// All monomials of total degree d in n variables, grevlex-descending.
std::vector<ExponentVector> monomials_of_degree(std::size_t n, int d);

// All multisets {i_1 <= ... <= i_k} of variable indices.
std::vector<std::vector<std::size_t>> multisets(std::size_t n, std::size_t k);

// All kth order partial derivatives, one per multiset of variables.
std::vector<SparsePolynomial> partial_derivatives(const SparsePolynomial& p, std::size_t k);

}  // namespace omegalab

template <>
struct std::hash<omegalab::ExponentVector> {
  std::size_t operator()(const omegalab::ExponentVector& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : e) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

#endif
