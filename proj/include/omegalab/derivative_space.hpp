#ifndef OMEGALAB_DERIVATIVE_SPACE_HPP
#define OMEGALAB_DERIVATIVE_SPACE_HPP

#include "omegalab/matrix.hpp"
#include "omegalab/polynomial.hpp"

#include <vector>

namespace omegalab {

// Span of the kth order partial derivatives of h.
struct DerivativeSpace {
  std::size_t k = 0;
  // Echelon basis D^k_1..D^k_m, primitive integer coefficients.
  std::vector<SparsePolynomial> basis;
  // B_k: union of the supports of all kth partials, grevlex descending.
  std::vector<ExponentVector> support_union;
  // Coefficient of x^a (column, support_union order) in D^k_i (row).
  RationalMatrix projection;

  std::size_t m() const { return basis.size(); }
};

DerivativeSpace derivative_space(const SparsePolynomial& h, std::size_t k);

// B_k for 0 <= k <= deg h.
ExponentSet derivative_support(const SparsePolynomial& h, std::size_t k);

// The k in 0..d for which B_k differs from the lattice points of
// B((rho_h)_k); empty when the two agree everywhere.
std::vector<std::size_t> verify_monomial_proposition(const SparsePolynomial& h);

// Reduced echelon basis of the kernel of the projection matrix.
RationalMatrix projection_centre(const DerivativeSpace& ds);

SparsePolynomial elementary_symmetric(std::size_t d, std::size_t n);

struct BinomialIdentityReport {
  bool holds = false;
  Integer coefficient;      // binom(n + k - 1 - d, n - d)
  bool degenerate = false;  // both sides vanish identically
};

// For every i: coefficient * H_i == sum over T in [n]\{i}, |T| = n-k of L_T,
// expanded in the z_S coordinates (|S| = d-k).
BinomialIdentityReport binomial_identity_check(std::size_t n, std::size_t d, std::size_t k);

}  // namespace omegalab

#endif
