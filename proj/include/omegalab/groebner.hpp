/**
 * Buchberger's algorithm over Q.
 *
 * Polynomials are carried with primitive integer coefficients; every
 * reduction step is fraction free and the content is stripped as it goes.
 * Pairs are selected by the normal strategy (smallest lcm first) and pruned
 * with the coprime-leading-term and chain criteria. A cap on processed pairs
 * turns resource exhaustion into an explicit incomplete result.
 */

#ifndef OMEGALAB_GROEBNER_HPP
#define OMEGALAB_GROEBNER_HPP

#include "omegalab/polynomial.hpp"

#include <vector>

namespace omegalab {

class MonomialOrder {
 public:
  static MonomialOrder grevlex() { return MonomialOrder(0); }
  // Product order: grevlex on the first `block` variables, ties broken by
  // grevlex on the rest. Eliminates the first block.
  static MonomialOrder eliminate_first(std::size_t block) { return MonomialOrder(block); }

  // > 0 iff a > b
  int compare(const ExponentVector& a, const ExponentVector& b) const;
  std::size_t block() const { return block_; }

 private:
  explicit MonomialOrder(std::size_t block) : block_(block) {}
  std::size_t block_;
};

inline constexpr std::size_t kDefaultMaxPairs = 20'000;

struct GroebnerOptions {
  std::size_t max_pairs = kDefaultMaxPairs;
};

struct GroebnerResult {
  bool complete = true;  // false: the pair cap was hit, basis is meaningless
  std::vector<SparsePolynomial> basis;
  std::size_t pairs_processed = 0;

  // True when the basis is {1}.
  bool is_unit_ideal() const;
};

// Reduced Groebner basis. Elements are primitive integer polynomials with a
// positive leading coefficient, sorted by leading monomial ascending.
GroebnerResult buchberger(const std::vector<SparsePolynomial>& generators,
                          const MonomialOrder& order = MonomialOrder::grevlex(),
                          const GroebnerOptions& options = {});

// Fully reduced normal form of p modulo basis, up to a nonzero scalar
// (returned primitive, positive leading coefficient). Zero iff p reduces to 0.
SparsePolynomial normal_form(const SparsePolynomial& p, const std::vector<SparsePolynomial>& basis,
                             const MonomialOrder& order = MonomialOrder::grevlex());

ExponentVector leading_exponent(const SparsePolynomial& p, const MonomialOrder& order);

SparsePolynomial s_polynomial(const SparsePolynomial& f, const SparsePolynomial& g, const MonomialOrder& order);

}  // namespace omegalab

#endif
