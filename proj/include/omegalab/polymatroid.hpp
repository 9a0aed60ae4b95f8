/**
 * Integer set functions on the subsets of [n] = {1, ..., n}.
 *
 * Subsets are bitmasks: element i (1-based) is bit i-1. Tables are dense, so
 * the ground set is capped; the exhaustive simplicity check is capped lower
 * because it walks every set partition of every subset.
 */

#ifndef OMEGALAB_POLYMATROID_HPP
#define OMEGALAB_POLYMATROID_HPP

#include "omegalab/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace omegalab {

using Subset = std::uint32_t;

inline constexpr std::size_t kMaxGroundSet = 20;
inline constexpr std::size_t kMaxSimplicityGroundSet = 8;

class SetFunction {
 public:
  SetFunction() = default;
  SetFunction(std::size_t n, std::vector<long> values);
  static SetFunction zero(std::size_t n);

  std::size_t n() const { return n_; }
  Subset full() const { return static_cast<Subset>((1u << n_) - 1); }
  long operator()(Subset s) const { return values_.at(s); }
  const std::vector<long>& values() const { return values_; }

  long rank() const { return values_.empty() ? 0 : values_.back(); }

  SetFunction operator+(const SetFunction& o) const;
  bool operator==(const SetFunction&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<long> values_;
};

struct PolymatroidCheckReport {
  bool is_normalized = true;   // f(empty) = 0
  bool is_monotone = true;
  bool is_submodular = true;
  bool nonnegative = true;
  std::optional<std::pair<Subset, Subset>> violating_pair;

  bool ok() const { return is_normalized && is_monotone && is_submodular && nonnegative; }
  std::string describe() const;
};

PolymatroidCheckReport is_polymatroid(const SetFunction& f);
bool is_matroid(const SetFunction& f);

// rho(S) = max over alpha in supp of sum_{i in S} alpha_i.
SetFunction rho_from_support(const ExponentSet& supp);

// r_k(S) = min(rank - k, r(S)).
SetFunction truncate(const SetFunction& r, long k);

// r_start + ... + r_rank; bar(r) is bar_from(r, 0).
SetFunction bar_from(const SetFunction& r, long start);
SetFunction bar(const SetFunction& r);

// Rank function of the matroid with the given bases (bitmasks).
SetFunction matroid_from_bases(std::size_t n, const std::vector<Subset>& bases);

bool is_inseparable(const SetFunction& r, Subset s);

struct SimplicityReport {
  bool holds = true;
  // Condition (a): pair (S, T) with all hypotheses met but equality.
  std::optional<std::pair<Subset, Subset>> violating_pair;
  // Condition (b): enclosing set S and the disjoint blocks S_1..S_k.
  std::optional<std::pair<Subset, std::vector<Subset>>> violating_family;
};

// Exhaustive check of the two strict-inequality conditions characterising
// simple independence polytopes. Meant to be applied to bar(r).
SimplicityReport check_simplicity_conditions(const SetFunction& f);

// deg of t -> h(e + t v); throws when h(e + t v) vanishes identically.
long hyperbolic_rank(const SparsePolynomial& h, const RationalVector& e, const RationalVector& v);

// S -> rank_{h,e}(sum of unit vectors in S); requires h(e) != 0.
SetFunction polymatroid_from_hyperbolic(const SparsePolynomial& h, const RationalVector& e);

std::string subset_to_string(Subset s);  // "{1,3}"

}  // namespace omegalab

#endif
