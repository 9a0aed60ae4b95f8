/**
 * Torus feasibility: does a polynomial system have a common zero with every
 * coordinate nonzero, over the algebraic closure of Q?
 *
 * Linear systems are settled by linear algebra. Everything else goes through
 * the Rabinowitsch trick: adjoin t * x_1 * ... * x_m - 1 and ask whether the
 * Groebner basis is {1}. A Groebner run that hits its pair cap yields
 * Undecided, never a guess.
 */

#ifndef OMEGALAB_FEASIBILITY_HPP
#define OMEGALAB_FEASIBILITY_HPP

#include "omegalab/groebner.hpp"
#include "omegalab/polytope.hpp"

#include <string>
#include <vector>

namespace omegalab {

struct PolySystem {
  std::size_t nvars = 0;
  std::vector<SparsePolynomial> generators;
};

enum class Feasibility { Feasible, Infeasible, Undecided };
enum class FeasibilityMethod { LinearAlgebra, Groebner, ToricOracle };

std::string to_string(Feasibility f);
std::string to_string(FeasibilityMethod m);

struct FeasibilityVerdict {
  Feasibility outcome = Feasibility::Undecided;
  FeasibilityMethod method = FeasibilityMethod::LinearAlgebra;
  std::string certificate;

  bool feasible() const { return outcome == Feasibility::Feasible; }
  bool infeasible() const { return outcome == Feasibility::Infeasible; }
};

struct FeasibilityOptions {
  GroebnerOptions groebner;
  bool linear_fast_path = true;
};

// Homogeneous degree-1 generators; decided from the kernel of the
// coefficient matrix.
FeasibilityVerdict torus_feasible_linear(const PolySystem& sys);

// Arbitrary generators on the full torus (C*)^nvars; no dehomogenisation.
FeasibilityVerdict torus_feasible_affine(const PolySystem& sys, const FeasibilityOptions& options = {});

// Homogeneous generators: strip monomial factors, drop unused variables,
// fix the last used variable to 1 and decide the affine system.
FeasibilityVerdict torus_feasible(const PolySystem& sys, const FeasibilityOptions& options = {});

inline constexpr std::size_t kMaxToricOraclePoints = 12;

struct ToricIdealResult {
  bool complete = true;
  std::size_t nvars = 0;                    // one variable z_a per point, in input order
  std::vector<SparsePolynomial> generators;  // Groebner basis (grevlex) of the toric ideal
};

// Kernel of the monomial map z_a -> x^a: saturate the lattice ideal of a
// lattice basis of ker_Z(A) by the product of all variables.
ToricIdealResult toric_ideal(const std::vector<LatticePoint>& points, const GroebnerOptions& options = {});

// Projective emptiness of X_A intersected with {linear forms = 0}, decided
// chart by chart (z_a = 1).
FeasibilityVerdict toric_variety_meets(const std::vector<LatticePoint>& points,
                                       const std::vector<SparsePolynomial>& linear_forms,
                                       const GroebnerOptions& options = {});

}  // namespace omegalab

#endif
