/**
 * Smoothness certification for homogeneous polynomials with M-convex support.
 *
 * For each 1 <= k < d the kth derivative map factors through the toric
 * variety of B(r_k) followed by a linear projection. When every projection
 * centre misses that toric variety the certificate names the smooth toric
 * variety of B(r-bar_1). A failing check says nothing about singularity.
 */

#ifndef OMEGALAB_CERTIFY_HPP
#define OMEGALAB_CERTIFY_HPP

#include "omegalab/feasibility.hpp"
#include "omegalab/polytope.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace omegalab {

struct MConvexReport {
  bool holds = true;
  // First violation in set order: no j repairs the exchange at index i.
  std::optional<ExponentVector> x, y;
  std::optional<std::size_t> index;  // 0-based
};

MConvexReport is_mconvex(const ExponentSet& b);

struct LorentzianReport {
  bool mconvex = false;
  bool nonneg_coeffs = false;
  std::vector<std::vector<std::size_t>> hessian_failures;  // 0-based multisets
  bool is_lorentzian = false;
};

// Number of positive eigenvalues of a symmetric rational matrix.
std::size_t positive_eigenvalue_count(const RationalMatrix& symmetric);

LorentzianReport is_lorentzian(const SparsePolynomial& h);

enum class Disjointness { Yes, No, Undecided };
std::string to_string(Disjointness d);

struct FaceWitness {
  Face face;
  std::vector<LatticePoint> vertices;
  FeasibilityVerdict verdict;
};

struct KReport {
  std::size_t k = 0;
  std::size_t m_k = 0;
  std::size_t b_k_size = 0;
  std::size_t centre_dim = 0;  // dimension of the kernel as a vector space
  std::size_t faces_checked = 0;
  Disjointness disjoint = Disjointness::Undecided;
  std::optional<FaceWitness> witness;  // set iff disjoint == No
};

struct CertifyOptions {
  FeasibilityOptions feasibility;
  std::size_t max_lattice_scan = kDefaultMaxLatticeScan;
  std::size_t jobs = 1;
  bool lorentzian_report = true;
};

// Face-orbit test of the kth projection centre against X_{B(r_k)}.
KReport centre_disjoint(const SparsePolynomial& h, std::size_t k, const CertifyOptions& options = {});

// Same question through the toric ideal of B_k, chart by chart.
Disjointness oracle_centre_disjoint(const SparsePolynomial& h, std::size_t k, const GroebnerOptions& options = {});

enum class Verdict { SmoothToric, CriterionFails, NotApplicable, Undecided };
std::string to_string(Verdict v);

struct SmoothnessCertificate {
  std::string polynomial;
  std::size_t n = 0;
  std::size_t d = 0;
  bool mconvex = false;
  std::optional<MConvexReport> mconvex_report;
  std::optional<LorentzianReport> lorentzian;
  std::vector<KReport> k_reports;
  Verdict verdict = Verdict::Undecided;
  std::optional<LatticePolytope> polytope;  // B(r-bar_1) when smooth
};

SmoothnessCertificate certify_smooth(const SparsePolynomial& h, const CertifyOptions& options = {},
                                     const std::vector<std::string>& names = {});

struct ProbeReport {
  std::size_t trials = 0;
  std::size_t smooth = 0;
  std::size_t fails = 0;
  std::size_t not_applicable = 0;
  std::size_t undecided = 0;
  std::vector<Verdict> verdicts;
};

inline constexpr std::uint64_t kDefaultProbeSeed = 20240917;

// Random positive integer coefficients in 1..1000 on the support s.
ProbeReport torically_smoothable_probe(const ExponentSet& s, std::size_t trials, std::uint64_t seed = kDefaultProbeSeed,
                                       const CertifyOptions& options = {});

}  // namespace omegalab

#endif
