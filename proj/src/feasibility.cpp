#include "omegalab/feasibility.hpp"

#include <algorithm>
#include <stdexcept>

namespace omegalab {

std::string to_string(Feasibility f) {
  switch (f) {
    case Feasibility::Feasible: return "feasible";
    case Feasibility::Infeasible: return "infeasible";
    case Feasibility::Undecided: return "undecided";
  }
  return "?";
}

std::string to_string(FeasibilityMethod m) {
  switch (m) {
    case FeasibilityMethod::LinearAlgebra: return "linear-algebra";
    case FeasibilityMethod::Groebner: return "groebner";
    case FeasibilityMethod::ToricOracle: return "toric-oracle";
  }
  return "?";
}

namespace {

FeasibilityVerdict verdict(Feasibility f, FeasibilityMethod m, std::string cert) {
  return FeasibilityVerdict{f, m, std::move(cert)};
}

void check_ring(const PolySystem& sys) {
  for (const auto& g : sys.generators)
    if (g.nvars() != sys.nvars) throw std::invalid_argument("generator has the wrong number of variables");
}

// Returns a reason string when some generator is a nonzero constant.
std::optional<std::string> constant_obstruction(const std::vector<SparsePolynomial>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].degree() == 0) return "generator " + std::to_string(i + 1) + " is a nonzero constant";
  return std::nullopt;
}

std::vector<SparsePolynomial> nonzero(const std::vector<SparsePolynomial>& gens) {
  std::vector<SparsePolynomial> out;
  for (const auto& g : gens)
    if (!g.is_zero()) out.push_back(g);
  return out;
}

// x^a * p -> p with the common monomial factor removed
SparsePolynomial strip_monomial_factor(const SparsePolynomial& p) {
  if (p.is_zero()) return p;
  std::vector<int> low(p.nvars(), -1);
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < p.nvars(); ++i) low[i] = low[i] < 0 ? e[i] : std::min(low[i], e[i]);
  SparsePolynomial::TermMap out;
  const ExponentVector shift(low);
  for (const auto& [e, c] : p.terms()) out.emplace(e - shift, c);
  return SparsePolynomial(p.nvars(), out);
}

// Keeps the listed variables; every other variable is set to 1.
SparsePolynomial reindex(const SparsePolynomial& p, const std::vector<std::size_t>& keep) {
  SparsePolynomial::TermMap out;
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> ne;
    for (auto i : keep) ne.push_back(e[i]);
    ExponentVector key(std::move(ne));
    auto [it, inserted] = out.emplace(key, c);
    if (!inserted) it->second += c;
  }
  return SparsePolynomial(keep.size(), out);
}

}  // namespace

FeasibilityVerdict torus_feasible_linear(const PolySystem& sys) {
  check_ring(sys);
  const auto gens = nonzero(sys.generators);
  RationalMatrix a(gens.size(), sys.nvars);
  for (std::size_t r = 0; r < gens.size(); ++r) {
    if (!gens[r].is_homogeneous() || gens[r].degree() != 1)
      throw std::invalid_argument("linear path needs homogeneous linear generators");
    for (const auto& [e, c] : gens[r].terms())
      for (std::size_t i = 0; i < sys.nvars; ++i)
        if (e[i] == 1) a(r, i) = c;
  }
  const RationalMatrix k = gens.empty() ? RationalMatrix::identity(sys.nvars) : nullspace(a);
  if (k.rows() == 0) return verdict(Feasibility::Infeasible, FeasibilityMethod::LinearAlgebra, "kernel is zero");
  for (std::size_t i = 0; i < sys.nvars; ++i) {
    bool free = false;
    for (std::size_t r = 0; r < k.rows() && !free; ++r) free = k(r, i) != 0;
    if (!free)
      return verdict(Feasibility::Infeasible, FeasibilityMethod::LinearAlgebra,
                     "kernel contained in the coordinate hyperplane x" + std::to_string(i + 1) + " = 0");
  }
  return verdict(Feasibility::Feasible, FeasibilityMethod::LinearAlgebra,
                 "kernel of dimension " + std::to_string(k.rows()) + " meets the torus");
}

FeasibilityVerdict torus_feasible_affine(const PolySystem& sys, const FeasibilityOptions& options) {
  check_ring(sys);
  const auto gens = nonzero(sys.generators);
  if (auto why = constant_obstruction(gens)) return verdict(Feasibility::Infeasible, FeasibilityMethod::LinearAlgebra, *why);
  if (gens.empty()) return verdict(Feasibility::Feasible, FeasibilityMethod::LinearAlgebra, "empty system");

  const bool linear = std::all_of(gens.begin(), gens.end(), [](const auto& g) { return g.degree() <= 1; });
  if (linear && options.linear_fast_path) {
    RationalMatrix a(gens.size(), sys.nvars);
    RationalVector rhs(gens.size(), Rational(0));
    for (std::size_t r = 0; r < gens.size(); ++r)
      for (const auto& [e, c] : gens[r].terms()) {
        if (e.degree() == 0) {
          rhs[r] = -c;
          continue;
        }
        for (std::size_t i = 0; i < sys.nvars; ++i)
          if (e[i] == 1) a(r, i) = c;
      }
    RationalVector x0;
    if (!solve(a, rhs, x0)) return verdict(Feasibility::Infeasible, FeasibilityMethod::LinearAlgebra, "inconsistent linear system");
    const RationalMatrix k = nullspace(a);
    for (std::size_t i = 0; i < sys.nvars; ++i) {
      bool free = x0[i] != 0;
      for (std::size_t r = 0; r < k.rows() && !free; ++r) free = k(r, i) != 0;
      if (!free)
        return verdict(Feasibility::Infeasible, FeasibilityMethod::LinearAlgebra,
                       "solution set inside x" + std::to_string(i + 1) + " = 0");
    }
    return verdict(Feasibility::Feasible, FeasibilityMethod::LinearAlgebra, "affine solution space meets the torus");
  }

  // Rabinowitsch: t * x_1 ... x_m - 1 with t as the last variable
  const std::size_t m = sys.nvars;
  std::vector<SparsePolynomial> ext;
  for (const auto& g : gens) {
    SparsePolynomial::TermMap t;
    for (const auto& [e, c] : g.terms()) {
      std::vector<int> ne(e.begin(), e.end());
      ne.push_back(0);
      t.emplace(ExponentVector(std::move(ne)), c);
    }
    ext.emplace_back(m + 1, t);
  }
  ext.push_back(SparsePolynomial::monomial(ExponentVector(std::vector<int>(m + 1, 1))) -
                SparsePolynomial::constant(m + 1, 1));
  const auto gb = buchberger(ext, MonomialOrder::grevlex(), options.groebner);
  if (!gb.complete)
    return verdict(Feasibility::Undecided, FeasibilityMethod::Groebner,
                   "pair cap of " + std::to_string(options.groebner.max_pairs) + " reached");
  if (gb.is_unit_ideal())
    return verdict(Feasibility::Infeasible, FeasibilityMethod::Groebner, "1 is in the saturated ideal");
  return verdict(Feasibility::Feasible, FeasibilityMethod::Groebner,
                 "saturated ideal is proper (" + std::to_string(gb.basis.size()) + " basis elements)");
}

FeasibilityVerdict torus_feasible(const PolySystem& sys, const FeasibilityOptions& options) {
  check_ring(sys);
  std::vector<SparsePolynomial> gens;
  for (const auto& g : nonzero(sys.generators)) {
    if (!g.is_homogeneous()) throw std::invalid_argument("torus_feasible needs homogeneous generators");
    gens.push_back(strip_monomial_factor(g));
  }
  if (auto why = constant_obstruction(gens))
    return verdict(Feasibility::Infeasible, FeasibilityMethod::LinearAlgebra, *why + " after removing monomial factors");

  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < sys.nvars; ++i) {
    const bool occurs = std::any_of(gens.begin(), gens.end(), [&](const auto& g) {
      return std::any_of(g.terms().begin(), g.terms().end(), [&](const auto& t) { return t.first[i] > 0; });
    });
    if (occurs) used.push_back(i);
  }
  if (used.empty()) return verdict(Feasibility::Feasible, FeasibilityMethod::LinearAlgebra, "all generators vanish");

  const bool linear = std::all_of(gens.begin(), gens.end(), [](const auto& g) { return g.degree() == 1; });
  if (linear && options.linear_fast_path) {
    PolySystem lin{used.size(), {}};
    for (const auto& g : gens) lin.generators.push_back(reindex(g, used));
    return torus_feasible_linear(lin);
  }

  // torus solutions of a homogeneous system are invariant under scaling, so
  // the last used variable can be set to 1
  std::vector<std::size_t> keep(used.begin(), used.end() - 1);
  PolySystem aff{keep.size(), {}};
  for (const auto& g : gens) aff.generators.push_back(reindex(g, keep));
  return torus_feasible_affine(aff, options);
}

ToricIdealResult toric_ideal(const std::vector<LatticePoint>& points, const GroebnerOptions& options) {
  if (points.empty()) throw std::invalid_argument("toric ideal of an empty configuration");
  if (points.size() > kMaxToricOraclePoints) throw std::length_error("toric ideal oracle limited to 12 points");
  const std::size_t n = points.front().size(), N = points.size();
  IntMatrix a(n + 1, N);
  for (std::size_t j = 0; j < N; ++j) {
    if (points[j].size() != n) throw std::invalid_argument("points of different dimensions");
    for (std::size_t i = 0; i < n; ++i) a(i, j) = points[j][i];
    a(n, j) = 1;
  }
  ToricIdealResult res;
  res.nvars = N;
  const IntMatrix lattice = integer_kernel(a);
  if (lattice.rows() == 0) return res;

  // ring: t, z_1..z_N
  std::vector<SparsePolynomial> gens;
  for (std::size_t r = 0; r < lattice.rows(); ++r) {
    std::vector<int> plus(N + 1, 0), minus(N + 1, 0);
    for (std::size_t j = 0; j < N; ++j) {
      const long u = to_long(lattice(r, j));
      (u > 0 ? plus : minus)[j + 1] = static_cast<int>(std::labs(u));
    }
    gens.push_back(SparsePolynomial::monomial(ExponentVector(plus)) - SparsePolynomial::monomial(ExponentVector(minus)));
  }
  gens.push_back(SparsePolynomial::monomial(ExponentVector(std::vector<int>(N + 1, 1))) -
                 SparsePolynomial::constant(N + 1, 1));
  const auto gb = buchberger(gens, MonomialOrder::eliminate_first(1), options);
  if (!gb.complete) {
    res.complete = false;
    return res;
  }
  std::vector<std::size_t> zs(N);
  for (std::size_t j = 0; j < N; ++j) zs[j] = j + 1;
  std::vector<SparsePolynomial> elim;
  for (const auto& g : gb.basis) {
    const bool has_t = std::any_of(g.terms().begin(), g.terms().end(), [](const auto& t) { return t.first[0] > 0; });
    if (!has_t) elim.push_back(reindex(g, zs));
  }
  if (elim.empty()) return res;
  const auto reduced = buchberger(elim, MonomialOrder::grevlex(), options);
  res.complete = reduced.complete;
  res.generators = reduced.basis;
  return res;
}

FeasibilityVerdict toric_variety_meets(const std::vector<LatticePoint>& points,
                                       const std::vector<SparsePolynomial>& linear_forms,
                                       const GroebnerOptions& options) {
  const auto ideal = toric_ideal(points, options);
  if (!ideal.complete) return verdict(Feasibility::Undecided, FeasibilityMethod::ToricOracle, "toric ideal: pair cap reached");
  const std::size_t N = points.size();
  bool undecided = false;
  for (std::size_t a = 0; a < N; ++a) {
    std::vector<SparsePolynomial> gens = ideal.generators;
    for (const auto& l : linear_forms) {
      if (l.nvars() != N) throw std::invalid_argument("linear form in the wrong ring");
      if (!l.is_zero()) gens.push_back(l);
    }
    gens.push_back(SparsePolynomial::variable(N, a) - SparsePolynomial::constant(N, 1));
    const auto gb = buchberger(gens, MonomialOrder::grevlex(), options);
    if (!gb.complete) {
      undecided = true;
      continue;
    }
    if (!gb.is_unit_ideal())
      return verdict(Feasibility::Feasible, FeasibilityMethod::ToricOracle,
                     "intersection point on the chart z" + std::to_string(a + 1) + " = 1");
  }
  if (undecided) return verdict(Feasibility::Undecided, FeasibilityMethod::ToricOracle, "pair cap reached on some chart");
  return verdict(Feasibility::Infeasible, FeasibilityMethod::ToricOracle, "every affine chart yields the unit ideal");
}

}  // namespace omegalab
