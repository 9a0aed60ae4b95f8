#include "omegalab/derivative_space.hpp"

#include "omegalab/polymatroid.hpp"
#include "omegalab/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace omegalab {

ExponentSet derivative_support(const SparsePolynomial& h, std::size_t k) {
  if (!h.is_homogeneous() || h.is_zero()) throw std::invalid_argument("derivative support needs a nonzero homogeneous polynomial");
  if (static_cast<int>(k) > h.degree()) throw std::out_of_range("derivative order exceeds the degree");
  ExponentSet b;
  for (const auto& p : partial_derivatives(h, k))
    for (const auto& [e, c] : p.terms()) b.insert(e);
  return b;
}

DerivativeSpace derivative_space(const SparsePolynomial& h, std::size_t k) {
  if (!h.is_homogeneous() || h.is_zero()) throw std::invalid_argument("derivative space needs a nonzero homogeneous polynomial");
  if (k < 1 || static_cast<int>(k) >= h.degree()) throw std::out_of_range("derivative order must satisfy 1 <= k < deg h");

  const auto partials = partial_derivatives(h, k);
  ExponentSet bk;
  for (const auto& p : partials)
    for (const auto& [e, c] : p.terms()) bk.insert(e);

  DerivativeSpace ds;
  ds.k = k;
  ds.support_union.assign(bk.begin(), bk.end());
  std::sort(ds.support_union.begin(), ds.support_union.end(), GrevlexGreater{});
  std::map<ExponentVector, std::size_t> column;
  for (std::size_t j = 0; j < ds.support_union.size(); ++j) column[ds.support_union[j]] = j;

  RationalMatrix coeffs(partials.size(), ds.support_union.size());
  for (std::size_t i = 0; i < partials.size(); ++i)
    for (const auto& [e, c] : partials[i].terms()) coeffs(i, column.at(e)) = c;

  const auto ech = reduced_row_echelon(coeffs);
  ds.projection = RationalMatrix(ech.reduced.rows(), ds.support_union.size());
  for (std::size_t i = 0; i < ech.reduced.rows(); ++i) {
    const IntVector row = primitive_integer_vector(ech.reduced.row(i));
    SparsePolynomial::TermMap terms;
    for (std::size_t j = 0; j < row.size(); ++j) {
      ds.projection(i, j) = Rational(row[j]);
      if (row[j] != 0) terms.emplace(ds.support_union[j], Rational(row[j]));
    }
    ds.basis.emplace_back(h.nvars(), terms);
  }
  return ds;
}

std::vector<std::size_t> verify_monomial_proposition(const SparsePolynomial& h) {
  const SetFunction rho = rho_from_support(support(h));
  std::vector<std::size_t> failing;
  for (long k = 0; k <= h.degree(); ++k) {
    const PointSet expected = lattice_points(base_polytope(truncate(rho, k)));
    if (to_point_set(derivative_support(h, static_cast<std::size_t>(k))) != expected)
      failing.push_back(static_cast<std::size_t>(k));
  }
  return failing;
}

RationalMatrix projection_centre(const DerivativeSpace& ds) { return nullspace(ds.projection); }

SparsePolynomial elementary_symmetric(std::size_t d, std::size_t n) {
  if (d < 1 || d > n) throw std::out_of_range("elementary symmetric polynomial needs 1 <= d <= n");
  SparsePolynomial::TermMap terms;
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) != d) continue;
    ExponentVector e(n);
    for (std::size_t i = 0; i < n; ++i)
      if (s & (Subset{1} << i)) e[i] = 1;
    terms.emplace(e, Rational(1));
  }
  return SparsePolynomial(n, terms);
}

BinomialIdentityReport binomial_identity_check(std::size_t n, std::size_t d, std::size_t k) {
  if (d < 1 || d > n || k < 1 || k >= d || n > kMaxGroundSet) throw std::out_of_range("need 1 <= k < d <= n");
  const std::size_t size_s = d - k, size_t_ = n - k;
  std::vector<Subset> coords;  // the z_S, |S| = d - k
  for (Subset s = 0; s < (Subset{1} << n); ++s)
    if (static_cast<std::size_t>(std::popcount(s)) == size_s) coords.push_back(s);

  BinomialIdentityReport rep;
  rep.coefficient = binomial(static_cast<long>(n + k) - 1 - static_cast<long>(d), static_cast<long>(n - d));
  rep.holds = true;
  bool any_nonzero = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Subset without_i = static_cast<Subset>(((Subset{1} << n) - 1) & ~(Subset{1} << i));
    std::vector<Integer> lhs(coords.size()), rhs(coords.size());
    for (std::size_t c = 0; c < coords.size(); ++c)
      if ((coords[c] & without_i) == coords[c]) lhs[c] = rep.coefficient;
    // expand the sum of the L_T
    for (Subset t = 0; t < (Subset{1} << n); ++t) {
      if ((t & without_i) != t || static_cast<std::size_t>(std::popcount(t)) != size_t_) continue;
      for (std::size_t c = 0; c < coords.size(); ++c)
        if ((coords[c] & t) == coords[c]) rhs[c] += 1;
    }
    if (lhs != rhs) rep.holds = false;
    for (std::size_t c = 0; c < coords.size(); ++c)
      if (lhs[c] != 0 || rhs[c] != 0) any_nonzero = true;
  }
  rep.degenerate = !any_nonzero;
  return rep;
}

}  // namespace omegalab
