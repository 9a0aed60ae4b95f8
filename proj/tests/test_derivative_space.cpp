#include "generators.hpp"
#include "omegalab/certify.hpp"
#include "omegalab/derivative_space.hpp"
#include "omegalab/polymatroid.hpp"
#include "omegalab/polytope.hpp"

#include <doctest.h>

using namespace omegalab;

namespace {

const std::vector<std::string> kX3{"x1", "x2", "x3"};

SparsePolynomial ex51() { return parse_polynomial("x1^2*x2+x1*x2^2+x1^2*x3+x1*x2*x3+x2^2*x3", kX3); }

// Rank of the basis extended by q equals the basis size.
bool in_span(const DerivativeSpace& ds, const SparsePolynomial& q) {
  RationalMatrix m(ds.m() + 1, ds.support_union.size());
  for (std::size_t i = 0; i < ds.m(); ++i)
    for (std::size_t j = 0; j < ds.support_union.size(); ++j) m(i, j) = ds.projection(i, j);
  for (const auto& [e, c] : q.terms()) {
    auto it = std::find(ds.support_union.begin(), ds.support_union.end(), e);
    if (it == ds.support_union.end()) return false;
    m(ds.m(), static_cast<std::size_t>(it - ds.support_union.begin())) = c;
  }
  return rank(m) == ds.m();
}

// Vector in grevlex column order from coordinates (z20,z11,z10,z02,z01).
RationalVector from_lex_coords(const DerivativeSpace& ds, const std::vector<long>& v) {
  const std::vector<ExponentVector> lex{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}};
  RationalVector out(ds.support_union.size());
  for (std::size_t i = 0; i < lex.size(); ++i) {
    auto it = std::find(ds.support_union.begin(), ds.support_union.end(), lex[i]);
    REQUIRE(it != ds.support_union.end());
    out[static_cast<std::size_t>(it - ds.support_union.begin())] = v[i];
  }
  return out;
}

}  // namespace

TEST_CASE("first derivative space of the cubic in three variables") {
  const auto ds = derivative_space(ex51(), 1);
  CHECK(ds.m() == 3);
  CHECK(ds.support_union.size() == 5);
  CHECK(ds.support_union ==
        std::vector<ExponentVector>{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}});
  CHECK(in_span(ds, parse_polynomial("2*x1*x2+x2^2+2*x1*x3+x2*x3", kX3)));
  CHECK(in_span(ds, parse_polynomial("x1^2+2*x1*x2+x1*x3+2*x2*x3", kX3)));
  CHECK(in_span(ds, parse_polynomial("x1^2+x1*x2+x2^2", kX3)));
  CHECK_FALSE(in_span(ds, parse_polynomial("x1^2", kX3)));

  const auto centre = projection_centre(ds);
  CHECK(centre.rows() == 2);
  for (const auto& v : {std::vector<long>{0, -1, 0, 1, 1}, std::vector<long>{1, -1, 1, 0, 0}})
    CHECK(ds.projection.apply(from_lex_coords(ds, v)) == RationalVector(3, 0));
}

TEST_CASE("derivative spaces of simple polynomials") {
  const auto s33 = elementary_symmetric(3, 3);
  const auto ds = derivative_space(s33, 2);
  CHECK(ds.m() == 3);
  CHECK(ds.support_union.size() == 3);
  CHECK(projection_centre(ds).rows() == 0);

  const auto cube = parse_polynomial("x1^4", kX3);
  const auto dc = derivative_space(cube, 1);
  CHECK(dc.m() == 1);
  CHECK(dc.basis.front() == parse_polynomial("x1^3", kX3));

  const auto d1 = derivative_space(s33, 1);
  CHECK(d1.m() == 3);
  CHECK(projection_centre(d1).rows() == d1.support_union.size() - d1.m());

  CHECK_THROWS(derivative_space(s33, 0));
  CHECK_THROWS(derivative_space(s33, 3));
  CHECK_THROWS(derivative_space(parse_polynomial("x1^2 + x2", kX3), 1));
}

TEST_CASE("derivative supports") {
  const auto s24 = elementary_symmetric(2, 4);
  ExponentSet units;
  for (std::size_t i = 0; i < 4; ++i) units.insert(ExponentVector::unit(4, i));
  CHECK(derivative_support(s24, 1) == units);
  CHECK(derivative_support(ex51(), 0) == support(ex51()));
  CHECK(derivative_support(ex51(), 1) ==
        ExponentSet{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}});
  CHECK(derivative_support(ex51(), 3) == ExponentSet{ExponentVector(3)});
}

TEST_CASE("derivative supports are lattice points of truncated base polytopes") {
  const auto h17 = parse_polynomial(
      "w*(2*x+4*y+7*z)*(4*x+2*y+7*z) + x^3+11*x^2*y+11*x*y^2+y^3+15*x^2*z+46*x*y*z+15*y^2*z+37*x*z^2+37*y*z^2+21*z^3",
      {"w", "x", "y", "z"});
  CHECK(verify_monomial_proposition(h17).empty());
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t d = 1; d <= std::min<std::size_t>(4, n); ++d) {
      const auto s = elementary_symmetric(d, n);
      CHECK(verify_monomial_proposition(s).empty());
      for (std::size_t k = 0; k <= d; ++k) {
        const auto bk = derivative_support(s, k);
        CHECK(bk.size() == static_cast<std::size_t>(binomial(static_cast<long>(n), static_cast<long>(d - k)).get_si()));
        for (const auto& e : bk)
          for (int c : e) CHECK(c <= 1);
      }
    }
  // not M-convex: the comparison is still reported
  const auto bad = parse_polynomial("x1*x2^2 + x3^3", kX3);
  CHECK_FALSE(is_mconvex(support(bad)).holds);
  CHECK_NOTHROW(verify_monomial_proposition(bad));
}

TEST_CASE("elementary symmetric polynomials") {
  const auto s = elementary_symmetric(2, 3);
  CHECK(s == parse_polynomial("x1*x2+x1*x3+x2*x3", kX3));
  CHECK(elementary_symmetric(3, 5).term_count() == 10);
  CHECK_THROWS(elementary_symmetric(4, 3));
  CHECK_THROWS(elementary_symmetric(0, 3));
}

TEST_CASE("binomial identity for the centres of elementary symmetric polynomials") {
  const auto a = binomial_identity_check(4, 2, 1);
  CHECK(a.holds);
  CHECK(a.coefficient == 1);
  const auto b = binomial_identity_check(5, 3, 1);
  CHECK(b.holds);
  CHECK(b.coefficient == 1);
  const auto c = binomial_identity_check(4, 3, 2);
  CHECK(c.holds);
  CHECK(c.coefficient == 2);
  CHECK_FALSE(c.degenerate);
  CHECK(binomial_identity_check(5, 4, 3).coefficient == 3);
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t d = 2; d <= n; ++d)
      for (std::size_t k = 1; k < d; ++k) {
        const auto r = binomial_identity_check(n, d, k);
        CHECK(r.holds);
        CHECK_FALSE(r.degenerate);
      }
  CHECK_THROWS(binomial_identity_check(4, 2, 2));
  CHECK_THROWS(binomial_identity_check(3, 4, 1));
}

TEST_CASE("random M-convex supports: derivative supports, rank, Minkowski sums") {
  testing::Rng rng(4242);
  int tested = 0;
  while (tested < 40) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 2, 4));
    const auto r = testing::random_polymatroid(rng, n, 4);
    const ExponentSet s = testing::integer_base_points(r);
    if (r.rank() < 2) continue;
    ++tested;
    const auto h = testing::random_polynomial_on(rng, n, s);
    CHECK(verify_monomial_proposition(h).empty());
    const RationalVector e = testing::random_positive_vector(rng, n);
    PointSet msum{LatticePoint(n, 0)};
    for (std::size_t k = 1; k < static_cast<std::size_t>(h.degree()); ++k) {
      const auto ds = derivative_space(h, k);
      // m_k is the rank of all partials, whatever order they come in
      const auto parts = partial_derivatives(h, k);
      RationalMatrix m(parts.size(), ds.support_union.size());
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (const auto& [ex, c] : parts[parts.size() - 1 - i].terms()) {
          auto it = std::find(ds.support_union.begin(), ds.support_union.end(), ex);
          m(i, static_cast<std::size_t>(it - ds.support_union.begin())) = c;
        }
      CHECK(rank(m) == ds.m());
      CHECK(projection_centre(ds).rows() == ds.support_union.size() - ds.m());
      const ExponentSet bk(ds.support_union.begin(), ds.support_union.end());
      CHECK(is_mconvex(bk).holds);
      SparsePolynomial de = h;
      for (std::size_t j = 0; j < k; ++j) de = directional_derivative(de, e);
      CHECK(support(de) == bk);
      PointSet next;
      for (const auto& a : msum)
        for (const auto& b : bk) {
          LatticePoint p = a;
          for (std::size_t c = 0; c < n; ++c) p[c] += b[c];
          next.insert(p);
        }
      msum = std::move(next);
    }
    CHECK(lattice_points(base_polytope(bar_from(rho_from_support(s), 1))) == msum);
  }
}
