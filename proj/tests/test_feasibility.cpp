#include "generators.hpp"
#include "omegalab/feasibility.hpp"
#include "omegalab/groebner.hpp"

#include <doctest.h>

using namespace omegalab;

namespace {

SparsePolynomial p(const char* s, std::size_t n = 2) { return parse_polynomial(s, default_variable_names(n)); }

bool same_up_to_sign(const SparsePolynomial& a, const SparsePolynomial& b) { return a == b || a == -b; }

void check_groebner_basis(const std::vector<SparsePolynomial>& gens, const GroebnerResult& gb,
                          const MonomialOrder& order) {
  REQUIRE(gb.complete);
  for (const auto& g : gens) CHECK(normal_form(g, gb.basis, order).is_zero());
  for (std::size_t i = 0; i < gb.basis.size(); ++i)
    for (std::size_t j = i + 1; j < gb.basis.size(); ++j)
      CHECK(normal_form(s_polynomial(gb.basis[i], gb.basis[j], order), gb.basis, order).is_zero());
  const auto again = buchberger(gb.basis, order);
  CHECK(again.basis == gb.basis);
}

SparsePolynomial random_poly(testing::Rng& rng, std::size_t n, int max_deg, int terms) {
  SparsePolynomial::TermMap t;
  for (int i = 0; i < terms; ++i) {
    ExponentVector e(n);
    for (std::size_t j = 0; j < n; ++j) e[j] = static_cast<int>(testing::uniform(rng, 0, max_deg));
    t[e] = testing::uniform(rng, -3, 3);
  }
  return SparsePolynomial(n, t);
}

}  // namespace

TEST_CASE("small Groebner bases") {
  const auto a = buchberger({p("x1^2"), p("x1*x2")});
  CHECK(a.basis.size() == 2);
  CHECK_FALSE(a.is_unit_ideal());
  CHECK(buchberger({p("x1 - 1"), p("x1")}).is_unit_ideal());
  const auto c = buchberger({p("x1*x2 - 1")});
  REQUIRE(c.basis.size() == 1);
  CHECK(same_up_to_sign(c.basis.front(), p("x1*x2 - 1")));
  CHECK_THROWS(buchberger({}));

  const auto lin = buchberger({p("x1 + x2 + x3", 3), p("x1 - x2", 3)});
  CHECK(lin.basis.size() == 2);
  CHECK(normal_form(p("2*x2 + x3", 3), lin.basis).is_zero());
}

TEST_CASE("pair cap gives an incomplete result") {
  const auto r = buchberger({p("x1^3 - x2^2*x3", 3), p("x1*x2 - x3^2", 3), p("x2^3 - x1*x3 + 1", 3)},
                            MonomialOrder::grevlex(), GroebnerOptions{1});
  CHECK_FALSE(r.complete);
}

TEST_CASE("elimination order") {
  const auto order = MonomialOrder::eliminate_first(1);
  CHECK(order.compare(ExponentVector{1, 0, 0}, ExponentVector{0, 5, 5}) > 0);
  CHECK(order.compare(ExponentVector{0, 2, 0}, ExponentVector{0, 1, 0}) > 0);
  // eliminating t from x1 = t^2, x2 = t^3 leaves the cusp
  const std::vector<SparsePolynomial> gens{p("x2 - x1^2", 3), p("x3 - x1^3", 3)};
  const auto gb = buchberger(gens, order);
  check_groebner_basis(gens, gb, order);
  bool found = false;
  for (const auto& g : gb.basis)
    if (leading_exponent(g, order)[0] == 0) found = found || same_up_to_sign(g, p("x2^3 - x3^2", 3));
  CHECK(found);
}

TEST_CASE("random Groebner bases are Groebner bases") {
  testing::Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 2, 3));
    std::vector<SparsePolynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_poly(rng, n, 2, 3));
    const auto order = t % 2 ? MonomialOrder::grevlex() : MonomialOrder::eliminate_first(1);
    const auto gb = buchberger(gens, order);
    check_groebner_basis(gens, gb, order);
  }
}

TEST_CASE("linear torus feasibility") {
  PolySystem a{2, {p("x1 - x2")}};
  CHECK(torus_feasible_linear(a).feasible());
  PolySystem b{2, {p("x1 + x2"), p("x1 - x2")}};
  CHECK(torus_feasible_linear(b).infeasible());
  // kernel spanned by (1,-1,0): the third coordinate is forced to zero
  PolySystem c{3, {p("x3", 3), p("x1 + x2 + x3", 3)}};
  CHECK(torus_feasible_linear(c).infeasible());
  PolySystem d{3, {p("x1 + x2 + x3", 3)}};
  CHECK(torus_feasible_linear(d).feasible());
  PolySystem e{2, {p("x1^2")}};
  CHECK_THROWS(torus_feasible_linear(e));
}

TEST_CASE("nonlinear torus feasibility") {
  CHECK(torus_feasible(PolySystem{2, {p("x1^2 - x2^2")}}).feasible());
  CHECK(torus_feasible(PolySystem{2, {p("x1^2 + x2^2"), p("x1*x2")}}).infeasible());
  // x1^2 + x2^2 has the zeros (1, i); the closure is algebraic
  CHECK(torus_feasible(PolySystem{2, {p("x1^2 + x2^2")}}).feasible());
  CHECK(torus_feasible_affine(PolySystem{2, {p("x1*x2 - 1"), p("x1 - 2")}}).feasible());
  CHECK(torus_feasible_affine(PolySystem{2, {p("x1*x2"), p("x1 - 2")}}).infeasible());
  CHECK(torus_feasible_affine(PolySystem{2, {p("x1 + x2 - x1*x2"), p("x1 - x2")}}).feasible());
  CHECK(torus_feasible_affine(PolySystem{1, {p("x1^2 - x1", 1)}}).feasible());
  CHECK(torus_feasible_affine(PolySystem{1, {p("x1^2 + x1", 1), p("x1 - 1", 1)}}).infeasible());
  const auto v = torus_feasible(PolySystem{3, {p("x1*x2 - x3^2", 3), p("x1 - x2", 3)}});
  CHECK(v.feasible());
  CHECK(to_string(v.outcome) == "feasible");
}

TEST_CASE("linear path agrees with Groebner on random linear systems") {
  testing::Rng rng(23);
  FeasibilityOptions slow;
  slow.linear_fast_path = false;
  int feasible = 0, infeasible = 0;
  for (int t = 0; t < 120; ++t) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 2, 4));
    const auto rows = static_cast<std::size_t>(testing::uniform(rng, 1, n));
    PolySystem sys{n, {}};
    for (std::size_t r = 0; r < rows; ++r) {
      SparsePolynomial l(n);
      for (std::size_t i = 0; i < n; ++i)
        if (testing::uniform(rng, 0, 2))
          l = l + SparsePolynomial::variable(n, i) * Rational(testing::uniform(rng, -2, 2));
      if (!l.is_zero()) sys.generators.push_back(l);
    }
    if (sys.generators.empty()) continue;
    const auto fast = torus_feasible_linear(sys);
    const auto groebner = torus_feasible(sys, slow);
    REQUIRE(groebner.outcome != Feasibility::Undecided);
    CHECK(fast.outcome == groebner.outcome);
    (fast.feasible() ? feasible : infeasible)++;
  }
  CHECK(feasible > 10);
  CHECK(infeasible > 10);
}

TEST_CASE("systems with a planted torus point are feasible") {
  testing::Rng rng(29);
  const std::vector<Rational> values{1, -1, 2, -2, make_rational(1, 2), 3};
  for (int t = 0; t < 40; ++t) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 2, 3));
    RationalVector pt(n);
    for (auto& c : pt) c = values[static_cast<std::size_t>(testing::uniform(rng, 0, 5))];
    PolySystem sys{n, {}};
    for (std::size_t i = 0; i < n; ++i) {
      auto f = random_poly(rng, n, 2, 3);
      f = f - SparsePolynomial::constant(n, f.evaluate(pt));
      if (!f.is_zero()) sys.generators.push_back(f);
    }
    const auto v = torus_feasible_affine(sys);
    CHECK(v.feasible());
  }
}

TEST_CASE("systems containing a monomial are infeasible") {
  testing::Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 2, 3));
    PolySystem sys{n, {random_poly(rng, n, 2, 3)}};
    ExponentVector e(n);
    for (std::size_t j = 0; j < n; ++j) e[j] = static_cast<int>(testing::uniform(rng, 0, 2));
    sys.generators.push_back(SparsePolynomial::monomial(e, 5));
    CHECK(torus_feasible_affine(sys).infeasible());
  }
}

TEST_CASE("toric ideals") {
  const auto conic = toric_ideal({{2, 0}, {1, 1}, {0, 2}});
  REQUIRE(conic.complete);
  CHECK(conic.nvars == 3);
  REQUIRE(conic.generators.size() == 1);
  CHECK(same_up_to_sign(conic.generators.front(), p("x2^2 - x1*x3", 3)));

  const auto simplex = toric_ideal({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(simplex.generators.empty());

  // B_1 of the cubic x1^2 x2 + ... in the order (2,0,0),(1,1,0),(1,0,1),(0,2,0),(0,1,1)
  const auto b1 = toric_ideal({{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}});
  REQUIRE(b1.complete);
  for (const char* g : {"x2^2 - x1*x4", "x2*x3 - x1*x5", "x2*x5 - x3*x4"})
    CHECK(normal_form(p(g, 5), b1.generators).is_zero());
  CHECK_FALSE(normal_form(p("x2 - x3", 5), b1.generators).is_zero());

  // the twisted cubic needs three quadrics
  const auto tc = toric_ideal({{3, 0}, {2, 1}, {1, 2}, {0, 3}});
  CHECK(tc.generators.size() == 3);
}

TEST_CASE("toric variety meets linear spaces") {
  const std::vector<LatticePoint> conic{{2, 0}, {1, 1}, {0, 2}};
  // z20 = z02, z11 = 0 meets the conic z11^2 = z20 z02 only at z = 0
  CHECK(toric_variety_meets(conic, {p("x1 - x3", 3), p("x2", 3)}).infeasible());
  // z20 = z02 = z11 is the point x = (1,1)
  CHECK(toric_variety_meets(conic, {p("x1 - x3", 3), p("x1 - x2", 3)}).feasible());
  // z20 + z02 = 0, z11 = 0 meets the conic only at z = 0
  CHECK(toric_variety_meets(conic, {p("x1 + x3", 3), p("x2", 3)}).infeasible());
  CHECK(toric_variety_meets(conic, {p("x1 + x3", 3)}).feasible());
  CHECK(toric_variety_meets(conic, {}).feasible());
}
