// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include "generators.hpp"
#include "omegalab/certify.hpp"
#include "omegalab/derivative_space.hpp"
#include "omegalab/feasibility.hpp"
#include "omegalab/polytope.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace omegalab;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream note;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << "failed: ";
      else note << "; ";
      note << what;
      ok = false;
    }
  }
};

// Instances collected along the way for the cross-method criterion.
std::vector<std::pair<std::string, SparsePolynomial>> g_instances;

const std::vector<std::string> kWXYZ{"w", "x", "y", "z"};
const std::vector<std::string> kX3{"x1", "x2", "x3"};

PointSet permutations_of(LatticePoint p) {
  PointSet out;
  std::sort(p.begin(), p.end());
  do out.insert(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// The three last coordinates permuted, the first fixed.
PointSet permute_last_three(const LatticePoint& p) {
  PointSet out;
  LatticePoint tail(p.begin() + 1, p.end());
  std::sort(tail.begin(), tail.end());
  do {
    LatticePoint q{p[0]};
    q.insert(q.end(), tail.begin(), tail.end());
    out.insert(q);
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

PointSet minkowski_points(const PointSet& a, const ExponentSet& b, std::size_t n) {
  PointSet out;
  for (const auto& x : a)
    for (const auto& y : b) {
      LatticePoint p = x;
      for (std::size_t i = 0; i < n; ++i) p[i] += y[i];
      out.insert(p);
    }
  return out;
}

void criterion1(Check& c) {
  const auto r = matroid_from_bases(4, {0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100});
  const auto simplex = base_polytope(truncate(r, 1));
  c.expect(simplex.vertex_set() == permutations_of({1, 0, 0, 0}), "B(r_1) is not the standard 3-simplex");
  const auto oct = base_polytope(truncate(r, 0));
  c.expect(oct.vertices().size() == 6, "B(r_0) does not have 6 vertices");
  c.expect(!is_simple(oct).holds, "octahedron reported simple");
  const auto tt = base_polytope(bar(r));
  c.expect(tt.vertex_set() == permutations_of({2, 1, 0, 0}) && tt.vertices().size() == 12,
           "B(r-bar) vertices are not the 12 permutations of (2,1,0,0)");
  c.expect(is_simple(tt).holds, "B(r-bar) not simple");
  c.expect(is_smooth(tt).holds, "B(r-bar) not smooth");
  c.note << (c.ok ? "U(2,4): simplex, octahedron (not simple), truncated tetrahedron (simple, smooth)" : "");
}

void criterion2(Check& c) {
  const auto h = parse_polynomial("x1^2*x2+x1*x2^2+x1^2*x3+x1*x2*x3+x2^2*x3", kX3);
  g_instances.emplace_back("cubic in x1,x2,x3", h);
  const auto ds = derivative_space(h, 1);
  const auto col = [&](const ExponentVector& e) -> std::optional<std::size_t> {
    auto it = std::find(ds.support_union.begin(), ds.support_union.end(), e);
    if (it == ds.support_union.end()) return std::nullopt;
    return static_cast<std::size_t>(it - ds.support_union.begin());
  };
  for (const char* g : {"2*x1*x2+x2^2+2*x1*x3+x2*x3", "x1^2+2*x1*x2+x1*x3+2*x2*x3", "x1^2+x1*x2+x2^2"}) {
    RationalMatrix m(ds.m() + 1, ds.support_union.size());
    for (std::size_t i = 0; i < ds.m(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = ds.projection(i, j);
    bool inside = true;
    const auto q = parse_polynomial(g, kX3);
    for (const auto& [e, coef] : q.terms()) {
      const auto j = col(e);
      if (!j) inside = false;
      else m(ds.m(), *j) = coef;
    }
    c.expect(inside && rank(m) == ds.m(), std::string("span misses ") + g);
  }
  const std::vector<ExponentVector> lex{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}};
  c.expect(ds.support_union.size() == 5 &&
               ExponentSet(ds.support_union.begin(), ds.support_union.end()) == ExponentSet(lex.begin(), lex.end()),
           "B_1 differs from the five expected exponents");

  // z variables in the order z20, z11, z10, z02, z01
  std::vector<LatticePoint> pts;
  for (const auto& e : lex) pts.push_back(LatticePoint(e.begin(), e.end()));
  const auto ti = toric_ideal(pts);
  c.expect(ti.complete, "toric ideal incomplete");
  const auto z = default_variable_names(5);
  for (const char* b : {"x3*x4 - x2*x5", "x2*x3 - x1*x5", "x2^2 - x1*x4"})
    c.expect(normal_form(parse_polynomial(b, z), ti.generators).is_zero(), std::string("binomial not in ideal: ") + b);

  const auto centre = projection_centre(ds);
  c.expect(centre.rows() == 2, "centre is not 2-dimensional");
  for (const auto& v : {std::vector<long>{0, -1, 0, 1, 1}, std::vector<long>{1, -1, 1, 0, 0}}) {
    RationalVector x(ds.support_union.size());
    for (std::size_t i = 0; i < lex.size(); ++i) x[*col(lex[i])] = v[i];
    c.expect(ds.projection.apply(x) == RationalVector(ds.m(), 0), "kernel vector not in the centre");
  }
  const auto rep = centre_disjoint(h, 1);
  c.expect(rep.disjoint == Disjointness::Yes, "centre_disjoint(h,1) = " + to_string(rep.disjoint));
  if (c.ok) c.note << "span, B_1, three binomials, 2-dim centre, disjoint=yes";
}

void criterion3(Check& c) {
  const auto start = Clock::now();
  const auto h = parse_polynomial(
      "w*(2*x+4*y+7*z)*(4*x+2*y+7*z) + x^3+11*x^2*y+11*x*y^2+y^3+15*x^2*z+46*x*y*z+15*y^2*z+37*x*z^2+37*y*z^2+21*z^3",
      kWXYZ);
  g_instances.emplace_back("stable cubic with a singular Omega", h);
  c.expect(is_mconvex(support(h)).holds, "support not M-convex");
  const auto cert = certify_smooth(h, {}, kWXYZ);
  // The frustum with vertices permuting (0,2,0,0),(1,1,0,0) is B(r_1) under r_k = min(d-k, r).
  const auto rho = rho_from_support(support(h));
  std::size_t frustum_k = 0;
  for (std::size_t k = 1; k < 3; ++k) {
    PointSet want = permute_last_three({0, 2, 0, 0});
    for (const auto& p : permute_last_three({1, 1, 0, 0})) want.insert(p);
    if (base_polytope(truncate(rho, static_cast<long>(k))).vertex_set() == want) frustum_k = k;
  }
  c.expect(frustum_k == 1, "frustum is not B(r_1)");
  const KReport* kr = nullptr;
  for (const auto& r : cert.k_reports)
    if (r.k == frustum_k) kr = &r;
  c.expect(kr && kr->disjoint == Disjointness::No, "centre meets no face of the frustum");
  if (kr && kr->witness)
    c.expect(PointSet(kr->witness->vertices.begin(), kr->witness->vertices.end()) ==
                 PointSet{{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}},
             "witness face vertices differ");
  else
    c.expect(false, "no witness face");
  c.expect(cert.verdict == Verdict::CriterionFails, "verdict " + to_string(cert.verdict));
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  c.expect(secs < 30, "runtime over 30 s");
  if (c.ok) {
    c.note << "k=" << frustum_k << " (B(r_k) = frustum): disjoint=no, witness {(1,1,0,0),(1,0,1,0),(1,0,0,1)}";
    for (const auto& r : cert.k_reports)
      if (r.k != frustum_k) c.note << "; k=" << r.k << ": disjoint=" << to_string(r.disjoint);
    c.note << "; verdict criterion-fails in " << secs << " s";
  }
}

void criterion4(Check& c) {
  const auto h = parse_polynomial(
      "x^3+11*x^2*y+11*x*y^2+y^3+15*x^2*z+46*x*y*z+15*y^2*z+37*x*z^2+37*y*z^2+21*z^3"
      " + w*(29*x^2+90*x*y+29*y^2+150*x*z+150*y*z+137*z^2)",
      kWXYZ);
  g_instances.emplace_back("stable cubic with a smooth Omega", h);
  const auto cert = certify_smooth(h, {}, kWXYZ);
  c.expect(cert.verdict == Verdict::SmoothToric, "verdict " + to_string(cert.verdict));
  PointSet want = permute_last_three({0, 3, 0, 0});
  for (const auto& p : permute_last_three({2, 1, 0, 0})) want.insert(p);
  c.expect(cert.polytope && cert.polytope->vertex_set() == want, "polytope vertices differ");
  if (c.ok) c.note << "smooth-toric, frustum on (0,3,0,0),(2,1,0,0)";
}

void criterion5(Check& c) {
  const auto start = Clock::now();
  std::size_t cases = 0;
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t d = 2; d <= n; ++d) {
      const auto s = elementary_symmetric(d, n);
      g_instances.emplace_back("sigma_" + std::to_string(d) + "," + std::to_string(n), s);
      const auto cert = certify_smooth(s);
      const std::string tag = "sigma_{" + std::to_string(d) + "," + std::to_string(n) + "}";
      c.expect(cert.verdict == Verdict::SmoothToric, tag + " verdict " + to_string(cert.verdict));
      LatticePoint p(n, 0);
      for (std::size_t i = 0; i + 1 < d; ++i) p[i] = static_cast<long>(i + 1);
      c.expect(cert.polytope && cert.polytope->vertex_set() == permutations_of(p), tag + " polytope vertices differ");
      for (std::size_t k = 1; k < d; ++k) {
        const auto b = binomial_identity_check(n, d, k);
        c.expect(b.holds && !b.degenerate, tag + " binomial identity at k=" + std::to_string(k));
      }
      ++cases;
    }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  c.expect(secs < 60, "runtime over 60 s");
  if (c.ok) c.note << cases << " pairs (d,n) smooth-toric with the expected vertices, identities hold, " << secs << " s";
}

void criterion6(Check& c) {
  testing::Rng rng(6006);
  std::size_t singles = 0, pairs = 0;
  for (; singles < 220; ++singles) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    const auto r = testing::random_polymatroid(rng, n, 4);
    const auto rb = bar(r);
    const auto p = base_polytope(rb);
    c.expect(is_simple(p).holds, "B(r-bar) not simple");
    c.expect(is_smooth(p).holds, "B(r-bar) not smooth");
    c.expect(check_simplicity_conditions(rb).holds, "simplicity conditions fail");
    if (!c.ok) break;
  }
  for (; pairs < 60 && c.ok; ++pairs) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    const auto r1 = testing::random_polymatroid(rng, n, 4);
    const auto r2 = testing::random_polymatroid(rng, n, 4);
    c.expect(minkowski_sum(base_polytope(r1), base_polytope(r2)).vertex_set() == base_polytope(r1 + r2).vertex_set(),
             "Minkowski sum mismatch");
  }
  if (c.ok) c.note << singles << " polymatroids simple and smooth, " << pairs << " Minkowski pairs";
}

void criterion7(Check& c) {
  testing::Rng rng(7007);
  std::size_t done = 0;
  while (done < 120 && c.ok) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 2, 4));
    const auto r = testing::random_polymatroid(rng, n, 4);
    const auto s = testing::integer_base_points(r);
    const auto h = testing::random_polynomial_on(rng, n, s);
    const auto bad = verify_monomial_proposition(h);
    c.expect(bad.empty(), "B_k differs from lattice points of B(rho_k) for support of size " + std::to_string(s.size()));
    if (h.degree() >= 2 && done % 2 == 0) g_instances.emplace_back("random M-convex #" + std::to_string(done), h);
    ++done;
  }
  if (c.ok) c.note << done << " random M-convex supports, all k agree";
}

void criterion8(Check& c) {
  const auto h = parse_polynomial("x1*x2^2 + x3^3", kX3);
  PointSet sum{LatticePoint(3, 0)};
  for (std::size_t k = 1; k <= 2; ++k) sum = minkowski_points(sum, derivative_support(h, k), 3);
  const auto p = LatticePolytope::from_points(3, sum);
  c.expect(is_simple(p).holds, "hull of B_1 + B_2 not simple");
  c.expect(!is_smooth(p).holds, "hull of B_1 + B_2 reported smooth");
  if (c.ok) c.note << "hull of B_1 + B_2 for x1*x2^2 + x3^3 is simple, not smooth";
}

void criterion9(Check& c) {
  c.expect(is_lorentzian(elementary_symmetric(2, 3)).is_lorentzian, "sigma_{2,3} not Lorentzian");
  c.expect(!is_lorentzian(parse_polynomial("x1*x2 + x3^2", kX3)).is_lorentzian, "x1*x2 + x3^2 reported Lorentzian");
  testing::Rng rng(9009);
  std::size_t done = 0;
  for (; done < 60 && c.ok; ++done) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 2, 4));
    const auto d = static_cast<std::size_t>(testing::uniform(rng, 3, 4));
    const auto h = testing::random_positive_product(rng, n, d);
    c.expect(is_lorentzian(h).is_lorentzian, "random product of positive forms not Lorentzian");
    SparsePolynomial g = h;
    for (std::size_t j = 0; j + 2 < d; ++j) {
      RationalVector e(n);
      for (auto& x : e) x = testing::uniform(rng, 0, 5);
      e[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<long>(n) - 1))] += 1;
      g = directional_derivative(g, e);
      c.expect(is_lorentzian(g).is_lorentzian, "derivative D_e h not Lorentzian");
    }
  }
  if (c.ok) c.note << "sigma_{2,3} yes, x1*x2+x3^2 no, " << done << " instances closed under D_e";
}

void criterion10(Check& c) {
  std::size_t compared = 0;
  for (const auto& [name, h] : g_instances) {
    if (!is_mconvex(support(h)).holds) continue;
    for (std::size_t k = 1; k < static_cast<std::size_t>(h.degree()); ++k) {
      if (derivative_support(h, k).size() > kMaxToricOraclePoints) continue;
      const auto face = centre_disjoint(h, k).disjoint;
      const auto oracle = oracle_centre_disjoint(h, k);
      c.expect(face != Disjointness::Undecided && oracle != Disjointness::Undecided,
               name + " k=" + std::to_string(k) + " undecided");
      c.expect(face == oracle, name + " k=" + std::to_string(k) + ": face-orbit " + to_string(face) + ", oracle " +
                                   to_string(oracle));
      ++compared;
    }
  }
  if (c.ok) c.note << compared << " (instance, k) pairs agree";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"U(2,4) truncations and bar", criterion1},
      {"derivative space of the cubic in x1,x2,x3", criterion2},
      {"stable cubic whose centre meets X_B", criterion3},
      {"stable cubic with smooth Omega", criterion4},
      {"elementary symmetric polynomials", criterion5},
      {"random polymatroids", criterion6},
      {"derivative supports of M-convex polynomials", criterion7},
      {"non M-convex negative control", criterion8},
      {"Lorentzian suite", criterion9},
      {"face-orbit vs toric-ideal oracle", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = Clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
              << c.note.str() << " [" << secs << " s]\n";
    failures += !c.ok;
  }
  return failures == 0 ? 0 : 1;
}
