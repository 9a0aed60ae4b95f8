#include "omegalab/certify.hpp"

#include "omegalab/derivative_space.hpp"
#include "omegalab/polymatroid.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace omegalab {

MConvexReport is_mconvex(const ExponentSet& b) {
  if (b.empty()) throw std::invalid_argument("M-convexity of an empty set");
  const int deg = b.begin()->degree();
  for (const auto& e : b)
    if (e.degree() != deg || e.size() != b.begin()->size())
      throw std::invalid_argument("M-convexity needs points with equal coordinate sums");

  MConvexReport rep;
  const std::size_t n = b.begin()->size();
  for (const auto& x : b)
    for (const auto& y : b) {
      if (x == y) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (x[i] <= y[i]) continue;
        bool repaired = false;
        for (std::size_t j = 0; j < n && !repaired; ++j) {
          if (x[j] >= y[j]) continue;
          ExponentVector xs = x, ys = y;
          --xs[i];
          ++xs[j];
          ++ys[i];
          --ys[j];
          repaired = b.count(xs) && b.count(ys);
        }
        if (!repaired) {
          rep.holds = false;
          rep.x = x;
          rep.y = y;
          rep.index = i;
          return rep;
        }
      }
    }
  return rep;
}

std::size_t positive_eigenvalue_count(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("eigenvalue count of a non-square matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a(i, j) != a(j, i)) throw std::invalid_argument("eigenvalue count needs a symmetric matrix");

  // Faddeev-LeVerrier: coefficients c[n], ..., c[0] of det(t I - A)
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix am = a * m;
    for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k + 1];
    m = std::move(am);
    const RationalMatrix prod = a * m;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += prod(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  // real-rooted, so Descartes' bound is exact
  std::size_t changes = 0;
  int last = 0;
  for (std::size_t i = n + 1; i-- > 0;) {
    const int s = sgn(c[i]);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

LorentzianReport is_lorentzian(const SparsePolynomial& h) {
  if (h.is_zero() || !h.is_homogeneous()) throw std::invalid_argument("Lorentzian test needs a nonzero homogeneous polynomial");
  const int d = h.degree();
  if (d < 2) throw std::invalid_argument("Lorentzian test needs degree at least 2");

  LorentzianReport rep;
  rep.nonneg_coeffs = std::all_of(h.terms().begin(), h.terms().end(), [](const auto& t) { return t.second > 0; });
  rep.mconvex = is_mconvex(support(h)).holds;

  const std::size_t n = h.nvars();
  for (const auto& ms : multisets(n, static_cast<std::size_t>(d - 2))) {
    SparsePolynomial q = h;
    for (std::size_t i : ms) q = partial_derivative(q, i);
    RationalMatrix hess(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const SparsePolynomial qi = partial_derivative(q, i);
      for (std::size_t j = 0; j < n; ++j) hess(i, j) = partial_derivative(qi, j).coefficient(ExponentVector(n));
    }
    if (positive_eigenvalue_count(hess) > 1) rep.hessian_failures.push_back(ms);
  }
  rep.is_lorentzian = rep.nonneg_coeffs && rep.mconvex && rep.hessian_failures.empty();
  return rep;
}

std::string to_string(Disjointness d) {
  switch (d) {
    case Disjointness::Yes: return "yes";
    case Disjointness::No: return "no";
    case Disjointness::Undecided: return "undecided";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::SmoothToric: return "smooth-toric";
    case Verdict::CriterionFails: return "criterion-fails";
    case Verdict::NotApplicable: return "not-applicable";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

namespace {

FeasibilityVerdict linear_verdict(Feasibility f, std::string why) {
  return FeasibilityVerdict{f, FeasibilityMethod::LinearAlgebra, std::move(why)};
}

// Is there a torus point on the orbit of the face whose lattice points are
// `pts` (column indices into the projection) lying in the centre?
FeasibilityVerdict face_meets_centre(const DerivativeSpace& ds, const std::vector<std::size_t>& cols,
                                     const FeasibilityOptions& options) {
  const std::size_t m = ds.projection.rows();
  RationalMatrix mf(m, cols.size());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) mf(i, j) = ds.projection(i, cols[j]);

  const RationalMatrix kernel = nullspace(mf);
  if (kernel.rows() == 0) return linear_verdict(Feasibility::Infeasible, "restricted projection is injective");
  for (std::size_t j = 0; j < cols.size(); ++j) {
    bool zero = true;
    for (std::size_t r = 0; r < kernel.rows() && zero; ++r) zero = kernel(r, j) == 0;
    if (zero)
      return linear_verdict(Feasibility::Infeasible,
                            "restricted kernel lies in z_" + ds.support_union[cols[j]].to_string() + " = 0");
  }

  // lattice coordinates of the face: a - a0 = sum beta_j u_j
  const std::size_t n = ds.support_union.front().size();
  const ExponentVector& a0 = ds.support_union[cols.front()];
  IntMatrix diffs(cols.size() - 1, n);
  for (std::size_t j = 1; j < cols.size(); ++j)
    for (std::size_t c = 0; c < n; ++c) diffs(j - 1, c) = ds.support_union[cols[j]][c] - a0[c];
  const IntMatrix basis = cols.size() > 1 ? hermite_row_basis(diffs) : IntMatrix(0, n);
  const std::size_t s = basis.rows();
  // a simplex face: the monomials y^beta are independent on the torus
  if (cols.size() == s + 1)
    return linear_verdict(Feasibility::Feasible, "simplex face; a generic kernel vector has no zero coordinate");

  const RationalMatrix ut = to_rational(basis).transpose();
  std::vector<std::vector<long>> beta(cols.size(), std::vector<long>(s, 0));
  for (std::size_t j = 1; j < cols.size(); ++j) {
    RationalVector rhs(n), x;
    for (std::size_t c = 0; c < n; ++c) rhs[c] = Rational(diffs(j - 1, c));
    if (!solve(ut, rhs, x)) throw std::logic_error("face point outside its own lattice");
    for (std::size_t t = 0; t < s; ++t) {
      if (x[t].get_den() != 1) throw std::logic_error("non-integral lattice coordinates");
      beta[j][t] = to_long(x[t].get_num());
    }
  }
  std::vector<long> shift(s, 0);
  for (const auto& b : beta)
    for (std::size_t t = 0; t < s; ++t) shift[t] = std::min(shift[t], b[t]);

  const auto ech = reduced_row_echelon(mf);
  PolySystem sys{s, {}};
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    SparsePolynomial::TermMap terms;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (ech.reduced(i, j) == 0) continue;
      ExponentVector e(s);
      for (std::size_t t = 0; t < s; ++t) e[t] = static_cast<int>(beta[j][t] - shift[t]);
      terms.emplace(e, ech.reduced(i, j));
    }
    sys.generators.emplace_back(s, terms);
  }
  return torus_feasible_affine(sys, options);
}

}  // namespace

KReport centre_disjoint(const SparsePolynomial& h, std::size_t k, const CertifyOptions& options) {
  const ExponentSet supp = support(h);
  if (!is_mconvex(supp).holds) throw std::invalid_argument("centre test needs an M-convex support");
  const DerivativeSpace ds = derivative_space(h, k);
  const SetFunction rk = truncate(rho_from_support(supp), static_cast<long>(k));
  const LatticePolytope p = base_polytope(rk);
  const std::vector<Face> fs = faces(p, options.max_lattice_scan);

  KReport rep;
  rep.k = k;
  rep.m_k = ds.m();
  rep.b_k_size = ds.support_union.size();
  rep.centre_dim = rep.b_k_size - rep.m_k;

  std::map<LatticePoint, std::size_t> column;
  for (std::size_t j = 0; j < ds.support_union.size(); ++j) column[to_point(ds.support_union[j])] = j;

  std::vector<std::optional<FeasibilityVerdict>> verdicts(fs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_feasible{fs.size()};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&]() {
    try {
      for (std::size_t f = next++; f < fs.size(); f = next++) {
        if (f > first_feasible.load()) continue;
        std::vector<std::size_t> cols;
        for (const auto& pt : fs[f].lattice_points) {
          auto it = column.find(pt);
          if (it == column.end()) throw std::logic_error("lattice point of B(r_k) missing from B_k");
          cols.push_back(it->second);
        }
        verdicts[f] = face_meets_centre(ds, cols, options.feasibility);
        if (verdicts[f]->feasible()) {
          std::size_t cur = first_feasible.load();
          while (f < cur && !first_feasible.compare_exchange_weak(cur, f)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      next = fs.size();
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, fs.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  const std::size_t ff = first_feasible.load();
  bool undecided = false;
  for (std::size_t f = 0; f < fs.size() && f <= ff; ++f) {
    if (!verdicts[f]) continue;
    ++rep.faces_checked;
    if (verdicts[f]->outcome == Feasibility::Undecided) undecided = true;
  }
  if (ff < fs.size()) {
    rep.disjoint = Disjointness::No;
    FaceWitness w{fs[ff], {}, *verdicts[ff]};
    for (std::size_t v : fs[ff].vertex_indices) w.vertices.push_back(p.vertices()[v]);
    rep.witness = std::move(w);
  } else {
    rep.disjoint = undecided ? Disjointness::Undecided : Disjointness::Yes;
  }
  return rep;
}

Disjointness oracle_centre_disjoint(const SparsePolynomial& h, std::size_t k, const GroebnerOptions& options) {
  const DerivativeSpace ds = derivative_space(h, k);
  const std::size_t nz = ds.support_union.size();
  std::vector<LatticePoint> pts;
  for (const auto& e : ds.support_union) pts.push_back(to_point(e));
  std::vector<SparsePolynomial> forms;
  for (std::size_t i = 0; i < ds.projection.rows(); ++i) {
    SparsePolynomial::TermMap terms;
    for (std::size_t j = 0; j < nz; ++j)
      if (ds.projection(i, j) != 0) terms.emplace(ExponentVector::unit(nz, j), ds.projection(i, j));
    forms.emplace_back(nz, terms);
  }
  const auto v = toric_variety_meets(pts, forms, options);
  switch (v.outcome) {
    case Feasibility::Feasible: return Disjointness::No;
    case Feasibility::Infeasible: return Disjointness::Yes;
    case Feasibility::Undecided: break;
  }
  return Disjointness::Undecided;
}

SmoothnessCertificate certify_smooth(const SparsePolynomial& h, const CertifyOptions& options,
                                     const std::vector<std::string>& names) {
  if (h.is_zero() || !h.is_homogeneous()) throw std::invalid_argument("certification needs a nonzero homogeneous polynomial");
  if (h.degree() < 2) throw std::invalid_argument("certification needs degree at least 2");
  const ExponentSet supp = support(h);
  for (std::size_t i = 0; i < h.nvars(); ++i)
    if (std::none_of(supp.begin(), supp.end(), [&](const ExponentVector& e) { return e[i] > 0; }))
      throw std::invalid_argument("variable " + std::to_string(i + 1) + " does not occur");

  SmoothnessCertificate cert;
  cert.polynomial = names.empty() ? h.to_string() : h.to_string(names);
  cert.n = h.nvars();
  cert.d = static_cast<std::size_t>(h.degree());
  const MConvexReport mc = is_mconvex(supp);
  cert.mconvex = mc.holds;
  cert.mconvex_report = mc;
  if (options.lorentzian_report) cert.lorentzian = is_lorentzian(h);
  if (!cert.mconvex) {
    cert.verdict = Verdict::NotApplicable;
    return cert;
  }

  bool any_no = false, any_undecided = false;
  for (std::size_t k = 1; k < cert.d; ++k) {
    cert.k_reports.push_back(centre_disjoint(h, k, options));
    any_no |= cert.k_reports.back().disjoint == Disjointness::No;
    any_undecided |= cert.k_reports.back().disjoint == Disjointness::Undecided;
  }
  if (any_no) {
    cert.verdict = Verdict::CriterionFails;
  } else if (any_undecided) {
    cert.verdict = Verdict::Undecided;
  } else {
    cert.verdict = Verdict::SmoothToric;
    cert.polytope = base_polytope(bar_from(rho_from_support(supp), 1));
    if (!is_smooth(*cert.polytope).holds) throw std::logic_error("B(r-bar_1) is not smooth");
  }
  return cert;
}

ProbeReport torically_smoothable_probe(const ExponentSet& s, std::size_t trials, std::uint64_t seed,
                                       const CertifyOptions& options) {
  ProbeReport rep;
  if (trials == 0) return rep;
  if (!is_mconvex(s).holds) throw std::invalid_argument("probe needs an M-convex support");
  const std::size_t n = s.begin()->size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(1, 1000);
  CertifyOptions opts = options;
  opts.lorentzian_report = false;
  for (std::size_t t = 0; t < trials; ++t) {
    SparsePolynomial::TermMap terms;
    for (const auto& e : s) terms.emplace(e, Rational(coef(rng)));
    const auto cert = certify_smooth(SparsePolynomial(n, terms), opts);
    ++rep.trials;
    rep.verdicts.push_back(cert.verdict);
    switch (cert.verdict) {
      case Verdict::SmoothToric: ++rep.smooth; break;
      case Verdict::CriterionFails: ++rep.fails; break;
      case Verdict::NotApplicable: ++rep.not_applicable; break;
      case Verdict::Undecided: ++rep.undecided; break;
    }
  }
  return rep;
}

}  // namespace omegalab
