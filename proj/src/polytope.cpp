#include "omegalab/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace omegalab {

namespace {

using Bits = boost::dynamic_bitset<>;

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<long> to_longs(const IntVector& v) {
  std::vector<long> out;
  out.reserve(v.size());
  for (const auto& z : v) out.push_back(to_long(z));
  return out;
}

struct Ray {
  IntVector y;  // (a_1..a_m, b) with a.q - b <= 0 for every point q
  Bits zeros;   // processed constraints tight on this ray
};

// Facets (a, b) of conv(points) for full-dimensional points in Z^m, m >= 1.
std::vector<IntVector> double_description(const std::vector<IntVector>& pts, std::size_t m) {
  const std::size_t np = pts.size();
  auto row = [&](std::size_t i) {
    IntVector c = pts[i];
    c.push_back(-1);
    return c;
  };

  // m + 1 affinely independent points seed a simplicial cone
  std::vector<std::size_t> seed;
  {
    std::vector<RationalVector> rows;
    for (std::size_t i = 0; i < np && seed.size() < m + 1; ++i) {
      auto c = row(i);
      rows.emplace_back(c.begin(), c.end());
      if (rank(RationalMatrix::from_rows(rows, m + 1)) == rows.size()) {
        seed.push_back(i);
      } else {
        rows.pop_back();
      }
    }
    if (seed.size() != m + 1) throw std::logic_error("point set is not full dimensional");
  }

  RationalMatrix m0(m + 1, m + 1);
  for (std::size_t r = 0; r < seed.size(); ++r) {
    auto c = row(seed[r]);
    for (std::size_t j = 0; j <= m; ++j) m0(r, j) = Rational(c[j]);
  }
  std::vector<Ray> rays;
  for (std::size_t j = 0; j <= m; ++j) {
    RationalVector rhs(m + 1, Rational(0)), sol;
    rhs[j] = -1;
    if (!solve(m0, rhs, sol)) throw std::logic_error("singular seed simplex");
    Ray ray{primitive_integer_vector(sol), Bits(np)};
    for (std::size_t r = 0; r <= m; ++r)
      if (r != j) ray.zeros.set(seed[r]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> used(np, false);
  for (auto s : seed) used[s] = true;

  for (std::size_t i = 0; i < np; ++i) {
    if (used[i]) continue;
    const IntVector c = row(i);
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(c, rays[r].y);
      if (val[r] > 0) pos.push_back(r);
      else if (val[r] < 0) neg.push_back(r);
      else rays[r].zeros.set(i);
    }
    if (pos.empty()) continue;

    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (val[r] <= 0) next.push_back(rays[r]);
    for (auto p : pos)
      for (auto q : neg) {
        const Bits common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 1 < m) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector y(m + 1);
        for (std::size_t j = 0; j <= m; ++j) y[j] = val[p] * rays[q].y[j] - val[q] * rays[p].y[j];
        Ray nr{primitive_integer_vector(y), common};
        nr.zeros.set(i);
        next.push_back(std::move(nr));
      }
    rays = std::move(next);
  }

  std::vector<IntVector> out;
  for (auto& r : rays) out.push_back(r.y);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

LatticePolytope LatticePolytope::from_points(std::size_t ambient_dim, const PointSet& points) {
  if (points.empty()) throw std::invalid_argument("polytope from an empty point set");
  for (const auto& p : points)
    if (p.size() != ambient_dim) throw std::invalid_argument("point of wrong dimension");

  LatticePolytope P;
  P.ambient_dim_ = ambient_dim;
  const std::vector<LatticePoint> pts(points.begin(), points.end());
  const LatticePoint& base = pts.front();

  // difference vectors span the direction space of the affine hull
  IntMatrix diff(std::max<std::size_t>(pts.size() - 1, 1), ambient_dim);
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) diff(i - 1, j) = pts[i][j] - base[j];

  const auto ech = reduced_row_echelon(to_rational(diff));
  const std::vector<std::size_t> coords = ech.pivots;
  const std::size_t m = coords.size();
  P.dim_ = static_cast<int>(m);

  {
    const IntMatrix normals = hermite_row_basis(integer_kernel(diff));
    for (std::size_t i = 0; i < normals.rows(); ++i) {
      IntVector a = normals.row(i);
      IntVector bp(base.begin(), base.end());
      P.equations_.push_back(Equation{to_longs(a), to_long(dot(a, bp))});
    }
  }

  std::vector<IntVector> proj;
  proj.reserve(pts.size());
  for (const auto& p : pts) {
    IntVector q;
    for (auto c : coords) q.push_back(p[c]);
    proj.push_back(std::move(q));
  }

  std::vector<IntVector> facet_rays;
  if (m > 0) facet_rays = double_description(proj, m);

  for (const auto& y : facet_rays) {
    std::vector<long> a(ambient_dim, 0);
    for (std::size_t j = 0; j < m; ++j) a[coords[j]] = to_long(y[j]);
    P.facets_.push_back(Inequality{a, to_long(y[m])});
  }

  // a point is a vertex iff its tight facet normals have full rank m
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (m == 0) {
      P.vertices_.push_back(pts[i]);
      continue;
    }
    std::vector<RationalVector> tight;
    for (const auto& y : facet_rays) {
      IntVector a(y.begin(), y.begin() + static_cast<long>(m));
      if (dot(a, proj[i]) == y[m]) tight.emplace_back(a.begin(), a.end());
    }
    if (tight.size() >= m && rank(RationalMatrix::from_rows(tight, m)) == m) P.vertices_.push_back(pts[i]);
  }
  std::sort(P.vertices_.begin(), P.vertices_.end());

  for (const auto& f : P.facets_) {
    Bits on(P.vertices_.size());
    for (std::size_t v = 0; v < P.vertices_.size(); ++v) {
      long s = 0;
      for (std::size_t j = 0; j < ambient_dim; ++j) s += f.a[j] * P.vertices_[v][j];
      if (s == f.b) on.set(v);
    }
    P.facet_vertices_.push_back(std::move(on));
  }
  return P;
}

bool LatticePolytope::contains(const LatticePoint& p) const {
  if (p.size() != ambient_dim_) return false;
  auto eval = [&](const std::vector<long>& a) {
    long s = 0;
    for (std::size_t j = 0; j < ambient_dim_; ++j) s += a[j] * p[j];
    return s;
  };
  for (const auto& e : equations_)
    if (eval(e.a) != e.b) return false;
  for (const auto& f : facets_)
    if (eval(f.a) > f.b) return false;
  return true;
}

LatticePoint to_point(const ExponentVector& e) { return LatticePoint(e.begin(), e.end()); }

ExponentVector to_exponent(const LatticePoint& p) {
  std::vector<int> e;
  for (long v : p) {
    if (v < 0) throw std::invalid_argument("negative coordinate cannot be an exponent");
    e.push_back(static_cast<int>(v));
  }
  return ExponentVector(std::move(e));
}

PointSet to_point_set(const ExponentSet& s) {
  PointSet out;
  for (const auto& e : s) out.insert(to_point(e));
  return out;
}

namespace {

void require_polymatroid(const SetFunction& r) {
  if (r.n() > kMaxGreedyGroundSet) throw std::invalid_argument("ground set too large for greedy enumeration");
  auto rep = is_polymatroid(r);
  if (!rep.ok()) throw std::invalid_argument("not a polymatroid: " + rep.describe());
}

template <class Emit>
void for_each_greedy(const SetFunction& r, bool base_only, Emit emit) {
  const std::size_t n = r.n();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    LatticePoint v(n, 0);
    Subset prefix = 0;
    std::vector<LatticePoint> prefixes;
    for (std::size_t j = 0; j < n; ++j) {
      const Subset next = prefix | (Subset{1} << perm[j]);
      v[perm[j]] = r(next) - r(prefix);
      prefix = next;
      if (!base_only) prefixes.push_back(v);
    }
    if (base_only) {
      emit(v);
    } else {
      emit(LatticePoint(n, 0));
      for (auto& p : prefixes) emit(p);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

PointSet greedy_independence_points(const SetFunction& r) {
  require_polymatroid(r);
  PointSet s;
  for_each_greedy(r, false, [&](const LatticePoint& p) { s.insert(p); });
  return s;
}

PointSet greedy_base_points(const SetFunction& r) {
  require_polymatroid(r);
  PointSet s;
  for_each_greedy(r, true, [&](const LatticePoint& p) { s.insert(p); });
  return s;
}

LatticePolytope independence_polytope(const SetFunction& r) {
  return LatticePolytope::from_points(r.n(), greedy_independence_points(r));
}

LatticePolytope base_polytope(const SetFunction& r) {
  return LatticePolytope::from_points(r.n(), greedy_base_points(r));
}

PointSet matroid_bar_vertices(const SetFunction& r) {
  if (!is_matroid(r)) throw std::invalid_argument("not a matroid rank function");
  const std::size_t n = r.n();
  const long d = r.rank();
  PointSet out;
  for (Subset b = 0; b <= r.full(); ++b) {
    if (std::popcount(b) != d || r(b) != d) continue;
    std::vector<std::size_t> elems;
    for (std::size_t i = 0; i < n; ++i)
      if (b & (Subset{1} << i)) elems.push_back(i);
    std::vector<long> labels(static_cast<std::size_t>(d));
    std::iota(labels.begin(), labels.end(), 1);
    do {
      LatticePoint v(n, 0);
      for (std::size_t j = 0; j < elems.size(); ++j) v[elems[j]] = labels[j];
      out.insert(v);
    } while (std::next_permutation(labels.begin(), labels.end()));
  }
  return out;
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw std::invalid_argument("Minkowski sum of different ambient dimensions");
  if (p.vertices().size() * q.vertices().size() > kMaxMinkowskiPairs)
    throw std::length_error("Minkowski sum exceeds the vertex-pair guard");
  PointSet sums;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) {
      LatticePoint s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      sums.insert(std::move(s));
    }
  return LatticePolytope::from_points(p.ambient_dim(), sums);
}

PointSet lattice_points(const LatticePolytope& p, std::size_t max_scan) {
  const std::size_t n = p.ambient_dim();
  LatticePoint lo = p.vertices().front(), hi = p.vertices().front();
  for (const auto& v : p.vertices())
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }

  std::vector<Inequality> cons = p.inequalities();
  for (const auto& e : p.equations()) {
    cons.push_back(Inequality{e.a, e.b});
    std::vector<long> neg(e.a.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -e.a[i];
    cons.push_back(Inequality{neg, -e.b});
  }
  // rest_min[c][i]: smallest value coordinates i.. can add to constraint c
  std::vector<std::vector<long>> rest_min(cons.size(), std::vector<long>(n + 1, 0));
  for (std::size_t c = 0; c < cons.size(); ++c)
    for (std::size_t i = n; i-- > 0;)
      rest_min[c][i] = rest_min[c][i + 1] + std::min(cons[c].a[i] * lo[i], cons[c].a[i] * hi[i]);

  PointSet out;
  LatticePoint x(n, 0);
  std::vector<long> partial(cons.size(), 0);
  std::size_t visited = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (++visited > max_scan) throw std::length_error("lattice point scan exceeded its guard");
    for (std::size_t c = 0; c < cons.size(); ++c)
      if (partial[c] + rest_min[c][i] > cons[c].b) return;
    if (i == n) {
      out.insert(x);
      return;
    }
    for (long v = lo[i]; v <= hi[i]; ++v) {
      x[i] = v;
      for (std::size_t c = 0; c < cons.size(); ++c) partial[c] += cons[c].a[i] * v;
      rec(i + 1);
      for (std::size_t c = 0; c < cons.size(); ++c) partial[c] -= cons[c].a[i] * v;
    }
  };
  rec(0);
  return out;
}

namespace {

int affine_dim(const LatticePolytope& p, const Bits& verts) {
  std::vector<RationalVector> rows;
  std::size_t first = verts.find_first();
  if (first == Bits::npos) return -1;
  for (auto v = verts.find_next(first); v != Bits::npos; v = verts.find_next(v)) {
    RationalVector r;
    for (std::size_t j = 0; j < p.ambient_dim(); ++j) r.push_back(Rational(p.vertices()[v][j] - p.vertices()[first][j]));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return 0;
  return static_cast<int>(rank(RationalMatrix::from_rows(rows, p.ambient_dim())));
}

std::vector<std::size_t> indices_of(const Bits& b) {
  std::vector<std::size_t> out;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(i);
  return out;
}

// Smallest face containing all marked vertices, as a vertex set.
Bits meet_closure(const LatticePolytope& p, const Bits& verts) {
  Bits out(p.vertices().size());
  out.set();
  for (const auto& f : p.facet_vertices())
    if (verts.is_subset_of(f)) out &= f;
  return out;
}

}  // namespace

std::vector<Face> faces(const LatticePolytope& p, std::size_t max_scan) {
  const std::size_t nv = p.vertices().size();
  std::set<Bits> seen;
  std::vector<Bits> queue;
  Bits all(nv);
  all.set();
  seen.insert(all);
  for (const auto& f : p.facet_vertices())
    if (f.any() && seen.insert(f).second) queue.push_back(f);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Bits cur = queue[qi];
    for (const auto& f : p.facet_vertices()) {
      Bits m = cur & f;
      if (m.none()) continue;
      if (seen.insert(m).second) queue.push_back(m);
    }
  }
  // vertices are faces even when no facet intersection isolates them (dim 0/1)
  for (std::size_t v = 0; v < nv; ++v) {
    Bits b(nv);
    b.set(v);
    seen.insert(b);
  }

  const PointSet pts = lattice_points(p, max_scan);
  std::vector<Face> out;
  for (const auto& b : seen) {
    Face face;
    face.vertex_indices = indices_of(b);
    face.dim = affine_dim(p, b);
    std::vector<const Inequality*> tight;
    for (std::size_t f = 0; f < p.facet_vertices().size(); ++f)
      if (b.is_subset_of(p.facet_vertices()[f])) tight.push_back(&p.inequalities()[f]);
    for (const auto& x : pts) {
      bool on = true;
      for (const auto* ineq : tight) {
        long s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) s += ineq->a[j] * x[j];
        if (s != ineq->b) {
          on = false;
          break;
        }
      }
      if (on) face.lattice_points.push_back(x);
    }
    out.push_back(std::move(face));
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_indices < b.vertex_indices;
  });
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> edges(const LatticePolytope& p) {
  const std::size_t nv = p.vertices().size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < nv; ++u)
    for (std::size_t v = u + 1; v < nv; ++v) {
      Bits b(nv);
      b.set(u);
      b.set(v);
      if (meet_closure(p, b) == b) out.emplace_back(u, v);
    }
  return out;
}

VertexVerdict is_simple(const LatticePolytope& p) {
  std::vector<int> degree(p.vertices().size(), 0);
  for (auto [u, v] : edges(p)) {
    ++degree[u];
    ++degree[v];
  }
  for (std::size_t v = 0; v < degree.size(); ++v)
    if (degree[v] != p.dim()) return VertexVerdict{false, v};
  return VertexVerdict{};
}

VertexVerdict is_smooth(const LatticePolytope& p) {
  const auto es = edges(p);
  const std::size_t nv = p.vertices().size();
  std::vector<std::vector<IntVector>> dirs(nv);
  for (auto [u, v] : es) {
    IntVector d(p.ambient_dim());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = p.vertices()[v][j] - p.vertices()[u][j];
    d = primitive_integer_vector(d);
    IntVector neg(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) neg[j] = -d[j];
    dirs[u].push_back(d);
    dirs[v].push_back(std::move(neg));
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (dirs[v].size() != static_cast<std::size_t>(p.dim())) return VertexVerdict{false, v};
    if (p.dim() == 0) continue;
    IntMatrix m = IntMatrix::from_rows(dirs[v], p.ambient_dim());
    const auto snf = smith_normal_form(m);
    // a simple vertex cone spans the tangent space, so the primitive edges
    // are a lattice basis iff every elementary divisor is 1
    if (snf.divisors.size() != dirs[v].size()) return VertexVerdict{false, v};
    for (const auto& dv : snf.divisors)
      if (dv != 1) return VertexVerdict{false, v};
  }
  return VertexVerdict{};
}

}  // namespace omegalab
