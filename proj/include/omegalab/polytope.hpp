/**
 * Exact lattice polytopes.
 *
 * A polytope is built from a finite point set: the affine hull is found by
 * integer linear algebra, the points are projected injectively onto a
 * coordinate subspace of the same dimension, and the facets are the extreme
 * rays of the polar cone, computed with the double description method.
 * Everything is integer arithmetic; nothing is approximated.
 *
 * Base and independence polytopes of polymatroids get their candidate
 * vertices from the greedy (permutation/prefix) rule before hulling.
 */

#ifndef OMEGALAB_POLYTOPE_HPP
#define OMEGALAB_POLYTOPE_HPP

#include "omegalab/matrix.hpp"
#include "omegalab/polymatroid.hpp"

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <set>
#include <vector>

namespace omegalab {

using LatticePoint = std::vector<long>;
using PointSet = std::set<LatticePoint>;

// a . x <= b
struct Inequality {
  std::vector<long> a;
  long b = 0;
  bool operator==(const Inequality&) const = default;
};

// a . x == b
struct Equation {
  std::vector<long> a;
  long b = 0;
  bool operator==(const Equation&) const = default;
};

inline constexpr std::size_t kMaxMinkowskiPairs = 1'000'000;
inline constexpr std::size_t kDefaultMaxLatticeScan = 50'000'000;
inline constexpr std::size_t kMaxGreedyGroundSet = 9;

class LatticePolytope {
 public:
  // Convex hull of a nonempty finite point set.
  static LatticePolytope from_points(std::size_t ambient_dim, const PointSet& points);

  std::size_t ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }  // lexicographic
  const std::vector<Inequality>& inequalities() const { return facets_; }  // irredundant
  const std::vector<Equation>& equations() const { return equations_; }
  // facet_vertices()[f] marks the vertices on facet f
  const std::vector<boost::dynamic_bitset<>>& facet_vertices() const { return facet_vertices_; }

  bool contains(const LatticePoint& p) const;
  PointSet vertex_set() const { return PointSet(vertices_.begin(), vertices_.end()); }

 private:
  std::size_t ambient_dim_ = 0;
  int dim_ = -1;
  std::vector<LatticePoint> vertices_;
  std::vector<Inequality> facets_;
  std::vector<Equation> equations_;
  std::vector<boost::dynamic_bitset<>> facet_vertices_;
};

struct Face {
  std::vector<std::size_t> vertex_indices;  // into P.vertices()
  int dim = 0;
  std::vector<LatticePoint> lattice_points;
};

LatticePoint to_point(const ExponentVector& e);
ExponentVector to_exponent(const LatticePoint& p);
PointSet to_point_set(const ExponentSet& s);

// Greedy candidate points; exposed for tests.
PointSet greedy_independence_points(const SetFunction& r);
PointSet greedy_base_points(const SetFunction& r);

LatticePolytope independence_polytope(const SetFunction& r);
LatticePolytope base_polytope(const SetFunction& r);

// Points whose support is a basis and whose nonzero entries are 1..d.
PointSet matroid_bar_vertices(const SetFunction& r);

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

PointSet lattice_points(const LatticePolytope& p, std::size_t max_scan = kDefaultMaxLatticeScan);

// Every nonempty face, P itself included, ordered by dimension and then by
// vertex index list.
std::vector<Face> faces(const LatticePolytope& p, std::size_t max_scan = kDefaultMaxLatticeScan);

// Pairs of vertex indices spanning an edge.
std::vector<std::pair<std::size_t, std::size_t>> edges(const LatticePolytope& p);

struct VertexVerdict {
  bool holds = true;
  std::optional<std::size_t> witness_vertex;  // index of a failing vertex
};

VertexVerdict is_simple(const LatticePolytope& p);
VertexVerdict is_smooth(const LatticePolytope& p);

}  // namespace omegalab

#endif
