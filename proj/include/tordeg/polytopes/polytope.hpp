#pragma once

#include <optional>
#include <vector>

#include "tordeg/exactmath/cone.hpp"
#include "tordeg/exactmath/int_matrix.hpp"

namespace tordeg {

// Rows (b, a) stand for the affine inequality b + a·x >= 0 (or equation b + a·x = 0).
class Polytope {
 public:
  Polytope() = default;
  static Polytope from_points(size_t dim, const std::vector<RatVec>& points);
  static Polytope from_points(size_t dim, const std::vector<IntVec>& points);
  // Throws Unbounded when the system has a recession direction.
  static Polytope from_inequalities(size_t dim, const std::vector<IntVec>& inequalities,
                                    const std::vector<IntVec>& equations = {});

  size_t ambient_dim() const { return dim_; }
  int dim() const { return affine_dim_; }  // -1 when empty
  bool empty() const { return vertices_.empty(); }
  bool full_dimensional() const { return affine_dim_ == static_cast<int>(dim_); }

  // Sorted lexicographically.
  const std::vector<RatVec>& vertices() const { return vertices_; }
  // Irredundant facet inequalities, one per facet.
  const std::vector<IntVec>& facets() const { return facets_; }
  // Equations cutting out the affine hull.
  const std::vector<IntVec>& equations() const { return equations_; }

  bool contains(const RatVec& x) const;
  bool contains(const IntVec& x) const;

  // Per facet, the set of vertices on it.
  const std::vector<Bits>& facet_vertices() const { return incidence_; }

 private:
  void build_from_cone(const RationalCone& homogenized);

  size_t dim_ = 0;
  int affine_dim_ = -1;
  std::vector<RatVec> vertices_;
  std::vector<IntVec> facets_;
  std::vector<IntVec> equations_;
  std::vector<Bits> incidence_;
};

// Faces as vertex sets, grouped by dimension 0..dim-1 (the polytope itself is not included).
std::vector<std::vector<Bits>> face_lattice(const Polytope& p);
std::vector<size_t> f_vector(const Polytope& p);
// Σ (-1)^i f_i == 1 - (-1)^d.
bool satisfies_euler_relation(const Polytope& p);

// Same point set: each description's inequalities hold on the other's vertices.
bool same_polytope(const Polytope& a, const Polytope& b);

// Isomorphism of vertex-facet incidences.
bool combinatorially_equivalent(const Polytope& a, const Polytope& b);

// All integer points, sorted. Scans the integer bounding box coordinate by coordinate, narrowing
// each coordinate's range from the facets; throws CellBudgetExceeded after node_budget search nodes.
std::vector<IntVec> lattice_points(const Polytope& p, size_t node_budget = 500000000);

Polytope minkowski_sum(const Polytope& a, const Polytope& b);
Polytope minkowski_sum(const std::vector<Polytope>& ps);

}  // namespace tordeg
