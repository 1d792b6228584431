#pragma once

#include <cstdint>
#include <vector>

#include "tordeg/exactmath/scalar.hpp"

namespace tordeg {

// Dynamic bitset used for ray/constraint incidences.
class Bits {
 public:
  Bits() = default;
  explicit Bits(size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  size_t size() const { return n_; }
  void resize(size_t n) {
    n_ = n;
    words_.resize((n + 63) / 64, 0);
  }
  void set(size_t i) { words_[i / 64] |= uint64_t(1) << (i % 64); }
  bool test(size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  size_t count() const;
  bool subset_of(const Bits& other) const;
  Bits operator&(const Bits& other) const;
  bool operator==(const Bits& other) const = default;
  bool operator<(const Bits& other) const { return words_ < other.words_; }

 private:
  size_t n_ = 0;
  std::vector<uint64_t> words_;
};

// {x : a·x >= 0 for each inequality a, e·x = 0 for each equality e}, with its
// generators (lineality basis and extreme rays) computed at construction by double description.
class RationalCone {
 public:
  RationalCone() = default;
  explicit RationalCone(size_t dim, std::vector<IntVec> inequalities = {}, std::vector<IntVec> equalities = {});
  static RationalCone from_generators(size_t dim, const std::vector<IntVec>& rays,
                                      const std::vector<IntVec>& lineality = {});

  size_t ambient_dim() const { return dim_; }
  size_t dim() const { return lineality_.size() + pointed_dim_; }

  const std::vector<IntVec>& inequalities() const { return inequalities_; }
  const std::vector<IntVec>& equalities() const { return equalities_; }
  // Canonical lineality basis (primitive reduced echelon rows).
  const std::vector<IntVec>& lineality() const { return lineality_; }
  // Primitive extreme rays, orthogonal to the lineality space, sorted.
  const std::vector<IntVec>& rays() const { return rays_; }

  RationalCone intersect(const std::vector<IntVec>& inequalities, const std::vector<IntVec>& equalities = {}) const;
  RationalCone intersect(const RationalCone& other) const;

  bool contains(const IntVec& point) const;
  bool contains(const RationalCone& other) const;
  bool equals(const RationalCone& other) const { return contains(other) && other.contains(*this); }

  // Sum of the extreme rays; throws EmptyCone for the zero cone.
  IntVec relative_interior_point() const;
  // Integer basis of the linear span.
  std::vector<IntVec> span_basis() const;
  // Integer basis of the orthogonal complement of the span (the implied equalities).
  std::vector<IntVec> implied_equalities() const;
  // Irredundant inequalities defining the cone inside its span.
  std::vector<IntVec> facets() const;

 private:
  void add_constraint(const IntVec& a);
  void canonicalize();

  size_t dim_ = 0;
  std::vector<IntVec> inequalities_;
  std::vector<IntVec> equalities_;
  std::vector<IntVec> lineality_;
  std::vector<IntVec> rays_;
  std::vector<Bits> tight_;  // per ray: processed constraints vanishing on it
  size_t processed_ = 0;
  size_t pointed_dim_ = 0;
};

IntVec cone_interior_point(const RationalCone& c);
size_t cone_dimension(const RationalCone& c);
bool cones_equal(const RationalCone& a, const RationalCone& b);
bool cone_contains(const RationalCone& outer, const RationalCone& inner);
RationalCone common_refinement(const RationalCone& a, const RationalCone& b);

}  // namespace tordeg
