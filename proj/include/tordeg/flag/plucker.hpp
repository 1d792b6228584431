#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tordeg/exactmath/int_matrix.hpp"
#include "tordeg/poly/groebner.hpp"

namespace tordeg {

// Variables p_J for nonempty proper subsets J of {1..n}, ordered by |J| and then
// lexicographically: p1..pn, p12, p13, ..., p(n-1)n, p123, ...
struct PlueckerRing {
  int n = 0;
  std::vector<uint32_t> subsets;  // bit i-1 set when i ∈ J
  PolyRing ring;
  IntMatrix grading;  // row k-1 marks |J| = k

  size_t nvars() const { return subsets.size(); }
  size_t index_of(uint32_t subset) const;
  static std::vector<int> elements(uint32_t subset);
};

PlueckerRing plucker_ring(int n);

// Alternative coordinate layout: the subsets of {1..n-1} of size at most n-2 first, in
// plucker_ring(n-1) order, then the remaining subsets by size and lexicographically. The
// tabulated n = 5 weight vectors use it.
std::vector<uint32_t> extension_layout(int n);
// Reorder a vector given in the extension layout into plucker_ring order.
IntVec from_extension_layout(const PlueckerRing& pr, const IntVec& w);
IntVec to_extension_layout(const PlueckerRing& pr, const IntVec& w);
IntMatrix grading_matrix(int n);
Ideal plucker_ideal(int n);
Ideal plucker_ideal(const PlueckerRing& pr);

// One relation per (I, J) with |I| <= |J| - 2: Σ_{j ∈ J∖I} (-1)^{l_j} p_{I∪j} p_{J∖j},
// l_j = #{k ∈ J : k > j} + #{i ∈ I : i < j}. Zero when every term vanishes.
Polynomial plucker_relation(const PlueckerRing& pr, uint32_t I, uint32_t J);

// Element of S_n ⋊ Z_2 acting on subsets by J ↦ σ(J), followed by complementation when
// the flag is set.
struct SignedSymmetry {
  std::vector<int> perm;  // 0-based images
  bool complement = false;

  uint32_t apply_subset(uint32_t J, int n) const;
  // Sign of the substitution p_J ↦ ±p_{g(J)}.
  int sign(uint32_t J, int n) const;
  // Apply other first, then this.
  SignedSymmetry compose(const SignedSymmetry& other) const;
  bool is_identity() const;
};

std::vector<SignedSymmetry> symmetry_group(int n);

IntVec apply_symmetry(const SignedSymmetry& g, const PlueckerRing& pr, const IntVec& w);
Polynomial apply_symmetry(const SignedSymmetry& g, const PlueckerRing& pr, const Polynomial& f);
// Signed substitution on generators, returned as a reduced basis.
Ideal apply_symmetry(const SignedSymmetry& g, const PlueckerRing& pr, const Ideal& ideal);

// Partition items into orbits. act(i, g) must return the key of g applied to item i.
// Orbits are listed by their canonical representative (smallest key); each orbit's
// members are sorted by index. Throws ItemNotClosed when an image is not an item.
std::vector<std::vector<size_t>> orbit_decomposition(
    const std::vector<std::string>& keys, const std::vector<SignedSymmetry>& group,
    const std::function<std::string(size_t, const SignedSymmetry&)>& act);

}  // namespace tordeg
