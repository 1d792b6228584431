#pragma once

#include <vector>

#include "tordeg/exactmath/int_matrix.hpp"
#include "tordeg/polytopes/polytope.hpp"

namespace tordeg {

// Lines are numbered 1..n from bottom to top at the left end; letter i crosses the lines at heights i, i+1.
// Crossing k (0-based letter position) is coordinate k of R^N.
struct Crossing {
  int level = 0;
  int lo = 0;  // smaller line label
  int hi = 0;
};

struct PseudolineArrangement {
  int n = 0;
  std::vector<int> word;
  std::vector<Crossing> crossings;
  size_t position_of(int a, int b) const;  // crossing of lines a and b
};

// Throws NotReduced.
PseudolineArrangement build_arrangement(const std::vector<int>& word, int n);

// A path from L_i to L_{i+1} in the orientation induced by line i; vertices are crossing positions.
struct RigorousPath {
  int orientation = 0;
  std::vector<size_t> vertices;
  IntVec weight;  // c_p, length N
};

// All rigorous paths for the orientation induced by line i, 1 <= i < n, sorted by vertex sequence.
std::vector<RigorousPath> rigorous_paths(const PseudolineArrangement& a, int i);

struct StringConeSystem {
  int n = 0;
  size_t N = 0;
  std::vector<IntVec> cone_rows;    // c_p · y >= 0, distinct, sorted
  std::vector<IntVec> weight_rows;  // (y_1..y_N, m_1..m_{n-1}) · row >= 0, one per letter position
};

StringConeSystem string_cone(const std::vector<int>& word, int n);

// Q_w(λ) in R^N for λ = Σ a_i ω_i; throws NonDominant on a negative coefficient.
Polytope string_polytope(const std::vector<int>& word, int n, const std::vector<long>& lambda);

std::vector<long> rho(int n);
std::vector<long> fundamental_weight(int n, int i);

// Weyl dimension of V(λ) for sl_n; throws NonDominant.
BigInt weyl_dimension(int n, const std::vector<long>& lambda);

// Lattice points of Q(ω_1) + ... + Q(ω_{n-1}) against dim V(ρ). The verdict is the count comparison;
// sums_of_lattice_points additionally counts the distinct sums p_1 + ... + p_{n-1} of lattice points,
// which decides the property exactly.
struct MinkowskiReport {
  size_t sum_lattice_points = 0;
  size_t sums_of_lattice_points = 0;
  BigInt expected;
  bool holds = false;
  bool holds_exactly = false;
};

MinkowskiReport minkowski_property(const std::vector<int>& word, int n);

}  // namespace tordeg
