#pragma once

#include <vector>

#include "tordeg/polytopes/polytope.hpp"
#include "tordeg/repweights/weights.hpp"

namespace tordeg {

// Coordinates of R^N: α_{1,1}, α_{1,2}, ..., α_{1,n-1}, α_{2,2}, ..., α_{n-1,n-1}.
std::vector<PositiveRoot> positive_roots(int n);

using DyckPath = std::vector<PositiveRoot>;

// Sorted by (first root, length, roots).
std::vector<DyckPath> dyck_paths(int n);

// Rows (b, a) meaning b + a·r >= 0: nonnegativity, then one row per Dyck path in dyck_paths order.
// Throws NonDominant on a negative coefficient.
std::vector<IntVec> fflv_inequalities(int n, const std::vector<long>& lambda);
Polytope fflv_polytope(int n, const std::vector<long>& lambda);

}  // namespace tordeg
