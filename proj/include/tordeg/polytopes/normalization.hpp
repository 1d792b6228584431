#pragma once

#include "tordeg/exactmath/int_matrix.hpp"
#include "tordeg/polytopes/polytope.hpp"
#include "tordeg/tropfan/tropical.hpp"

namespace tordeg {

struct NormalizationData {
  BigInt index;                  // index of the column lattice of W in its saturation
  IntMatrix basis;               // rows: the grading rows, then a completion to a basis of the saturated row lattice
  std::vector<IntVec> points;    // non-degree coordinates of the degree (1,...,1) monomials
};

// Each variable must have a nonzero 0/1 degree vector and the grading rows must lie in the
// row space of W; otherwise GradingMismatch.
NormalizationData normalization_data(const IntMatrix& W, const IntMatrix& grading);
Polytope normalization_polytope(const IntMatrix& W, const IntMatrix& grading);
Polytope normalization_polytope(const MaximalCone& cone, const IntMatrix& grading);

}  // namespace tordeg
