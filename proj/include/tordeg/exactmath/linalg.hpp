#pragma once

#include <optional>
#include <vector>

#include "tordeg/exactmath/scalar.hpp"

namespace tordeg {

struct RowEchelon {
  std::vector<RatVec> rows;  // reduced row echelon form, zero rows dropped
  std::vector<size_t> pivots;
};

RowEchelon reduced_row_echelon(std::vector<RatVec> rows, size_t cols);
size_t rational_rank(const std::vector<RatVec>& rows, size_t cols);
size_t rational_rank(const std::vector<IntVec>& rows, size_t cols);

// Primitive integer basis of {x : row · x = 0 for every row}.
std::vector<IntVec> rational_kernel(const std::vector<IntVec>& rows, size_t cols);

// Some x with A x = b, or nullopt.
std::optional<RatVec> solve_linear(const std::vector<RatVec>& A, const RatVec& b, size_t cols);

// Coefficients c with Σ c_i rows[i] = target, or nullopt.
std::optional<RatVec> express_in_rows(const std::vector<IntVec>& rows, const IntVec& target);

bool in_row_span(const std::vector<IntVec>& rows, const IntVec& v);

// Canonical integer basis of the rational row space: reduced echelon rows made primitive.
std::vector<IntVec> canonical_row_space(const std::vector<IntVec>& rows, size_t cols);

}  // namespace tordeg
