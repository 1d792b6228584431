#include "tordeg/exactmath/linalg.hpp"

namespace tordeg {

RowEchelon reduced_row_echelon(std::vector<RatVec> rows, size_t cols) {
  RowEchelon out;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rational inv = 1 / rows[r][c];
    for (size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

size_t rational_rank(const std::vector<RatVec>& rows, size_t cols) {
  return reduced_row_echelon(rows, cols).pivots.size();
}

size_t rational_rank(const std::vector<IntVec>& rows, size_t cols) {
  std::vector<RatVec> r;
  r.reserve(rows.size());
  for (const auto& v : rows) r.push_back(to_rational(v));
  return rational_rank(r, cols);
}

std::vector<IntVec> rational_kernel(const std::vector<IntVec>& rows, size_t cols) {
  std::vector<RatVec> r;
  for (const auto& v : rows) r.push_back(to_rational(v));
  RowEchelon e = reduced_row_echelon(std::move(r), cols);
  std::vector<bool> is_pivot(cols, false);
  for (size_t p : e.pivots) is_pivot[p] = true;
  std::vector<IntVec> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec x(cols);
    x[f] = 1;
    for (size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(primitive(x));
  }
  return basis;
}

std::optional<RatVec> solve_linear(const std::vector<RatVec>& A, const RatVec& b, size_t cols) {
  std::vector<RatVec> aug;
  aug.reserve(A.size());
  for (size_t i = 0; i < A.size(); ++i) {
    RatVec row = A[i];
    row.resize(cols);
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  RowEchelon e = reduced_row_echelon(std::move(aug), cols + 1);
  RatVec x(cols);
  for (size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == cols) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][cols];
  }
  return x;
}

std::optional<RatVec> express_in_rows(const std::vector<IntVec>& rows, const IntVec& target) {
  // Solve rows^T c = target.
  size_t n = target.size();
  std::vector<RatVec> A(n, RatVec(rows.size()));
  for (size_t j = 0; j < rows.size(); ++j)
    for (size_t i = 0; i < n; ++i) A[i][j] = rows[j][i];
  return solve_linear(A, to_rational(target), rows.size());
}

bool in_row_span(const std::vector<IntVec>& rows, const IntVec& v) {
  return express_in_rows(rows, v).has_value();
}

std::vector<IntVec> canonical_row_space(const std::vector<IntVec>& rows, size_t cols) {
  std::vector<RatVec> r;
  for (const auto& v : rows) r.push_back(to_rational(v));
  RowEchelon e = reduced_row_echelon(std::move(r), cols);
  std::vector<IntVec> out;
  for (const auto& row : e.rows) out.push_back(primitive(row));
  return out;
}

}  // namespace tordeg
