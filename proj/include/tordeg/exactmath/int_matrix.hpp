#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "tordeg/exactmath/scalar.hpp"

namespace tordeg {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, size_t cols);
  static IntMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  BigInt& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const BigInt& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  IntVec row(size_t r) const;
  IntVec col(size_t c) const;
  std::vector<IntVec> row_vectors() const;
  std::vector<IntVec> col_vectors() const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntVec operator*(const IntVec& v) const;
  bool operator==(const IntMatrix& other) const = default;

  bool is_zero() const;
  std::string to_string() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct HermiteForm {
  IntMatrix H;  // row echelon, positive pivots, entries above a pivot reduced into [0, pivot)
  IntMatrix U;  // unimodular with U * m = H
  size_t rank = 0;
};

struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
};

HermiteForm hermite_normal_form(const IntMatrix& m);
SmithForm smith_normal_form(const IntMatrix& m);
size_t rank(const IntMatrix& m);
BigInt determinant(const IntMatrix& m);

// Columns form a basis of ker(m) ∩ Z^cols.
IntMatrix integer_kernel(const IntMatrix& m);

// Nonzero diagonal entries of the Smith form.
IntVec invariant_factors(const IntMatrix& m);

// True when the lattice spanned by the rows equals its rational span intersected with Z^cols.
bool rows_span_saturated_lattice(const IntMatrix& m);

// Integer basis (as rows) of (row space of m) ∩ Z^cols.
IntMatrix saturated_row_lattice(const IntMatrix& m);

}  // namespace tordeg
