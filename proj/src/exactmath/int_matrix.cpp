#include "tordeg/exactmath/int_matrix.hpp"

#include <algorithm>

#include "tordeg/exactmath/linalg.hpp"

namespace tordeg {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows)
    for (long x : r) data_.emplace_back(x);
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntVec IntMatrix::row(size_t r) const {
  return IntVec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVec IntMatrix::col(size_t c) const {
  IntVec v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

std::vector<IntVec> IntMatrix::row_vectors() const {
  std::vector<IntVec> out;
  for (size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<IntVec> IntMatrix::col_vectors() const {
  std::vector<IntVec> out;
  for (size_t j = 0; j < cols_; ++j) out.push_back(col(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  IntMatrix p(rows_, other.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (size_t j = 0; j < other.cols_; ++j) p.at(i, j) += at(i, k) * other.at(k, j);
    }
  return p;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
  IntVec out(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < rows_; ++i) {
    if (i) s += ",";
    s += tordeg::to_string(row(i));
  }
  return s + "]";
}

namespace {

void swap_rows(IntMatrix& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row_a <- s row_a + t row_b, row_b <- u row_a + v row_b (old values).
void combine_rows(IntMatrix& m, size_t a, size_t b, const BigInt& s, const BigInt& t, const BigInt& u,
                  const BigInt& v) {
  for (size_t j = 0; j < m.cols(); ++j) {
    BigInt x = m.at(a, j), y = m.at(b, j);
    m.at(a, j) = s * x + t * y;
    m.at(b, j) = u * x + v * y;
  }
}

void add_row_multiple(IntMatrix& m, size_t target, size_t source, const BigInt& f) {
  for (size_t j = 0; j < m.cols(); ++j) m.at(target, j) += f * m.at(source, j);
}

void add_col_multiple(IntMatrix& m, size_t target, size_t source, const BigInt& f) {
  for (size_t i = 0; i < m.rows(); ++i) m.at(i, target) += f * m.at(i, source);
}

void negate_row(IntMatrix& m, size_t r) {
  for (size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& H = out.H;
  IntMatrix& U = out.U;
  size_t r = 0;
  for (size_t c = 0; c < H.cols() && r < H.rows(); ++c) {
    for (size_t i = r + 1; i < H.rows(); ++i) {
      if (H.at(i, c) == 0) continue;
      BigInt g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), H.at(r, c).get_mpz_t(), H.at(i, c).get_mpz_t());
      BigInt a = H.at(r, c) / g, b = H.at(i, c) / g;
      combine_rows(H, r, i, s, t, -b, a);
      combine_rows(U, r, i, s, t, -b, a);
    }
    if (H.at(r, c) == 0) continue;
    if (H.at(r, c) < 0) {
      negate_row(H, r);
      negate_row(U, r);
    }
    for (size_t k = 0; k < r; ++k) {
      BigInt q = floor_div(H.at(k, c), H.at(r, c));
      if (q != 0) {
        add_row_multiple(H, k, r, -q);
        add_row_multiple(U, k, r, -q);
      }
    }
    ++r;
  }
  out.rank = r;
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm out{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& S = out.S;
  IntMatrix& U = out.U;
  IntMatrix& V = out.V;
  const size_t n = std::min(S.rows(), S.cols());
  for (size_t t = 0; t < n; ++t) {
    while (true) {
      // Bring the smallest nonzero entry of the trailing block to (t, t).
      size_t bi = S.rows(), bj = S.cols();
      for (size_t i = t; i < S.rows(); ++i)
        for (size_t j = t; j < S.cols(); ++j) {
          if (S.at(i, j) == 0) continue;
          if (bi == S.rows() || abs(S.at(i, j)) < abs(S.at(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == S.rows()) return out;
      swap_rows(S, t, bi);
      swap_rows(U, t, bi);
      swap_cols(S, t, bj);
      swap_cols(V, t, bj);

      bool clean = true;
      for (size_t i = t + 1; i < S.rows(); ++i) {
        if (S.at(i, t) == 0) continue;
        BigInt q = floor_div(S.at(i, t), S.at(t, t));
        add_row_multiple(S, i, t, -q);
        add_row_multiple(U, i, t, -q);
        if (S.at(i, t) != 0) clean = false;
      }
      for (size_t j = t + 1; j < S.cols(); ++j) {
        if (S.at(t, j) == 0) continue;
        BigInt q = floor_div(S.at(t, j), S.at(t, t));
        add_col_multiple(S, j, t, -q);
        add_col_multiple(V, j, t, -q);
        if (S.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      size_t bad_row = S.rows();
      for (size_t i = t + 1; i < S.rows() && bad_row == S.rows(); ++i)
        for (size_t j = t + 1; j < S.cols(); ++j) {
          BigInt r;
          mpz_tdiv_r(r.get_mpz_t(), S.at(i, j).get_mpz_t(), S.at(t, t).get_mpz_t());
          if (r != 0) {
            bad_row = i;
            break;
          }
        }
      if (bad_row == S.rows()) break;
      add_row_multiple(S, t, bad_row, 1);
      add_row_multiple(U, t, bad_row, 1);
    }
    if (S.at(t, t) < 0) {
      negate_row(S, t);
      negate_row(U, t);
    }
  }
  return out;
}

size_t rank(const IntMatrix& m) { return hermite_normal_form(m).rank; }

BigInt determinant(const IntMatrix& m) {
  std::vector<RatVec> rows;
  for (size_t i = 0; i < m.rows(); ++i) rows.push_back(to_rational(m.row(i)));
  Rational det = 1;
  const size_t n = m.rows();
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && rows[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(rows[p], rows[c]);
      det = -det;
    }
    det *= rows[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[c][c];
      for (size_t j = c; j < n; ++j) rows[i][j] -= f * rows[c][j];
    }
  }
  return det.get_num();
}

IntMatrix integer_kernel(const IntMatrix& m) {
  // U m^T = H; rows of U opposite zero rows of H span ker(m) over Z.
  HermiteForm h = hermite_normal_form(m.transpose());
  const size_t k = m.cols() - h.rank;
  IntMatrix out(m.cols(), k);
  for (size_t j = 0; j < k; ++j) {
    IntVec v = h.U.row(h.rank + j);
    for (size_t i = 0; i < m.cols(); ++i) out.at(i, j) = v[i];
  }
  // Reduce to a canonical basis: HNF of the basis vectors as rows.
  IntMatrix reduced = hermite_normal_form(out.transpose()).H;
  IntMatrix canonical(m.cols(), k);
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < m.cols(); ++i) canonical.at(i, j) = reduced.at(j, i);
  return canonical;
}

IntVec invariant_factors(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  IntVec out;
  for (size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (s.S.at(i, i) != 0) out.push_back(s.S.at(i, i));
  return out;
}

bool rows_span_saturated_lattice(const IntMatrix& m) {
  for (const auto& d : invariant_factors(m))
    if (d != 1) return false;
  return true;
}

IntMatrix saturated_row_lattice(const IntMatrix& m) {
  IntMatrix k = integer_kernel(m);
  IntMatrix kk = integer_kernel(k.transpose());
  return kk.transpose();
}

}  // namespace tordeg
