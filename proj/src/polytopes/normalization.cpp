#include "tordeg/polytopes/normalization.hpp"

#include <functional>
#include <set>

#include "tordeg/errors.hpp"
#include "tordeg/exactmath/linalg.hpp"

namespace tordeg {

namespace {

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const size_t n = m.rows();
  std::vector<RatVec> aug(n, RatVec(2 * n));
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) aug[r][c] = m.at(r, c);
    aug[r][n + r] = 1;
  }
  RowEchelon e = reduced_row_echelon(aug, 2 * n);
  IntMatrix inv(n, n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) {
      const Rational& q = e.rows[r][n + c];
      if (q.get_den() != 1) throw Error(ErrorKind::InvalidInput, "matrix is not unimodular");
      inv.at(r, c) = q.get_num();
    }
  return inv;
}

}  // namespace

NormalizationData normalization_data(const IntMatrix& W, const IntMatrix& grading) {
  const size_t n = W.cols();
  const size_t k = grading.rows();
  if (grading.cols() != n) throw Error(ErrorKind::GradingMismatch, "grading and W have different column counts");
  std::vector<Bits> support(n, Bits(k));
  for (size_t c = 0; c < n; ++c) {
    for (size_t r = 0; r < k; ++r) {
      if (grading.at(r, c) == 1) support[c].set(r);
      else if (grading.at(r, c) != 0)
        throw Error(ErrorKind::GradingMismatch, "variable degrees must be 0/1 vectors");
    }
    if (support[c].count() == 0) throw Error(ErrorKind::GradingMismatch, "variable of degree zero");
  }

  NormalizationData out;
  out.index = 1;
  for (const auto& f : invariant_factors(W.transpose())) out.index *= f;

  IntMatrix B = saturated_row_lattice(W);
  const size_t r = B.rows();
  IntMatrix X(k, r);
  for (size_t i = 0; i < k; ++i) {
    auto coeffs = express_in_rows(B.row_vectors(), grading.row(i));
    if (!coeffs) throw Error(ErrorKind::GradingMismatch, "grading row outside the row space of W");
    for (size_t j = 0; j < r; ++j) {
      if ((*coeffs)[j].get_den() != 1) throw Error(ErrorKind::GradingMismatch, "grading row outside the row lattice");
      X.at(i, j) = (*coeffs)[j].get_num();
    }
  }
  // U X V = [I 0]; the last r - k rows of V^{-1} complete X to a unimodular matrix.
  SmithForm snf = smith_normal_form(X);
  for (size_t i = 0; i < k; ++i)
    if (snf.S.at(i, i) != 1 && snf.S.at(i, i) != -1)
      throw Error(ErrorKind::GradingMismatch, "grading rows do not extend to a lattice basis");
  IntMatrix Vinv = unimodular_inverse(snf.V);
  out.basis = IntMatrix(r, n);
  for (size_t i = 0; i < k; ++i)
    for (size_t c = 0; c < n; ++c) out.basis.at(i, c) = grading.at(i, c);
  for (size_t i = k; i < r; ++i)
    for (size_t c = 0; c < n; ++c) {
      BigInt s = 0;
      for (size_t j = 0; j < r; ++j) s += Vinv.at(i, j) * B.at(j, c);
      out.basis.at(i, c) = s;
    }

  // Monomials of degree (1,...,1): sets of variables whose degree supports partition the rows.
  std::set<IntVec> points;
  std::vector<size_t> chosen;
  Bits covered(k);
  std::function<void()> cover = [&]() {
    size_t row = 0;
    while (row < k && covered.test(row)) ++row;
    if (row == k) {
      IntVec p(r - k, 0);
      for (size_t c : chosen)
        for (size_t i = k; i < r; ++i) p[i - k] += out.basis.at(i, c);
      points.insert(p);
      return;
    }
    for (size_t c = 0; c < n; ++c) {
      if (!support[c].test(row) || (support[c] & covered).count() != 0) continue;
      Bits before = covered;
      for (size_t j = 0; j < k; ++j)
        if (support[c].test(j)) covered.set(j);
      chosen.push_back(c);
      cover();
      chosen.pop_back();
      covered = before;
    }
  };
  cover();
  out.points.assign(points.begin(), points.end());
  return out;
}

Polytope normalization_polytope(const IntMatrix& W, const IntMatrix& grading) {
  NormalizationData d = normalization_data(W, grading);
  return Polytope::from_points(d.basis.rows() - grading.rows(), d.points);
}

Polytope normalization_polytope(const MaximalCone& cone, const IntMatrix& grading) {
  return normalization_polytope(cone.W, grading);
}

}  // namespace tordeg
