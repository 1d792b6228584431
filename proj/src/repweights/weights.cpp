#include "tordeg/repweights/weights.hpp"

#include <algorithm>
#include <bit>

#include "tordeg/errors.hpp"
#include "tordeg/flag/plucker.hpp"
#include "tordeg/flag/reduced_word.hpp"

namespace tordeg {

std::optional<SignedSubset> root_vector_action(const PositiveRoot& alpha, uint32_t J) {
  const uint32_t from = 1u << (alpha.p - 1);
  const uint32_t to = 1u << alpha.q;
  if (!(J & from) || (J & to)) return std::nullopt;
  // Moving e_p to position q+1 passes the factors strictly between them.
  const uint32_t between = (to - 1) & ~((from << 1) - 1);
  int passed = std::popcount(J & between);
  return SignedSubset{passed % 2 ? -1 : 1, (J & ~from) | to};
}

std::vector<PositiveRoot> simple_root_sequence(const std::vector<int>& word) {
  std::vector<PositiveRoot> S;
  for (int i : word) S.push_back({i, i});
  return S;
}

std::vector<PositiveRoot> fflv_root_sequence(int n) {
  std::vector<PositiveRoot> S;
  for (int h = n - 1; h >= 1; --h)
    for (int p = 1; p + h - 1 <= n - 1; ++p) S.push_back({p, p + h - 1});
  return S;
}

std::optional<SignedSubset> apply_monomial(const std::vector<PositiveRoot>& S, const std::vector<int>& m,
                                           uint32_t start) {
  SignedSubset cur{1, start};
  for (size_t i = S.size(); i-- > 0;) {
    for (int k = 0; k < m[i]; ++k) {
      auto next = root_vector_action(S[i], cur.subset);
      if (!next) return std::nullopt;
      cur = {cur.sign * next->sign, next->subset};
    }
  }
  return cur;
}

namespace {

// Visit 0/1 exponent vectors of length N with the given number of ones in decreasing
// lexicographic order. Higher powers vanish: f_α^2 kills every wedge basis vector.
bool first_hit(const std::vector<PositiveRoot>& S, uint32_t start, uint32_t target, size_t pos, int ones,
               std::vector<int>& m) {
  if (ones == 0) {
    auto img = apply_monomial(S, m, start);
    return img && img->subset == target;
  }
  if (S.size() - pos < static_cast<size_t>(ones)) return false;
  m[pos] = 1;
  if (first_hit(S, start, target, pos + 1, ones - 1, m)) return true;
  m[pos] = 0;
  return first_hit(S, start, target, pos + 1, ones, m);
}

}  // namespace

std::vector<int> minimal_monomial(const std::vector<PositiveRoot>& S, uint32_t J) {
  const int k = std::popcount(J);
  const uint32_t start = (1u << k) - 1;
  for (int d = 0; d <= static_cast<int>(S.size()); ++d) {
    std::vector<int> m(S.size(), 0);
    if (first_hit(S, start, J, 0, d, m)) return m;
  }
  throw Error(ErrorKind::Unreachable, "no PBW monomial reaches the requested wedge basis vector");
}

BigInt two_adic_form(const std::vector<int>& m) {
  BigInt e = 0;
  for (int x : m) e = 2 * e + x;
  return e;
}

IntVec string_weight_vector(int n, const std::vector<int>& word) {
  require_reduced_word(word, n);
  auto S = simple_root_sequence(word);
  PlueckerRing pr = plucker_ring(n);
  IntVec w;
  for (uint32_t J : pr.subsets) w.push_back(two_adic_form(minimal_monomial(S, J)));
  return w;
}

std::vector<std::vector<int>> fflv_minimal_monomials(int n) {
  auto S = fflv_root_sequence(n);
  std::vector<std::vector<int>> out;
  for (uint32_t J : plucker_ring(n).subsets) out.push_back(minimal_monomial(S, J));
  return out;
}

FflvForms fflv_forms(int n) {
  auto v = [](std::initializer_list<long> xs) {
    IntVec out;
    for (long x : xs) out.emplace_back(x);
    return out;
  };
  if (n == 4) return {v({1, 2, 1, 2, 1, 1}), v({3, 4, 2, 3, 2, 1})};
  // Solved exactly from the tabulated n = 5 vectors; the 30 equations have this unique solution.
  if (n == 5) return {v({1, 3, 1, 4, 2, 1, 3, 2, 1, 1}), v({4, 6, 3, 6, 4, 2, 4, 3, 2, 1})};
  throw Error(ErrorKind::InvalidInput, "FFLV weight vectors are available for n = 4 and 5");
}

FflvWeights fflv_weight_vectors(int n) {
  FflvForms forms = fflv_forms(n);
  FflvWeights out;
  for (const auto& m : fflv_minimal_monomials(n)) {
    BigInt a = 0, b = 0;
    for (size_t i = 0; i < m.size(); ++i) {
      a += forms.e_min[i] * m[i];
      b += forms.e_reg[i] * m[i];
    }
    out.w_min.push_back(a);
    out.w_reg.push_back(b);
  }
  return out;
}

}  // namespace tordeg
