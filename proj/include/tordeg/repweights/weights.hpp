#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tordeg/exactmath/scalar.hpp"
#include "tordeg/flag/reduced_word.hpp"

namespace tordeg {

// α_p + α_{p+1} + ... + α_q with 1 <= p <= q <= n-1. Its root vector sends e_p to e_{q+1}.
struct PositiveRoot {
  int p = 1;
  int q = 1;
  int height() const { return q - p + 1; }
  bool operator==(const PositiveRoot&) const = default;
};

// Basis vectors of ⋀^k C^n are subsets; the image of f_α is ±e_{J'} or zero.
struct SignedSubset {
  int sign = 1;
  uint32_t subset = 0;
};
std::optional<SignedSubset> root_vector_action(const PositiveRoot& alpha, uint32_t J);

std::vector<PositiveRoot> simple_root_sequence(const std::vector<int>& word);
// All positive roots ordered by decreasing height, then by starting index.
std::vector<PositiveRoot> fflv_root_sequence(int n);

// Exponent vector m (aligned with S) such that f^m maps e_1∧...∧e_k to ±e_J and f^m is minimal:
// smallest total degree, then lexicographically largest. f^m applies its rightmost factor first.
std::vector<int> minimal_monomial(const std::vector<PositiveRoot>& S, uint32_t J);

// Image of e_1∧...∧e_k under f^m, or nullopt when it vanishes.
std::optional<SignedSubset> apply_monomial(const std::vector<PositiveRoot>& S, const std::vector<int>& m, uint32_t start);

// e(m) = Σ 2^{N-i} m_i.
BigInt two_adic_form(const std::vector<int>& m);

// Weight vector over the Plücker variables of plucker_ring(n), in that order.
IntVec string_weight_vector(int n, const std::vector<int>& word);

struct FflvWeights {
  IntVec w_min;
  IntVec w_reg;
};
// Linear forms on the exponents over fflv_root_sequence(n), for n = 4 or 5.
struct FflvForms {
  IntVec e_min;
  IntVec e_reg;
};
FflvForms fflv_forms(int n);
FflvWeights fflv_weight_vectors(int n);
std::vector<std::vector<int>> fflv_minimal_monomials(int n);

}  // namespace tordeg
