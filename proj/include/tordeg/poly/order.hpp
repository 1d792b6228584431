#pragma once

#include <vector>

#include "tordeg/poly/monomial.hpp"

namespace tordeg {

inline constexpr size_t kMaxWeightRows = 4;

// Compare by a sequence of weight vectors (larger weight = larger monomial), then by
// reverse lexicographic order on a variable sequence: the first variable in that
// sequence where exponents differ decides, the smaller exponent winning. With a
// leading all-ones row this is grevlex.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(size_t nvars, std::vector<IntVec> weights, std::vector<size_t> revlex = {});

  static MonomialOrder grevlex(size_t nvars);
  // MIN convention: terms of smallest w-weight lead. The positive grading row keeps the
  // order a well-order; its ties are broken by -w, then revlex.
  static MonomialOrder weight_min(size_t nvars, const IntVec& positive_grading, const IntVec& w);

  size_t nvars() const { return nvars_; }
  size_t nweights() const { return weights_.size(); }
  const std::vector<std::vector<int64_t>>& weights() const { return weights_; }
  const std::vector<size_t>& revlex() const { return revlex_; }

  int64_t weight(size_t row, const Monomial& m) const {
    int64_t s = 0;
    const auto& w = weights_[row];
    for (size_t i = 0; i < nvars_; ++i) s += w[i] * m.e[i];
    return s;
  }
  // Negative, zero, positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  int revlex_compare(const Monomial& a, const Monomial& b) const {
    for (size_t v : revlex_) {
      if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
    }
    return 0;
  }

 private:
  size_t nvars_ = 0;
  std::vector<std::vector<int64_t>> weights_;
  std::vector<size_t> revlex_;
};

}  // namespace tordeg
