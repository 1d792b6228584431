#include "tordeg/poly/order.hpp"

#include "tordeg/errors.hpp"

namespace tordeg {

MonomialOrder::MonomialOrder(size_t nvars, std::vector<IntVec> weights, std::vector<size_t> revlex)
    : nvars_(nvars), revlex_(std::move(revlex)) {
  if (nvars > kMaxVars) throw Error(ErrorKind::InvalidInput, "too many variables");
  if (weights.size() > kMaxWeightRows) throw Error(ErrorKind::InvalidInput, "too many weight rows");
  for (auto& w : weights) {
    if (w.size() != nvars) throw Error(ErrorKind::InvalidInput, "weight vector has wrong length");
    weights_.push_back(to_int64(w));
  }
  if (revlex_.empty()) {
    for (size_t i = nvars; i-- > 0;) revlex_.push_back(i);
  }
  if (revlex_.size() != nvars) throw Error(ErrorKind::InvalidInput, "revlex sequence has wrong length");
}

MonomialOrder MonomialOrder::grevlex(size_t nvars) { return MonomialOrder(nvars, {IntVec(nvars, 1)}); }

MonomialOrder MonomialOrder::weight_min(size_t nvars, const IntVec& positive_grading, const IntVec& w) {
  IntVec neg(w.size());
  for (size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
  return MonomialOrder(nvars, {positive_grading, neg});
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (size_t r = 0; r < weights_.size(); ++r) {
    int64_t wa = weight(r, a), wb = weight(r, b);
    if (wa != wb) return wa < wb ? -1 : 1;
  }
  return revlex_compare(a, b);
}

}  // namespace tordeg
