#include "tordeg/exactmath/cone.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "tordeg/errors.hpp"
#include "tordeg/exactmath/linalg.hpp"

namespace tordeg {

size_t Bits::count() const {
  size_t c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool Bits::subset_of(const Bits& other) const {
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

Bits Bits::operator&(const Bits& other) const {
  Bits out(n_);
  for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
  return out;
}

RationalCone::RationalCone(size_t dim, std::vector<IntVec> inequalities, std::vector<IntVec> equalities)
    : dim_(dim) {
  for (size_t i = 0; i < dim; ++i) {
    IntVec e(dim);
    e[i] = 1;
    lineality_.push_back(std::move(e));
  }
  for (auto& a : inequalities) {
    if (a.size() != dim) throw Error(ErrorKind::InvalidInput, "inequality has wrong length");
    add_constraint(a);
  }
  for (auto& e : equalities) {
    if (e.size() != dim) throw Error(ErrorKind::InvalidInput, "equality has wrong length");
    add_constraint(e);
    add_constraint(BigInt(-1) * e);
  }
  inequalities_ = std::move(inequalities);
  equalities_ = std::move(equalities);
  canonicalize();
}

RationalCone RationalCone::from_generators(size_t dim, const std::vector<IntVec>& rays,
                                           const std::vector<IntVec>& lineality) {
  RationalCone dual(dim, rays, lineality);
  return RationalCone(dim, dual.rays(), dual.lineality());
}

void RationalCone::add_constraint(const IntVec& a) {
  const size_t idx = processed_++;
  for (auto& t : tight_) t.resize(processed_);

  // Lineality vectors not annihilated by a: one of them becomes a ray, the rest are
  // shifted into the hyperplane a = 0.
  size_t pivot = lineality_.size();
  BigInt pv;
  for (size_t i = 0; i < lineality_.size(); ++i) {
    BigInt v = dot(a, lineality_[i]);
    if (v != 0) {
      pivot = i;
      pv = v;
      break;
    }
  }
  if (pivot < lineality_.size()) {
    IntVec l0 = lineality_[pivot];
    if (pv < 0) {
      l0 = BigInt(-1) * l0;
      pv = -pv;
    }
    std::vector<IntVec> new_lin;
    for (size_t i = 0; i < lineality_.size(); ++i) {
      if (i == pivot) continue;
      BigInt v = dot(a, lineality_[i]);
      new_lin.push_back(v == 0 ? lineality_[i] : primitive(pv * lineality_[i] - v * l0));
    }
    for (size_t r = 0; r < rays_.size(); ++r) {
      BigInt v = dot(a, rays_[r]);
      if (v != 0) rays_[r] = primitive(pv * rays_[r] - v * l0);
      tight_[r].set(idx);
    }
    lineality_ = std::move(new_lin);
    Bits t(processed_);
    for (size_t k = 0; k < idx; ++k) t.set(k);
    rays_.push_back(primitive(l0));
    tight_.push_back(std::move(t));
    return;
  }

  std::vector<BigInt> val(rays_.size());
  std::vector<size_t> pos, neg;
  for (size_t r = 0; r < rays_.size(); ++r) {
    val[r] = dot(a, rays_[r]);
    if (val[r] > 0) pos.push_back(r);
    else if (val[r] < 0) neg.push_back(r);
  }
  if (neg.empty()) {
    for (size_t r = 0; r < rays_.size(); ++r)
      if (val[r] == 0) tight_[r].set(idx);
    return;
  }

  std::vector<IntVec> new_rays;
  std::vector<Bits> new_tight;
  for (size_t r = 0; r < rays_.size(); ++r) {
    if (val[r] < 0) continue;
    Bits t = tight_[r];
    if (val[r] == 0) t.set(idx);
    new_rays.push_back(rays_[r]);
    new_tight.push_back(std::move(t));
  }
  for (size_t p : pos) {
    for (size_t n : neg) {
      Bits common = tight_[p] & tight_[n];
      bool adjacent = true;
      for (size_t r = 0; r < rays_.size() && adjacent; ++r) {
        if (r == p || r == n) continue;
        if (common.subset_of(tight_[r])) adjacent = false;
      }
      if (!adjacent) continue;
      BigInt vp = val[p], vn = -val[n];
      new_rays.push_back(primitive(vp * rays_[n] + vn * rays_[p]));
      common.set(idx);
      new_tight.push_back(std::move(common));
    }
  }
  rays_ = std::move(new_rays);
  tight_ = std::move(new_tight);
}

void RationalCone::canonicalize() {
  lineality_ = canonical_row_space(lineality_, dim_);
  if (!lineality_.empty() && !rays_.empty()) {
    // Orthogonal projection onto the complement of the lineality space.
    const size_t k = lineality_.size();
    std::vector<RatVec> gram(k, RatVec(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) gram[i][j] = dot(lineality_[i], lineality_[j]);
    for (auto& r : rays_) {
      RatVec rhs(k);
      for (size_t i = 0; i < k; ++i) rhs[i] = dot(lineality_[i], r);
      if (is_zero(rhs)) continue;
      RatVec c = *solve_linear(gram, rhs, k);
      RatVec proj = to_rational(r);
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < dim_; ++j) proj[j] -= c[i] * lineality_[i][j];
      r = primitive(proj);
    }
  }
  std::vector<size_t> order(rays_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) { return rays_[x] < rays_[y]; });
  std::vector<IntVec> r2;
  std::vector<Bits> t2;
  for (size_t i : order) {
    r2.push_back(std::move(rays_[i]));
    t2.push_back(std::move(tight_[i]));
  }
  rays_ = std::move(r2);
  tight_ = std::move(t2);
  pointed_dim_ = rational_rank(rays_, dim_);
}

RationalCone RationalCone::intersect(const std::vector<IntVec>& inequalities,
                                     const std::vector<IntVec>& equalities) const {
  RationalCone out = *this;
  for (const auto& a : inequalities) {
    out.add_constraint(a);
    out.inequalities_.push_back(a);
  }
  for (const auto& e : equalities) {
    out.add_constraint(e);
    out.add_constraint(BigInt(-1) * e);
    out.equalities_.push_back(e);
  }
  out.canonicalize();
  return out;
}

RationalCone RationalCone::intersect(const RationalCone& other) const {
  return intersect(other.inequalities_, other.equalities_);
}

bool RationalCone::contains(const IntVec& point) const {
  for (const auto& a : inequalities_)
    if (dot(a, point) < 0) return false;
  for (const auto& e : equalities_)
    if (dot(e, point) != 0) return false;
  return true;
}

bool RationalCone::contains(const RationalCone& other) const {
  for (const auto& r : other.rays_)
    if (!contains(r)) return false;
  for (const auto& l : other.lineality_) {
    for (const auto& a : inequalities_)
      if (dot(a, l) != 0) return false;
    for (const auto& e : equalities_)
      if (dot(e, l) != 0) return false;
  }
  return true;
}

IntVec RationalCone::relative_interior_point() const {
  if (rays_.empty() && lineality_.empty()) throw Error(ErrorKind::EmptyCone, "cone is {0}");
  IntVec p(dim_);
  for (const auto& r : rays_) p = p + r;
  return p;
}

std::vector<IntVec> RationalCone::span_basis() const {
  std::vector<IntVec> g = lineality_;
  g.insert(g.end(), rays_.begin(), rays_.end());
  return canonical_row_space(g, dim_);
}

std::vector<IntVec> RationalCone::implied_equalities() const {
  std::vector<IntVec> g = lineality_;
  g.insert(g.end(), rays_.begin(), rays_.end());
  return rational_kernel(g, dim_);
}

std::vector<IntVec> RationalCone::facets() const {
  std::vector<IntVec> out;
  std::vector<Bits> seen;
  for (const auto& a : inequalities_) {
    Bits t(rays_.size());
    std::vector<IntVec> gens = lineality_;
    bool vanishes_everywhere = true;
    for (size_t r = 0; r < rays_.size(); ++r) {
      if (dot(a, rays_[r]) == 0) {
        t.set(r);
        gens.push_back(rays_[r]);
      } else {
        vanishes_everywhere = false;
      }
    }
    if (vanishes_everywhere) continue;
    if (rational_rank(gens, dim_) + 1 != dim()) continue;
    if (std::find(seen.begin(), seen.end(), t) != seen.end()) continue;
    seen.push_back(t);
    out.push_back(primitive(a));
  }
  return out;
}

IntVec cone_interior_point(const RationalCone& c) { return c.relative_interior_point(); }
size_t cone_dimension(const RationalCone& c) { return c.dim(); }
bool cones_equal(const RationalCone& a, const RationalCone& b) { return a.equals(b); }
bool cone_contains(const RationalCone& outer, const RationalCone& inner) { return outer.contains(inner); }
RationalCone common_refinement(const RationalCone& a, const RationalCone& b) { return a.intersect(b); }

}  // namespace tordeg
