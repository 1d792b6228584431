#include "tordeg/polytopes/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tordeg/errors.hpp"

namespace tordeg {

namespace {

Rational affine_value(const IntVec& row, const RatVec& x) {
  Rational v = row[0];
  for (size_t i = 0; i < x.size(); ++i) v += row[i + 1] * x[i];
  return v;
}

Rational ratio(const BigInt& a, const BigInt& b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

IntVec homogenize_point(const RatVec& x) {
  RatVec h{1};
  h.insert(h.end(), x.begin(), x.end());
  return primitive(h);
}

}  // namespace

Polytope Polytope::from_points(size_t dim, const std::vector<RatVec>& points) {
  Polytope p;
  p.dim_ = dim;
  if (points.empty()) return p;
  std::vector<IntVec> rays;
  for (const auto& x : points) {
    if (x.size() != dim) throw Error(ErrorKind::DimensionMismatch, "point of the wrong dimension");
    rays.push_back(homogenize_point(x));
  }
  p.build_from_cone(RationalCone::from_generators(dim + 1, rays));
  return p;
}

Polytope Polytope::from_points(size_t dim, const std::vector<IntVec>& points) {
  std::vector<RatVec> pts;
  for (const auto& x : points) pts.push_back(to_rational(x));
  return from_points(dim, pts);
}

Polytope Polytope::from_inequalities(size_t dim, const std::vector<IntVec>& inequalities,
                                     const std::vector<IntVec>& equations) {
  std::vector<IntVec> ineq = inequalities;
  for (const auto& r : ineq)
    if (r.size() != dim + 1) throw Error(ErrorKind::DimensionMismatch, "inequality row of the wrong length");
  for (const auto& r : equations)
    if (r.size() != dim + 1) throw Error(ErrorKind::DimensionMismatch, "equation row of the wrong length");
  IntVec x0(dim + 1, 0);
  x0[0] = 1;
  ineq.push_back(x0);
  RationalCone K(dim + 1, ineq, equations);
  std::vector<RatVec> verts;
  bool recession = !K.lineality().empty();
  for (const auto& r : K.rays()) {
    if (r[0] == 0) {
      recession = true;
      continue;
    }
    RatVec v;
    for (size_t i = 1; i <= dim; ++i) v.push_back(ratio(r[i], r[0]));
    verts.push_back(v);
  }
  if (recession && !verts.empty()) throw Error(ErrorKind::Unbounded, "inequality system has a recession direction");
  return from_points(dim, verts);
}

void Polytope::build_from_cone(const RationalCone& K) {
  for (const auto& r : K.rays()) {
    RatVec v;
    for (size_t i = 1; i <= dim_; ++i) v.push_back(ratio(r[i], r[0]));
    vertices_.push_back(v);
  }
  std::sort(vertices_.begin(), vertices_.end());
  affine_dim_ = static_cast<int>(K.dim()) - 1;
  equations_ = K.implied_equalities();
  for (const auto& a : K.facets()) {
    Bits on(vertices_.size());
    for (size_t v = 0; v < vertices_.size(); ++v)
      if (affine_value(a, vertices_[v]) == 0) on.set(v);
    if (on.count() == 0) continue;  // the apex of a zero-dimensional cone
    facets_.push_back(a);
    incidence_.push_back(on);
  }
}

bool Polytope::contains(const RatVec& x) const {
  if (empty()) return false;
  for (const auto& e : equations_)
    if (affine_value(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (affine_value(f, x) < 0) return false;
  return true;
}

bool Polytope::contains(const IntVec& x) const { return contains(to_rational(x)); }

std::vector<std::vector<Bits>> face_lattice(const Polytope& p) {
  const int d = p.dim();
  std::vector<std::vector<Bits>> levels(std::max(d, 0));
  if (d <= 0) return levels;
  const auto& facets = p.facet_vertices();
  std::set<Bits> top(facets.begin(), facets.end());
  levels[d - 1].assign(top.begin(), top.end());
  for (int k = d - 1; k >= 1; --k) {
    std::set<Bits> below;
    for (const auto& F : levels[k]) {
      std::vector<Bits> cands;
      for (const auto& G : facets) {
        Bits X = F & G;
        if (X == F || X.count() == 0) continue;
        cands.push_back(X);
      }
      std::sort(cands.begin(), cands.end());
      cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
      for (size_t i = 0; i < cands.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < cands.size() && maximal; ++j)
          if (i != j && cands[i].subset_of(cands[j])) maximal = false;
        if (maximal) below.insert(cands[i]);
      }
    }
    levels[k - 1].assign(below.begin(), below.end());
  }
  return levels;
}

std::vector<size_t> f_vector(const Polytope& p) {
  std::vector<size_t> f;
  for (const auto& level : face_lattice(p)) f.push_back(level.size());
  return f;
}

bool satisfies_euler_relation(const Polytope& p) {
  const int d = p.dim();
  if (d < 0) return true;
  long sum = 0;
  auto f = f_vector(p);
  for (size_t i = 0; i < f.size(); ++i) sum += (i % 2 ? -1 : 1) * static_cast<long>(f[i]);
  return sum == 1 - (d % 2 ? -1 : 1);
}

bool same_polytope(const Polytope& a, const Polytope& b) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  if (a.ambient_dim() != b.ambient_dim()) return false;
  for (const auto& v : b.vertices())
    if (!a.contains(v)) return false;
  for (const auto& v : a.vertices())
    if (!b.contains(v)) return false;
  return true;
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "Minkowski summands live in different dimensions");
  std::set<RatVec> sums;
  for (const auto& x : a.vertices())
    for (const auto& y : b.vertices()) {
      RatVec s(x.size());
      for (size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
      sums.insert(s);
    }
  return Polytope::from_points(a.ambient_dim(), std::vector<RatVec>(sums.begin(), sums.end()));
}

Polytope minkowski_sum(const std::vector<Polytope>& ps) {
  if (ps.empty()) throw Error(ErrorKind::InvalidInput, "empty Minkowski sum");
  Polytope acc = ps[0];
  for (size_t i = 1; i < ps.size(); ++i) acc = minkowski_sum(acc, ps[i]);
  return acc;
}

}  // namespace tordeg
