#include "tordeg/stringfflv/fflv.hpp"

#include <algorithm>
#include <functional>

#include "tordeg/errors.hpp"

namespace tordeg {

std::vector<PositiveRoot> positive_roots(int n) {
  std::vector<PositiveRoot> out;
  for (int p = 1; p < n; ++p)
    for (int q = p; q < n; ++q) out.push_back({p, q});
  return out;
}

std::vector<DyckPath> dyck_paths(int n) {
  std::vector<DyckPath> out;
  DyckPath path;
  std::function<void(PositiveRoot)> extend = [&](PositiveRoot r) {
    path.push_back(r);
    if (r.p == r.q) out.push_back(path);
    if (r.q + 1 < n) extend({r.p, r.q + 1});
    if (r.p + 1 <= r.q) extend({r.p + 1, r.q});
    path.pop_back();
  };
  for (int i = 1; i < n; ++i) extend({i, i});
  std::sort(out.begin(), out.end(), [](const DyckPath& a, const DyckPath& b) {
    auto key = [](const DyckPath& d) {
      std::vector<int> k{d.front().p, static_cast<int>(d.size())};
      for (const auto& r : d) {
        k.push_back(r.p);
        k.push_back(r.q);
      }
      return k;
    };
    return key(a) < key(b);
  });
  return out;
}

std::vector<IntVec> fflv_inequalities(int n, const std::vector<long>& lambda) {
  if (lambda.size() != static_cast<size_t>(n - 1))
    throw Error(ErrorKind::DimensionMismatch, "weight needs n - 1 coefficients");
  for (long a : lambda)
    if (a < 0) throw Error(ErrorKind::NonDominant, "weight has a negative coefficient");
  auto roots = positive_roots(n);
  const size_t N = roots.size();
  auto index = [&](const PositiveRoot& r) { return std::find(roots.begin(), roots.end(), r) - roots.begin(); };
  std::vector<IntVec> ineqs;
  for (size_t k = 0; k < N; ++k) {
    IntVec row(N + 1, 0);
    row[k + 1] = 1;
    ineqs.push_back(row);
  }
  for (const auto& d : dyck_paths(n)) {
    IntVec row(N + 1, 0);
    for (int t = d.front().p; t <= d.back().p; ++t) row[0] += lambda[t - 1];
    for (const auto& r : d) row[index(r) + 1] -= 1;
    ineqs.push_back(row);
  }
  return ineqs;
}

Polytope fflv_polytope(int n, const std::vector<long>& lambda) {
  return Polytope::from_inequalities(n * (n - 1) / 2, fflv_inequalities(n, lambda));
}

}  // namespace tordeg
