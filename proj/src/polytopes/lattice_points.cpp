#include <algorithm>
#include <limits>

#include "tordeg/errors.hpp"
#include "tordeg/polytopes/polytope.hpp"

namespace tordeg {

namespace {

BigInt floor_of(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

BigInt ceil_of(const Rational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

// Depth-first scan over coordinates. rest[j][i] bounds Σ_{k>=i} a_jk x_k from above over the box,
// so the range of x_i is narrowed by every constraint before branching.
template <class T>
struct Scanner {
  std::vector<std::vector<T>> a;  // constraint coefficients, b in column 0
  std::vector<T> lo, hi;
  std::vector<std::vector<T>> rest;
  size_t budget;
  size_t nodes = 0;
  std::vector<T> x;
  std::vector<T> partial;
  std::vector<std::vector<T>> out;

  static T div_floor(T p, T q) {
    T d = p / q, r = p % q;
    return (r != 0 && ((r < 0) != (q < 0))) ? d - 1 : d;
  }
  static T div_ceil(T p, T q) { return -div_floor(-p, q); }

  void run() {
    const size_t n = lo.size();
    rest.assign(a.size(), std::vector<T>(n + 1, 0));
    for (size_t j = 0; j < a.size(); ++j)
      for (size_t i = n; i-- > 0;) {
        T u = a[j][i + 1] * lo[i], w = a[j][i + 1] * hi[i];
        rest[j][i] = rest[j][i + 1] + std::max(u, w);
      }
    partial.resize(a.size());
    for (size_t j = 0; j < a.size(); ++j) partial[j] = a[j][0];
    x.assign(n, 0);
    scan(0);
  }

  void scan(size_t i) {
    if (++nodes > budget) throw Error(ErrorKind::CellBudgetExceeded, "lattice point scan exceeded its node budget");
    const size_t n = lo.size();
    if (i == n) {
      for (size_t j = 0; j < a.size(); ++j)
        if (partial[j] < 0) return;
      out.push_back(x);
      return;
    }
    T l = lo[i], h = hi[i];
    for (size_t j = 0; j < a.size() && l <= h; ++j) {
      const T& c = a[j][i + 1];
      T slack = partial[j] + rest[j][i + 1];  // need c * x_i + slack >= 0
      if (c > 0) l = std::max(l, div_ceil(-slack, c));
      else if (c < 0) h = std::min(h, div_floor(slack, -c));
      else if (slack < 0) return;
    }
    for (T v = l; v <= h; ++v) {
      x[i] = v;
      for (size_t j = 0; j < a.size(); ++j) partial[j] += a[j][i + 1] * v;
      scan(i + 1);
      for (size_t j = 0; j < a.size(); ++j) partial[j] -= a[j][i + 1] * v;
    }
  }
};

}  // namespace

std::vector<IntVec> lattice_points(const Polytope& p, size_t node_budget) {
  if (p.empty()) return {};
  const size_t n = p.ambient_dim();
  std::vector<BigInt> lo(n), hi(n);
  for (size_t i = 0; i < n; ++i) {
    Rational mn = p.vertices()[0][i], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = ceil_of(mn);
    hi[i] = floor_of(mx);
    if (lo[i] > hi[i]) return {};
  }
  std::vector<IntVec> rows = p.facets();
  for (const auto& e : p.equations()) {
    rows.push_back(e);
    rows.push_back(BigInt(-1) * e);
  }
  // Every intermediate value is bounded by |b| + Σ |a_k| max(|lo_k|, |hi_k|).
  BigInt worst = 0;
  for (const auto& r : rows) {
    BigInt s = abs(r[0]);
    for (size_t i = 0; i < n; ++i) s += abs(r[i + 1]) * std::max(BigInt(abs(lo[i])), BigInt(abs(hi[i])));
    worst = std::max(worst, s);
  }
  std::vector<IntVec> out;
  if (worst < BigInt(1) << 60) {
    Scanner<long> sc;
    for (const auto& r : rows) {
      std::vector<long> row;
      for (const auto& c : r) row.push_back(c.get_si());
      sc.a.push_back(row);
    }
    for (size_t i = 0; i < n; ++i) {
      sc.lo.push_back(lo[i].get_si());
      sc.hi.push_back(hi[i].get_si());
    }
    sc.budget = node_budget;
    sc.run();
    for (const auto& x : sc.out) {
      IntVec v;
      for (long c : x) v.emplace_back(c);
      out.push_back(v);
    }
  } else {
    Scanner<BigInt> sc;
    sc.a = rows;
    sc.lo = lo;
    sc.hi = hi;
    sc.budget = node_budget;
    sc.run();
    out = sc.out;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tordeg
