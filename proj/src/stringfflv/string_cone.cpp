#include "tordeg/stringfflv/string_cone.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tordeg/errors.hpp"
#include "tordeg/flag/reduced_word.hpp"

namespace tordeg {

namespace {

void require_dominant(const std::vector<long>& lambda, int n) {
  if (lambda.size() != static_cast<size_t>(n - 1))
    throw Error(ErrorKind::DimensionMismatch, "weight needs n - 1 coefficients");
  for (long a : lambda)
    if (a < 0) throw Error(ErrorKind::NonDominant, "weight has a negative coefficient");
}

}  // namespace

size_t PseudolineArrangement::position_of(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (size_t k = 0; k < crossings.size(); ++k)
    if (crossings[k].lo == a && crossings[k].hi == b) return k;
  throw Error(ErrorKind::InvalidInput, "lines do not cross");
}

PseudolineArrangement build_arrangement(const std::vector<int>& word, int n) {
  require_reduced_word(word, n);
  PseudolineArrangement a;
  a.n = n;
  a.word = word;
  std::vector<int> height(n);  // line at each height, bottom first
  for (int h = 0; h < n; ++h) height[h] = h + 1;
  for (int letter : word) {
    int x = height[letter - 1], y = height[letter];
    a.crossings.push_back({letter, std::min(x, y), std::max(x, y)});
    std::swap(height[letter - 1], height[letter]);
  }
  return a;
}

std::vector<RigorousPath> rigorous_paths(const PseudolineArrangement& a, int i) {
  const int n = a.n;
  if (i < 1 || i >= n) throw Error(ErrorKind::InvalidInput, "orientation line out of range");
  const size_t N = a.crossings.size();
  std::vector<std::vector<size_t>> along(n + 1);  // crossing positions on each line, left to right
  for (size_t k = 0; k < N; ++k) {
    along[a.crossings[k].lo].push_back(k);
    along[a.crossings[k].hi].push_back(k);
  }
  auto rightward = [&](int line) { return line > i; };
  const size_t kEnd = SIZE_MAX;      // the right end L_line
  const size_t kNone = SIZE_MAX - 1;  // falls off the left end
  // Next vertex after position k along line; k == kEnd means starting from L_line.
  auto step = [&](int line, size_t k) -> size_t {
    const auto& seq = along[line];
    if (k == kEnd) return rightward(line) ? kNone : seq.back();
    size_t idx = std::find(seq.begin(), seq.end(), k) - seq.begin();
    if (rightward(line)) return idx + 1 < seq.size() ? seq[idx + 1] : kEnd;
    return idx > 0 ? seq[idx - 1] : kNone;
  };
  auto other = [&](size_t k, int line) { return a.crossings[k].lo == line ? a.crossings[k].hi : a.crossings[k].lo; };

  std::vector<RigorousPath> out;
  std::vector<size_t> path;
  std::vector<bool> visited(N, false);
  IntVec weight(N, 0);
  std::function<void(size_t, int)> visit = [&](size_t k, int line) {
    if (k == kNone) return;
    if (k == kEnd) {
      if (line == i + 1) out.push_back({i, path, weight});
      return;
    }
    if (visited[k]) return;
    visited[k] = true;
    path.push_back(k);
    const int b = other(k, line);
    // Stay on the line unless the crossing line and this one are both oriented away from the rule.
    const bool forbidden = (line < b && !rightward(line) && !rightward(b)) || (line > b && rightward(line) && rightward(b));
    if (!forbidden) visit(step(line, k), line);
    weight[k] += line < b ? 1 : -1;
    visit(step(b, k), b);
    weight[k] -= line < b ? 1 : -1;
    path.pop_back();
    visited[k] = false;
  };
  visit(step(i, kEnd), i);
  std::sort(out.begin(), out.end(), [](const RigorousPath& x, const RigorousPath& y) { return x.vertices < y.vertices; });
  return out;
}

StringConeSystem string_cone(const std::vector<int>& word, int n) {
  PseudolineArrangement a = build_arrangement(word, n);
  StringConeSystem s;
  s.n = n;
  s.N = word.size();
  std::set<IntVec> rows;
  for (int i = 1; i < n; ++i)
    for (const auto& p : rigorous_paths(a, i)) rows.insert(p.weight);
  s.cone_rows.assign(rows.begin(), rows.end());
  for (size_t j = 0; j < s.N; ++j) {
    const int level = word[j];
    IntVec row(s.N + n - 1, 0);
    row[s.N + level - 1] = 1;
    row[j] -= 1;
    for (size_t r = j + 1; r < s.N; ++r) {
      if (word[r] == level) row[r] -= 2;
      else if (word[r] == level - 1 || word[r] == level + 1) row[r] += 1;
    }
    s.weight_rows.push_back(row);
  }
  return s;
}

Polytope string_polytope(const std::vector<int>& word, int n, const std::vector<long>& lambda) {
  require_dominant(lambda, n);
  StringConeSystem s = string_cone(word, n);
  std::vector<IntVec> ineqs;
  for (const auto& c : s.cone_rows) {
    IntVec row{0};
    row.insert(row.end(), c.begin(), c.end());
    ineqs.push_back(row);
  }
  for (const auto& w : s.weight_rows) {
    IntVec row(s.N + 1);
    row[0] = 0;
    for (int l = 0; l < n - 1; ++l) row[0] += w[s.N + l] * lambda[l];
    for (size_t k = 0; k < s.N; ++k) row[k + 1] = w[k];
    ineqs.push_back(row);
  }
  return Polytope::from_inequalities(s.N, ineqs);
}

std::vector<long> rho(int n) { return std::vector<long>(n - 1, 1); }

std::vector<long> fundamental_weight(int n, int i) {
  std::vector<long> out(n - 1, 0);
  out.at(i - 1) = 1;
  return out;
}

BigInt weyl_dimension(int n, const std::vector<long>& lambda) {
  require_dominant(lambda, n);
  Rational d = 1;
  for (int p = 1; p < n; ++p)
    for (int q = p; q < n; ++q) {
      long num = 0;
      for (int t = p; t <= q; ++t) num += lambda[t - 1] + 1;
      d *= Rational(num, q - p + 1);
    }
  d.canonicalize();
  return d.get_num();
}

MinkowskiReport minkowski_property(const std::vector<int>& word, int n) {
  MinkowskiReport r;
  r.expected = weyl_dimension(n, rho(n));
  std::vector<Polytope> parts;
  for (int i = 1; i < n; ++i) parts.push_back(string_polytope(word, n, fundamental_weight(n, i)));
  r.sum_lattice_points = lattice_points(minkowski_sum(parts)).size();
  r.holds = BigInt(r.sum_lattice_points) == r.expected;

  std::set<IntVec> sums{IntVec(word.size(), 0)};
  for (const auto& P : parts) {
    std::set<IntVec> next;
    auto lp = lattice_points(P);
    for (const auto& s : sums)
      for (const auto& x : lp) {
        IntVec t = s;
        for (size_t k = 0; k < t.size(); ++k) t[k] += x[k];
        next.insert(t);
      }
    sums.swap(next);
  }
  r.sums_of_lattice_points = sums.size();
  r.holds_exactly = BigInt(r.sums_of_lattice_points) == r.expected;
  return r;
}

}  // namespace tordeg
