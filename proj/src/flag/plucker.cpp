#include "tordeg/flag/plucker.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "tordeg/errors.hpp"
#include "tordeg/poly/ideal_ops.hpp"

namespace tordeg {

size_t PlueckerRing::index_of(uint32_t subset) const {
  auto it = std::find(subsets.begin(), subsets.end(), subset);
  if (it == subsets.end()) throw Error(ErrorKind::InvalidInput, "not a Plücker variable");
  return static_cast<size_t>(it - subsets.begin());
}

std::vector<int> PlueckerRing::elements(uint32_t subset) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (subset >> i & 1) out.push_back(i + 1);
  return out;
}

PlueckerRing plucker_ring(int n) {
  if (n < 2 || n > 6) throw Error(ErrorKind::InvalidInput, "flag size must be between 2 and 6");
  PlueckerRing pr;
  pr.n = n;
  for (int k = 1; k < n; ++k) {
    std::vector<uint32_t> level;
    for (uint32_t s = 1; s < (1u << n) - 1; ++s)
      if (std::popcount(s) == k) level.push_back(s);
    std::sort(level.begin(), level.end(), [](uint32_t a, uint32_t b) {
      return PlueckerRing::elements(a) < PlueckerRing::elements(b);
    });
    pr.subsets.insert(pr.subsets.end(), level.begin(), level.end());
  }
  for (uint32_t s : pr.subsets) {
    std::string name = "p";
    for (int e : PlueckerRing::elements(s)) name += std::to_string(e);
    pr.ring.names.push_back(name);
  }
  pr.grading = IntMatrix(n - 1, pr.subsets.size());
  for (size_t v = 0; v < pr.subsets.size(); ++v) pr.grading.at(std::popcount(pr.subsets[v]) - 1, v) = 1;
  return pr;
}

std::vector<uint32_t> extension_layout(int n) {
  PlueckerRing full = plucker_ring(n);
  std::vector<uint32_t> out;
  if (n > 2) out = plucker_ring(n - 1).subsets;
  for (uint32_t s : full.subsets)
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  return out;
}

IntVec from_extension_layout(const PlueckerRing& pr, const IntVec& w) {
  auto layout = extension_layout(pr.n);
  if (w.size() != layout.size()) throw Error(ErrorKind::InvalidInput, "weight vector has wrong length");
  IntVec out(w.size());
  for (size_t i = 0; i < layout.size(); ++i) out[pr.index_of(layout[i])] = w[i];
  return out;
}

IntVec to_extension_layout(const PlueckerRing& pr, const IntVec& w) {
  auto layout = extension_layout(pr.n);
  if (w.size() != layout.size()) throw Error(ErrorKind::InvalidInput, "weight vector has wrong length");
  IntVec out(w.size());
  for (size_t i = 0; i < layout.size(); ++i) out[i] = w[pr.index_of(layout[i])];
  return out;
}

IntMatrix grading_matrix(int n) { return plucker_ring(n).grading; }

Polynomial plucker_relation(const PlueckerRing& pr, uint32_t I, uint32_t J) {
  Polynomial f;
  for (int j : PlueckerRing::elements(J & ~I)) {
    uint32_t bit = 1u << (j - 1);
    int l = 0;
    for (int k : PlueckerRing::elements(J))
      if (k > j) ++l;
    for (int i : PlueckerRing::elements(I))
      if (i < j) ++l;
    uint32_t a = I | bit, b = J & ~bit;
    Monomial m = Monomial::variable(pr.index_of(a)) * Monomial::variable(pr.index_of(b));
    f = f + Polynomial::monomial(m, l % 2 ? -1 : 1);
  }
  return f;
}

Ideal plucker_ideal(const PlueckerRing& pr) {
  const int n = pr.n;
  std::vector<uint32_t> all;
  for (uint32_t s = 0; s < (1u << n); ++s) all.push_back(s);
  std::sort(all.begin(), all.end(), [](uint32_t a, uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return PlueckerRing::elements(a) < PlueckerRing::elements(b);
  });

  // Keep a relation when it is not in the span of those kept so far; all relations are
  // quadrics, so this is membership in the ideal they generate.
  std::map<Monomial, size_t> column;
  std::vector<RatVec> echelon;
  std::vector<size_t> pivots;
  Ideal out;
  out.ring = pr.ring;
  out.grading = pr.grading.row_vectors();
  auto independent = [&](const Polynomial& f) {
    for (const auto& t : f.terms())
      if (!column.count(t.m)) column.emplace(t.m, column.size());
    RatVec v(column.size());
    for (const auto& t : f.terms()) v[column[t.m]] = t.c;
    for (auto& row : echelon) row.resize(column.size());
    for (size_t r = 0; r < echelon.size(); ++r) {
      if (v[pivots[r]] == 0) continue;
      Rational c = v[pivots[r]] / echelon[r][pivots[r]];
      for (size_t k = 0; k < v.size(); ++k) v[k] -= c * echelon[r][k];
    }
    for (size_t k = 0; k < v.size(); ++k) {
      if (v[k] != 0) {
        echelon.push_back(v);
        pivots.push_back(k);
        return true;
      }
    }
    return false;
  };

  for (uint32_t J : all) {
    if (std::popcount(J) < 2) continue;
    for (uint32_t I : all) {
      if (std::popcount(I) > std::popcount(J) - 2) break;
      Polynomial f = plucker_relation(pr, I, J);
      if (f.is_zero()) continue;
      if (independent(f)) out.gens.push_back(f);
    }
  }
  return out;
}

Ideal plucker_ideal(int n) { return plucker_ideal(plucker_ring(n)); }

namespace {

int sort_sign(const std::vector<int>& seq) {
  int inv = 0;
  for (size_t a = 0; a < seq.size(); ++a)
    for (size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) ++inv;
  return inv % 2 ? -1 : 1;
}

// Sign of the shuffle (J, complement of J) as a permutation of 1..n.
int complement_sign(uint32_t J) {
  int s = 0, k = 0;
  for (int j : PlueckerRing::elements(J)) {
    s += j;
    ++k;
  }
  return (s - k * (k + 1) / 2) % 2 ? -1 : 1;
}

}  // namespace

uint32_t SignedSymmetry::apply_subset(uint32_t J, int n) const {
  uint32_t out = 0;
  for (int j : PlueckerRing::elements(J)) out |= 1u << perm[j - 1];
  if (complement) out = ((1u << n) - 1) & ~out;
  return out;
}

int SignedSymmetry::sign(uint32_t J, int n) const {
  std::vector<int> seq;
  uint32_t image = 0;
  for (int j : PlueckerRing::elements(J)) {
    seq.push_back(perm[j - 1]);
    image |= 1u << perm[j - 1];
  }
  int s = sort_sign(seq);
  (void)n;
  if (complement) s *= complement_sign(image);
  return s;
}

SignedSymmetry SignedSymmetry::compose(const SignedSymmetry& other) const {
  SignedSymmetry out;
  out.perm.resize(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) out.perm[i] = perm[other.perm[i]];
  out.complement = complement != other.complement;
  return out;
}

bool SignedSymmetry::is_identity() const {
  if (complement) return false;
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<SignedSymmetry> symmetry_group(int n) {
  std::vector<SignedSymmetry> out;
  for (bool c : {false, true}) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      out.push_back({p, c});
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return out;
}

IntVec apply_symmetry(const SignedSymmetry& g, const PlueckerRing& pr, const IntVec& w) {
  IntVec out(w.size());
  for (size_t v = 0; v < pr.nvars(); ++v) out[pr.index_of(g.apply_subset(pr.subsets[v], pr.n))] = w[v];
  return out;
}

Polynomial apply_symmetry(const SignedSymmetry& g, const PlueckerRing& pr, const Polynomial& f) {
  std::vector<size_t> target(pr.nvars());
  std::vector<int> sgn(pr.nvars());
  for (size_t v = 0; v < pr.nvars(); ++v) {
    target[v] = pr.index_of(g.apply_subset(pr.subsets[v], pr.n));
    sgn[v] = g.sign(pr.subsets[v], pr.n);
  }
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Term u{Monomial{}, t.c};
    for (size_t v = 0; v < pr.nvars(); ++v) {
      if (!t.m[v]) continue;
      u.m[target[v]] = t.m[v];
      if (sgn[v] < 0 && t.m[v] % 2) u.c = -u.c;
    }
    terms.push_back(std::move(u));
  }
  return Polynomial::from_terms(std::move(terms));
}

Ideal apply_symmetry(const SignedSymmetry& g, const PlueckerRing& pr, const Ideal& ideal) {
  Ideal out{ideal.ring, {}, ideal.grading};
  for (const auto& f : ideal.gens) out.gens.push_back(apply_symmetry(g, pr, f));
  out.gens = standard_basis(out).polys;
  return out;
}

std::vector<std::vector<size_t>> orbit_decomposition(
    const std::vector<std::string>& keys, const std::vector<SignedSymmetry>& group,
    const std::function<std::string(size_t, const SignedSymmetry&)>& act) {
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);
  std::vector<long> orbit_of(keys.size(), -1);
  std::vector<std::vector<size_t>> orbits;
  for (size_t i = 0; i < keys.size(); ++i) {
    if (orbit_of[i] >= 0) continue;
    std::vector<size_t> members;
    for (const auto& g : group) {
      auto it = index.find(act(i, g));
      if (it == index.end()) throw Error(ErrorKind::ItemNotClosed, "image of item " + std::to_string(i) + " missing");
      if (orbit_of[it->second] < 0) {
        orbit_of[it->second] = static_cast<long>(orbits.size());
        members.push_back(it->second);
      }
    }
    std::sort(members.begin(), members.end());
    orbits.push_back(std::move(members));
  }
  auto rep = [&](const std::vector<size_t>& o) {
    std::string best = keys[o[0]];
    for (size_t i : o) best = std::min(best, keys[i]);
    return best;
  };
  std::sort(orbits.begin(), orbits.end(),
            [&](const std::vector<size_t>& a, const std::vector<size_t>& b) { return rep(a) < rep(b); });
  return orbits;
}

}  // namespace tordeg
