#include "tordeg/poly/hilbert.hpp"

#include <algorithm>
#include <map>

#include "tordeg/errors.hpp"

namespace tordeg {

namespace {

using TPoly = std::vector<BigInt>;

void add_shifted(TPoly& acc, const TPoly& p, size_t shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift);
  for (size_t i = 0; i < p.size(); ++i) acc[i + shift] += p[i];
}

TPoly times_one_minus_power(const TPoly& p, size_t d) {
  TPoly out(p.size() + d);
  for (size_t i = 0; i < p.size(); ++i) {
    out[i] += p[i];
    out[i + d] -= p[i];
  }
  return out;
}

void trim(TPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

class Splitter {
 public:
  explicit Splitter(const IntVec& weights) : w_(to_int64(weights)) {}

  int64_t deg(const Monomial& m) const {
    int64_t s = 0;
    for (size_t i = 0; i < w_.size(); ++i) s += w_[i] * m.e[i];
    return s;
  }

  // gens must be minimal and sorted.
  TPoly numerator(const std::vector<Monomial>& gens) {
    auto it = memo_.find(gens);
    if (it != memo_.end()) return it->second;
    TPoly result = compute(gens);
    memo_.emplace(gens, result);
    return result;
  }

 private:
  TPoly compute(const std::vector<Monomial>& gens) {
    bool coprime = true;
    for (size_t a = 0; a < gens.size() && coprime; ++a)
      for (size_t b = a + 1; b < gens.size(); ++b)
        if (!gens[a].coprime(gens[b])) {
          coprime = false;
          break;
        }
    if (coprime) {
      TPoly p{1};
      for (const auto& g : gens) p = times_one_minus_power(p, static_cast<size_t>(deg(g)));
      return p;
    }
    // Pivot on the variable occurring in the most generators.
    std::vector<int> count(w_.size(), 0);
    for (const auto& g : gens)
      for (size_t i = 0; i < w_.size(); ++i)
        if (g.e[i]) ++count[i];
    size_t v = static_cast<size_t>(std::max_element(count.begin(), count.end()) - count.begin());
    Monomial x = Monomial::variable(v);

    std::vector<Monomial> plus;
    for (const auto& g : gens)
      if (!g.e[v]) plus.push_back(g);
    plus.push_back(x);
    std::vector<Monomial> colon;
    for (auto g : gens) {
      if (g.e[v]) --g.e[v];
      colon.push_back(g);
    }
    TPoly p = numerator(minimalize(std::move(plus)));
    TPoly q = numerator(minimalize(std::move(colon)));
    add_shifted(p, q, static_cast<size_t>(w_[v]));
    trim(p);
    return p;
  }

  std::vector<int64_t> w_;
  std::map<std::vector<Monomial>, TPoly> memo_;
};

}  // namespace

std::vector<BigInt> monomial_hilbert_numerator(const std::vector<Monomial>& gens, const IntVec& weights) {
  Splitter s(weights);
  return s.numerator(minimalize(gens));
}

HilbertSeries hilbert_series_from_leading(const std::vector<Monomial>& leading, const IntVec& weights) {
  for (const auto& x : weights)
    if (x <= 0) throw Error(ErrorKind::InvalidInput, "Hilbert series needs positive weights");
  HilbertSeries hs;
  hs.numerator = monomial_hilbert_numerator(leading, weights);
  const size_t n = weights.size();
  TPoly q = hs.numerator;
  size_t c = 0;
  while (!q.empty()) {
    BigInt at_one = 0;
    for (const auto& x : q) at_one += x;
    if (at_one != 0) break;
    // q = (1 - t) r  with  r_i = q_0 + ... + q_i.
    TPoly r(q.size() - 1);
    BigInt run = 0;
    for (size_t i = 0; i + 1 < q.size(); ++i) {
      run += q[i];
      r[i] = run;
    }
    q = std::move(r);
    ++c;
  }
  hs.krull_dimension = q.empty() ? 0 : n - c;
  hs.q_at_one = 0;
  for (const auto& x : q) hs.q_at_one += x;
  BigInt prod = 1;
  for (const auto& x : weights) prod *= x;
  hs.degree = Rational(hs.q_at_one) / Rational(prod);
  hs.degree.canonicalize();
  return hs;
}

HilbertSeries hilbert_series(const Ideal& ideal, const IntVec& weights, const MonomialOrder& order) {
  for (const auto& f : ideal.gens)
    if (!f.is_homogeneous(weights)) throw Error(ErrorKind::NotHomogeneous, "generator is not homogeneous");
  GroebnerBasis gb = groebner_basis(ideal, order);
  return hilbert_series_from_leading(gb.leading, weights);
}

HilbertSeries hilbert_series(const Ideal& ideal, const IntVec& weights) {
  return hilbert_series(ideal, weights, MonomialOrder(ideal.nvars(), {weights}));
}

BigInt degree_via_hilbert(const Ideal& ideal) {
  IntVec ones(ideal.nvars(), 1);
  return hilbert_series(ideal, ones).q_at_one;
}

}  // namespace tordeg
