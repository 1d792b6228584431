#include "tordeg/poly/ideal_ops.hpp"

#include <algorithm>

#include "tordeg/errors.hpp"

namespace tordeg {

namespace {

bool homogeneous_for(const std::vector<Polynomial>& gens, const IntVec& w) {
  for (const auto& f : gens)
    if (!f.is_homogeneous(w)) return false;
  return true;
}

bool all_positive(const IntVec& v) {
  for (const auto& x : v)
    if (x <= 0) return false;
  return true;
}

Ideal with_gens(const Ideal& like, std::vector<Polynomial> gens) {
  Ideal out{like.ring, std::move(gens), like.grading};
  return out;
}

}  // namespace

bool has_positive_grading(const Ideal& ideal) {
  const size_t n = ideal.nvars();
  if (!ideal.grading.empty()) {
    IntVec g(n);
    for (const auto& row : ideal.grading) {
      if (!homogeneous_for(ideal.gens, row)) return false;
      g = g + row;
    }
    if (all_positive(g)) return true;
  }
  return homogeneous_for(ideal.gens, IntVec(n, 1));
}

IntVec positive_grading(const Ideal& ideal) {
  const size_t n = ideal.nvars();
  if (!ideal.grading.empty()) {
    IntVec g(n);
    bool ok = true;
    for (const auto& row : ideal.grading) {
      if (!homogeneous_for(ideal.gens, row)) ok = false;
      g = g + row;
    }
    if (ok && all_positive(g)) return g;
  }
  IntVec ones(n, 1);
  if (homogeneous_for(ideal.gens, ones)) return ones;
  throw Error(ErrorKind::NotHomogeneous, "ideal has no positive grading");
}

Polynomial initial_form(const Polynomial& f, const IntVec& w) {
  if (f.is_zero()) return f;
  std::vector<BigInt> wt;
  BigInt best;
  for (size_t i = 0; i < f.size(); ++i) {
    wt.push_back(f.terms()[i].m.weight(w));
    if (i == 0 || wt.back() < best) best = wt.back();
  }
  std::vector<Term> terms;
  for (size_t i = 0; i < f.size(); ++i)
    if (wt[i] == best) terms.push_back(f.terms()[i]);
  return Polynomial::from_terms(std::move(terms));
}

WeightedBasis weighted_groebner(const Ideal& ideal, const IntVec& w) {
  if (w.size() != ideal.nvars()) throw Error(ErrorKind::InvalidInput, "weight vector has wrong length");
  WeightedBasis out;
  out.w = w;
  out.gb = groebner_basis(ideal, MonomialOrder::weight_min(ideal.nvars(), positive_grading(ideal), w));
  for (const auto& g : out.gb.polys) out.initial_forms.push_back(initial_form(g, w));
  return out;
}

Ideal initial_ideal(const Ideal& ideal, const IntVec& w) {
  if (has_positive_grading(ideal)) return with_gens(ideal, weighted_groebner(ideal, w).initial_forms);
  // Inhomogeneous: compute in_{(w,0)} of the homogenization and set h = 1.
  Ideal h = homogenize(ideal);
  IntVec wh = w;
  wh.push_back(0);
  Ideal ih = with_gens(h, weighted_groebner(h, wh).initial_forms);
  Ideal out = dehomogenize(ih, h.nvars() - 1);
  out.grading = ideal.grading;
  GroebnerBasis gb = groebner_basis(out, MonomialOrder::grevlex(out.nvars()));
  out.gens = gb.polys;
  return out;
}

std::string canonical_text(const Ideal& ideal) { return serialize_polys(ideal.gens, ideal.ring); }

bool is_binomial(const std::vector<Polynomial>& gens) {
  for (const auto& f : gens)
    if (f.size() > 2) return false;
  return true;
}

bool has_monomial_generator(const std::vector<Polynomial>& gens) {
  for (const auto& f : gens)
    if (f.size() == 1) return true;
  return false;
}

bool is_monomial_free(const Ideal& ideal) {
  if (has_monomial_generator(ideal.gens)) return false;
  return !is_unit_ideal(saturate_by_all_variables(ideal));
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "cannot saturate by zero");
  const size_t n = ideal.nvars();
  if (n + 1 > kMaxVars) throw Error(ErrorKind::InvalidInput, "no room for the elimination variable");
  Ideal ext{extend_ring(ideal.ring, {"_t"}), ideal.gens, {}};
  Polynomial t = Polynomial::variable(n);
  ext.gens.push_back(Polynomial::constant(1) - t * f);
  IntVec et(n + 1), ones(n + 1, 1);
  et[n] = 1;
  GroebnerBasis gb = groebner_basis(ext, MonomialOrder(n + 1, {et, ones}));
  std::vector<Polynomial> kept;
  for (size_t i = 0; i < gb.polys.size(); ++i)
    if (gb.polys[i].max_variable() < static_cast<int>(n)) kept.push_back(gb.polys[i]);
  return with_gens(ideal, std::move(kept));
}

Ideal saturate_by_variable(const Ideal& ideal, size_t var) {
  const size_t n = ideal.nvars();
  if (!has_positive_grading(ideal)) return saturate(ideal, Polynomial::variable(var));
  // With the variable checked first in the revlex tiebreak, a homogeneous basis element
  // whose leading term is divisible by it is divisible by it altogether.
  std::vector<size_t> rev{var};
  for (size_t i = n; i-- > 0;)
    if (i != var) rev.push_back(i);
  GroebnerBasis gb = groebner_basis(ideal, MonomialOrder(n, {positive_grading(ideal)}, rev));
  std::vector<Polynomial> gens;
  for (const auto& g : gb.polys) {
    uint16_t mn = UINT16_MAX;
    for (const auto& t : g.terms()) mn = std::min(mn, t.m[var]);
    if (mn == 0) {
      gens.push_back(g);
      continue;
    }
    std::vector<Term> terms = g.terms();
    for (auto& t : terms) t.m[var] -= mn;
    gens.push_back(Polynomial::from_terms(std::move(terms)));
  }
  return with_gens(ideal, std::move(gens));
}

Ideal saturate_by_all_variables(const Ideal& ideal) {
  Ideal cur = ideal;
  for (size_t v = 0; v < ideal.nvars(); ++v) {
    bool appears = false;
    for (const auto& f : cur.gens)
      for (const auto& t : f.terms())
        if (t.m[v]) appears = true;
    if (!appears) continue;
    cur = saturate_by_variable(cur, v);
    for (const auto& f : cur.gens)
      if (f.size() == 1 && f.terms()[0].m.is_one()) return with_gens(ideal, {Polynomial::constant(1)});
  }
  GroebnerBasis gb = standard_basis(cur);
  return with_gens(ideal, gb.polys);
}

Polynomial homogenize_polynomial(const Polynomial& f, const IntVec& weighting, size_t hvar) {
  if (f.is_zero()) return f;
  BigInt top;
  for (size_t i = 0; i < f.size(); ++i) {
    BigInt d = f.terms()[i].m.weight(weighting);
    if (i == 0 || d > top) top = d;
  }
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Term u = t;
    u.m[hvar] = static_cast<uint16_t>(BigInt(top - t.m.weight(weighting)).get_si());
    terms.push_back(std::move(u));
  }
  return Polynomial::from_terms(std::move(terms));
}

Ideal homogenize(const Ideal& ideal, const IntVec& weighting) {
  const size_t n = ideal.nvars();
  IntVec wt = weighting.empty() ? IntVec(n, 1) : weighting;
  if (wt.size() != n || !all_positive(wt)) throw Error(ErrorKind::InvalidInput, "weighting must be positive");
  Ideal out;
  out.ring = extend_ring(ideal.ring, {ideal.ring.index_of("h") < 0 ? "h" : "h_"});
  IntVec row = wt;
  row.push_back(1);
  out.grading = {row};
  if (homogeneous_for(ideal.gens, wt)) {
    out.gens = ideal.gens;
    return out;
  }
  // Homogenizing a basis for a degree-compatible order generates the homogenization.
  GroebnerBasis gb = groebner_basis(ideal, MonomialOrder(n, {wt}));
  for (const auto& g : gb.polys) out.gens.push_back(homogenize_polynomial(g, wt, n));
  return out;
}

Ideal dehomogenize(const Ideal& ideal, size_t hvar) {
  if (hvar + 1 != ideal.nvars()) throw Error(ErrorKind::InvalidInput, "homogenizing variable must be last");
  Ideal out;
  out.ring = ideal.ring;
  out.ring.names.pop_back();
  for (const auto& f : ideal.gens) {
    std::vector<Term> terms = f.terms();
    for (auto& t : terms) t.m[hvar] = 0;
    Polynomial p = Polynomial::from_terms(std::move(terms));
    if (!p.is_zero()) out.gens.push_back(p);
  }
  for (const auto& row : ideal.grading) {
    IntVec r = row;
    r.pop_back();
    out.grading.push_back(r);
  }
  if (!out.grading.empty() && !has_positive_grading(out)) out.grading.clear();
  return out;
}

namespace {

MonomialOrder comparison_order(const Ideal& ideal) {
  if (!ideal.grading.empty() && has_positive_grading(ideal))
    return MonomialOrder(ideal.nvars(), {positive_grading(ideal)});
  return MonomialOrder::grevlex(ideal.nvars());
}

}  // namespace

GroebnerBasis standard_basis(const Ideal& ideal) { return groebner_basis(ideal, comparison_order(ideal)); }

bool ideals_equal(const Ideal& a, const Ideal& b) {
  if (a.nvars() != b.nvars()) return false;
  MonomialOrder o = comparison_order(a);
  GroebnerBasis ga = groebner_basis(a, o);
  GroebnerBasis gb = groebner_basis(b, o);
  return ga.polys == gb.polys;
}

bool ideal_contains(const Ideal& ideal, const Polynomial& f) { return gb_contains(standard_basis(ideal), f); }

bool ideal_contains(const Ideal& big, const Ideal& small) {
  GroebnerReducer red(standard_basis(big));
  for (const auto& f : small.gens)
    if (!red.reduce(f).is_zero()) return false;
  return true;
}

bool is_unit_ideal(const Ideal& ideal) {
  for (const auto& f : groebner_basis(ideal, MonomialOrder::grevlex(ideal.nvars())).polys)
    if (f.size() == 1 && f.terms()[0].m.is_one()) return true;
  return false;
}

std::vector<Polynomial> minimal_generators(const Ideal& ideal) {
  IntVec g = positive_grading(ideal);
  GroebnerBasis gb = standard_basis(ideal);
  std::vector<Polynomial> cand = gb.polys;
  std::stable_sort(cand.begin(), cand.end(), [&](const Polynomial& a, const Polynomial& b) {
    return a.terms()[0].m.weight(g) < b.terms()[0].m.weight(g);
  });
  std::vector<Polynomial> kept;
  Ideal sub = with_gens(ideal, {});
  for (const auto& f : cand) {
    if (!kept.empty() && gb_contains(standard_basis(sub), f)) continue;
    kept.push_back(f);
    sub.gens = kept;
  }
  return kept;
}

PolyRing extend_ring(const PolyRing& ring, const std::vector<std::string>& names) {
  PolyRing out = ring;
  for (const auto& n : names) out.names.push_back(n);
  if (out.nvars() > kMaxVars) throw Error(ErrorKind::InvalidInput, "too many variables");
  return out;
}

Ideal eliminate_last_variables(const Ideal& ideal, size_t count) {
  const size_t n = ideal.nvars();
  const size_t keep = n - count;
  IntVec block(n), ones(n, 1);
  for (size_t i = keep; i < n; ++i) block[i] = 1;
  GroebnerBasis gb = groebner_basis(ideal, MonomialOrder(n, {block, ones}));
  Ideal out;
  out.ring = ideal.ring;
  out.ring.names.resize(keep);
  for (const auto& f : gb.polys)
    if (f.max_variable() < static_cast<int>(keep)) out.gens.push_back(f);
  for (const auto& row : ideal.grading) out.grading.push_back(IntVec(row.begin(), row.begin() + keep));
  return out;
}

}  // namespace tordeg
