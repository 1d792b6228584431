#include "tordeg/poly/groebner.hpp"

#include <algorithm>
#include <numeric>

#include "tordeg/errors.hpp"

namespace tordeg {

namespace {

using Key = std::array<int64_t, kMaxWeightRows>;

struct OTerm {
  Monomial m;
  Key key;
  Rational c;
};

// Terms sorted in decreasing order for the engine's monomial order.
using OPoly = std::vector<OTerm>;

uint32_t support_mask(const Monomial& m) {
  uint32_t mask = 0;
  for (size_t i = 0; i < kMaxVars; ++i)
    if (m.e[i]) mask |= uint32_t(1) << i;
  return mask;
}

class Engine {
 public:
  explicit Engine(const MonomialOrder& order) : order_(order), nw_(order.nweights()) {}

  Key key_of(const Monomial& m) const {
    Key k{};
    for (size_t r = 0; r < nw_; ++r) k[r] = order_.weight(r, m);
    return k;
  }

  int cmp(const Monomial& a, const Key& ka, const Monomial& b, const Key& kb) const {
    for (size_t r = 0; r < nw_; ++r)
      if (ka[r] != kb[r]) return ka[r] < kb[r] ? -1 : 1;
    return order_.revlex_compare(a, b);
  }

  Key add(const Key& a, const Key& b) const {
    Key k{};
    for (size_t r = 0; r < nw_; ++r) k[r] = a[r] + b[r];
    return k;
  }

  OPoly from_poly(const Polynomial& p) const {
    OPoly out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) out.push_back({t.m, key_of(t.m), t.c});
    std::sort(out.begin(), out.end(),
              [&](const OTerm& a, const OTerm& b) { return cmp(a.m, a.key, b.m, b.key) > 0; });
    return out;
  }

  Polynomial to_poly(const OPoly& p) const {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p) terms.push_back({t.m, t.c});
    return Polynomial::from_terms(std::move(terms));
  }

  // p[ps..] - c * m * g[gs..]
  OPoly sub_mul(const OPoly& p, size_t ps, const OPoly& g, size_t gs, const Rational& c, const Monomial& m,
                const Key& km) const {
    OPoly out;
    out.reserve(p.size() - ps + g.size() - gs);
    size_t i = ps, j = gs;
    OTerm cur;
    bool have = false;
    auto load = [&]() {
      if (j < g.size()) {
        cur.m = g[j].m * m;
        cur.key = add(g[j].key, km);
        have = true;
      } else {
        have = false;
      }
    };
    load();
    while (i < p.size() || have) {
      int s;
      if (!have) s = 1;
      else if (i == p.size()) s = -1;
      else s = cmp(p[i].m, p[i].key, cur.m, cur.key);
      if (s > 0) {
        out.push_back(p[i++]);
      } else if (s < 0) {
        out.push_back({cur.m, cur.key, -c * g[j].c});
        ++j;
        load();
      } else {
        Rational v = p[i].c - c * g[j].c;
        if (v != 0) out.push_back({cur.m, cur.key, std::move(v)});
        ++i;
        ++j;
        load();
      }
    }
    return out;
  }

  OPoly mul(const OPoly& p, const Monomial& m, const Key& km) const {
    OPoly out;
    out.reserve(p.size());
    for (const auto& t : p) out.push_back({t.m * m, add(t.key, km), t.c});
    return out;
  }

  const MonomialOrder& order() const { return order_; }

 private:
  const MonomialOrder& order_;
  size_t nw_;
};

// A basis being built, optionally carrying cofactors w.r.t. the input generators.
struct Store {
  std::vector<OPoly> polys;
  std::vector<uint32_t> masks;
  std::vector<std::vector<Polynomial>> cofactors;
  std::vector<size_t> active;  // indices usable as reducers, in insertion order
};

class Reduction {
 public:
  Reduction(const Engine& engine, const Store& store, bool track) : engine_(engine), store_(store), track_(track) {}

  // Index of an active element whose leading monomial divides m, or -1.
  long find_reducer(const Monomial& m, long skip = -1) const {
    uint32_t mask = support_mask(m);
    for (size_t idx : store_.active) {
      if (static_cast<long>(idx) == skip) continue;
      if (store_.masks[idx] & ~mask) continue;
      if (store_.polys[idx][0].m.divides(m)) return static_cast<long>(idx);
    }
    return -1;
  }

  // Full reduction; when tail_only, the leading term is kept as is.
  void reduce(OPoly& p, std::vector<Polynomial>* cof, long skip = -1, bool tail_only = false) const {
    OPoly done;
    size_t s = 0;
    if (tail_only && !p.empty()) {
      done.push_back(p[0]);
      s = 1;
    }
    while (s < p.size()) {
      long r = find_reducer(p[s].m, skip);
      if (r < 0) {
        done.push_back(p[s++]);
        continue;
      }
      const OPoly& g = store_.polys[r];
      Monomial q = p[s].m / g[0].m;
      Key kq = engine_.key_of(q);
      Rational c = p[s].c / g[0].c;
      if (track_ && cof) {
        const auto& gc = store_.cofactors[r];
        for (size_t k = 0; k < cof->size(); ++k) (*cof)[k] = (*cof)[k] - gc[k].mul_term(q, c);
      }
      p = engine_.sub_mul(p, s + 1, g, 1, c, q, kq);
      s = 0;
    }
    p = std::move(done);
  }

 private:
  const Engine& engine_;
  const Store& store_;
  bool track_;
};

struct Pair {
  size_t i, j;
  Monomial lcm;
  Key key;
};

void make_monic(OPoly& p, std::vector<Polynomial>* cof) {
  if (p.empty() || p[0].c == 1) return;
  Rational inv = 1 / p[0].c;
  for (auto& t : p) t.c *= inv;
  if (cof)
    for (auto& c : *cof) c = c * inv;
}

CertifiedGroebnerBasis run_buchberger(const Ideal& ideal, const MonomialOrder& order, bool track) {
  if (order.nvars() != ideal.nvars()) throw Error(ErrorKind::InvalidInput, "order and ring disagree");
  Engine engine(order);
  Store store;
  Reduction red(engine, store, track);
  std::vector<Pair> pairs;
  const size_t ngens = ideal.gens.size();

  auto lm = [&](size_t i) -> const Monomial& { return store.polys[i][0].m; };

  auto update = [&](OPoly h, std::vector<Polynomial> hcof) {
    const size_t k = store.polys.size();
    store.masks.push_back(support_mask(h[0].m));
    store.polys.push_back(std::move(h));
    if (track) store.cofactors.push_back(std::move(hcof));
    const Monomial& lh = lm(k);

    std::vector<Pair> cands;
    for (size_t g : store.active) {
      Monomial l = lh.lcm(lm(g));
      cands.push_back({g, k, l, engine.key_of(l)});
    }
    std::vector<bool> removed(cands.size(), false);
    std::vector<size_t> kept;
    for (size_t a = 0; a < cands.size(); ++a) {
      removed[a] = true;
      bool keep = lh.coprime(lm(cands[a].i));
      if (!keep) {
        keep = true;
        for (size_t b = 0; b < cands.size() && keep; ++b)
          if (!removed[b] && cands[b].lcm.divides(cands[a].lcm)) keep = false;
        for (size_t b : kept)
          if (keep && cands[b].lcm.divides(cands[a].lcm)) keep = false;
      }
      if (keep) kept.push_back(a);
    }
    std::vector<Pair> next;
    for (auto& p : pairs) {
      bool drop = lh.divides(p.lcm) && lh.lcm(lm(p.i)) != p.lcm && lh.lcm(lm(p.j)) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    for (size_t a : kept)
      if (!lh.coprime(lm(cands[a].i))) next.push_back(cands[a]);
    pairs = std::move(next);

    std::vector<size_t> act;
    for (size_t g : store.active)
      if (!lh.divides(lm(g))) act.push_back(g);
    act.push_back(k);
    store.active = std::move(act);
  };

  for (size_t gi = 0; gi < ngens; ++gi) {
    OPoly h = engine.from_poly(ideal.gens[gi]);
    std::vector<Polynomial> hcof;
    if (track) {
      hcof.assign(ngens, Polynomial());
      hcof[gi] = Polynomial::constant(1);
    }
    red.reduce(h, track ? &hcof : nullptr);
    if (h.empty()) continue;
    make_monic(h, track ? &hcof : nullptr);
    update(std::move(h), std::move(hcof));
  }

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first; ties broken by pair indices.
    size_t best = 0;
    for (size_t a = 1; a < pairs.size(); ++a) {
      int c = engine.cmp(pairs[a].lcm, pairs[a].key, pairs[best].lcm, pairs[best].key);
      if (c < 0 || (c == 0 && std::tie(pairs[a].j, pairs[a].i) < std::tie(pairs[best].j, pairs[best].i)))
        best = a;
    }
    Pair p = std::move(pairs[best]);
    pairs.erase(pairs.begin() + best);

    const OPoly& fi = store.polys[p.i];
    const OPoly& fj = store.polys[p.j];
    Monomial qi = p.lcm / fi[0].m, qj = p.lcm / fj[0].m;
    Key kqi = engine.key_of(qi), kqj = engine.key_of(qj);
    OPoly s = engine.sub_mul(engine.mul(fi, qi, kqi), 1, fj, 1, Rational(1), qj, kqj);
    std::vector<Polynomial> scof;
    if (track) {
      scof.resize(ngens);
      for (size_t k = 0; k < ngens; ++k)
        scof[k] = store.cofactors[p.i][k].mul_term(qi, 1) - store.cofactors[p.j][k].mul_term(qj, 1);
    }
    red.reduce(s, track ? &scof : nullptr);
    if (s.empty()) continue;
    make_monic(s, track ? &scof : nullptr);
    update(std::move(s), std::move(scof));
  }

  // Interreduce the tails.
  std::vector<size_t> basis = store.active;
  for (size_t idx : basis) {
    OPoly p = store.polys[idx];
    std::vector<Polynomial> cof;
    if (track) cof = store.cofactors[idx];
    red.reduce(p, track ? &cof : nullptr, static_cast<long>(idx), true);
    store.polys[idx] = std::move(p);
    if (track) store.cofactors[idx] = std::move(cof);
  }
  std::sort(basis.begin(), basis.end(), [&](size_t a, size_t b) {
    const OTerm& x = store.polys[a][0];
    const OTerm& y = store.polys[b][0];
    return engine.cmp(x.m, x.key, y.m, y.key) < 0;
  });

  CertifiedGroebnerBasis out;
  out.gb.ring = ideal.ring;
  out.gb.order = order;
  for (size_t idx : basis) {
    out.gb.polys.push_back(engine.to_poly(store.polys[idx]));
    out.gb.leading.push_back(store.polys[idx][0].m);
    if (track) out.cofactors.push_back(store.cofactors[idx]);
  }
  return out;
}

}  // namespace

GroebnerBasis groebner_basis(const Ideal& ideal, const MonomialOrder& order) {
  return run_buchberger(ideal, order, false).gb;
}

CertifiedGroebnerBasis groebner_basis_with_cofactors(const Ideal& ideal, const MonomialOrder& order) {
  return run_buchberger(ideal, order, true);
}

struct GroebnerReducer::Impl {
  explicit Impl(const GroebnerBasis& gb) : order(gb.order), engine(order) {
    for (size_t i = 0; i < gb.polys.size(); ++i) {
      store.polys.push_back(engine.from_poly(gb.polys[i]));
      store.masks.push_back(support_mask(store.polys.back()[0].m));
      store.active.push_back(i);
    }
  }
  MonomialOrder order;
  Engine engine;
  Store store;
};

GroebnerReducer::GroebnerReducer(const GroebnerBasis& gb) : impl_(std::make_unique<Impl>(gb)) {}
GroebnerReducer::~GroebnerReducer() = default;

Polynomial GroebnerReducer::reduce(const Polynomial& f) const {
  OPoly p = impl_->engine.from_poly(f);
  Reduction red(impl_->engine, impl_->store, false);
  red.reduce(p, nullptr);
  return impl_->engine.to_poly(p);
}

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "zero polynomial has no leading monomial");
  const Monomial* best = &f.terms()[0].m;
  for (const auto& t : f.terms())
    if (order.compare(t.m, *best) > 0) best = &t.m;
  return *best;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) { return GroebnerReducer(gb).reduce(f); }

bool gb_contains(const GroebnerBasis& gb, const Polynomial& f) { return normal_form(f, gb).is_zero(); }

Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& order) {
  Division out;
  out.quotients.assign(divisors.size(), Polynomial());
  std::vector<Monomial> leads;
  std::vector<Rational> lcs;
  for (const auto& d : divisors) {
    leads.push_back(leading_monomial(d, order));
    lcs.push_back(d.coefficient(leads.back()));
  }
  Polynomial p = f;
  while (!p.is_zero()) {
    Monomial m = leading_monomial(p, order);
    Rational c = p.coefficient(m);
    bool reduced = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      if (!leads[i].divides(m)) continue;
      Monomial q = m / leads[i];
      Rational s = c / lcs[i];
      out.quotients[i] = out.quotients[i] + Polynomial::monomial(q, s);
      p = p - divisors[i].mul_term(q, s);
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial lt = Polynomial::monomial(m, c);
      out.remainder = out.remainder + lt;
      p = p - lt;
    }
  }
  return out;
}

}  // namespace tordeg
