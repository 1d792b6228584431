#include "tordeg/tropfan/tropical.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "tordeg/errors.hpp"
#include "tordeg/exactmath/linalg.hpp"
#include "tordeg/poly/hilbert.hpp"
#include "tordeg/poly/ideal_ops.hpp"

namespace tordeg {

namespace {

IntVec exponent_vector(const Monomial& m, size_t n) {
  IntVec v(n);
  for (size_t i = 0; i < n; ++i) v[i] = m[i];
  return v;
}

std::string cell_key(const RationalCone& c) {
  std::string s;
  for (const auto& v : c.lineality()) {
    for (const auto& x : v) s += to_string(x) + ",";
    s += ";";
  }
  s += "|";
  for (const auto& v : c.rays()) {
    for (const auto& x : v) s += to_string(x) + ",";
    s += ";";
  }
  return s;
}

// First row of the Gröbner cone that does not hold on all of the cell, as (index, is_equality).
std::optional<std::pair<size_t, bool>> violated_row(const RationalCone& P, const GroebnerConeRows& rows) {
  for (size_t i = 0; i < rows.equalities.size(); ++i) {
    const auto& e = rows.equalities[i];
    for (const auto& r : P.rays())
      if (dot(e, r) != 0) return std::make_pair(i, true);
    for (const auto& l : P.lineality())
      if (dot(e, l) != 0) return std::make_pair(i, true);
  }
  for (size_t i = 0; i < rows.inequalities.size(); ++i) {
    const auto& a = rows.inequalities[i];
    for (const auto& r : P.rays())
      if (dot(a, r) < 0) return std::make_pair(i, false);
    for (const auto& l : P.lineality())
      if (dot(a, l) != 0) return std::make_pair(i, false);
  }
  return std::nullopt;
}

IntVec negated(const IntVec& v) {
  IntVec out = v;
  for (auto& x : out) x = -x;
  return out;
}

// Solve A x = b over Z (rows of A are the equations).
bool integer_solvable(const std::vector<IntVec>& A, const IntVec& b, size_t cols) {
  if (A.empty()) return true;
  SmithForm snf = smith_normal_form(IntMatrix::from_rows(A, cols));
  IntVec ub = snf.U * b;
  for (size_t i = 0; i < ub.size(); ++i) {
    BigInt d = i < snf.S.cols() ? snf.S.at(i, i) : BigInt(0);
    if (d == 0) {
      if (ub[i] != 0) return false;
    } else if (ub[i] % d != 0) {
      return false;
    }
  }
  return true;
}

// Solve A x = b over GF(2).
bool mod2_solvable(std::vector<std::vector<uint8_t>> A, std::vector<uint8_t> b) {
  if (A.empty()) return true;
  const size_t cols = A[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < A.size(); ++c) {
    size_t p = r;
    while (p < A.size() && !A[p][c]) ++p;
    if (p == A.size()) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    for (size_t i = 0; i < A.size(); ++i) {
      if (i == r || !A[i][c]) continue;
      for (size_t k = 0; k < cols; ++k) A[i][k] ^= A[r][k];
      b[i] ^= b[r];
    }
    ++r;
  }
  for (size_t i = r; i < A.size(); ++i)
    if (b[i]) return false;
  return true;
}

void factor_into(BigInt x, std::set<BigInt>& primes) {
  if (x < 0) x = -x;
  for (BigInt p = 2; p * p <= x; ++p) {
    if (x % p != 0) continue;
    primes.insert(p);
    while (x % p == 0) x /= p;
  }
  if (x > 1) primes.insert(x);
}

long valuation(BigInt x, const BigInt& p) {
  long v = 0;
  if (x < 0) x = -x;
  while (x != 0 && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// Is there λ ∈ (Q^*)^n with λ^ℓ_i = c_i for every i?
bool rescaling_exists(const std::vector<IntVec>& ells, const std::vector<Rational>& cs, size_t n) {
  std::set<BigInt> primes;
  for (const auto& c : cs) {
    factor_into(c.get_num(), primes);
    factor_into(c.get_den(), primes);
  }
  for (const auto& p : primes) {
    IntVec b;
    for (const auto& c : cs) b.push_back(BigInt(valuation(c.get_num(), p) - valuation(c.get_den(), p)));
    if (!integer_solvable(ells, b, n)) return false;
  }
  std::vector<std::vector<uint8_t>> A;
  std::vector<uint8_t> b;
  for (size_t i = 0; i < ells.size(); ++i) {
    std::vector<uint8_t> row(n);
    for (size_t k = 0; k < n; ++k) row[k] = BigInt(ells[i][k] % 2) != 0;
    A.push_back(std::move(row));
    b.push_back(cs[i] < 0);
  }
  return mod2_solvable(std::move(A), std::move(b));
}

void classify_all(std::vector<MaximalCone>& cones, unsigned threads) {
  if (threads == 1) {
    for (auto& c : cones) classify_cone(c);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto work = [&] {
    for (size_t i; (i = next++) < cones.size();) {
      try {
        classify_cone(cones[i]);
      } catch (...) {
        std::lock_guard<std::mutex> g(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

class FanBuilder {
 public:
  FanBuilder(const Ideal& ideal, const FanOptions& options) : I_(ideal), opt_(options), n_(ideal.nvars()) {
    g_ = positive_grading(I_);
    target_ = hilbert_series(I_, g_).krull_dimension;
    double product = 1;
    for (const auto& f : I_.gens) {
      hyp_.push_back(tropical_hypersurface(f, n_));
      product *= static_cast<double>(std::max<size_t>(1, hyp_.back().cones.size()));
    }
    if (product > static_cast<double>(opt_.cell_budget))
      throw Error(ErrorKind::CellBudgetExceeded, "prevariety has more selections than the cell budget allows");
  }

  TropicalFan run() {
    dfs(RationalCone(n_), 0);
    TropicalFan fan;
    fan.ambient_dim = n_;
    fan.target_dim = target_;
    std::vector<IntVec> grading = I_.grading.empty() ? std::vector<IntVec>{g_} : I_.grading;
    fan.lineality = canonical_row_space(grading, n_);
    fan.cells = cells_;
    if (cones_.empty()) throw Error(ErrorKind::DimensionMismatch, "no cell reached the expected dimension");
    std::sort(cones_.begin(), cones_.end(), [](const MaximalCone& a, const MaximalCone& b) { return a.key < b.key; });
    fan.cones = std::move(cones_);
    if (opt_.classify) classify_all(fan.cones, std::max(1u, opt_.threads));
    return fan;
  }

 private:
  struct MonomialStatus {
    bool free = true;
    Polynomial witness;
  };

  void dfs(const RationalCone& P, size_t k) {
    if (k == hyp_.size()) {
      process(P, 0);
      return;
    }
    for (const auto& Q : hyp_[k].cones) {
      RationalCone R = P.intersect(Q.inequalities(), Q.equalities());
      if (R.dim() >= target_) dfs(R, k + 1);
    }
  }

  bool covered(const RationalCone& P, const IntVec& w) const {
    for (const auto& c : cones_)
      if (c.cone.contains(w) && c.cone.contains(P)) return true;
    return false;
  }

  void process(RationalCone P, int depth) {
    if (depth > opt_.max_split_depth)
      throw Error(ErrorKind::CellBudgetExceeded, "cell refinement exceeded the depth cap");
    if (++cells_ > opt_.cell_budget) throw Error(ErrorKind::CellBudgetExceeded, "cell budget exhausted");
    if (!seen_.insert(cell_key(P)).second) return;
    IntVec w = P.relative_interior_point();
    if (covered(P, w)) return;

    WeightedBasis wb = weighted_groebner(I_, w);
    GroebnerConeRows rows = groebner_cone_rows(wb.gb, wb.initial_forms);
    while (auto bad = violated_row(P, rows)) {
      if (bad->second) {
        const IntVec& e = rows.equalities[bad->first];
        for (const auto& half : {e, negated(e)}) {
          RationalCone R = P.intersect({half});
          if (R.dim() >= target_) process(R, depth + 1);
        }
        return;
      }
      // w stays in the relative interior of the part where the inequality holds.
      const IntVec& a = rows.inequalities[bad->first];
      RationalCone rest = P.intersect({negated(a)});
      if (rest.dim() >= target_) process(rest, depth + 1);
      P = P.intersect({a});
    }

    std::string key = serialize_polys(wb.initial_forms, I_.ring);
    const MonomialStatus& status = monomial_status(key, wb);
    if (status.free) {
      if (P.dim() != target_)
        throw Error(ErrorKind::DimensionMismatch, "monomial-free cell of dimension " + std::to_string(P.dim()));
      record(key, wb, rows);
      return;
    }
    if (P.dim() == target_) return;
    for (const auto& Q : tropical_hypersurface(status.witness, n_).cones) {
      RationalCone R = P.intersect(Q.inequalities(), Q.equalities());
      if (R.dim() >= target_) process(R, depth + 1);
    }
  }

  const MonomialStatus& monomial_status(const std::string& key, const WeightedBasis& wb) {
    auto it = status_.find(key);
    if (it != status_.end()) return it->second;
    Ideal in{I_.ring, wb.initial_forms, I_.grading};
    MonomialStatus st;
    st.free = is_monomial_free(in);
    if (!st.free) st.witness = lift_monomial(in, wb);
    return status_.emplace(key, std::move(st)).first->second;
  }

  // Some f ∈ I whose initial form at the current weight is a monomial.
  Polynomial lift_monomial(const Ideal& in, const WeightedBasis& wb) const {
    GroebnerReducer red(standard_basis(in));
    Monomial m;
    for (const auto& f : in.gens)
      for (const auto& t : f.terms())
        for (size_t v = 0; v < n_; ++v)
          if (t.m[v]) m[v] = 1;
    Monomial base = m;
    while (!red.reduce(Polynomial::monomial(m)).is_zero()) m = m * base;
    for (size_t v = 0; v < n_; ++v) {
      while (m[v] > 0) {
        Monomial smaller = m;
        --smaller[v];
        if (!red.reduce(Polynomial::monomial(smaller)).is_zero()) break;
        m = smaller;
      }
    }
    Division d = divide(Polynomial::monomial(m), wb.initial_forms, wb.gb.order);
    Polynomial f;
    for (size_t i = 0; i < d.quotients.size(); ++i) f = f + d.quotients[i] * wb.gb.polys[i];
    if (!d.remainder.is_zero() || !initial_form(f, wb.w).is_monomial())
      throw Error(ErrorKind::Unreachable, "monomial lift failed");
    return f;
  }

  void record(const std::string& key, const WeightedBasis& wb, const GroebnerConeRows& rows) {
    if (by_key_.count(key)) return;
    MaximalCone mc;
    mc.cone = RationalCone(n_, rows.inequalities, rows.equalities);
    if (mc.cone.dim() != target_)
      throw Error(ErrorKind::DimensionMismatch, "tropical cone of dimension " + std::to_string(mc.cone.dim()));
    mc.interior = mc.cone.relative_interior_point();
    mc.initial = Ideal{I_.ring, wb.initial_forms, I_.grading};
    mc.key = key;
    by_key_.emplace(key, cones_.size());
    cones_.push_back(std::move(mc));
  }

  const Ideal& I_;
  FanOptions opt_;
  size_t n_;
  IntVec g_;
  size_t target_ = 0;
  std::vector<TropicalHypersurfaceFan> hyp_;
  std::vector<MaximalCone> cones_;
  std::map<std::string, size_t> by_key_;
  std::map<std::string, MonomialStatus> status_;
  std::set<std::string> seen_;
  size_t cells_ = 0;
};

}  // namespace

TropicalHypersurfaceFan tropical_hypersurface(const Polynomial& f, size_t nvars) {
  TropicalHypersurfaceFan out;
  out.f = f;
  const auto& T = f.terms();
  std::vector<IntVec> ex;
  for (const auto& t : T) ex.push_back(exponent_vector(t.m, nvars));
  for (size_t i = 0; i < T.size(); ++i) {
    for (size_t j = i + 1; j < T.size(); ++j) {
      std::vector<IntVec> ineqs;
      for (size_t k = 0; k < T.size(); ++k)
        if (k != i && k != j) ineqs.push_back(ex[k] - ex[i]);
      RationalCone c(nvars, ineqs, {ex[i] - ex[j]});
      if (c.dim() + 1 != nvars) continue;
      out.pairs.emplace_back(i, j);
      out.cones.push_back(std::move(c));
    }
  }
  return out;
}

GroebnerConeRows groebner_cone_rows(const GroebnerBasis& gb, const std::vector<Polynomial>& initial_forms) {
  GroebnerConeRows rows;
  const size_t n = gb.ring.nvars();
  for (size_t k = 0; k < gb.polys.size(); ++k) {
    IntVec head = exponent_vector(gb.leading[k], n);
    const Polynomial& in = initial_forms[k];
    for (const auto& t : gb.polys[k].terms()) {
      if (t.m == gb.leading[k]) continue;
      IntVec d = exponent_vector(t.m, n) - head;
      if (in.coefficient(t.m) == 0)
        rows.inequalities.push_back(primitive(d));
      else
        rows.equalities.push_back(primitive(d));
    }
  }
  auto dedupe = [](std::vector<IntVec>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(rows.inequalities);
  dedupe(rows.equalities);
  return rows;
}

std::optional<size_t> TropicalFan::locate(const IntVec& w) const {
  for (size_t i = 0; i < cones.size(); ++i) {
    const RationalCone& c = cones[i].cone;
    if (!c.contains(w)) continue;
    bool interior = true;
    for (const auto& f : c.facets())
      if (dot(f, w) == 0) {
        interior = false;
        break;
      }
    if (interior) return i;
  }
  return std::nullopt;
}

TropicalFan enumerate_tropical_fan(const Ideal& ideal, const FanOptions& options) {
  return FanBuilder(ideal, options).run();
}

IntMatrix cone_generator_matrix(const RationalCone& cone) {
  std::vector<IntVec> rows = cone.lineality();
  for (const auto& r : cone.rays()) {
    std::vector<IntVec> trial = rows;
    trial.push_back(r);
    if (rational_rank(trial, cone.ambient_dim()) == trial.size()) rows = std::move(trial);
  }
  return IntMatrix::from_rows(rows, cone.ambient_dim());
}

LatticeIdealData toric_component(const Ideal& initial, const IntMatrix& W) {
  const size_t n = initial.nvars();
  LatticeIdealData out;
  out.kernel = integer_kernel(W);
  out.ideal = saturate_by_all_variables(initial);
  std::vector<IntVec> diffs;
  for (const auto& f : out.ideal.gens) {
    if (f.size() != 2)
      throw Error(ErrorKind::NotBinomialAfterSaturation, "saturation has a generator with " +
                                                             std::to_string(f.size()) + " terms");
    const auto& T = f.terms();
    out.coefficients.push_back(-T[1].c / T[0].c);
    diffs.push_back(exponent_vector(T[0].m, n) - exponent_vector(T[1].m, n));
  }
  if (!diffs.empty()) {
    HermiteForm h = hermite_normal_form(IntMatrix::from_rows(diffs, n));
    for (size_t r = 0; r < h.rank; ++r) out.binomial_lattice.push_back(h.H.row(r));
  }
  if (!ideal_contains(out.ideal, initial))
    throw Error(ErrorKind::Unreachable, "saturation does not contain the initial ideal");
  return out;
}

PrimeReport is_prime_binomial(const Ideal& initial, const LatticeIdealData& data) {
  const size_t n = initial.nvars();
  PrimeReport r;
  r.binomial = is_binomial(initial.gens);
  std::vector<IntVec> ells;
  for (const auto& f : data.ideal.gens)
    ells.push_back(exponent_vector(f.terms()[0].m, n) - exponent_vector(f.terms()[1].m, n));
  r.rescalable = rescaling_exists(ells, data.coefficients, n);
  if (!r.rescalable) throw Error(ErrorKind::RescalingObstruction, "binomial coefficients admit no rational rescaling");
  r.saturated = data.binomial_lattice.empty() ||
                rows_span_saturated_lattice(IntMatrix::from_rows(data.binomial_lattice, n));
  r.equals_toric = ideals_equal(initial, data.ideal);
  r.degree_certificate = degree_certificate(initial, data);
  return r;
}

BigInt tropical_multiplicity(const LatticeIdealData& data) {
  if (data.binomial_lattice.empty()) return 1;
  BigInt index = 1;
  for (const auto& d : invariant_factors(IntMatrix::from_rows(data.binomial_lattice, data.binomial_lattice[0].size())))
    index *= d;
  return abs(index);
}

bool multiplicity_one_certificate(const Ideal&, const LatticeIdealData& data) {
  return tropical_multiplicity(data) == 1;
}

bool degree_certificate(const Ideal& initial, const LatticeIdealData& data) {
  IntVec g = positive_grading(initial);
  return hilbert_series(initial, g).degree == hilbert_series(data.ideal, g).degree;
}

void classify_cone(MaximalCone& c) {
  c.W = cone_generator_matrix(c.cone);
  c.binomial = is_binomial(c.initial.gens);
  c.prime = false;
  c.multiplicity = 0;
  c.multiplicity_one = false;
  c.degree_certificate = false;
  c.rescaling_obstruction = false;
  if (!c.binomial) return;
  LatticeIdealData data = toric_component(c.initial, c.W);
  c.multiplicity = tropical_multiplicity(data);
  c.multiplicity_one = c.multiplicity == 1;
  c.degree_certificate = degree_certificate(c.initial, data);
  try {
    c.prime = is_prime_binomial(c.initial, data).prime();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::RescalingObstruction) throw;
    c.rescaling_obstruction = true;
  }
}

MembershipReport weight_vector_membership(const Ideal& ideal, const IntVec& w, const TropicalFan* fan,
                                          WeightConvention convention) {
  MembershipReport r;
  r.w = w;
  r.convention = convention;
  r.effective = w;
  if (convention == WeightConvention::Max)
    for (auto& x : r.effective) x = -x;
  if (!has_positive_grading(ideal)) {
    r.initial = initial_ideal(ideal, r.effective);
    r.monomial_free = is_monomial_free(r.initial);
    r.binomial = is_binomial(r.initial.gens);
    if (r.monomial_free && r.binomial)
      throw Error(ErrorKind::InvalidInput, "primality of initial ideals needs a positively graded ideal");
    return r;
  }
  WeightedBasis wb = weighted_groebner(ideal, r.effective);
  r.initial = ideal;
  r.initial.gens = wb.initial_forms;
  r.monomial_free = is_monomial_free(r.initial);
  r.binomial = is_binomial(r.initial.gens);
  if (r.monomial_free && r.binomial) {
    GroebnerConeRows rows = groebner_cone_rows(wb.gb, wb.initial_forms);
    IntMatrix W = cone_generator_matrix(RationalCone(ideal.nvars(), rows.inequalities, rows.equalities));
    LatticeIdealData data = toric_component(r.initial, W);
    r.multiplicity_one = multiplicity_one_certificate(r.initial, data);
    try {
      r.prime = is_prime_binomial(r.initial, data).prime();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::RescalingObstruction) throw;
      r.rescaling_obstruction = true;
    }
  }
  if (fan) r.cone = fan->locate(r.effective);
  return r;
}

}  // namespace tordeg
