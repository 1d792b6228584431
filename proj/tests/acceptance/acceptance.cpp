#include <algorithm>
#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tordeg/cli/reference_tables.hpp"
#include "tordeg/errors.hpp"
#include "tordeg/exactmath/int_matrix.hpp"
#include "tordeg/flag/plucker.hpp"
#include "tordeg/flag/reduced_word.hpp"
#include "tordeg/poly/groebner.hpp"
#include "tordeg/poly/ideal_ops.hpp"
#include "tordeg/polytopes/normalization.hpp"
#include "tordeg/polytopes/polytope.hpp"
#include "tordeg/reembed/reembed.hpp"
#include "tordeg/repweights/weights.hpp"
#include "tordeg/stringfflv/fflv.hpp"
#include "tordeg/stringfflv/string_cone.hpp"
#include "tordeg/tropfan/orbits.hpp"
#include "tordeg/tropfan/tropical.hpp"

using namespace tordeg;
using namespace tordeg::golden;

namespace {

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

// Every polytope built along the way, for the Euler check in criterion 9.
std::deque<Polytope>& computed_polytopes() {
  static std::deque<Polytope> ps;
  return ps;
}

const Polytope& keep(Polytope p) {
  computed_polytopes().push_back(std::move(p));
  return computed_polytopes().back();
}

const PlueckerRing& ring4() {
  static PlueckerRing pr = plucker_ring(4);
  return pr;
}

const TropicalFan& flag4_fan() {
  static TropicalFan fan = [] {
    TropicalFan f = enumerate_tropical_fan(plucker_ideal(4));
    label_orbits(f, ring4());
    return f;
  }();
  return fan;
}

std::map<int, const MaximalCone*> orbit_representatives() {
  std::map<int, const MaximalCone*> reps;
  for (const auto& c : flag4_fan().cones) reps.emplace(c.orbit, &c);
  return reps;
}

const std::vector<Polytope>& prime_orbit_polytopes() {
  static std::vector<Polytope> ps = [] {
    std::vector<Polytope> out;
    for (const auto& [o, c] : orbit_representatives())
      if (c->prime) out.push_back(keep(normalization_polytope(*c, ring4().grading)));
    return out;
  }();
  return ps;
}

std::string name_of_class(const std::vector<int>& word) {
  auto cls = commutation_class(word);
  for (const auto& row : kFlag4Rows)
    if (std::count(cls.begin(), cls.end(), parse_word(row.word))) return row.name;
  return "";
}

Polynomial random_poly(std::mt19937& rng, size_t nvars, int terms, int deg, bool homogeneous) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<size_t> var(0, nvars - 1);
  std::uniform_int_distribution<int> dg(0, deg);
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    const int d = homogeneous ? deg : dg(rng);
    for (int j = 0; j < d; ++j) m[var(rng)]++;
    int c = coef(rng);
    ts.push_back({m, Rational(c == 0 ? 1 : c)});
  }
  return Polynomial::from_terms(std::move(ts));
}

IntVec random_vec(std::mt19937& rng, size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntVec v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

void criterion1(Check& ck) {
  const TropicalFan& fan = flag4_fan();
  ck.expect(fan.cones.size() == 78, "78 maximal cones, got " + std::to_string(fan.cones.size()));
  ck.expect(fan.target_dim - fan.lineality.size() == 6, "dimension 6 modulo lineality");
  size_t prime = 0;
  for (const auto& c : fan.cones) {
    prime += c.prime;
    ck.expect(c.cone.dim() == fan.target_dim, "cone of the wrong dimension");
    ck.expect(is_binomial(c.initial.gens), "initial ideal not binomial");
    ck.expect(minimal_generators(c.initial).size() == 10, "initial ideal without 10 minimal generators");
  }
  ck.expect(prime == 72, "72 prime cones, got " + std::to_string(prime));
  std::map<int, std::pair<size_t, bool>> orbits;
  for (const auto& c : fan.cones) {
    auto& o = orbits.try_emplace(c.orbit, 0, true).first->second;
    ++o.first;
    o.second = o.second && c.prime;
  }
  std::multiset<size_t> sizes;
  size_t nonprime_orbits = 0;
  for (const auto& [k, o] : orbits) {
    sizes.insert(o.first);
    nonprime_orbits += !o.second;
    if (!o.second) ck.expect(o.first == 6, "the non-prime orbit has 6 cones");
  }
  ck.expect(sizes == std::multiset<size_t>{24, 12, 12, 24, 6}, "orbit sizes 24, 12, 12, 24, 6");
  ck.expect(nonprime_orbits == 1, "exactly one non-prime orbit");
  for (const auto& c : fan.cones)
    if (!c.prime)
      for (const auto& d : fan.cones)
        if (d.orbit == c.orbit) ck.expect(!d.prime, "orbit mixes prime and non-prime cones");
}

void criterion2(Check& ck) {
  std::map<int, size_t> orbit_size;
  for (const auto& c : flag4_fan().cones) ++orbit_size[c.orbit];
  std::multiset<std::pair<size_t, std::vector<size_t>>> got, expect;
  for (const auto& row : kFlag4Orbits)
    if (row.prime) expect.insert({row.size, row.f_vector});
  size_t i = 0;
  for (const auto& [o, c] : orbit_representatives()) {
    if (!c->prime) continue;
    const Polytope& P = prime_orbit_polytopes()[i++];
    ck.expect(P.dim() == 6, "normalization polytope of dimension 6");
    got.insert({orbit_size[o], f_vector(P)});
  }
  ck.expect(got == expect, "orbit sizes and F-vectors match the table");
  const auto& ps = prime_orbit_polytopes();
  for (size_t a = 0; a < ps.size(); ++a)
    for (size_t b = a + 1; b < ps.size(); ++b)
      ck.expect(!combinatorially_equivalent(ps[a], ps[b]), "two prime orbits give equivalent polytopes");
}

void criterion3(Check& ck) {
  Ideal I = plucker_ideal(ring4());
  const TropicalFan& fan = flag4_fan();
  for (const auto& row : kFlag4Rows) {
    const IntVec v = to_intvec(row.vector);
    bool found = false;
    for (const auto& w : commutation_class(parse_word(row.word))) found = found || string_weight_vector(4, w) == v;
    ck.expect(found, std::string(row.word) + ": vector is not the weight vector of its class");
    MembershipReport r = weight_vector_membership(I, v, &fan, WeightConvention::Max);
    ck.expect(r.binomial, std::string(row.word) + ": initial ideal not binomial");
    ck.expect(r.prime == row.prime, std::string(row.word) + ": primality differs from the table");
    ck.expect(r.cone.has_value(), std::string(row.word) + ": not in the interior of a maximal cone");
    if (r.cone) ck.expect(fan.cones[*r.cone].prime == row.prime, std::string(row.word) + ": cone primality differs");
  }
  ck.expect(std::count_if(kFlag4Rows.begin(), kFlag4Rows.end(), [](const TableRow& r) { return r.prime; }) == 7,
            "seven prime rows");
}

void criterion4(Check& ck) {
  auto words = reduced_words_of_longest(4);
  ck.expect(words.size() == 16, "16 reduced words");
  ck.expect(weyl_dimension(4, rho(4)) == 64, "dim V(rho) = 64");
  for (const auto& w : words) {
    const Polytope& P = keep(string_polytope(w, 4, rho(4)));
    ck.expect(lattice_points(P).size() == 64, word_string(w) + ": lattice points differ from 64");
  }
  auto reps = commutation_class_representatives(4);
  ck.expect(reps.size() == 8, "8 commutation classes");
  std::vector<Polytope> qs;
  std::vector<std::string> names;
  for (const auto& w : reps) {
    qs.push_back(keep(string_polytope(w, 4, rho(4))));
    names.push_back(name_of_class(w));
    ck.expect(!names.back().empty(), word_string(w) + ": class not in the table");
  }
  std::vector<int> group(qs.size(), -1);
  int groups = 0;
  for (size_t a = 0; a < qs.size(); ++a) {
    if (group[a] >= 0) continue;
    group[a] = groups;
    for (size_t b = a + 1; b < qs.size(); ++b)
      if (group[b] < 0 && combinatorially_equivalent(qs[a], qs[b])) group[b] = groups;
    ++groups;
  }
  ck.expect(groups == 4, "4 combinatorial classes, got " + std::to_string(groups));
  for (size_t a = 0; a < qs.size(); ++a)
    for (size_t b = 0; b < qs.size(); ++b)
      ck.expect((group[a] == group[b]) == (names[a] == names[b]), "combinatorial classes differ from the table");
  std::map<std::string, bool> mp;
  for (size_t a = 0; a < reps.size(); ++a) {
    MinkowskiReport m = minkowski_property(reps[a], 4);
    ck.expect(m.expected == 64, "expected count 64");
    if (names[a] == "String 4") ck.expect(m.sum_lattice_points == 62, "String 4 reaches 62 points");
    auto [it, fresh] = mp.emplace(names[a], m.holds);
    ck.expect(fresh || it->second == m.holds, "Minkowski property differs within a class");
  }
  for (const auto& row : kFlag4Rows)
    if (mp.count(row.name)) ck.expect(mp[row.name] == row.mp, std::string(row.name) + ": Minkowski property differs");
  ck.expect(std::count_if(mp.begin(), mp.end(), [](const auto& kv) { return kv.second; }) == 3,
            "property holds for exactly 3 classes");
}

void criterion5(Check& ck) {
  ck.expect(dyck_paths(4).size() == 7, "7 Dyck paths");
  const Polytope& fflv = keep(fflv_polytope(4, rho(4)));
  ck.expect(lattice_points(fflv).size() == 64, "64 lattice points in the FFLV polytope");
  FflvWeights w = fflv_weight_vectors(4);
  ck.expect(w.w_min == to_intvec(kFflv4Min), "w_min matches the table");
  ck.expect(w.w_reg == to_intvec(kFflv4Reg), "w_reg matches the table");
  Ideal I = plucker_ideal(ring4());
  const TropicalFan& fan = flag4_fan();
  MembershipReport a = weight_vector_membership(I, w.w_min, &fan);
  MembershipReport b = weight_vector_membership(I, w.w_reg, &fan);
  ck.expect(ideals_equal(a.initial, b.initial), "in_wmin differs from in_wreg");
  ck.expect(a.binomial && a.prime, "in_wmin is a binomial prime ideal");
  std::optional<size_t> idx = a.cone ? a.cone : fan.locate(w.w_min);
  ck.expect(idx.has_value(), "w_min lies in a maximal cone");
  if (!idx) return;
  const Polytope& P = keep(normalization_polytope(fan.cones[*idx], ring4().grading));
  ck.expect(combinatorially_equivalent(P, fflv), "cone polytope equivalent to the FFLV polytope");
  ck.expect(combinatorially_equivalent(P, keep(string_polytope(parse_word("213231"), 4, rho(4)))),
            "cone polytope equivalent to String 3");
}

void criterion6(Check& ck) {
  Ideal I;
  I.ring.names = {"x", "y", "z"};
  I.gens = {parse_polynomial("x*y + x*z + y*z", I.ring)};
  I.grading = {IntVec{1, 1, 1}};
  TropicalFan fan = enumerate_tropical_fan(I);
  ck.expect(fan.cones.size() == 3, "3 cones");
  for (const auto& c : fan.cones) {
    ck.expect(!c.prime, "toy cone is prime");
    ReembeddingStep s = extend_ideal(I, c, missing_binomials(c), {"u"});
    HarvestResult h = harvest_new_degenerations(s);
    ck.expect(h.lifts.size() == 1, "one lift per toy cone");
    if (h.lifts.size() != 1) continue;
    const MaximalCone& lifted = h.fan.cones[h.lifts[0].index];
    ck.expect(lifted.prime && lies_over(s, lifted), "toy lift is prime and lies over its cone");
    // in_C(I) = v(a + b) for the common variable v; the lift has W' spanned by e_u - e_v and (1,1,1,1).
    Monomial common = c.initial.gens[0].terms()[0].m;
    for (const auto& t : c.initial.gens[0].terms()) common = common.gcd(t.m);
    size_t v = 0;
    while (v < 3 && common[v] == 0) ++v;
    ck.expect(v < 3, "toy initial form has a common variable");
    IntMatrix expected(2, 4);
    for (size_t j = 0; j < 4; ++j) expected.at(1, j) = 1;
    expected.at(0, 3) = 1;
    if (v < 3) expected.at(0, v) = -1;
    ck.expect(hermite_normal_form(saturated_row_lattice(lifted.W)).H ==
                  hermite_normal_form(saturated_row_lattice(expected)).H,
              "toy lift W' differs up to lattice");
  }
}

void criterion7(Check& ck) {
  const PlueckerRing& pr = ring4();
  Ideal rep;
  rep.ring = pr.ring;
  for (auto g : {"p4*p123 - p3*p124", "p24*p134 - p14*p234", "p23*p134 - p13*p234", "p2*p14 - p1*p24",
                 "p2*p13 - p1*p23", "p24*p123 - p23*p124", "p14*p123 - p13*p124", "p4*p23 - p3*p24",
                 "p4*p13 - p3*p14", "p14*p23 - p13*p24"})
    rep.gens.push_back(parse_polynomial(g, pr.ring));
  auto idx = find_cone_by_initial_ideal(flag4_fan(), rep);
  ck.expect(idx.has_value(), "representative cone found");
  if (!idx) return;
  ReembeddingStep s = extend_ideal(plucker_ideal(pr), flag4_fan().cones[*idx]);
  HarvestResult h = harvest_new_degenerations(s);
  size_t prime = 0;
  for (const auto& c : h.fan.cones) prime += c.prime;
  ck.expect(h.fan.cones.size() == 105, "105 cones after re-embedding, got " + std::to_string(h.fan.cones.size()));
  ck.expect(prime == 99, "99 prime cones after re-embedding, got " + std::to_string(prime));
  ck.expect(h.lifts.size() == 3, "3 prime lifts, got " + std::to_string(h.lifts.size()));
  const Polytope& s4 = keep(string_polytope(parse_word("132312"), 4, rho(4)));
  int matches = 0;
  for (const auto& l : h.lifts) {
    const MaximalCone& c = h.fan.cones[l.index];
    ck.expect(c.prime && lies_over(s, c), "lift is prime and lies over the cone");
    keep(l.polytope);
    for (const auto& P : prime_orbit_polytopes())
      ck.expect(!combinatorially_equivalent(l.polytope, P), "lift polytope equals an orbit polytope");
    matches += combinatorially_equivalent(l.polytope, s4);
  }
  ck.expect(matches == 2, "exactly two lifts equivalent to String 4, got " + std::to_string(matches));
}

void criterion8(Check& ck) {
  PlueckerRing pr = plucker_ring(5);
  Ideal I = plucker_ideal(pr);
  ck.expect(kFlag5Rows.size() == 31, "31 table rows");
  for (const auto& row : kFlag5Rows) {
    MembershipReport r = weight_vector_membership(I, from_extension_layout(pr, to_intvec(row.vector)), nullptr,
                                                  WeightConvention::Max);
    ck.expect(r.binomial, std::string(row.name) + ": initial ideal not binomial");
    ck.expect(r.prime == row.prime, std::string(row.name) + ": primality differs from the table");
  }
  FflvWeights w = fflv_weight_vectors(5);
  ck.expect(to_extension_layout(pr, w.w_min) == to_intvec(kFflv5Min), "w_min matches the table");
  ck.expect(to_extension_layout(pr, w.w_reg) == to_intvec(kFflv5Reg), "w_reg matches the table");
  MembershipReport a = weight_vector_membership(I, w.w_min);
  MembershipReport b = weight_vector_membership(I, w.w_reg);
  ck.expect(a.binomial && a.prime, "in_wmin(I_5) is a binomial prime ideal");
  ck.expect(b.binomial && b.prime, "in_wreg(I_5) is a binomial prime ideal");
  ck.expect(ideals_equal(a.initial, b.initial), "in_wmin(I_5) differs from in_wreg(I_5)");
}

void groebner_suite(Check& ck) {
  std::mt19937 rng(71);
  PolyRing r;
  r.names = {"a", "b", "c", "d"};
  for (int trial = 0; trial < 100; ++trial) {
    Ideal I;
    I.ring = r;
    const bool hom = trial % 2 == 0;
    for (int k = 0; k < 3; ++k) I.gens.push_back(random_poly(rng, 4, 3, hom ? 2 : 3, hom));
    MonomialOrder o = trial % 3 ? MonomialOrder::grevlex(4)
                                : MonomialOrder(4, {IntVec(4, 1), random_vec(rng, 4, -2, 2)});
    GroebnerBasis gb = groebner_basis(I, o);
    const auto& P = gb.polys;
    for (size_t i = 0; i < P.size(); ++i)
      for (size_t j = i + 1; j < P.size(); ++j) {
        Monomial l = gb.leading[i].lcm(gb.leading[j]);
        Polynomial s = P[i].mul_term(l / gb.leading[i], 1) - P[j].mul_term(l / gb.leading[j], 1);
        ck.expect(divide(s, P, o).remainder.is_zero(), "S-polynomial does not reduce to zero");
      }
    for (const auto& f : I.gens) ck.expect(divide(f, P, o).remainder.is_zero(), "generator not in the basis ideal");
    Ideal again{r, gb.polys, {}};
    ck.expect(groebner_basis(again, o).to_string() == gb.to_string(), "basis is not idempotent");
    Ideal shuffled = I;
    std::shuffle(shuffled.gens.begin(), shuffled.gens.end(), rng);
    ck.expect(groebner_basis(shuffled, o).to_string() == gb.to_string(), "basis depends on generator order");
  }
}

void hull_suite(Check& ck) {
  std::mt19937 rng(72);
  for (int trial = 0; trial < 100; ++trial) {
    const size_t dim = 2 + trial % 3;
    std::vector<IntVec> pts;
    for (size_t k = 0; k < dim + 2 + trial % 5; ++k) pts.push_back(random_vec(rng, dim, -4, 4));
    Polytope P = Polytope::from_points(dim, pts);
    Polytope Q = Polytope::from_inequalities(dim, P.facets(), P.equations());
    ck.expect(Q.vertices() == P.vertices(), "H/V round trip changes the vertices");
    ck.expect(f_vector(Q) == f_vector(P), "H/V round trip changes the F-vector");
    for (const auto& x : pts) ck.expect(P.contains(x), "hull misses an input point");
    ck.expect(satisfies_euler_relation(P), "random polytope violates the Euler relation");
  }
  for (const auto& P : computed_polytopes()) ck.expect(satisfies_euler_relation(P), "computed polytope violates Euler");
  ck.expect(computed_polytopes().size() >= 30, "computed polytopes were collected");
}

void kernel_suite(Check& ck) {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    const size_t rows = 1 + trial % 4, cols = 3 + trial % 5;
    IntMatrix m(rows, cols);
    std::uniform_int_distribution<int> d(-4, 4);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) m.at(i, j) = d(rng);
    IntMatrix k = integer_kernel(m);
    ck.expect(rank(m) + k.cols() == cols, "rank-nullity fails");
    ck.expect((m * k).is_zero(), "kernel vector not in the kernel");
    if (k.cols() == 0) continue;
    for (const auto& f : invariant_factors(k.transpose())) ck.expect(f == 1, "kernel lattice not saturated");
  }
}

void lineality_suite(Check& ck) {
  const PlueckerRing& pr = ring4();
  Ideal I = plucker_ideal(pr);
  std::mt19937 rng(74);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    IntVec w = random_vec(rng, pr.nvars(), -3, 3);
    IntVec shifted = w;
    // Rows of the lineality space of the fan: the torus weights a_J = sum of a_j over j in J.
    for (int j = 0; j < 4; ++j) {
      const int a = c(rng);
      for (size_t v = 0; v < pr.nvars(); ++v)
        if (pr.subsets[v] >> j & 1) shifted[v] += a;
    }
    for (size_t row = 0; row < pr.grading.rows(); ++row) {
      const int a = c(rng);
      for (size_t v = 0; v < pr.nvars(); ++v) shifted[v] += a * pr.grading.at(row, v);
    }
    ck.expect(ideals_equal(initial_ideal(I, w), initial_ideal(I, shifted)), "initial ideal moves under a lineality shift");
  }
}

void symmetry_suite(Check& ck) {
  const PlueckerRing& pr = ring4();
  Ideal I = plucker_ideal(pr);
  auto G = symmetry_group(4);
  ck.expect(G.size() == 48, "symmetry group of order 48");
  std::mt19937 rng(75);
  std::uniform_int_distribution<size_t> pick(0, G.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& g = G[pick(rng)];
    IntVec w = random_vec(rng, pr.nvars(), -3, 3);
    ck.expect(ideals_equal(initial_ideal(I, apply_symmetry(g, pr, w)), apply_symmetry(g, pr, initial_ideal(I, w))),
              "initial ideals are not equivariant");
  }
}

void criterion9(Check& ck) {
  groebner_suite(ck);
  hull_suite(ck);
  kernel_suite(ck);
  lineality_suite(ck);
  symmetry_suite(ck);
}

struct Criterion {
  int id;
  const char* what;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "trop(Flag_4): 78 cones, 72 prime, 5 orbits", criterion1},
      {2, "Flag_4 orbit polytopes: F-vectors and inequivalence", criterion2},
      {3, "Flag_4 string weight vectors under the maximum convention", criterion3},
      {4, "Flag_4 string polytopes: lattice points, classes, Minkowski property", criterion4},
      {5, "Flag_4 FFLV polytope and weight vectors", criterion5},
      {6, "toy quadric: every cone re-embeds to a prime lift", criterion6},
      {7, "Flag_4 re-embedding at the non-prime orbit", criterion7},
      {8, "Flag_5 string and FFLV weight vectors", criterion8},
      {9, "randomized invariants, 100 cases per suite", criterion9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Check ck;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(ck);
    } catch (const std::exception& e) {
      ck.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = ck.failures.empty();
    failed += !ok;
    std::printf("criterion %d: %s  %s (%.1fs)\n", c.id, ok ? "PASS" : "FAIL", c.what, secs);
    std::set<std::string> seen;
    for (const auto& f : ck.failures)
      if (seen.insert(f).second) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
