#include <gtest/gtest.h>

#include <map>
#include <random>

#include "tordeg/errors.hpp"
#include "tordeg/flag/plucker.hpp"
#include "tordeg/poly/hilbert.hpp"
#include "tordeg/poly/ideal_ops.hpp"
#include "tordeg/repweights/weights.hpp"
#include "tordeg/tropfan/orbits.hpp"
#include "tordeg/tropfan/tropical.hpp"

using namespace tordeg;

namespace {

PolyRing ring_of(std::initializer_list<const char*> names) {
  PolyRing r;
  for (auto n : names) r.names.emplace_back(n);
  return r;
}

Ideal ideal_of(const PolyRing& r, std::initializer_list<const char*> gens) {
  Ideal I;
  I.ring = r;
  for (auto g : gens) I.gens.push_back(parse_polynomial(g, r));
  return I;
}

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Oracle for trop(f) membership: the minimum over terms of w·a is attained at least twice.
bool min_attained_twice(const Polynomial& f, const IntVec& w) {
  std::vector<BigInt> vals;
  for (const auto& t : f.terms()) vals.push_back(t.m.weight(w));
  BigInt best = *std::min_element(vals.begin(), vals.end());
  return std::count(vals.begin(), vals.end(), best) >= 2;
}

const TropicalFan& flag4_fan() {
  static TropicalFan fan = [] {
    TropicalFan f = enumerate_tropical_fan(plucker_ideal(4));
    label_orbits(f, plucker_ring(4));
    return f;
  }();
  return fan;
}

Ideal orbit5_representative() {
  PlueckerRing pr = plucker_ring(4);
  Ideal I;
  I.ring = pr.ring;
  I.grading = pr.grading.row_vectors();
  for (auto g : {"p4*p123 - p3*p124", "p24*p134 - p14*p234", "p23*p134 - p13*p234", "p2*p14 - p1*p24",
                 "p2*p13 - p1*p23", "p24*p123 - p23*p124", "p14*p123 - p13*p124", "p4*p23 - p3*p24",
                 "p4*p13 - p3*p14", "p14*p23 - p13*p24"})
    I.gens.push_back(parse_polynomial(g, pr.ring));
  return I;
}

}  // namespace

TEST(TropicalHypersurface, ThreeTermQuadric) {
  PolyRing r = ring_of({"x", "y", "z"});
  auto h = tropical_hypersurface(parse_polynomial("1*x*y + 1*x*z + 1*y*z", r), 3);
  EXPECT_EQ(h.cones.size(), 3u);
  for (const auto& c : h.cones) EXPECT_EQ(c.dim(), 2u);
}

TEST(TropicalHypersurface, CoversExactlyTheTieLocus) {
  std::mt19937 rng(3);
  PolyRing r = ring_of({"a", "b", "c", "d"});
  Polynomial f = parse_polynomial("1*a*b + 2*c^2 - 1*a*d + 1*b*c*d", r);
  auto h = tropical_hypersurface(f, 4);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int k = 0; k < 300; ++k) {
    IntVec w(4);
    for (auto& x : w) x = d(rng);
    bool in_fan = false;
    for (const auto& c : h.cones) in_fan = in_fan || c.contains(w);
    EXPECT_EQ(in_fan, min_attained_twice(f, w));
  }
}

TEST(TropicalFan, ToyQuadric) {
  PolyRing r = ring_of({"x", "y", "z"});
  Ideal I = ideal_of(r, {"1*x*y + 1*x*z + 1*y*z"});
  TropicalFan fan = enumerate_tropical_fan(I);
  ASSERT_EQ(fan.cones.size(), 3u);
  std::set<std::string> keys;
  for (const auto& c : fan.cones) {
    keys.insert(c.key);
    EXPECT_EQ(c.cone.dim(), 2u);
    EXPECT_TRUE(c.binomial);
    EXPECT_FALSE(c.prime);
  }
  std::set<std::string> expect{serialize_polys({parse_polynomial("1*x*z + 1*y*z", r)}, r),
                               serialize_polys({parse_polynomial("1*x*y + 1*y*z", r)}, r),
                               serialize_polys({parse_polynomial("1*x*y + 1*x*z", r)}, r)};
  EXPECT_EQ(keys, expect);
}

TEST(TropicalFan, TropicalLine) {
  PolyRing r = ring_of({"x", "y", "z"});
  TropicalFan fan = enumerate_tropical_fan(ideal_of(r, {"1*x + 1*y + 1*z"}));
  ASSERT_EQ(fan.cones.size(), 3u);
  std::set<IntVec> rays;
  for (const auto& c : fan.cones) {
    ASSERT_EQ(c.cone.rays().size(), 1u);
    rays.insert(c.cone.rays()[0]);
    EXPECT_TRUE(c.prime);
    EXPECT_TRUE(c.multiplicity_one);
  }
  // Rays e_i modulo (1,1,1), projected orthogonally.
  std::set<IntVec> expect{iv({2, -1, -1}), iv({-1, 2, -1}), iv({-1, -1, 2})};
  EXPECT_EQ(rays, expect);
}

TEST(ToricComponent, ToyCone) {
  PolyRing r = ring_of({"x", "y", "z"});
  Ideal in = ideal_of(r, {"1*x*z + 1*y*z"});
  IntMatrix W{{0, 0, -1}, {1, 1, 1}};
  LatticeIdealData d = toric_component(in, W);
  ASSERT_EQ(d.ideal.gens.size(), 1u);
  EXPECT_EQ(d.ideal.gens[0], parse_polynomial("1*x + 1*y", r));
  EXPECT_EQ(d.kernel.col(0), iv({1, -1, 0}));
  PrimeReport p = is_prime_binomial(in, d);
  EXPECT_FALSE(p.prime());
  EXPECT_FALSE(p.equals_toric);
  EXPECT_TRUE(p.saturated);
  EXPECT_TRUE(ideal_contains(d.ideal, in));
}

TEST(ToricComponent, PrimeFixedPoint) {
  PolyRing r = ring_of({"a", "b", "c", "d"});
  Ideal in = ideal_of(r, {"1*a*d - 1*b*c"});
  IntMatrix W{{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}};
  LatticeIdealData d = toric_component(in, W);
  EXPECT_TRUE(ideals_equal(d.ideal, in));
  PrimeReport p = is_prime_binomial(in, d);
  EXPECT_TRUE(p.prime());
  EXPECT_TRUE(p.degree_certificate);
}

TEST(ToricComponent, LinearBinomialIsPrime) {
  PolyRing r = ring_of({"x", "y"});
  Ideal in = ideal_of(r, {"1*x + 1*y"});
  LatticeIdealData d = toric_component(in, IntMatrix{{1, 1}});
  EXPECT_TRUE(is_prime_binomial(in, d).prime());
}

TEST(ToricComponent, NonSaturatedLattice) {
  PolyRing r = ring_of({"x", "y"});
  Ideal in = ideal_of(r, {"1*x^2 - 1*y^2"});
  LatticeIdealData d = toric_component(in, IntMatrix{{1, 1}});
  PrimeReport p = is_prime_binomial(in, d);
  EXPECT_FALSE(p.saturated);
  EXPECT_FALSE(p.prime());
}

TEST(ToricComponent, RescalingObstruction) {
  PolyRing r = ring_of({"x", "y"});
  Ideal in = ideal_of(r, {"1*x^2 - 2*y^2"});
  LatticeIdealData d = toric_component(in, IntMatrix{{1, 1}});
  try {
    is_prime_binomial(in, d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RescalingObstruction);
  }
}

TEST(ToricComponent, ExtraComponentFailsCertificates) {
  // The second generator is z(x^2 - yz), so the ideal also vanishes on {xy = z = 0}.
  PolyRing r = ring_of({"x", "y", "z"});
  Ideal in = ideal_of(r, {"1*x*y - 1*z^2", "1*x^2*z - 1*y*z^2"});
  LatticeIdealData d = toric_component(in, IntMatrix{{1, 1, 1}});
  EXPECT_TRUE(ideal_contains(d.ideal, parse_polynomial("1*x^2 - 1*y*z", r)));
  EXPECT_FALSE(degree_certificate(in, d));
  // The lattice is spanned by (1,1,-2) and (2,-1,-1); the gcd of its 2x2 minors is 3.
  EXPECT_EQ(tropical_multiplicity(d), 3);
  EXPECT_FALSE(multiplicity_one_certificate(in, d));
}

TEST(TropicalFan, Flag4CountsAndFlags) {
  const TropicalFan& fan = flag4_fan();
  EXPECT_EQ(fan.cones.size(), 78u);
  EXPECT_EQ(fan.lineality.size(), 3u);
  EXPECT_EQ(fan.target_dim, 9u);
  size_t prime = 0;
  for (const auto& c : fan.cones) {
    EXPECT_EQ(c.cone.dim(), 9u);
    EXPECT_EQ(c.cone.dim() - fan.lineality.size(), 6u);  // modulo the grading space
    EXPECT_TRUE(c.binomial);
    EXPECT_TRUE(c.multiplicity_one);
    EXPECT_EQ(c.multiplicity, 1);
    EXPECT_EQ(c.degree_certificate, c.prime);
    EXPECT_EQ(minimal_generators(c.initial).size(), 10u);
    EXPECT_EQ(c.W.rows(), 9u);
    prime += c.prime;
  }
  EXPECT_EQ(prime, 72u);
}

TEST(TropicalFan, Flag4Orbits) {
  const TropicalFan& fan = flag4_fan();
  std::map<int, std::vector<size_t>> orbits;
  for (size_t i = 0; i < fan.cones.size(); ++i) orbits[fan.cones[i].orbit].push_back(i);
  std::multiset<size_t> sizes;
  int nonprime_orbits = 0;
  for (const auto& [o, members] : orbits) {
    ASSERT_GE(o, 0);
    sizes.insert(members.size());
    for (size_t i : members) EXPECT_EQ(fan.cones[i].prime, fan.cones[members[0]].prime);
    if (!fan.cones[members[0]].prime) {
      ++nonprime_orbits;
      EXPECT_EQ(members.size(), 6u);
    }
  }
  EXPECT_EQ(sizes, (std::multiset<size_t>{6, 12, 12, 24, 24}));
  EXPECT_EQ(nonprime_orbits, 1);
}

// Every cone's initial ideal is reproduced by its W_C rows and by three different interior points.
TEST(TropicalFan, Flag4InitialIdealsConstantOnInteriors) {
  const TropicalFan& fan = flag4_fan();
  Ideal I = plucker_ideal(4);
  for (const auto& c : fan.cones) {
    IntVec p = c.interior;
    std::vector<IntVec> points{p};
    for (size_t k = 0; k < 2 && k < c.cone.rays().size(); ++k) points.push_back(BigInt(4) * p + c.cone.rays()[k]);
    for (const auto& q : points) EXPECT_TRUE(ideals_equal(initial_ideal(I, q), c.initial));
    for (size_t r = 0; r < c.W.rows(); ++r) EXPECT_TRUE(c.cone.contains(c.W.row(r)));
    EXPECT_EQ(rank(c.W), 9u);
    ASSERT_TRUE(fan.locate(p).has_value());
    EXPECT_EQ(fan.cones[*fan.locate(p)].key, c.key);
  }
}

TEST(ToricComponent, Flag4Orbit5Representative) {
  const TropicalFan& fan = flag4_fan();
  PlueckerRing pr = plucker_ring(4);
  auto idx = find_cone_by_initial_ideal(fan, orbit5_representative());
  ASSERT_TRUE(idx.has_value());
  const MaximalCone& c = fan.cones[*idx];
  EXPECT_FALSE(c.prime);
  LatticeIdealData d = toric_component(c.initial, c.W);
  EXPECT_TRUE(ideal_contains(d.ideal, c.initial));
  Polynomial missing = parse_polynomial("p2*p134 - p1*p234", pr.ring);
  EXPECT_TRUE(ideal_contains(d.ideal, missing));
  EXPECT_FALSE(ideal_contains(c.initial, missing));
  EXPECT_FALSE(degree_certificate(c.initial, d));
  // Another generator matrix for the same span gives the same toric ideal.
  IntMatrix W2 = c.W;
  for (size_t col = 0; col < W2.cols(); ++col) W2.at(0, col) += 3 * c.W.at(W2.rows() - 1, col);
  EXPECT_TRUE(ideals_equal(toric_component(c.initial, W2).ideal, d.ideal));
}

TEST(Membership, StringAndFflvVectorsOnFlag4) {
  const TropicalFan& fan = flag4_fan();
  Ideal I = plucker_ideal(4);
  auto prime_at = [&](const IntVec& w, WeightConvention conv) {
    MembershipReport r = weight_vector_membership(I, w, &fan, conv);
    EXPECT_TRUE(r.binomial);
    EXPECT_TRUE(r.monomial_free);
    EXPECT_TRUE(r.cone.has_value());
    if (r.cone) EXPECT_EQ(fan.cones[*r.cone].prime, r.prime);
    return r.prime;
  };
  EXPECT_TRUE(prime_at(iv({0, 32, 24, 7, 0, 16, 6, 48, 38, 30, 0, 4, 20, 52}), WeightConvention::Max));
  EXPECT_FALSE(prime_at(iv({0, 16, 12, 44, 0, 8, 40, 24, 56, 15, 0, 32, 10, 26}), WeightConvention::Max));
  auto f = fflv_weight_vectors(4);
  EXPECT_TRUE(prime_at(f.w_min, WeightConvention::Min));
  EXPECT_TRUE(prime_at(f.w_reg, WeightConvention::Min));
  EXPECT_TRUE(ideals_equal(initial_ideal(I, f.w_min), initial_ideal(I, f.w_reg)));
}

TEST(Membership, ZeroVectorGivesTheWholeIdeal) {
  Ideal I = plucker_ideal(4);
  MembershipReport r = weight_vector_membership(I, IntVec(14, 0));
  EXPECT_TRUE(ideals_equal(r.initial, I));
  EXPECT_FALSE(r.binomial);
  EXPECT_FALSE(r.prime);
}

TEST(Membership, MaxConventionNegatesTheVector) {
  Ideal I = plucker_ideal(4);
  IntVec w = iv({0, 32, 24, 7, 0, 16, 6, 48, 38, 30, 0, 4, 20, 52});
  IntVec neg = w;
  for (auto& x : neg) x = -x;
  MembershipReport a = weight_vector_membership(I, w, nullptr, WeightConvention::Max);
  EXPECT_EQ(a.effective, neg);
  EXPECT_TRUE(ideals_equal(a.initial, initial_ideal(I, neg)));
  EXPECT_FALSE(weight_vector_membership(I, w).monomial_free);
}

TEST(Classification, WorkerPoolMatchesSerialRun) {
  FanOptions opt;
  opt.threads = 4;
  TropicalFan f = enumerate_tropical_fan(plucker_ideal(4), opt);
  const TropicalFan& serial = flag4_fan();
  ASSERT_EQ(f.cones.size(), serial.cones.size());
  for (size_t i = 0; i < f.cones.size(); ++i) {
    EXPECT_EQ(f.cones[i].key, serial.cones[i].key);
    EXPECT_EQ(f.cones[i].W, serial.cones[i].W);
    EXPECT_EQ(f.cones[i].prime, serial.cones[i].prime);
    EXPECT_EQ(f.cones[i].multiplicity, serial.cones[i].multiplicity);
  }
}
