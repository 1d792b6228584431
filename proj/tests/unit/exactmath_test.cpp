#include <gtest/gtest.h>

#include <random>

#include "tordeg/errors.hpp"
#include "tordeg/exactmath/cone.hpp"
#include "tordeg/exactmath/int_matrix.hpp"
#include "tordeg/exactmath/linalg.hpp"

using namespace tordeg;

namespace {

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// gcd of all k x k minors, by brute force over row and column subsets.
BigInt determinantal_divisor(const IntMatrix& m, size_t k) {
  std::vector<size_t> rs, cs;
  BigInt g = 0;
  std::vector<bool> rsel(m.rows()), csel(m.cols());
  std::fill(rsel.begin(), rsel.begin() + k, true);
  do {
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.begin(), csel.begin() + k, true);
    do {
      IntMatrix sub(k, k);
      size_t a = 0;
      for (size_t i = 0; i < m.rows(); ++i) {
        if (!rsel[i]) continue;
        size_t b = 0;
        for (size_t j = 0; j < m.cols(); ++j) {
          if (!csel[j]) continue;
          sub.at(a, b++) = m.at(i, j);
        }
        ++a;
      }
      BigInt d = abs(determinant(sub));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    } while (std::prev_permutation(csel.begin(), csel.end()));
  } while (std::prev_permutation(rsel.begin(), rsel.end()));
  return g;
}

IntMatrix random_matrix(std::mt19937& rng, size_t r, size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
  return m;
}

bool is_unimodular(const IntMatrix& m) { return abs(determinant(m)) == 1; }

}  // namespace

TEST(SmithNormalForm, IdentityIsFixed) {
  auto s = smith_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(s.S, IntMatrix::identity(3));
}

TEST(SmithNormalForm, DiagonalTwoThree) {
  auto s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(s.S, (IntMatrix{{1, 0}, {0, 6}}));
}

TEST(SmithNormalForm, ZeroMatrix) {
  auto s = smith_normal_form(IntMatrix(2, 2));
  EXPECT_TRUE(s.S.is_zero());
}

TEST(SmithNormalForm, RandomMatricesMatchDeterminantalDivisors) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m = random_matrix(rng, 4, 4, -5, 5);
    auto s = smith_normal_form(m);
    ASSERT_EQ(s.U * m * s.V, s.S);
    ASSERT_TRUE(is_unimodular(s.U));
    ASSERT_TRUE(is_unimodular(s.V));
    BigInt prod = 1;
    for (size_t k = 1; k <= 4; ++k) {
      prod *= s.S.at(k - 1, k - 1);
      ASSERT_EQ(prod, determinantal_divisor(m, k)) << m.to_string();
      if (k < 4 && s.S.at(k, k) != 0) {
        ASSERT_EQ(s.S.at(k, k) % s.S.at(k - 1, k - 1), 0);
      }
    }
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j)
        if (i != j) ASSERT_EQ(s.S.at(i, j), 0);
  }
}

TEST(SmithNormalForm, RectangularMatrices) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(rng, 3, 5, -4, 4);
    auto s = smith_normal_form(m);
    ASSERT_EQ(s.U * m * s.V, s.S);
    BigInt prod = 1;
    for (size_t k = 1; k <= 3; ++k) {
      prod *= s.S.at(k - 1, k - 1);
      ASSERT_EQ(prod, determinantal_divisor(m, k));
    }
  }
}

TEST(HermiteNormalForm, UnimodularTransform) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(rng, 4, 5, -6, 6);
    auto h = hermite_normal_form(m);
    ASSERT_EQ(h.U * m, h.H);
    ASSERT_TRUE(is_unimodular(h.U));
    ASSERT_EQ(h.rank, rational_rank(m.row_vectors(), 5));
  }
}

TEST(IntegerKernel, SingleRow) {
  IntMatrix k = integer_kernel(IntMatrix{{1, 1}});
  ASSERT_EQ(k.cols(), 1u);
  IntVec v = k.col(0);
  EXPECT_TRUE(v == iv({1, -1}) || v == iv({-1, 1}));
}

TEST(IntegerKernel, CoordinateProjection) {
  IntMatrix k = integer_kernel(IntMatrix{{1, 0, 0}, {0, 1, 0}});
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(abs(k.at(2, 0)), 1);
  EXPECT_EQ(k.at(0, 0), 0);
  EXPECT_EQ(k.at(1, 0), 0);
}

TEST(IntegerKernel, ToyConeWeightMatrix) {
  IntMatrix w{{0, 0, -1}, {1, 1, 1}};
  IntMatrix k = integer_kernel(w);
  ASSERT_EQ(k.cols(), 1u);
  IntVec v = k.col(0);
  EXPECT_TRUE(v == iv({1, -1, 0}) || v == iv({-1, 1, 0}));
}

TEST(IntegerKernel, RankNullityAndSaturation) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    size_t r = 1 + trial % 4;
    IntMatrix m = random_matrix(rng, r, 6, -3, 3);
    IntMatrix k = integer_kernel(m);
    ASSERT_EQ(rank(m) + k.cols(), 6u);
    ASSERT_TRUE((m * k).is_zero());
    if (k.cols() > 0) ASSERT_TRUE(rows_span_saturated_lattice(k.transpose()));
  }
}

TEST(IntegerKernel, NonSaturatedRowLatticeDetected) {
  EXPECT_FALSE(rows_span_saturated_lattice(IntMatrix{{2, 0}, {0, 1}}));
  EXPECT_TRUE(rows_span_saturated_lattice(IntMatrix{{1, 1}, {0, 1}}));
  IntMatrix sat = saturated_row_lattice(IntMatrix{{2, 2, 0}});
  ASSERT_EQ(sat.rows(), 1u);
  EXPECT_EQ(abs(sat.at(0, 0)), 1);
}

TEST(Cone, OrthantInteriorPoint) {
  RationalCone c(2, {iv({1, 0}), iv({0, 1})});
  EXPECT_EQ(c.dim(), 2u);
  IntVec p = cone_interior_point(c);
  EXPECT_GT(p[0], 0);
  EXPECT_EQ(p[0], p[1]);
}

TEST(Cone, DiagonalRay) {
  RationalCone c(2, {iv({1, 0})}, {iv({1, -1})});
  EXPECT_EQ(c.dim(), 1u);
  IntVec p = cone_interior_point(c);
  EXPECT_GT(p[0], 0);
  EXPECT_EQ(p[0], p[1]);
}

TEST(Cone, EmptyInequalitySystemIsFullSpace) {
  RationalCone c(3);
  EXPECT_EQ(c.dim(), 3u);
  EXPECT_EQ(c.lineality().size(), 3u);
}

TEST(Cone, ContradictoryEqualitiesGiveEmptyCone) {
  RationalCone c(2, {}, {iv({1, 1}), iv({1, -1})});
  EXPECT_EQ(c.dim(), 0u);
  try {
    cone_interior_point(c);
    FAIL() << "expected EmptyCone";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyCone);
  }
}

TEST(Cone, FullOrthantDimension) {
  RationalCone c(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})});
  EXPECT_EQ(cone_dimension(c), 3u);
  EXPECT_EQ(c.rays().size(), 3u);
}

TEST(Cone, OpposingHalfSpacesGiveHyperplane) {
  RationalCone c(3, {iv({1, 0, 0}), iv({-1, 0, 0})});
  EXPECT_EQ(cone_dimension(c), 2u);
  EXPECT_EQ(c.implied_equalities().size(), 1u);
}

TEST(Cone, RefinementOfTwoHalfPlanes) {
  RationalCone a(2, {iv({1, 2})});
  RationalCone b(2, {iv({-3, 1})});
  RationalCone q = common_refinement(a, b);
  EXPECT_EQ(q.dim(), 2u);
  EXPECT_EQ(q.rays().size(), 2u);
  EXPECT_TRUE(cone_contains(a, q));
  EXPECT_TRUE(cone_contains(b, q));
  EXPECT_FALSE(cone_contains(q, a));
}

TEST(Cone, ToyInitialFormCone) {
  // w with in_w(xy+xz+yz) = xz+yz: w_x+w_z = w_y+w_z < w_x+w_y.
  RationalCone c(3, {iv({0, 1, -1})}, {iv({1, -1, 0})});
  IntVec w = cone_interior_point(c);
  BigInt xy = w[0] + w[1], xz = w[0] + w[2], yz = w[1] + w[2];
  EXPECT_EQ(xz, yz);
  EXPECT_LT(xz, xy);
}

TEST(Cone, GeneratorRoundTrip) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<IntVec> ineqs;
    for (int k = 0; k < 5; ++k) ineqs.push_back(iv({d(rng), d(rng), d(rng), d(rng)}));
    RationalCone c(4, ineqs);
    RationalCone back = RationalCone::from_generators(4, c.rays(), c.lineality());
    ASSERT_TRUE(cones_equal(c, back));
    ASSERT_EQ(c.dim(), back.dim());
    if (c.dim() == 0) continue;
    IntVec p = cone_interior_point(c);
    auto implied = c.implied_equalities();
    for (const auto& a : ineqs) {
      bool is_implied = true;
      for (const auto& r : c.rays())
        if (dot(a, r) != 0) is_implied = false;
      for (const auto& l : c.lineality())
        if (dot(a, l) != 0) is_implied = false;
      if (is_implied) ASSERT_EQ(dot(a, p), 0);
      else ASSERT_GT(dot(a, p), 0);
    }
  }
}

TEST(Cone, FacetsOfCube) {
  // Cone over a square: four facets, four rays.
  RationalCone c(3, {iv({1, 1, 0}), iv({1, -1, 0}), iv({1, 0, 1}), iv({1, 0, -1}), iv({2, 1, 1})});
  EXPECT_EQ(c.rays().size(), 4u);
  EXPECT_EQ(c.facets().size(), 4u);
}
