#include <gtest/gtest.h>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>

#include "tordeg/cli/reference_tables.hpp"
#include "tordeg/errors.hpp"
#include "tordeg/flag/plucker.hpp"
#include "tordeg/flag/reduced_word.hpp"
#include "tordeg/repweights/weights.hpp"
#include "tordeg/tropfan/tropical.hpp"

using namespace tordeg;
using namespace tordeg::golden;

namespace {

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

uint32_t subset(std::initializer_list<int> elems) {
  uint32_t J = 0;
  for (int j : elems) J |= 1u << (j - 1);
  return J;
}

// Wedge of an ordered list of basis indices, acted on factor by factor and re-sorted with sign.
struct OracleWedge {
  int sign = 1;
  std::vector<int> factors;
};

std::optional<OracleWedge> oracle_apply(const PositiveRoot& a, const OracleWedge& v) {
  std::optional<OracleWedge> out;
  for (size_t i = 0; i < v.factors.size(); ++i) {
    if (v.factors[i] != a.p) continue;
    OracleWedge t = v;
    t.factors[i] = a.q + 1;
    if (std::count(t.factors.begin(), t.factors.end(), a.q + 1) > 1) continue;
    // Bubble sort, flipping the sign per transposition.
    for (size_t x = 0; x < t.factors.size(); ++x)
      for (size_t y = 0; y + 1 < t.factors.size(); ++y)
        if (t.factors[y] > t.factors[y + 1]) {
          std::swap(t.factors[y], t.factors[y + 1]);
          t.sign = -t.sign;
        }
    out = t;  // at most one factor equals p
  }
  return out;
}

std::optional<OracleWedge> oracle_monomial(const std::vector<PositiveRoot>& S, const std::vector<int>& m, int k) {
  OracleWedge v;
  for (int i = 1; i <= k; ++i) v.factors.push_back(i);
  for (size_t i = S.size(); i-- > 0;)
    for (int r = 0; r < m[i]; ++r) {
      auto next = oracle_apply(S[i], v);
      if (!next) return std::nullopt;
      v = *next;
    }
  return v;
}

uint32_t to_mask(const std::vector<int>& factors) {
  uint32_t J = 0;
  for (int f : factors) J |= 1u << (f - 1);
  return J;
}

// Breadth-first distance from {1..k} to J where one step moves a single element i to i+1.
int bfs_distance(int n, uint32_t J) {
  const int k = std::popcount(J);
  uint32_t start = (1u << k) - 1;
  std::map<uint32_t, int> dist{{start, 0}};
  std::deque<uint32_t> queue{start};
  while (!queue.empty()) {
    uint32_t cur = queue.front();
    queue.pop_front();
    if (cur == J) return dist[cur];
    for (int i = 0; i + 1 < n; ++i) {
      if (!(cur & (1u << i)) || (cur & (1u << (i + 1)))) continue;
      uint32_t next = (cur & ~(1u << i)) | (1u << (i + 1));
      if (dist.emplace(next, dist[cur] + 1).second) queue.push_back(next);
    }
  }
  return -1;
}

}  // namespace

TEST(RootVectorAction, SimpleRootOnSecondWedgePower) {
  auto img = root_vector_action({2, 2}, subset({1, 2}));
  ASSERT_TRUE(img);
  EXPECT_EQ(img->subset, subset({1, 3}));
  EXPECT_EQ(img->sign, 1);
  EXPECT_FALSE(root_vector_action({1, 1}, subset({2, 3})));
  EXPECT_FALSE(root_vector_action({1, 1}, subset({1, 2})));
}

TEST(RootVectorAction, AgreesWithLeibnizOracle) {
  for (int n = 3; n <= 6; ++n)
    for (int p = 1; p < n; ++p)
      for (int q = p; q < n; ++q)
        for (uint32_t J = 1; J + 1 < (1u << n); ++J) {
          OracleWedge v;
          for (int j = 1; j <= n; ++j)
            if (J & (1u << (j - 1))) v.factors.push_back(j);
          auto expect = oracle_apply({p, q}, v);
          auto got = root_vector_action({p, q}, J);
          ASSERT_EQ(bool(expect), bool(got));
          if (!got) continue;
          EXPECT_EQ(got->subset, to_mask(expect->factors));
          EXPECT_EQ(got->sign, expect->sign);
        }
}

TEST(ReducedWords, CountsAndClasses) {
  EXPECT_EQ(reduced_words_of_longest(3).size(), 2u);
  EXPECT_EQ(reduced_words_of_longest(4).size(), 16u);
  EXPECT_EQ(reduced_words_of_longest(5).size(), 768u);
  EXPECT_EQ(commutation_class_representatives(4).size(), 8u);
  EXPECT_EQ(commutation_class_representatives(5).size(), 62u);
  EXPECT_EQ(commutation_class(parse_word("132312")).size(), 4u);
  EXPECT_TRUE(is_reduced_word_of_longest(parse_word("121321"), 4));
  EXPECT_FALSE(is_reduced_word_of_longest(parse_word("121121"), 4));
  EXPECT_FALSE(is_reduced_word_of_longest(parse_word("12132"), 4));
}

TEST(ReducedWords, NonReducedWordRejected) {
  try {
    string_weight_vector(4, parse_word("112321"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotReduced);
  }
}

TEST(MinimalMonomial, ExampleOnSecondWedgePower) {
  auto S = simple_root_sequence(parse_word("121321"));
  EXPECT_EQ(minimal_monomial(S, subset({1, 3})), (std::vector<int>{0, 1, 0, 0, 0, 0}));
  EXPECT_EQ(minimal_monomial(S, subset({1, 2})), (std::vector<int>(6, 0)));
  // The other degree-one solution reaches the same vector but is larger in the term order.
  auto alt = apply_monomial(S, {0, 0, 0, 0, 1, 0}, subset({1, 2}));
  ASSERT_TRUE(alt);
  EXPECT_EQ(alt->subset, subset({1, 3}));
  EXPECT_EQ(two_adic_form({0, 1, 0, 0, 0, 0}), 16);
  EXPECT_EQ(two_adic_form({0, 0, 0, 0, 1, 0}), 2);
}

// Brute force over all 0/1 exponent vectors with an independent action. The minimal monomial
// has the smallest degree, which is the breadth-first distance, and among those the largest
// lex order, which on 0/1 vectors is the largest two-adic value.
TEST(MinimalMonomial, MatchesBruteForceForAllReducedWords) {
  for (int n = 3; n <= 5; ++n)
    for (const auto& word : reduced_words_of_longest(n)) {
      auto S = simple_root_sequence(word);
      const size_t N = S.size();
      std::map<uint32_t, std::pair<int, BigInt>> best;  // J -> (degree, e)
      for (uint32_t bits = 0; bits < (1u << N); ++bits) {
        std::vector<int> m(N);
        for (size_t i = 0; i < N; ++i) m[i] = (bits >> (N - 1 - i)) & 1;
        int deg = std::popcount(bits);
        for (int k = 1; k < n; ++k) {
          auto img = oracle_monomial(S, m, k);
          if (!img) continue;
          uint32_t J = to_mask(img->factors);
          auto it = best.find(J);
          BigInt e = bits;
          if (it == best.end() || deg < it->second.first || (deg == it->second.first && e > it->second.second))
            best[J] = {deg, e};
        }
      }
      for (uint32_t J : plucker_ring(n).subsets) {
        auto m = minimal_monomial(S, J);
        int deg = std::accumulate(m.begin(), m.end(), 0);
        ASSERT_TRUE(best.count(J));
        EXPECT_EQ(deg, best[J].first);
        EXPECT_EQ(two_adic_form(m), best[J].second) << word_string(word);
        EXPECT_EQ(deg, bfs_distance(n, J));
      }
      if (n == 5) break;  // one n = 5 word keeps the brute force fast; the table covers the rest
    }
}

TEST(MinimalMonomial, FflvSequenceDegreesAndReachability) {
  for (int n = 3; n <= 5; ++n) {
    auto S = fflv_root_sequence(n);
    EXPECT_EQ(S.size(), static_cast<size_t>(n * (n - 1) / 2));
    EXPECT_EQ(S.front(), (PositiveRoot{1, n - 1}));
    PlueckerRing pr = plucker_ring(n);
    auto ms = fflv_minimal_monomials(n);
    for (size_t idx = 0; idx < ms.size(); ++idx) {
      auto img = oracle_monomial(S, ms[idx], std::popcount(pr.subsets[idx]));
      ASSERT_TRUE(img);
      EXPECT_EQ(to_mask(img->factors), pr.subsets[idx]);
      // Each factor moves one element, so the degree is the number of elements outside {1..k}.
      int outside = std::popcount(pr.subsets[idx] & ~((1u << std::popcount(pr.subsets[idx])) - 1));
      EXPECT_EQ(std::accumulate(ms[idx].begin(), ms[idx].end(), 0), outside);
    }
  }
}

TEST(StringWeightVector, Flag4Example) {
  IntVec w = string_weight_vector(4, parse_word("121321"));
  EXPECT_EQ(w, iv({0, 32, 24, 7, 0, 16, 6, 48, 38, 30, 0, 4, 20, 52}));
  PlueckerRing pr = plucker_ring(4);
  EXPECT_EQ(w[pr.index_of(subset({1, 3}))], 16);
  for (auto J : {subset({1}), subset({1, 2}), subset({1, 2, 3})}) EXPECT_EQ(w[pr.index_of(J)], 0);
}

// Table rows stand for commutation classes. Seven of the eight tabulated vectors come from the
// listed word itself; the String 4 vector comes from 312132 in the class of 132312.
TEST(StringWeightVector, Flag4TableUpToCommutation) {
  int listed = 0;
  for (const auto& row : kFlag4Rows) {
    IntVec target = to_intvec(row.vector);
    auto word = parse_word(row.word);
    if (string_weight_vector(4, word) == target) ++listed;
    bool found = false;
    for (const auto& v : commutation_class(word)) found = found || string_weight_vector(4, v) == target;
    EXPECT_TRUE(found) << row.word;
  }
  EXPECT_EQ(listed, 7);
  EXPECT_EQ(string_weight_vector(4, parse_word("312132")), to_intvec(kFlag4Rows.back().vector));
}

TEST(StringWeightVector, Flag5TableInExtensionLayout) {
  PlueckerRing pr = plucker_ring(5);
  std::vector<std::string> mismatched;
  for (const auto& row : kFlag5Rows) {
    IntVec target = from_extension_layout(pr, to_intvec(row.vector));
    if (string_weight_vector(5, parse_word(row.word)) != target) mismatched.push_back(row.name);
  }
  EXPECT_EQ(mismatched, std::vector<std::string>{"S17"});
  const auto& s17 = kFlag5Rows[16];
  EXPECT_EQ(string_weight_vector(5, parse_word("1343213243")), from_extension_layout(pr, to_intvec(s17.vector)));
  auto cls = commutation_class(parse_word(s17.word));
  EXPECT_TRUE(std::count(cls.begin(), cls.end(), parse_word("1343213243")));
}

TEST(StringWeightVector, ExtensionLayoutRoundTrip) {
  PlueckerRing pr = plucker_ring(5);
  IntVec w = string_weight_vector(5, parse_word("1213214321"));
  EXPECT_EQ(from_extension_layout(pr, to_extension_layout(pr, w)), w);
  EXPECT_EQ(to_extension_layout(pr, w), to_intvec(kFlag5Rows[0].vector));
  // Read positionally, the tabulated vector would give the highest point p_12 a nonzero weight.
  IntVec raw = to_intvec(kFlag5Rows[0].vector);
  EXPECT_NE(raw[pr.index_of(subset({1, 2}))], 0);
  EXPECT_EQ(w[pr.index_of(subset({1, 2}))], 0);
}

TEST(FflvWeightVectors, Flag4) {
  auto w = fflv_weight_vectors(4);
  EXPECT_EQ(w.w_min, iv({0, 2, 2, 1, 0, 1, 1, 2, 1, 2, 0, 1, 1, 1}));
  EXPECT_EQ(w.w_reg, iv({0, 3, 4, 3, 0, 2, 2, 4, 3, 5, 0, 1, 2, 3}));
  auto f = fflv_forms(4);
  EXPECT_EQ(f.e_min, iv({1, 2, 1, 2, 1, 1}));
  EXPECT_EQ(f.e_reg, iv({3, 4, 2, 3, 2, 1}));
}

TEST(FflvWeightVectors, Flag5InExtensionLayout) {
  PlueckerRing pr = plucker_ring(5);
  auto w = fflv_weight_vectors(5);
  EXPECT_EQ(to_extension_layout(pr, w.w_reg),
            iv({0, 4, 6, 6, 0, 3, 4, 6, 6, 9, 0, 2, 4, 6, 4, 3, 4, 7, 8, 2, 3, 5, 4, 6, 8, 0, 1, 2, 3, 4}));
  EXPECT_EQ(to_extension_layout(pr, w.w_min),
            iv({0, 3, 4, 3, 0, 2, 2, 4, 3, 5, 0, 1, 2, 3, 1, 1, 1, 3, 3, 1, 1, 2, 1, 2, 3, 0, 1, 1, 1, 1}));
}

TEST(FflvWeightVectors, UnsupportedRank) {
  try {
    fflv_forms(6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
  }
}

// String weight vectors select maximal terms: under the minimum convention in_w(I_3) is a monomial
// ideal, and under the maximum convention both words of S_3 land in maximal prime cones.
TEST(StringWeightVector, Flag3WordsLieInMaximalConesUnderMaxConvention) {
  Ideal I = plucker_ideal(3);
  TropicalFan fan = enumerate_tropical_fan(I);
  for (const auto& word : reduced_words_of_longest(3)) {
    IntVec w = string_weight_vector(3, word);
    EXPECT_FALSE(weight_vector_membership(I, w).monomial_free) << word_string(word);
    MembershipReport r = weight_vector_membership(I, w, &fan, WeightConvention::Max);
    EXPECT_TRUE(r.binomial) << word_string(word);
    EXPECT_TRUE(r.prime) << word_string(word);
    EXPECT_TRUE(r.cone.has_value()) << word_string(word);
  }
}

TEST(MinimalMonomial, FflvSequenceFlag3) {
  // The sequence is (α_12, α_1, α_2).
  auto ms = fflv_minimal_monomials(3);
  EXPECT_EQ(ms[1], (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(ms[2], (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(ms[4], (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(ms[5], (std::vector<int>{1, 0, 0}));
}
