#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "kfk/braid.hpp"

using namespace kfk;

namespace {

// Permutation of the braid word sigma_{b-1} ... sigma_0 delta^t, with
// delta = sigma_{n-2} ... sigma_0, by tracking a strand through each
// crossing read left to right.
std::vector<std::int64_t> permutation_by_crossings(std::int64_t n, std::int64_t b, std::int64_t t) {
  std::vector<std::int64_t> crossings;
  for (std::int64_t i = b - 1; i >= 0; --i) crossings.push_back(i);
  for (std::int64_t k = 0; k < t; ++k)
    for (std::int64_t i = n - 2; i >= 0; --i) crossings.push_back(i);
  std::vector<std::int64_t> images(static_cast<std::size_t>(n));
  for (std::int64_t a = 0; a < n; ++a) {
    std::int64_t pos = a;
    for (auto i : crossings) {
      if (pos == i) {
        pos = i + 1;
      } else if (pos == i + 1) {
        pos = i;
      }
    }
    images[static_cast<std::size_t>(a)] = pos;
  }
  return images;
}

}  // namespace

TEST(Braid, ParamsValidation) {
  EXPECT_THROW(BraidParams(1, 1, 0), Error);
  EXPECT_THROW(BraidParams(5, 0, 0), Error);
  EXPECT_THROW(BraidParams(5, 5, 0), Error);
  EXPECT_EQ(BraidParams(7, 2, 11).t(), 4);
  EXPECT_EQ(BraidParams(7, 2, -3).t(), 4);
}

TEST(Braid, PermutationExamples) {
  EXPECT_EQ(permutation({7, 2, 4}).images, (std::vector<std::int64_t>{5, 6, 4, 0, 1, 2, 3}));
  EXPECT_EQ(permutation({2, 1, 1}).images, (std::vector<std::int64_t>{0, 1}));
  EXPECT_EQ(permutation({3, 1, 1}).images, (std::vector<std::int64_t>{2, 1, 0}));
}

TEST(Braid, FintushelSternCycle) {
  const Perm pi = permutation({7, 2, 4});
  std::vector<std::int64_t> cycle{0};
  for (auto a = pi(0); a != 0; a = pi(a)) cycle.push_back(a);
  EXPECT_EQ(cycle, (std::vector<std::int64_t>{0, 5, 2, 4, 1, 6, 3}));
}

TEST(Braid, PermutationMatchesCrossingComposition) {
  for (std::int64_t n = 2; n <= 12; ++n)
    for (std::int64_t b = 1; b < n; ++b)
      for (std::int64_t t = 0; t < n; ++t) {
        const Perm pi = permutation({n, b, t});
        ASSERT_TRUE(pi.is_bijection());
        ASSERT_EQ(pi.images, permutation_by_crossings(n, b, t)) << n << ' ' << b << ' ' << t;
      }
}

TEST(Braid, IsKnot) {
  EXPECT_TRUE(is_knot({7, 2, 4}));
  EXPECT_FALSE(is_knot({2, 1, 1}));
  EXPECT_FALSE(is_knot({3, 1, 1}));
  EXPECT_TRUE(is_knot({3, 2, 1}));
}

TEST(Braid, StrandWord) {
  EXPECT_EQ(strand_word({7, 2, 4}).str(), "xyxxyx");
  EXPECT_EQ(strand_word({3, 2, 1}).str(), "yy");
  for (std::int64_t n = 2; n <= 12; ++n)
    for (std::int64_t t = 0; t < n; ++t) {
      BraidParams params(n, n - 1, t);
      if (!is_knot(params)) continue;
      EXPECT_EQ(strand_word(params).str(), std::string(static_cast<std::size_t>(n - 1), 'y'));
    }
  try {
    strand_word({3, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAKnot);
  }
}

TEST(Braid, Figure1Relator) {
  EXPECT_EQ(relator({7, 2, 4}).str(), "yxyxxyxxYXYXXYXX");
  EXPECT_THROW(relator({2, 1, 1}), Error);
}

TEST(Braid, OrbitCharacterizesKnots) {
  for (std::int64_t n = 2; n <= 12; ++n)
    for (std::int64_t b = 1; b < n; ++b)
      for (std::int64_t t = 0; t < n; ++t) {
        const BraidParams params(n, b, t);
        const Perm pi = permutation(params);
        std::set<std::int64_t> orbit;
        std::int64_t a = b;
        for (std::int64_t j = 1; j < n; ++j) orbit.insert(a = pi(a));
        std::set<std::int64_t> expected;
        for (std::int64_t k = 0; k < n; ++k)
          if (k != b) expected.insert(k);
        ASSERT_EQ(orbit == expected, is_knot(params)) << params;
      }
}

TEST(Braid, RelatorInvariants) {
  const auto braids = knotted_braids(12);
  ASSERT_FALSE(braids.empty());
  for (const auto& params : braids) {
    const Word r = relator(params);
    ASSERT_EQ(r.size(), static_cast<std::size_t>(2 * params.n() + 2));
    ASSERT_TRUE(r.is_cyclically_reduced()) << params << ' ' << r;
    ASSERT_EQ(r.x_sum(), 0);
    ASSERT_EQ(r.y_sum(), 0);
  }
}

TEST(Braid, KnottedBraidsAreOrdered) {
  const auto braids = knotted_braids(8);
  EXPECT_TRUE(std::is_sorted(braids.begin(), braids.end()));
  for (const auto& params : braids) EXPECT_TRUE(is_knot(params));
}
