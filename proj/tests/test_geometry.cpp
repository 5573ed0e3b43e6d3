#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "fqdist/error.hpp"
#include "fqdist/geometry.hpp"

using namespace fqdist;

namespace {

VecFq vec(std::initializer_list<std::uint32_t> c) {
  VecFq v;
  for (std::uint32_t x : c) v.push_back({x});
  return v;
}

// Integer-arithmetic count of {x in Z_p^n : sum_{i<n-1} x_i^2 - sign x_{n-1}^2 = 0 mod p}.
std::uint64_t count_quadric(int p, int n, bool cone) {
  std::uint64_t count = 0;
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  for (;;) {
    long s = 0;
    for (int i = 0; i < n; ++i) s += static_cast<long>(x[i]) * x[i] * (cone && i == n - 1 ? -1 : 1);
    if (((s % p) + p) % p == 0) ++count;
    int k = n - 1;
    while (k >= 0 && ++x[k] == p) x[k--] = 0;
    if (k < 0) return count;
  }
}

}  // namespace

TEST(Norm, Examples) {
  const FieldPtr f3 = FieldCtx::make(3, 1);
  EXPECT_EQ(norm(*f3, vec({1, 0})), FqElem{1});
  EXPECT_EQ(norm(*f3, vec({1, 2})), FqElem{2});
  const FieldPtr f5 = FieldCtx::make(5, 1);
  EXPECT_EQ(norm(*f5, vec({2, 2, 1})), FqElem{4});
}

TEST(ConeNorm, Examples) {
  const FieldPtr f3 = FieldCtx::make(3, 1);
  EXPECT_EQ(cone_norm(*f3, vec({1, 1})), FqElem{0});
  EXPECT_EQ(cone_norm(*f3, vec({1, 0})), FqElem{1});
  const FieldPtr f5 = FieldCtx::make(5, 1);
  EXPECT_EQ(cone_norm(*f5, vec({3, 4, 0})), FqElem{0});
  EXPECT_THROW(cone_norm(*f5, vec({3})), Error);
}

TEST(Encoding, LexicographicRoundTrip) {
  const FieldPtr f = FieldCtx::make(3, 2);
  std::uint64_t expected = 0;
  VecFq previous;
  for_each_vector(*f, 3, [&](std::uint64_t idx, std::span<const FqElem> v) {
    EXPECT_EQ(idx, expected++);
    const VecFq current(v.begin(), v.end());
    EXPECT_EQ(encode_vector(*f, current), idx);
    EXPECT_EQ(decode_vector(*f, 3, idx), current);
    if (!previous.empty()) EXPECT_LT(previous, current);
    previous = current;
  });
  EXPECT_EQ(expected, 729u);
}

TEST(SpaceSize, Caps) {
  const FieldPtr f = FieldCtx::make(3, 1);
  EXPECT_EQ(space_size(*f, 4), 81u);
  EXPECT_THROW(space_size(*f, 0), Error);
  EXPECT_THROW(space_size(*f, 15), Error);  // 3^15 > 10^7
  EXPECT_THROW(enumerate_sphere_zero(FieldCtx::make(101, 1), 4), Error);
}

TEST(PointSet, CanonicalOrder) {
  const FieldPtr f = FieldCtx::make(5, 1);
  const PointSet a(f, 2, std::vector<std::uint64_t>{7, 3, 7, 24, 0});
  EXPECT_EQ(a.size(), 4u);
  EXPECT_EQ(std::vector<std::uint64_t>(a.indices().begin(), a.indices().end()),
            (std::vector<std::uint64_t>{0, 3, 7, 24}));
  EXPECT_TRUE(a.contains(24));
  EXPECT_FALSE(a.contains(5));
  EXPECT_EQ(a.point(1), vec({0, 3}));
  const PointSet b(f, 2, std::vector<VecFq>{vec({4, 4}), vec({0, 0}), vec({1, 2}), vec({0, 3})});
  EXPECT_EQ(a, b);
  EXPECT_THROW(PointSet(f, 2, std::vector<std::uint64_t>{25}), Error);
  EXPECT_THROW(PointSet(f, 2, std::vector<VecFq>{vec({1, 2, 3})}), Error);
}

TEST(SphereZero, Examples) {
  EXPECT_EQ(enumerate_sphere_zero(FieldCtx::make(3, 1), 2).size(), 1u);
  EXPECT_EQ(enumerate_sphere_zero(FieldCtx::make(5, 1), 2).size(), 9u);
  EXPECT_EQ(enumerate_sphere_zero(FieldCtx::make(3, 1), 3).size(), 9u);
}

TEST(SphereZero, MatchesIntegerCount) {
  for (int p : {3, 5, 7, 11}) {
    for (int d = 1; d <= 4; ++d) {
      if (std::pow(p, d) > 20000) continue;
      const PointSet s0 = enumerate_sphere_zero(FieldCtx::make(p, 1), d);
      EXPECT_EQ(s0.size(), count_quadric(p, d, false)) << p << " " << d;
      EXPECT_TRUE(s0.contains(0));
    }
  }
}

TEST(Cone, Examples) {
  const FieldPtr f3 = FieldCtx::make(3, 1);
  EXPECT_EQ(enumerate_cone(f3, 2).size(), 5u);
  EXPECT_EQ(enumerate_cone(f3, 3).size(), count_quadric(3, 3, true));
  EXPECT_THROW(enumerate_cone(f3, 1), Error);
  for (int p : {3, 5, 7}) {
    for (int n = 2; n <= 4; ++n) {
      const PointSet c = enumerate_cone(FieldCtx::make(p, 1), n);
      EXPECT_TRUE(c.contains(0));
      EXPECT_EQ(c.size(), count_quadric(p, n, true));
    }
  }
}

TEST(Scaling, LevelSetsAreScalingClasses) {
  for (auto [p, ell] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    const FieldPtr f = FieldCtx::make(p, ell);
    for (int d = 1; d <= 3; ++d) {
      std::uint64_t zero = 0, plus = 0, minus = 0;
      for_each_vector(*f, d, [&](std::uint64_t idx, std::span<const FqElem> v) {
        const FqElem n = norm(*f, v);
        if (idx != 0) (n.idx == 0 ? zero : f->eta(n) == 1 ? plus : minus)++;
        for (std::uint32_t c = 1; c < f->q(); ++c) {
          VecFq w(v.begin(), v.end());
          for (FqElem& x : w) x = f->mul({c}, x);
          ASSERT_EQ(norm(*f, w), f->mul(f->sq({c}), n));
        }
      });
      EXPECT_EQ(zero % (f->q() - 1), 0u);
      EXPECT_EQ(plus % (f->q() - 1), 0u);
      EXPECT_EQ(minus % (f->q() - 1), 0u);
    }
  }
}

TEST(DistanceSet, Examples) {
  const FieldPtr f3 = FieldCtx::make(3, 1);
  const PointSet two(f3, 2, std::vector<VecFq>{vec({0, 0}), vec({1, 0})});
  EXPECT_EQ(distance_set(two), (std::vector<FqElem>{{0}, {1}}));
  const PointSet one(f3, 2, std::vector<VecFq>{vec({2, 1})});
  EXPECT_EQ(distance_set(one), (std::vector<FqElem>{{0}}));
  const PointSet all(f3, 2, std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5, 6, 7, 8});
  EXPECT_EQ(distance_set(all), (std::vector<FqElem>{{0}, {1}, {2}}));
  EXPECT_THROW(distance_set(PointSet(f3, 2, std::vector<std::uint64_t>{})), Error);
}

TEST(DistanceSet, BruteForceAndTranslationInvariance) {
  const FieldPtr f = FieldCtx::make(7, 1);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::vector<std::uint64_t> idx;
    for (std::uint64_t k = 0; k < seed % 6 + 1; ++k) idx.push_back((seed * 37 + k * k * 11) % 343);
    const PointSet a(f, 3, idx);
    std::set<std::uint32_t> oracle;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        const VecFq x = a.point(i), y = a.point(j);
        int s = 0;
        for (int k = 0; k < 3; ++k) s += (static_cast<int>(x[k].idx) - static_cast<int>(y[k].idx)) *
                                         (static_cast<int>(x[k].idx) - static_cast<int>(y[k].idx));
        oracle.insert(static_cast<std::uint32_t>(s % 7));
      }
    }
    std::vector<FqElem> expected;
    for (std::uint32_t v : oracle) expected.push_back({v});
    EXPECT_EQ(distance_set(a), expected);
    const VecFq t = vec({static_cast<std::uint32_t>(seed % 7), 3, 5});
    EXPECT_EQ(distance_set(translate(a, t)), expected);

    const VecFq x = a.point(0);
    const std::vector<FqElem> pinned = pinned_distance_set(x, a);
    for (FqElem v : pinned) EXPECT_TRUE(oracle.count(v.idx));
    EXPECT_EQ(pinned.front(), FqElem{0});
  }
}
