#include <gtest/gtest.h>

#include "clforms/bigint.hpp"
#include "clforms/error.hpp"
#include "clforms/spreads.hpp"

using namespace clforms;

namespace {

const std::vector<std::array<unsigned, 3>> kParams = {{2, 2, 2}, {2, 2, 3}, {3, 2, 2}, {2, 1, 3}, {2, 3, 3}, {4, 2, 2}};

}  // namespace

TEST(Spread, BaseSpreadInvariants) {
  for (auto [q, n, l] : kParams) {
    const auto sp = SpaceParams::make(q, n, l);
    AttenuatedSpace space(sp);
    const auto s = spread(sp);
    EXPECT_EQ(s.members.size(), to_u64(ipow(std::uint64_t{q}, l), "q^l"));
    EXPECT_TRUE(std::is_sorted(s.members.begin(), s.members.end()));
    EXPECT_EQ(s.members.front(), 0u);  // A_0
    EXPECT_TRUE(check_spread(space, s)) << q << n << l;
    for (std::size_t i = 0; i < s.members.size(); ++i)
      for (std::size_t j = i + 1; j < s.members.size(); ++j) EXPECT_TRUE(space.disjoint(s.members[i], s.members[j]));
    const auto covered = covered_points(space, s.members);
    ASSERT_EQ(covered.size(), space.point_count());
    for (std::uint32_t p = 0; p < covered.size(); ++p) EXPECT_EQ(covered[p], p);
  }
}

TEST(Spread, TransformsPreserveInvariants) {
  for (auto [q, n, l] : kParams) {
    const auto sp = SpaceParams::make(q, n, l);
    AttenuatedSpace space(sp);
    const auto base = spread(sp);
    EXPECT_EQ(transformed_spread(sp, base, 0).members, base.members);
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      const auto t = transformed_spread(sp, base, seed);
      EXPECT_TRUE(check_spread(space, t)) << seed;
      EXPECT_EQ(spread(sp, seed).members, t.members);
      EXPECT_EQ(transformed_spread(sp, base, seed).members, t.members);
    }
  }
}

TEST(Spread, TransformIsAnAutomorphism) {
  const auto sp = SpaceParams::make(3, 2, 2);
  AttenuatedSpace space(sp);
  const auto id = SpaceTransform::identity(sp);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto t = SpaceTransform::random(sp, seed);
    std::vector<bool> hit(space.vertex_count(), false);
    for (std::uint64_t v = 0; v < space.vertex_count(); ++v) {
      EXPECT_EQ(id.apply(sp, v), v);
      hit[t.apply(sp, v)] = true;
    }
    EXPECT_EQ(std::count(hit.begin(), hit.end(), true), 81);
    for (std::uint64_t a = 0; a < 81; a += 5)
      for (std::uint64_t b = 0; b < 81; b += 3)
        EXPECT_EQ(space.distance(t.apply(sp, a), t.apply(sp, b)), space.distance(a, b));
  }
}

TEST(Spread, SwitchingPairsCoverTheSamePoints) {
  const auto sp = SpaceParams::make(2, 2, 2);
  AttenuatedSpace space(sp);
  const auto s1 = spread(sp);
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto s2 = spread(sp, seed);
    std::vector<std::uint64_t> only1, only2;
    std::set_difference(s1.members.begin(), s1.members.end(), s2.members.begin(), s2.members.end(),
                        std::back_inserter(only1));
    std::set_difference(s2.members.begin(), s2.members.end(), s1.members.begin(), s1.members.end(),
                        std::back_inserter(only2));
    EXPECT_EQ(covered_points(space, only1), covered_points(space, only2));
  }
}

TEST(Spread, CheckRejectsNonSpreads) {
  const auto sp = SpaceParams::make(2, 2, 2);
  AttenuatedSpace space(sp);
  auto s = spread(sp);
  s.members.back() = s.members.front() + 1;
  std::sort(s.members.begin(), s.members.end());
  EXPECT_FALSE(check_spread(space, s));
  s.members.pop_back();
  EXPECT_FALSE(check_spread(space, s));
}

TEST(SigmaSpread, ContainsBothAndPartitionsSigma) {
  for (auto [q, l] : std::vector<std::pair<unsigned, unsigned>>{{2, 4}, {3, 4}, {2, 5}}) {
    const auto sp = SpaceParams::make(q, 2, l);
    AttenuatedSpace space(sp);
    const std::uint64_t pi = 0;
    std::uint64_t pi_prime = 1;
    while (!space.disjoint(pi, pi_prime)) ++pi_prime;
    const auto s = sigma_spread(space, pi, pi_prime);
    EXPECT_EQ(s.size(), std::size_t{q} * q);
    EXPECT_TRUE(std::find(s.begin(), s.end(), pi) != s.end());
    EXPECT_TRUE(std::find(s.begin(), s.end(), pi_prime) != s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) EXPECT_TRUE(space.disjoint(s[i], s[j]));
    // Every member lies inside Sigma = pi + pi'.
    const auto sigma = span_sum(vertex_subspace(sp, space.vertex(pi)), vertex_subspace(sp, space.vertex(pi_prime)));
    for (auto v : s) EXPECT_TRUE(contains(sigma, vertex_subspace(sp, space.vertex(v))));
    EXPECT_THROW(sigma_spread(space, pi, pi), Error);
  }
}
