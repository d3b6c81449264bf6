#include <gtest/gtest.h>

#include "clforms/counting.hpp"
#include "clforms/error.hpp"
#include "clforms/search.hpp"

using namespace clforms;

namespace {

SearchReport run(const VerdictEngine& engine, SearchMethod m, std::optional<std::int64_t> x, unsigned threads = 1) {
  SearchOptions o;
  o.method = m;
  o.x = x;
  o.threads = threads;
  return exhaustive(engine, o);
}

}  // namespace

TEST(Exhaustive, ExtremeParameters) {
  const auto sp = SpaceParams::make(2, 2, 2);
  AttenuatedSpace space(sp);
  VerdictEngine engine(space);
  auto r = run(engine, SearchMethod::KernelConstrained, 0);
  ASSERT_EQ(r.sets.size(), 1u);
  EXPECT_TRUE(r.sets[0].empty());
  r = run(engine, SearchMethod::KernelConstrained, 4);
  ASSERT_EQ(r.sets.size(), 1u);
  EXPECT_EQ(r.sets[0], VertexSet::full(sp));
  EXPECT_EQ(r.reverify_failures, 0u);
}

TEST(Exhaustive, ParameterOneHasPencilsAndHyperplanes) {
  const auto sp = SpaceParams::make(2, 2, 2);
  AttenuatedSpace space(sp);
  VerdictEngine engine(space);
  const auto r = run(engine, SearchMethod::KernelConstrained, 1);
  auto has = [&](const VertexSet& s) { return std::find(r.sets.begin(), r.sets.end(), s) != r.sets.end(); };
  for (std::uint64_t p = 0; p < space.point_count(); ++p) EXPECT_TRUE(has(space.pencil(p)));
  for (const auto& h : enumerate_typed_hyperplanes(sp)) EXPECT_TRUE(has(hyperplane_set(sp, h)));
  EXPECT_TRUE(std::is_sorted(r.sets.begin(), r.sets.end(), canonical_less));
  for (const auto& s : r.sets) EXPECT_EQ(s.size(), 4u);
}

TEST(Exhaustive, MethodsAgree) {
  const auto sp = SpaceParams::make(2, 2, 2);
  AttenuatedSpace space(sp);
  VerdictEngine engine(space);
  const auto a = run(engine, SearchMethod::FullPowerSet, std::nullopt);
  const auto b = run(engine, SearchMethod::KernelConstrained, std::nullopt);
  EXPECT_EQ(a.sets, b.sets);
  EXPECT_EQ(a.by_parameter, b.by_parameter);
  for (std::int64_t x = 0; x <= 4; ++x) {
    const auto c = run(engine, SearchMethod::FixedXSubsets, x);
    const auto d = run(engine, SearchMethod::KernelConstrained, x);
    EXPECT_EQ(c.sets, d.sets) << x;
    EXPECT_EQ(c.sets.size(), a.by_parameter.at(x));
  }
  EXPECT_THROW(run(engine, SearchMethod::FixedXSubsets, std::nullopt), Error);
}

TEST(Exhaustive, ComplementSymmetricCounts) {
  const auto sp = SpaceParams::make(2, 2, 2);
  AttenuatedSpace space(sp);
  VerdictEngine engine(space);
  const auto r = run(engine, SearchMethod::KernelConstrained, std::nullopt);
  for (const auto& [x, count] : r.by_parameter) EXPECT_EQ(count, r.by_parameter.at(4 - x));
  for (const auto& s : r.sets) EXPECT_TRUE(std::binary_search(r.sets.begin(), r.sets.end(), s.complement(), canonical_less));
}

TEST(Exhaustive, ThreadCountDoesNotChangeTheResult) {
  const auto sp = SpaceParams::make(2, 2, 2);
  AttenuatedSpace space(sp);
  VerdictEngine engine(space);
  const auto one = run(engine, SearchMethod::KernelConstrained, std::nullopt, 1);
  const auto four = run(engine, SearchMethod::KernelConstrained, std::nullopt, 4);
  EXPECT_EQ(one.sets, four.sets);
  EXPECT_EQ(one.by_parameter, four.by_parameter);
}

TEST(Exhaustive, CapsAreReported) {
  const auto sp = SpaceParams::make(2, 2, 3);
  AttenuatedSpace space(sp);
  VerdictEngine engine(space);
  try {
    run(engine, SearchMethod::FullPowerSet, std::nullopt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
  SearchOptions o;
  o.method = SearchMethod::FixedXSubsets;
  o.x = 2;
  o.node_cap = 1000;
  EXPECT_THROW(exhaustive(engine, o), Error);
  EXPECT_EQ(parse_search_method("fixed_x_subsets"), SearchMethod::FixedXSubsets);
  EXPECT_THROW(parse_search_method("bogus"), Error);
}

TEST(MaxDisjoint, Examples) {
  const auto sp = SpaceParams::make(2, 2, 2);
  AttenuatedSpace space(sp);
  EXPECT_EQ(max_disjoint_in(space, space.pencil(3)), 1u);
  EXPECT_EQ(max_disjoint_in(space, VertexSet(sp, spread(sp).members)), 4u);
  EXPECT_EQ(max_disjoint_in(space, VertexSet::full(sp)), 4u);
  EXPECT_EQ(max_disjoint_in(space, VertexSet(sp)), 0u);
}

TEST(Ekr, MatchesPencilSize) {
  for (auto [q, n, l] : std::vector<std::array<unsigned, 3>>{{2, 2, 2}, {2, 2, 3}, {3, 2, 2}, {2, 1, 3}}) {
    const auto sp = SpaceParams::make(q, n, l);
    AttenuatedSpace space(sp);
    const auto expected = to_u64(ipow(std::uint64_t{q}, std::uint64_t{n - 1} * l), "pencil");
    EXPECT_EQ(ekr_check(space), expected) << q << n << l;
    const auto fam = max_intersecting_family(space);
    ASSERT_EQ(fam.size(), expected);
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = i + 1; j < fam.size(); ++j) EXPECT_FALSE(space.disjoint(fam[i], fam[j]));
  }
  EXPECT_THROW(ekr_check(AttenuatedSpace(SpaceParams::make(2, 3, 3))), Error);
}

TEST(DefinitionCensus, AllDefinitionsAgree) {
  for (auto [q, n, l] : std::vector<std::array<unsigned, 3>>{{2, 2, 2}, {2, 1, 2}, {3, 1, 2}, {2, 1, 3}}) {
    const auto sp = SpaceParams::make(q, n, l);
    AttenuatedSpace space(sp);
    VerdictEngine engine(space);
    const auto c = definition_census(engine);
    EXPECT_TRUE(c.ok()) << q << n << l;
    EXPECT_EQ(c.pass_kernel, c.pass_disjoint);
    EXPECT_EQ(c.pass_eigen, c.pass_disjoint);
    EXPECT_EQ(c.cl_masks.size(), c.pass_disjoint);
    EXPECT_GE(c.spreads_checked, 9u);
  }
  AttenuatedSpace space(SpaceParams::make(2, 2, 2));
  VerdictEngine engine(space);
  const auto one = definition_census(engine, 1);
  const auto four = definition_census(engine, 4);
  EXPECT_EQ(one.cl_masks, four.cl_masks);
  EXPECT_EQ(one.subsets, 65536u);
  EXPECT_EQ(one.cl_masks.size(), 140u);
}
