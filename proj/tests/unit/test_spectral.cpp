#include <gtest/gtest.h>

#include <random>

#include "clforms/clsets.hpp"
#include "clforms/counting.hpp"
#include "clforms/error.hpp"
#include "clforms/spectral.hpp"

using namespace clforms;

namespace {

void expect_sums(const ExactMatrix& m, long row_sum, long col_sum) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt s = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c);
    EXPECT_EQ(s, row_sum);
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    BigInt s = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) s += m(r, c);
    EXPECT_EQ(s, col_sum);
  }
}

}  // namespace

TEST(Incidence, ShapesAndSums) {
  {
    AttenuatedSpace space(SpaceParams::make(2, 2, 2));
    const auto m = build_incidence(space);
    ASSERT_EQ(m.rows(), 12u);
    ASSERT_EQ(m.cols(), 16u);
    expect_sums(m, 4, 3);
  }
  {
    AttenuatedSpace space(SpaceParams::make(3, 2, 2));
    const auto m = build_incidence(space);
    ASSERT_EQ(m.rows(), 36u);
    ASSERT_EQ(m.cols(), 81u);
    expect_sums(m, 9, 4);
  }
  {
    // n = l = 1 over F_2: points (1, v) for v in F_2, vertex a holds (1, a).
    AttenuatedSpace space(SpaceParams::make(2, 1, 1));
    const auto m = build_incidence(space);
    ASSERT_EQ(m.rows(), 2u);
    ASSERT_EQ(m.cols(), 2u);
    EXPECT_EQ(m, ExactMatrix::identity(2));
  }
}

TEST(Gram, IdentityHolds) {
  for (auto [q, n, l] : std::vector<std::array<unsigned, 3>>{{2, 2, 2}, {2, 2, 3}, {3, 2, 2}, {2, 1, 3}, {2, 3, 3}}) {
    AttenuatedSpace space(SpaceParams::make(q, n, l));
    EXPECT_TRUE(gram_check(space)) << q << n << l;
  }
  AttenuatedSpace space(SpaceParams::make(2, 2, 2));
  const auto m = build_incidence(space);
  const auto gram = m * transpose(m);
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      if (i == j) EXPECT_EQ(gram(i, j), 4);
      else EXPECT_TRUE(gram(i, j) == 0 || gram(i, j) == 1);
    }
}

TEST(Kernel, IncidenceKernelDimension) {
  AttenuatedSpace space(SpaceParams::make(2, 2, 2));
  Spectral s(space);
  EXPECT_EQ(kernel_basis(s.incidence()).size(), 6u);
  EXPECT_EQ(s.image().kernel().size(), 6u);
}

TEST(Image, MembershipExamples) {
  AttenuatedSpace space(SpaceParams::make(2, 2, 2));
  Spectral s(space);
  const auto& sp = space.params();
  EXPECT_TRUE(s.in_image(characteristic_vector(VertexSet::full(sp))));
  for (std::uint64_t p = 0; p < space.point_count(); ++p) EXPECT_TRUE(s.in_image(characteristic_vector(space.pencil(p))));
  for (std::uint64_t v = 0; v < space.vertex_count(); ++v) {
    VertexSet single(sp);
    single.insert(v);
    EXPECT_FALSE(s.in_image(characteristic_vector(single)));
  }
  std::vector<Rational> wrong(3);
  EXPECT_THROW(s.in_image(wrong), Error);
}

TEST(Image, DimensionIsRankFormula) {
  for (auto [q, n, l] : std::vector<std::array<unsigned, 3>>{{2, 2, 2}, {2, 2, 3}, {3, 2, 2}, {2, 1, 2}, {3, 1, 2}}) {
    const auto sp = SpaceParams::make(q, n, l);
    AttenuatedSpace space(sp);
    Spectral s(space);
    const auto rank = exact_rank(s.incidence());
    EXPECT_EQ(BigInt(rank), spectra(sp).rank_m) << q << n << l;
    EXPECT_EQ(rank + s.image().kernel().size(), space.vertex_count());
  }
}

TEST(EigenV1, Examples) {
  AttenuatedSpace space(SpaceParams::make(2, 2, 2));
  Spectral s(space);
  EXPECT_EQ(s.lambda1(), -2);
  std::vector<Rational> zero(16);
  EXPECT_EQ(s.eigen_membership_v1(zero), Membership::ZeroVector);
  EXPECT_EQ(s.eigen_membership_v1(centered_vector(space.pencil(0))), Membership::Member);

  std::mt19937_64 rng(21);
  VerdictEngine engine(space);
  int rejected = 0;
  for (int t = 0; t < 200; ++t) {
    VertexSet l(space.params());
    for (std::uint64_t v = 0; v < 16; ++v)
      if (rng() & 1) l.insert(v);
    const bool cl = !engine.disjoint_count_violation(l) && l.size() % 4 == 0;
    const auto m = s.eigen_membership_v1(centered_vector(l));
    if (!cl) {
      EXPECT_EQ(m, Membership::NonMember);
      ++rejected;
    }
  }
  EXPECT_GT(rejected, 150);
}

TEST(KernelVector, EveryVertex) {
  for (auto [q, n, l] : std::vector<std::array<unsigned, 3>>{{2, 2, 2}, {3, 2, 2}, {2, 1, 3}}) {
    AttenuatedSpace space(SpaceParams::make(q, n, l));
    Spectral s(space);
    for (std::uint64_t w = 0; w < space.vertex_count(); ++w) EXPECT_TRUE(s.verify_kernel_vector(w));
  }
  AttenuatedSpace space(SpaceParams::make(2, 2, 3));
  Spectral s(space);
  for (std::uint64_t w = 0; w < space.vertex_count(); w += 7) EXPECT_TRUE(s.verify_kernel_vector(w));
}

TEST(Report, KneserSpectrum) {
  for (auto [q, n, l] : std::vector<std::array<unsigned, 3>>{{2, 2, 2}, {3, 2, 2}, {2, 1, 2}}) {
    AttenuatedSpace space(SpaceParams::make(q, n, l));
    const auto r = Spectral(space).report();
    EXPECT_TRUE(r.all_ok()) << q << n << l;
    std::size_t total = 0;
    for (const auto& e : r.kneser) total += e.nullity;
    EXPECT_EQ(total, space.vertex_count());
  }
  AttenuatedSpace space(SpaceParams::make(2, 2, 2));
  const auto r = Spectral(space).report();
  std::map<BigInt, std::size_t> k;
  for (const auto& e : r.kneser) k[e.value] = e.nullity;
  EXPECT_EQ(k, (std::map<BigInt, std::size_t>{{6, 1}, {-2, 9}, {2, 6}}));
}

TEST(Report, NullityAt) {
  const auto m = ExactMatrix::from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 5}});
  EXPECT_EQ(nullity_at(m, 2), 2u);
  EXPECT_EQ(nullity_at(m, 5), 1u);
  EXPECT_EQ(nullity_at(m, 1), 0u);
}

TEST(PointGraph, CompleteMultipartite) {
  AttenuatedSpace space(SpaceParams::make(2, 2, 2));
  const auto a = build_point_graph(space);
  // Parts are the 3 classes of u; each has q^l = 4 points.
  const auto& pts = space.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) EXPECT_EQ(a(i, j) == 1, pts[i].u != pts[j].u);
}
