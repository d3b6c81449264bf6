#include <gtest/gtest.h>

#include <random>

#include "clforms/error.hpp"
#include "clforms/fqlinalg.hpp"

using namespace clforms;

namespace {

FqMatrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  FqMatrix m(f, r, c);
  for (auto& e : m.entries()) e = static_cast<Elem>(rng() % f->order());
  return m;
}

// Every vector of F_q^len by brute force.
std::vector<std::vector<Elem>> all_vectors(unsigned q, std::size_t len) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> v(len, 0);
  for (;;) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < len && ++v[i] == q) v[i++] = 0;
    if (i == len) return out;
  }
}

}  // namespace

TEST(Rref, SmallCases) {
  auto f = field_new(2);
  auto z = rref(FqMatrix(f, 2, 2));
  EXPECT_EQ(z.rank, 0u);
  EXPECT_TRUE(z.form.is_zero());

  auto id = FqMatrix::identity(f, 3);
  auto r = rref(id);
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.form, id);

  auto ones = rref(FqMatrix::from_rows(f, {{1, 1}, {1, 1}}));
  EXPECT_EQ(ones.rank, 1u);
  EXPECT_EQ(ones.form, FqMatrix::from_rows(f, {{1, 1}, {0, 0}}));
}

TEST(Rref, IdempotentAndInputUnchanged) {
  std::mt19937_64 rng(7);
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    auto f = field_new(q);
    for (int t = 0; t < 200; ++t) {
      auto m = random_matrix(f, 1 + rng() % 5, 1 + rng() % 6, rng);
      const auto copy = m;
      auto r = rref(m);
      EXPECT_EQ(m, copy);
      EXPECT_EQ(rref(r.form).form, r.form);
      EXPECT_EQ(rank(m), r.rank);
      EXPECT_EQ(rank(transpose(m)), r.rank);
    }
  }
}

TEST(Kernel, Examples) {
  auto f = field_new(2);
  EXPECT_EQ(kernel(FqMatrix::identity(f, 4)).dim(), 0u);
  EXPECT_EQ(kernel(FqMatrix(f, 2, 3)).dim(), 3u);
  auto k = kernel(FqMatrix::from_rows(f, {{1, 1, 0}, {0, 1, 1}}));
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_EQ(k, Subspace::from_rows(FqMatrix::from_rows(f, {{1, 1, 1}})));
}

TEST(Kernel, RankNullityExhaustive) {
  for (unsigned q : {2u, 3u}) {
    auto f = field_new(q);
    for (std::size_t rows : {2u}) {
      for (std::size_t cols : {2u, 3u}) {
        for (const auto& entries : all_vectors(q, rows * cols)) {
          FqMatrix m(f, rows, cols, entries);
          const auto k = kernel(m);
          EXPECT_EQ(rank(m) + k.dim(), cols);
          for (std::size_t i = 0; i < k.dim(); ++i) {
            auto v = clforms::apply(m, k.basis().row(i));
            for (auto e : v) EXPECT_EQ(e, 0);
          }
        }
      }
    }
  }
}

TEST(Kernel, MatchesBruteForceCount) {
  std::mt19937_64 rng(11);
  auto f = field_new(3);
  for (int t = 0; t < 50; ++t) {
    auto m = random_matrix(f, 2, 4, rng);
    const auto k = kernel(m);
    std::size_t zeros = 0;
    for (const auto& v : all_vectors(3, 4)) {
      auto image = clforms::apply(m, v);
      bool zero = std::all_of(image.begin(), image.end(), [](Elem e) { return e == 0; });
      zeros += zero;
      EXPECT_EQ(zero, k.contains_vector(v));
    }
    std::size_t expected = 1;
    for (std::size_t i = 0; i < k.dim(); ++i) expected *= 3;
    EXPECT_EQ(zeros, expected);
  }
}

TEST(SubspaceOps, Examples) {
  auto f = field_new(2);
  auto a = Subspace::from_rows(FqMatrix::from_rows(f, {{1, 0, 0}, {0, 1, 0}}));
  auto b = Subspace::from_rows(FqMatrix::from_rows(f, {{0, 1, 0}, {0, 0, 1}}));
  auto ops = subspace_ops(a, b);
  EXPECT_EQ(ops.intersection, Subspace::from_rows(FqMatrix::from_rows(f, {{0, 1, 0}})));
  EXPECT_EQ(ops.sum, Subspace::full(f, 3));
  EXPECT_FALSE(ops.contains);

  auto self = subspace_ops(a, a);
  EXPECT_EQ(self.sum, a);
  EXPECT_EQ(self.intersection, a);
  EXPECT_TRUE(self.contains);

  auto l1 = Subspace::from_rows(FqMatrix::from_rows(f, {{1, 0}}));
  auto l2 = Subspace::from_rows(FqMatrix::from_rows(f, {{1, 1}}));
  auto ll = subspace_ops(l1, l2);
  EXPECT_EQ(ll.sum, Subspace::full(f, 2));
  EXPECT_EQ(ll.intersection.dim(), 0u);

  EXPECT_THROW(subspace_ops(a, l1), Error);
}

TEST(SubspaceOps, ModularLaw) {
  std::mt19937_64 rng(3);
  for (unsigned q : {2u, 3u, 4u}) {
    auto f = field_new(q);
    for (int t = 0; t < 1000; ++t) {
      const std::size_t n = 2 + rng() % 5;
      auto a = Subspace::from_rows(random_matrix(f, rng() % (n + 1), n, rng));
      auto b = Subspace::from_rows(random_matrix(f, rng() % (n + 1), n, rng));
      auto ops = subspace_ops(a, b);
      EXPECT_EQ(ops.sum.dim() + ops.intersection.dim(), a.dim() + b.dim());
      EXPECT_EQ(intersection_dim(a, b), ops.intersection.dim());
      EXPECT_TRUE(contains(ops.sum, a));
      EXPECT_TRUE(contains(a, ops.intersection));
      EXPECT_TRUE(contains(b, ops.intersection));
    }
  }
}

TEST(Subspace, CanonicalForm) {
  auto f = field_new(3);
  auto a = Subspace::from_rows(FqMatrix::from_rows(f, {{1, 2, 0}, {0, 1, 1}}));
  auto b = Subspace::from_rows(FqMatrix::from_rows(f, {{1, 0, 1}, {2, 2, 1}, {1, 0, 1}}));
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_EQ(a, b);
  EXPECT_EQ(Subspace::from_columns(transpose(a.basis())), a);
  EXPECT_EQ(annihilator(annihilator(a)), a);
}

TEST(RankDistance, Examples) {
  auto f = field_new(2);
  auto a = FqMatrix::from_rows(f, {{1, 1}, {0, 1}});
  EXPECT_EQ(rank_distance(a, a), 0u);
  EXPECT_EQ(rank_distance(a + FqMatrix::identity(f, 2), a), 2u);
  auto b = a + FqMatrix::from_rows(f, {{1, 0}, {1, 0}});
  EXPECT_EQ(rank_distance(a, b), 1u);
  EXPECT_EQ(rank_distance(b, a), 1u);
  EXPECT_THROW(rank_distance(a, FqMatrix(f, 2, 3)), Error);
}

TEST(EnumerateSubspaces, CountsMatchGaussianBinomials) {
  // [4 choose 2]_2 = 35, [3 choose 1]_3 = 13.
  EXPECT_EQ(enumerate_subspaces(field_new(2), 4, 2, 1000).size(), 35u);
  EXPECT_EQ(enumerate_subspaces(field_new(3), 3, 1, 1000).size(), 13u);
  EXPECT_EQ(count_subspaces(4, 2, 2), 35u);
  EXPECT_THROW(enumerate_subspaces(field_new(2), 6, 3, 10), Error);
}
