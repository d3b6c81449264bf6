#include <gtest/gtest.h>

#include "clforms/census.hpp"
#include "clforms/counting.hpp"
#include "clforms/error.hpp"

using namespace clforms;

namespace {

BigInt qpow(unsigned q, std::uint64_t e) { return ipow(std::uint64_t{q}, e); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST(GaussianBinomial, Examples) {
  EXPECT_EQ(gaussian_binomial(5, 0, 3), 1);
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35);
  EXPECT_EQ(gaussian_binomial(2, 1, 3), 4);
  EXPECT_EQ(gaussian_binomial(2, 3, 2), 0);
  EXPECT_EQ(census::gaussian_binomial(4, 2, 2), 35u);
  EXPECT_EQ(census::gaussian_binomial(2, 1, 3), 4u);
}

TEST(RankCount, Examples) {
  EXPECT_EQ(rank_count(2, 2, 0, 2), 1);
  EXPECT_EQ(rank_count(2, 2, 1, 2), 9);
  EXPECT_EQ(rank_count(2, 2, 2, 2), 6);
  EXPECT_EQ(code_of([] { rank_count(2, 3, 3, 2); }), ErrorCode::BadRank);
  for (unsigned q : {2u, 3u})
    for (unsigned m = 0; m <= 2; ++m) EXPECT_EQ(rank_count(2, 3, m, q), census::rank_count(2, 3, m, q));
}

TEST(CountThrough, Examples) {
  const auto sp = SpaceParams::make(2, 2, 2);
  EXPECT_EQ(count_through(2, 2, sp), 1);
  EXPECT_EQ(count_through(1, 2, sp), 4);
  EXPECT_EQ(count_through(1, 2, SpaceParams::make(3, 2, 2)), 9);
  EXPECT_EQ(census::count_through(1, 2, sp), 4u);
  EXPECT_EQ(code_of([&] { count_through(2, 1, sp); }), ErrorCode::BadIndices);
  EXPECT_EQ(code_of([&] { count_through(0, 1, sp); }), ErrorCode::BadIndices);
}

TEST(Disjointness, DeltaAndC) {
  const auto sp = SpaceParams::make(2, 2, 2);
  EXPECT_EQ(disjoint_count(sp), 6);
  EXPECT_EQ(delta(sp), 2);
  EXPECT_EQ(c_count(sp), 2);
  EXPECT_EQ(census::disjoint_count(sp), 6u);
  EXPECT_EQ(census::delta(sp), 2u);
  EXPECT_EQ(census::c_count(sp), 2u);
  EXPECT_EQ(delta(SpaceParams::make(2, 2, 3)), 6);
  EXPECT_EQ(census::delta(SpaceParams::make(2, 2, 3)), 6u);
  EXPECT_EQ(delta(SpaceParams::make(3, 1, 4)), 1);
}

TEST(HyperplaneDisjoint, AgreesWithCensus) {
  // With pi inside V the s = 0 factor (q^{l-n} - 1) vanishes at l = n.
  const auto sp = SpaceParams::make(2, 2, 2);
  EXPECT_EQ(hyperplane_disjoint(sp, true), 0);
  EXPECT_EQ(census::hyperplane_disjoint(sp, true), 0u);
  EXPECT_EQ(hyperplane_disjoint(sp, false), 2);
  EXPECT_EQ(census::hyperplane_disjoint(sp, false), 2u);
  const auto sp1 = SpaceParams::make(2, 1, 2);
  EXPECT_EQ(hyperplane_disjoint(sp1, true), 1);
  EXPECT_EQ(hyperplane_disjoint(sp1, false), 2);
  EXPECT_EQ(census::hyperplane_disjoint(sp1, true), 1u);
  EXPECT_EQ(census::hyperplane_disjoint(sp1, false), 2u);
  for (bool in : {false, true}) {
    const auto sp3 = SpaceParams::make(2, 2, 3);
    EXPECT_EQ(hyperplane_disjoint(sp3, in), census::hyperplane_disjoint(sp3, in));
  }
}

TEST(Dkm, Examples) {
  EXPECT_EQ(d_km(2, 3, 2, 2), 1);
  EXPECT_EQ(d_km(2, 2, 1, 2), 2);
  EXPECT_EQ(census::d_km(2, 2, 1, 2), 2u);
  // Brute force over F_2^6 gives 18.
  EXPECT_EQ(d_km(2, 3, 1, 2), 18);
  EXPECT_EQ(census::d_km(2, 3, 1, 2), 18u);
  EXPECT_EQ(code_of([] { d_km(2, 2, 0, 1); }), ErrorCode::BadIndices);
  EXPECT_EQ(code_of([] { d_km(2, 2, 2, 1); }), ErrorCode::BadIndices);
}

TEST(Zkm, Examples) {
  EXPECT_EQ(z_0m(2, 2, 0), 1);
  EXPECT_EQ(z_0m(2, 2, 1), 6);
  EXPECT_EQ(z_km(2, 2, 2, 2), 1);
  EXPECT_EQ(census::z_km(2, 2, 0, 1), 6u);
  EXPECT_EQ(census::z_km(2, 2, 2, 2), 1u);
}

TEST(Zkm, InversionRoundTrip) {
  for (unsigned q : {2u, 3u})
    for (unsigned n = 1; n <= 3; ++n)
      for (unsigned m = 1; m <= n; ++m)
        for (unsigned k = 1; k <= m; ++k) {
          EXPECT_EQ(x_from_z(q, n, k, m), x_km(q, n, k, m)) << q << n << k << m;
          EXPECT_EQ(x_km(q, n, k, m), gaussian_binomial(n, k, q) * d_km(q, n, k, m));
        }
}

TEST(WCounts, SumAndCensus) {
  const auto sp = SpaceParams::make(2, 2, 4);
  const auto w = w_counts(sp);
  ASSERT_EQ(w.w.size(), 3u);
  EXPECT_EQ(w.w[0], 96);
  EXPECT_EQ(census::w_i(sp, 0), 96u);
  BigInt sum = 0;
  for (const auto& x : w.w) sum += x;
  EXPECT_EQ(sum, w.total);
  EXPECT_EQ(BigInt(census::w_total(sp)), w.total);
  for (unsigned i = 0; i <= 2; ++i) EXPECT_EQ(BigInt(census::w_i(sp, i)), w.w[i]);
}

TEST(WCounts, SigmaDenominatorsAgree) {
  for (unsigned q : {2u, 3u, 4u})
    for (unsigned n = 2; n <= 3; ++n)
      for (unsigned l = 2 * n; l <= 2 * n + 2; ++l) {
        const auto w = w_counts(SpaceParams::make(q, n, l));
        ASSERT_TRUE(w.w_sigma && w.w_sigma_double_count);
        EXPECT_EQ(*w.w_sigma, *w.w_sigma_double_count);
        ASSERT_TRUE(w.w_sigma_bar && w.w_sigma_bar_double_count);
        EXPECT_EQ(*w.w_sigma_bar, *w.w_sigma_bar_double_count);
      }
  EXPECT_FALSE(w_counts(SpaceParams::make(2, 2, 2)).w_sigma_bar);
  EXPECT_FALSE(w_counts(SpaceParams::make(2, 1, 3)).w_sigma);
}

TEST(WCounts, SigmaIsTheCensusAverage) {
  for (auto [q, l] : std::vector<std::pair<unsigned, unsigned>>{{2, 4}, {2, 5}, {3, 4}}) {
    const auto sp = SpaceParams::make(q, 2, l);
    const auto w = w_counts(sp);
    EXPECT_EQ(census::w_sigma(sp).average(), *w.w_sigma) << q << " " << l;
    EXPECT_EQ(census::w_sigma_bar(sp).average(), *w.w_sigma_bar) << q << " " << l;
  }
}

TEST(SBounds, Identities) {
  EXPECT_EQ(s1(SpaceParams::make(2, 2, 3), 1), 8);
  EXPECT_EQ(s1(SpaceParams::make(2, 2, 2), 2), 6);
  for (unsigned q : {2u, 3u})
    for (unsigned n = 1; n <= 3; ++n)
      for (unsigned l = n; l <= 5; ++l) {
        const auto sp = SpaceParams::make(q, n, l);
        for (std::int64_t x = 0; x <= 4; ++x) {
          EXPECT_EQ(s1(sp, x), BigInt(x) * c_count(sp) + delta(sp));
          EXPECT_EQ(s1(sp, x), BigInt(x) * qpow(q, std::uint64_t{n - 1} * l) - BigInt(x - 1) * delta(sp));
        }
      }
  const auto sp = SpaceParams::make(3, 2, 4);
  const auto b = s_bounds(sp, 3);
  const Rational ws = *w_counts(sp).w_sigma;
  ASSERT_TRUE(b.d2_prime && b.s2_prime);
  EXPECT_EQ(*b.d2_prime, ws);
  EXPECT_EQ(*b.s2_prime, Rational(3 * qpow(3, 4) - 4 * delta(sp)) + ws);
}

TEST(Spectra, Examples) {
  const auto s = spectra(SpaceParams::make(2, 2, 2));
  EXPECT_EQ(s.rank_m, 10);
  ASSERT_EQ(s.ak.size(), 3u);
  EXPECT_EQ(s.ak[0].value, 6);
  EXPECT_EQ(s.ak[1].value, -2);
  EXPECT_EQ(s.ak[2].value, 2);
  EXPECT_EQ(s.ak[0].multiplicity, 1);
  EXPECT_EQ(s.ak[1].multiplicity, 9);
  EXPECT_EQ(s.ak[2].multiplicity, 6);
  std::map<BigInt, BigInt> g;
  for (const auto& e : s.g) g[e.value] = e.multiplicity;
  EXPECT_EQ(g, (std::map<BigInt, BigInt>{{8, 1}, {0, 9}, {-4, 2}}));
}

TEST(Spectra, MultiplicitiesSumToSize) {
  for (unsigned q : {2u, 3u, 4u})
    for (unsigned n = 1; n <= 3; ++n)
      for (unsigned l = n; l <= 4; ++l) {
        const auto sp = SpaceParams::make(q, n, l);
        const auto s = spectra(sp);
        BigInt dims = 0, g = 0, nn = 0;
        for (const auto& e : s.ak) dims += e.multiplicity;
        for (const auto& e : s.g) g += e.multiplicity;
        for (const auto& e : s.n) nn += e.multiplicity;
        EXPECT_EQ(dims, qpow(q, std::uint64_t{n} * l));
        const BigInt points = qpow(q, l) * gaussian_binomial(n, 1, q);
        EXPECT_EQ(g, points);
        EXPECT_EQ(nn, points);
        EXPECT_EQ(s.ak[0].value, disjoint_count(sp));
        EXPECT_EQ(lambda(sp, 1) * -1, delta(sp));
      }
}

TEST(Classification, ChainAndCapOnGrid) {
  for (unsigned q : {2u, 3u, 4u, 5u})
    for (unsigned n = 2; n <= 3; ++n)
      for (unsigned l = n; l <= 7; ++l) {
        const auto sp = SpaceParams::make(q, n, l);
        const BigInt top = qpow(q, std::uint64_t{n - 1} * l), d = delta(sp);
        EXPECT_GT(top, d);
        EXPECT_GT(Rational(d), *w_counts(sp).w_sigma) << q << n << l;
        const BigInt cap = gaussian_binomial(n, 1, q) * qpow(q, std::uint64_t{l} * (n - 2));
        EXPECT_LE(c_count(sp), cap);
        EXPECT_LT(Rational(cap), Rational(qpow(q, n + std::uint64_t{l} * (n - 2)), q - 1));
      }
}

TEST(Classification, RangeAndScope) {
  EXPECT_FALSE(classification_bounds(SpaceParams::make(2, 2, 4), 2).in_range);
  EXPECT_TRUE(classification_bounds(SpaceParams::make(3, 2, 4), 2).in_range);
  const auto b = classification_bounds(SpaceParams::make(3, 2, 4), 2);
  EXPECT_EQ(b.point_meet_count, 3);
  EXPECT_EQ(b.ekr_bound, 81);
  EXPECT_EQ(point_meet_count(SpaceParams::make(5, 2, 6)), 5);
  EXPECT_EQ(code_of([] { classification_bounds(SpaceParams::make(2, 2, 3), 2); }), ErrorCode::OutOfScopeParams);
  EXPECT_EQ(code_of([] { classification_bounds(SpaceParams::make(2, 2, 4), 1); }), ErrorCode::OutOfScopeParams);
}

TEST(Formulas, DispatchMatchesCensusAtSmallPoints) {
  for (auto [q, n, l] : std::vector<std::array<unsigned, 3>>{{2, 1, 2}, {2, 2, 2}, {3, 2, 2}, {2, 2, 3}}) {
    for (const auto& id : formula_ids()) {
      FormulaArgs a;
      a.q = q, a.n = n, a.l = l, a.i = 1, a.j = n, a.k = 1, a.m = n, a.x = 1;
      Rational f;
      try {
        f = evaluate_formula(id, a).value;
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::OutOfScopeParams) << id;
        continue;
      }
      try {
        EXPECT_EQ(census::evaluate(id, a), f) << id << " at " << q << n << l;
      } catch (const Error& e) {
        EXPECT_TRUE(e.code() == ErrorCode::BadParams || e.code() == ErrorCode::CapExceeded) << id;
      }
    }
  }
  EXPECT_EQ(code_of([] { evaluate_formula("nope", FormulaArgs{2, 2, 2}); }), ErrorCode::BadParams);
}
