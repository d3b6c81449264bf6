#include <gtest/gtest.h>

#include <set>

#include "clforms/error.hpp"
#include "clforms/gf.hpp"

using namespace clforms;

namespace {

const unsigned kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

// Multiplicative order by repeated multiplication.
unsigned order_of(const FqField& f, Elem a) {
  unsigned k = 1;
  for (Elem x = a; x != 1; x = f.mul(x, a)) ++k;
  return k;
}

}  // namespace

TEST(Gf, BinaryFieldHasCharacteristicTwo) {
  auto f = field_new(2);
  EXPECT_EQ(f->add(1, 1), 0);
  EXPECT_EQ(f->mul(1, 1), 1);
}

TEST(Gf, F4UsesLeastIrreducible) {
  auto f = field_new(4);
  ASSERT_EQ(f->modulus().size(), 3u);
  EXPECT_EQ(f->modulus()[0], 1u);
  EXPECT_EQ(f->modulus()[1], 1u);
  EXPECT_EQ(f->modulus()[2], 1u);
  // t is encoded as 2, t + 1 as 3.
  EXPECT_EQ(f->mul(2, 2), 3);

  // Independently: over F_2 the only monic irreducible quadratic is t^2+t+1.
  auto f2 = field_new(2);
  EXPECT_FALSE(is_irreducible(*f2, Poly{0, 0, 1}));
  EXPECT_FALSE(is_irreducible(*f2, Poly{1, 0, 1}));
  EXPECT_FALSE(is_irreducible(*f2, Poly{0, 1, 1}));
  EXPECT_TRUE(is_irreducible(*f2, Poly{1, 1, 1}));
}

TEST(Gf, RejectsBadOrders) {
  for (unsigned q : {0u, 1u, 6u, 10u, 12u, 15u}) {
    try {
      field_new(q);
      ADD_FAILURE() << q;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotPrimePower) << q;
    }
  }
  for (unsigned q : {17u, 25u, 32u}) {
    try {
      field_new(q);
      ADD_FAILURE() << q;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Unsupported) << q;
    }
  }
}

TEST(Gf, FieldAxiomsExhaustive) {
  for (unsigned q : kOrders) {
    auto f = field_new(q);
    ASSERT_EQ(f->order(), q);
    for (unsigned a = 0; a < q; ++a) {
      if (a) EXPECT_EQ(f->mul(a, f->inv(a)), 1) << q;
      EXPECT_EQ(f->add(a, f->neg(a)), 0);
      for (unsigned b = 0; b < q; ++b) {
        EXPECT_EQ(f->mul(a, b), f->mul(b, a));
        EXPECT_EQ(f->add(a, b), f->add(b, a));
        EXPECT_EQ(f->sub(f->add(a, b), b), a);
        for (unsigned c = 0; c < q; ++c) {
          EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
          EXPECT_EQ(f->mul(a, f->mul(b, c)), f->mul(f->mul(a, b), c));
        }
      }
    }
  }
}

TEST(Gf, FrobeniusIsAdditive) {
  for (unsigned q : kOrders) {
    auto f = field_new(q);
    const unsigned p = f->characteristic();
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) EXPECT_EQ(f->pow(f->add(a, b), p), f->add(f->pow(a, p), f->pow(b, p)));
  }
}

TEST(Gf, ExpTableListsNonzeroElementsOnce) {
  for (unsigned q : kOrders) {
    auto f = field_new(q);
    auto exp = f->exp_table();
    ASSERT_EQ(exp.size(), q - 1);
    std::set<Elem> seen(exp.begin(), exp.end());
    EXPECT_EQ(seen.size(), q - 1);
    EXPECT_EQ(seen.count(0), 0u);
    EXPECT_EQ(order_of(*f, f->primitive_element()), q - 1);
    for (unsigned a = 1; a < q; ++a) EXPECT_EQ(exp[f->log(a)], a);
  }
}

TEST(Gf, InverseOfZeroThrows) {
  auto f = field_new(5);
  EXPECT_THROW(f->inv(0), Error);
}

TEST(ExtField, DegreeOneIsTheBase) {
  ExtField e(field_new(2), 1);
  EXPECT_EQ(e.size(), 2u);
  EXPECT_EQ(e.mul(e.one(), e.one()), e.one());
  EXPECT_TRUE(e.is_zero(e.add(e.one(), e.one())));
}

TEST(ExtField, F4MultiplicationTable) {
  ExtField e(field_new(2), 2);
  int nonzero = 0;
  std::set<std::uint64_t> products;
  for (std::uint64_t a = 0; a < 4; ++a)
    for (std::uint64_t b = 0; b < 4; ++b) {
      auto p = e.mul(e.from_index(a), e.from_index(b));
      if (!e.is_zero(p)) ++nonzero;
    }
  EXPECT_EQ(nonzero, 9);
  // Nonzero elements form a group of order 3: every nonzero a has a^3 = 1.
  for (std::uint64_t a = 1; a < 4; ++a) {
    auto x = e.from_index(a);
    EXPECT_EQ(e.mul(x, e.mul(x, x)), e.one());
  }
}

TEST(ExtField, F9MultiplicativeGroupIsCyclic) {
  ExtField e(field_new(3), 2);
  bool generator = false;
  for (std::uint64_t a = 1; a < 9 && !generator; ++a) {
    auto g = e.from_index(a);
    auto x = g;
    unsigned k = 1;
    while (x != e.one()) x = e.mul(x, g), ++k;
    generator = k == 8;
  }
  EXPECT_TRUE(generator);
}

TEST(ExtField, MultiplicationByNonzeroIsBijective) {
  for (auto [q, l] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {2, 5}, {3, 3}, {4, 2}, {5, 2}, {2, 8}}) {
    ExtField e(field_new(q), l);
    ASSERT_TRUE(is_irreducible(*e.base(), e.modulus()));
    for (std::uint64_t b = 1; b < e.size(); b += (e.size() > 64 ? 37 : 1)) {
      auto beta = e.from_index(b);
      std::vector<bool> hit(e.size(), false);
      for (std::uint64_t a = 0; a < e.size(); ++a) hit[e.index(e.mul(e.from_index(a), beta))] = true;
      EXPECT_EQ(std::count(hit.begin(), hit.end(), true), static_cast<long>(e.size()));
      EXPECT_EQ(e.mul(beta, e.inv(beta)), e.one());
    }
  }
}

TEST(ExtField, LeastIrreducibleIsLeast) {
  auto f = field_new(3);
  const Poly m = least_monic_irreducible(*f, 2);
  ASSERT_EQ(m.size(), 3u);
  // Every lexicographically smaller monic quadratic is reducible.
  for (unsigned c1 = 0; c1 < 3; ++c1)
    for (unsigned c0 = 0; c0 < 3; ++c0) {
      Poly p{static_cast<Elem>(c0), static_cast<Elem>(c1), 1};
      if (std::make_pair(c0, c1) < std::make_pair(unsigned{m[0]}, unsigned{m[1]})) EXPECT_FALSE(is_irreducible(*f, p));
    }
  EXPECT_TRUE(is_irreducible(*f, m));
}
