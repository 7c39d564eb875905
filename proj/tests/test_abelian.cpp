#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace sutor;

namespace {

IntMatrix mat(std::size_t r, std::size_t c, std::initializer_list<long> v) {
  IntMatrix m(r, c);
  auto it = v.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = *it++;
  return m;
}

bool is_identity(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

void expect_smith(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  IntMatrix prod = s.U * m * s.V;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      ASSERT_EQ(prod(i, j), s.D(i, j));
      if (i != j) ASSERT_EQ(s.D(i, j), 0);
    }
  auto d = s.diagonal();
  for (const auto& x : d) ASSERT_GE(x, 0);
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] == 0)
      ASSERT_EQ(d[i + 1], 0);
    else
      ASSERT_EQ(d[i + 1] % d[i], 0);
  }
  ASSERT_EQ(sutor::abs(oracle::int_det(s.U)), 1);
  ASSERT_EQ(sutor::abs(oracle::int_det(s.V)), 1);
  ASSERT_TRUE(is_identity(s.U * s.U_inv));
  if (m.rows() == m.cols()) {
    Integer p = 1;
    for (const auto& x : d) p *= x;
    ASSERT_EQ(p, sutor::abs(oracle::int_det(m)));
  }
}

}  // namespace

TEST(Smith, Examples) {
  EXPECT_EQ(smith_normal_form(mat(1, 1, {0})).diagonal(), IntVector{0});
  EXPECT_EQ(smith_normal_form(mat(2, 2, {2, 0, 0, 3})).diagonal(), (IntVector{1, 6}));
  auto id = smith_normal_form(IntMatrix::identity(2));
  EXPECT_EQ(id.diagonal(), (IntVector{1, 1}));
  expect_smith(mat(2, 2, {2, 0, 0, 3}));
  expect_smith(mat(2, 3, {2, 4, 6, 4, 8, 14}));
  expect_smith(mat(3, 2, {0, 0, 0, 0, 0, 0}));
  expect_smith(IntMatrix(0, 3));
}

TEST(Smith, RandomPostconditions) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int i = 0; i < 100; ++i) expect_smith(oracle::random_matrix(rng, dim(rng), dim(rng), 9));
}

TEST(Abelian, Order) {
  EXPECT_EQ(*order(AbelianGroup{}), 1);
  EXPECT_EQ(*order(AbelianGroup{0, {2, 6}}), 12);
  EXPECT_FALSE(order(AbelianGroup{1, {3}}).has_value());
  EXPECT_EQ(describe(AbelianGroup{}), "0");
  EXPECT_EQ(describe(AbelianGroup{1, {}}), "Z");
  EXPECT_EQ(describe(AbelianGroup{2, {2}}), "Z^2 + Z/2");
}

TEST(Abelian, AbelianizeFree) {
  auto al = make_alphabet({"a", "b"});
  Abelianization phi = abelianize(*al, {});
  EXPECT_EQ(phi.group, AbelianGroup::free(2));
  EXPECT_EQ(phi.images[0], free_element({1, 0}));
  EXPECT_EQ(phi.images[1], free_element({0, 1}));
  EXPECT_EQ(phi(parse_word("a^2 b^-1 a", al)), free_element({3, -1}));
}

TEST(Abelian, AbelianizeCyclic) {
  auto al = make_alphabet({"a"});
  Abelianization phi = abelianize(*al, {parse_word("a^3", al)});
  EXPECT_EQ(phi.group, (AbelianGroup{0, {3}}));
  EXPECT_EQ(phi.images[0].tor, IntVector{1});
}

TEST(Abelian, AbelianizeTrefoilGroup) {
  auto al = make_alphabet({"x", "y"});
  Word r = parse_word("x y x y^-1 x^-1 y^-1", al);
  EXPECT_EQ(oracle::exponent_sum(r, 0), 1);
  EXPECT_EQ(oracle::exponent_sum(r, 1), -1);
  Abelianization phi = abelianize(*al, {r});
  EXPECT_EQ(phi.group, AbelianGroup::free(1));
  EXPECT_EQ(phi.images[0], phi.images[1]);
  EXPECT_EQ(sutor::abs(phi.images[0].free[0]), 1);
}

TEST(Abelian, AbelianizeMixed) {
  // <a, b, c | a^2 b^2, b^4> -> Z + Z/8? exponent matrix [[2,0],[2,4],[0,0]].
  auto al = make_alphabet({"a", "b", "c"});
  Abelianization phi = abelianize(*al, {parse_word("a^2 b^2", al), parse_word("b^4", al)});
  EXPECT_EQ(phi.group, (AbelianGroup{1, {2, 4}}));
  // Relators map to zero.
  EXPECT_TRUE(is_zero(phi(parse_word("a^2 b^2", al))));
  EXPECT_TRUE(is_zero(phi(parse_word("b^4", al))));
  EXPECT_FALSE(is_zero(phi(parse_word("b^2", al))));
}

TEST(Abelian, QuotientExamples) {
  Quotient q = quotient(AbelianGroup::free(2), {free_element({1, 0})});
  EXPECT_EQ(q.group, AbelianGroup::free(1));
  EXPECT_EQ(sutor::abs(q.proj(free_element({5, 7})).free[0]), 7);
  EXPECT_TRUE(is_zero(q.proj(free_element({1, 0}))));
  EXPECT_TRUE(is_zero(q.proj(free_element({0, 0}))));

  Quotient z2 = quotient(AbelianGroup::free(1), {free_element({2})});
  EXPECT_EQ(z2.group, (AbelianGroup{0, {2}}));

  Quotient knot = quotient(AbelianGroup::free(1), {free_element({1})});
  EXPECT_TRUE(knot.group.is_trivial());
}

TEST(Abelian, QuotientOfTorsionGroup) {
  AbelianGroup h{1, {4}};
  Quotient q = quotient(h, {AbElement{{0}, {2}}});
  EXPECT_EQ(q.group, (AbelianGroup{1, {2}}));
  Quotient q2 = quotient(h, {AbElement{{2}, {1}}});
  EXPECT_EQ(*order(q2.group), 8);
}

TEST(Abelian, QuotientTwiceEqualsUnion) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 50; ++i) {
    AbelianGroup h{3, {}};
    auto x = oracle::random_element(rng, h, 4), y = oracle::random_element(rng, h, 4);
    Quotient q1 = quotient(h, {x});
    Quotient q12 = quotient(q1.group, {q1.proj(y)});
    Quotient both = quotient(h, {x, y});
    EXPECT_EQ(q12.group, both.group);
  }
}

TEST(Abelian, ElementArithmetic) {
  AbelianGroup g{1, {6}};
  AbElement x{{2}, {5}}, y{{-1}, {4}};
  EXPECT_EQ(add(g, x, y), (AbElement{{1}, {3}}));
  EXPECT_EQ(negate(g, x), (AbElement{{-2}, {1}}));
  EXPECT_EQ(scale(g, y, 3), (AbElement{{-3}, {0}}));
  EXPECT_EQ(from_coordinates(g, {7, -1}), (AbElement{{7}, {5}}));
}

TEST(Abelian, DirectSum) {
  DirectSum ds = direct_sum(AbelianGroup{1, {2}}, AbelianGroup{0, {3}});
  EXPECT_EQ(ds.group, (AbelianGroup{1, {6}}));
  AbElement a = ds.first(AbElement{{0}, {1}});
  AbElement b = ds.second(AbElement{{}, {1}});
  EXPECT_FALSE(is_zero(a));
  EXPECT_TRUE(is_zero(scale(ds.group, a, 2)));
  EXPECT_TRUE(is_zero(scale(ds.group, b, 3)));
}
