#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace sutor;

namespace {

struct Free {
  AlphabetPtr al;
  Abelianization phi;
  explicit Free(std::vector<std::string> names) : al(make_alphabet(std::move(names))), phi(abelianize(*al, {})) {}
  Word w(const std::string& s) const { return parse_word(s, al); }
  GroupRingElement mono(const std::string& s, long c = 1) const { return monomial(phi.group, phi(w(s)), c); }
  GroupRingElement d(const std::string& s, std::size_t x) const { return fox_derivative(w(s), x, phi); }
};

}  // namespace

TEST(Fox, CantwellConlonEntries) {
  Free f({"a", "b", "c"});
  EXPECT_EQ(f.d("b a^-1 b c^-1", 1), f.mono("1") + f.mono("b a^-1"));
  EXPECT_EQ(f.d("b a^-1 b c^-1", 0), f.mono("b a^-1", -1));
  EXPECT_EQ(f.d("b a^-1 b c^-1", 2), f.mono("b^2 a^-1 c^-1", -1));
  EXPECT_EQ(f.d("a", 0), f.mono("1"));
  EXPECT_TRUE(f.d("a", 1).is_zero());
}

TEST(Fox, PowerClosedForm) {
  Free f({"a"});
  for (long r = 1; r <= 6; ++r) {
    GroupRingElement expected(f.phi.group);
    for (long j = 0; j < r; ++j) expected += f.mono("a^" + std::to_string(j));
    EXPECT_EQ(f.d("a^" + std::to_string(r), 0), expected);
    GroupRingElement neg(f.phi.group);
    for (long j = 1; j <= r; ++j) neg -= f.mono("a^-" + std::to_string(j));
    EXPECT_EQ(f.d("a^-" + std::to_string(r), 0), neg);
  }
}

TEST(Fox, MatrixSolidTorus) {
  auto in = families::solid_torus(4);
  Abelianization phi = abelianize(*in.alphabet, in.relators);
  GRMatrix m = fox_matrix(in.relators, in.rminus, phi);
  ASSERT_EQ(m.rows(), 1u);
  ASSERT_EQ(m.cols(), 1u);
  EXPECT_EQ(m(0, 0).size(), 4u);
  EXPECT_EQ(augmentation(m(0, 0)), 4);
}

TEST(Fox, MatrixCantwellConlon) {
  Free f({"a", "b", "c"});
  auto in = families::cantwell_conlon();
  GRMatrix m = fox_matrix(in.relators, in.rminus, f.phi);
  EXPECT_EQ(m(0, 0), f.mono("1"));
  EXPECT_TRUE(m(1, 0).is_zero());
  EXPECT_TRUE(m(2, 0).is_zero());
  EXPECT_EQ(m(0, 1), f.mono("b a^-1", -1));
  EXPECT_EQ(m(1, 1), f.mono("1") + f.mono("b a^-1"));
  EXPECT_EQ(m(2, 1), f.mono("b^2 a^-1 c^-1", -1));
  // d(b a^-1 c a b^-1): -b a^-1 + b a^-1 c, 1 - b a^-1 c a b^-1, b a^-1.
  EXPECT_EQ(m(0, 2), f.mono("b a^-1 c") - f.mono("b a^-1"));
  EXPECT_EQ(m(1, 2), f.mono("1") - f.mono("c"));
  EXPECT_EQ(m(2, 2), f.mono("b a^-1"));
}

TEST(Fox, MatrixPretzelEven111) {
  Free f({"a", "b"});
  auto in = families::pretzel_even(1, 1, 1);
  EXPECT_EQ(render(in.rminus[0]), "a b^-1 a");
  EXPECT_EQ(render(in.rminus[1]), "a b");
  GRMatrix m = fox_matrix(in.relators, in.rminus, f.phi);
  EXPECT_EQ(m(0, 0), f.mono("1") + f.mono("a b^-1"));
  EXPECT_EQ(m(0, 1), f.mono("1"));
  EXPECT_EQ(m(1, 0), f.mono("a b^-1", -1));
  EXPECT_EQ(m(1, 1), f.mono("a"));
}

TEST(Fox, AlphabetMismatch) {
  Free f({"a", "b"});
  auto other = make_alphabet({"x"});
  EXPECT_THROW(fox_derivative(Word::letter(other, 0), 0, f.phi), Error);
}

TEST(Fox, WithRelators) {
  // Over H = Z/3 the derivative of a^3 is 1 + s + s^2 = I_{Z/3}.
  auto al = make_alphabet({"a"});
  Abelianization phi = abelianize(*al, {parse_word("a^3", al)});
  EXPECT_EQ(fox_derivative(parse_word("a^3", al), 0, phi), sum_of_all_elements(phi.group));
}
