#include <gtest/gtest.h>

#include <set>

#include "frozen.hpp"
#include "klc/errors.hpp"
#include "klc/field.hpp"

using namespace klc;

TEST(Field, DefaultModuliMatchOracle) {
  for (int r = 1; r <= 3; ++r) {
    const Field f(r);
    EXPECT_EQ(f.modulus(), frozen::at_q(f.size()).at("modulus").get<Poly3>()) << "r=" << r;
  }
  EXPECT_EQ(Field(2).modulus(), (Poly3{1, 0, 1}));
}

TEST(Field, SizesAndElementLists) {
  const Field f(3);
  EXPECT_EQ(f.size(), 27u);
  EXPECT_EQ(f.elements().size(), 27u);
  EXPECT_EQ(f.units().size(), 26u);
  EXPECT_EQ(f.units().front().enc, 1u);
}

TEST(Field, RejectsBadConfigurations) {
  EXPECT_THROW(Field(0), ConfigError);
  EXPECT_THROW(Field(9), ConfigError);
  EXPECT_THROW(Field(2, Poly3{2, 0, 1}), ConfigError);  // t^2 + 2 = (t+1)(t+2)
  EXPECT_THROW(Field(2, Poly3{1, 1}), ConfigError);
  EXPECT_THROW(Field(1, Poly3{0, 3}), ConfigError);
  EXPECT_NO_THROW(Field(2, Poly3{2, 1, 1}));
}

TEST(Field, ElementRangeAndZeroDivision) {
  const Field f(2);
  EXPECT_THROW(f.element(9), DomainError);
  EXPECT_THROW(f.inv(f.zero()), DomainError);
  EXPECT_THROW(f.is_square(f.zero()), DomainError);
}

// i^2 = -1 in GF(9) = GF(3)[t]/(t^2 + 1) with t encoded as 3.
TEST(Field, KnownProductsInGF9) {
  const Field f(2);
  const FieldElement t = f.element(3);
  EXPECT_EQ(f.mul(t, t), f.from_int(-1));
  EXPECT_EQ(f.from_int(-1).enc, 2u);
  EXPECT_EQ(f.add(t, f.one()).enc, 4u);
}

class FieldLaws : public ::testing::TestWithParam<int> {};

TEST_P(FieldLaws, TableMultiplicationMatchesSchoolbook) {
  const Field f(GetParam());
  for (auto x : f.elements())
    for (auto y : f.elements()) ASSERT_EQ(f.mul(x, y), f.mul_reference(x, y));
}

TEST_P(FieldLaws, RingAxiomsExhaustive) {
  const Field f(GetParam());
  const auto els = f.elements();
  for (auto x : els) {
    ASSERT_EQ(f.add(x, f.neg(x)), f.zero());
    ASSERT_EQ(f.scale(3, x), f.zero());
    if (!x.is_zero()) {
      ASSERT_EQ(f.mul(x, f.inv(x)), f.one());
    }
    for (auto y : els) {
      ASSERT_EQ(f.add(x, y), f.add(y, x));
      ASSERT_EQ(f.sub(f.add(x, y), y), x);
      // Frobenius is additive.
      ASSERT_EQ(f.pow(f.add(x, y), 3), f.add(f.pow(x, 3), f.pow(y, 3)));
    }
  }
}

TEST_P(FieldLaws, Distributivity) {
  const Field f(GetParam());
  const auto els = f.elements();
  for (std::size_t i = 0; i < els.size(); i += 2)
    for (auto y : els)
      for (auto z : els) ASSERT_EQ(f.mul(els[i], f.add(y, z)), f.add(f.mul(els[i], y), f.mul(els[i], z)));
}

TEST_P(FieldLaws, FermatAndUnitGroupCyclic) {
  const Field f(GetParam());
  const std::uint64_t q = f.size();
  bool found_generator = false;
  for (auto x : f.units()) {
    ASSERT_EQ(f.pow(x, q - 1), f.one());
    std::set<std::uint32_t> powers;
    for (std::uint64_t k = 0; k < q - 1; ++k) powers.insert(f.pow(x, k).enc);
    found_generator = found_generator || powers.size() == q - 1;
  }
  EXPECT_TRUE(found_generator);
}

TEST_P(FieldLaws, TraceTableMatchesFrobeniusSum) {
  const Field f(GetParam());
  std::array<int, 3> hits{};
  for (auto x : f.elements()) {
    ASSERT_EQ(f.trace(x), f.trace_reference(x));
    ++hits[f.trace(x)];
  }
  // Surjective onto GF(3) and balanced.
  for (int c : hits) EXPECT_EQ(static_cast<std::uint32_t>(c), f.size() / 3);
}

TEST_P(FieldLaws, TraceIsFrobeniusInvariantAndLinear) {
  const Field f(GetParam());
  for (auto x : f.elements()) {
    ASSERT_EQ(f.trace(f.pow(x, 3)), f.trace(x));
    ASSERT_EQ(f.trace(f.scale(2, x)), (2 * f.trace(x)) % 3);
  }
}

TEST_P(FieldLaws, SquareClassIsMultiplicative) {
  const Field f(GetParam());
  int squares = 0;
  for (auto x : f.units()) {
    squares += f.is_square(x);
    ASSERT_TRUE(f.is_square(f.mul(x, x)));
    for (auto y : f.units()) ASSERT_EQ(f.is_square(f.mul(x, y)), f.is_square(x) == f.is_square(y));
  }
  EXPECT_EQ(static_cast<std::uint32_t>(squares), (f.size() - 1) / 2);
}

TEST_P(FieldLaws, CoefficientRoundTrip) {
  const Field f(GetParam());
  for (auto x : f.elements()) {
    const auto c = f.coeffs(x);
    ASSERT_EQ(f.from_coeffs(c), x);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldLaws, ::testing::Values(1, 2, 3));

TEST(Field, AlternateModulusGivesIsomorphicArithmetic) {
  const Field f(2, Poly3{2, 1, 1});
  for (auto x : f.elements())
    for (auto y : f.elements()) ASSERT_EQ(f.mul(x, y), f.mul_reference(x, y));
  EXPECT_EQ(f.modulus(), (Poly3{2, 1, 1}));
}

TEST(Field, LargestSupportedExponentBuilds) {
  const Field f(Field::kMaxExponent);
  EXPECT_EQ(f.size(), 6561u);
  const FieldElement x = f.element(1234);
  EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
  EXPECT_EQ(f.trace(x), f.trace_reference(x));
}

TEST(Poly3, EncodingAndIrreducibility) {
  EXPECT_EQ(poly3::encode(Poly3{1, 0, 1}), 10u);
  EXPECT_EQ(poly3::decode(10), (Poly3{1, 0, 1}));
  EXPECT_EQ(poly3::degree(Poly3{1, 0, 1}), 2);
  EXPECT_TRUE(poly3::is_irreducible(Poly3{1, 0, 1}));
  EXPECT_FALSE(poly3::is_irreducible(Poly3{2, 0, 1}));
  int count = 0;
  // Monic irreducible cubics over GF(3): (27 - 3) / 3 = 8.
  for (int c0 = 0; c0 < 3; ++c0)
    for (int c1 = 0; c1 < 3; ++c1)
      for (int c2 = 0; c2 < 3; ++c2) count += poly3::is_irreducible(Poly3{c0, c1, c2, 1});
  EXPECT_EQ(count, 8);
}
