#include <gtest/gtest.h>

#include "ctcsa/field.hpp"
#include "oracles/oracles.hpp"

using namespace ctcsa;

namespace {

oracle::Poly unpack(std::uint32_t code, std::uint32_t p, std::uint32_t f) {
  oracle::Poly out(f);
  for (auto& c : out) {
    c = code % p;
    code /= p;
  }
  return out;
}

class FiniteFieldArithmetic : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(FiniteFieldArithmetic, MatchesNaivePolynomialArithmetic) {
  const auto [p, f] = GetParam();
  const FieldSpec k = FieldSpec::finite(p, f);
  const std::uint32_t q = *k.size();
  ASSERT_TRUE(is_irreducible(k.modulus(), p));
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      const auto pa = unpack(a, p, f), pb = unpack(b, p, f);
      EXPECT_EQ(k.coefficients(k.mul_code(a, b)), oracle::poly_mul_mod(pa, pb, k.modulus(), p)) << a << "*" << b;
      EXPECT_EQ(k.coefficients(k.add_code(a, b)), oracle::poly_add(pa, pb, p));
    }
    if (a != 0) {
      EXPECT_EQ(k.mul_code(a, k.inv_code(a)), 1u);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, FiniteFieldArithmetic,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{7u, 1u}, std::pair{2u, 2u}, std::pair{2u, 3u},
                                           std::pair{2u, 4u}, std::pair{3u, 2u}, std::pair{5u, 2u}, std::pair{3u, 3u}));

TEST(Field, PrimitiveElementGeneratesMultiplicativeGroup) {
  for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u}) {
    const auto [p, f] = prime_power(q);
    const FieldSpec k = FieldSpec::finite(p, f);
    const FieldScalar w = FieldScalar::primitive(k);
    FieldScalar x = w;
    std::uint32_t order = 1;
    while (!x.is_one()) {
      x = x * w;
      ++order;
    }
    EXPECT_EQ(order, q - 1) << q;
  }
}

TEST(Field, FrobeniusIsARingMapInCharacteristicTwo) {
  const FieldSpec k = FieldSpec::finite(2, 3);
  for (const auto& a : elements(k))
    for (const auto& b : elements(k)) {
      EXPECT_EQ(frobenius(a + b), frobenius(a) + frobenius(b));
      EXPECT_EQ(frobenius(a * b), frobenius(a) * frobenius(b));
    }
  EXPECT_THROW(frobenius(FieldScalar::one(FieldSpec::finite(3))), Error);
}

TEST(Field, RationalAndGaussianArithmetic) {
  const FieldSpec qq = FieldSpec::rational();
  const auto a = FieldScalar::from_rational(qq, Rational(3, 5));
  const auto b = FieldScalar::from_rational(qq, Rational(4, 5));
  EXPECT_TRUE((a * a + b * b).is_one());
  const auto i = FieldScalar::from_gaussian(0, 1);
  EXPECT_EQ(i * i, FieldScalar::from_int(FieldSpec::gaussian_rational(), -1));
  EXPECT_EQ((i * i).to_string(), "-1");
  EXPECT_EQ(i.inv(), -i);
}

TEST(Field, ScalarTextRoundTrip) {
  for (const FieldSpec& k : {FieldSpec::finite(5), FieldSpec::finite(3, 2), FieldSpec::finite(2, 4)}) {
    for (const auto& x : elements(k)) EXPECT_EQ(parse_scalar(k, x.to_string()), x);
  }
  const FieldSpec qq = FieldSpec::rational();
  EXPECT_EQ(parse_scalar(qq, "-3/5"), FieldScalar::from_rational(qq, Rational(-3, 5)));
}

TEST(Field, SumOfTwoSquares) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const FieldSpec k = FieldSpec::finite(p);
    const auto w = sum_of_two_squares(FieldScalar::from_int(k, -1));
    ASSERT_TRUE(w.has_value()) << p;
    EXPECT_EQ(w->first * w->first + w->second * w->second, FieldScalar::from_int(k, -1));
  }
  EXPECT_THROW(sum_of_two_squares(FieldScalar::one(FieldSpec::rational())), Error);
}

TEST(Field, Errors) {
  EXPECT_THROW(FieldSpec::finite(6), Error);
  EXPECT_THROW(prime_power(12), Error);
  EXPECT_THROW(FieldScalar::zero(FieldSpec::finite(5)).inv(), Error);
  EXPECT_THROW(FieldScalar::one(FieldSpec::finite(5)) + FieldScalar::one(FieldSpec::finite(7)), Error);
  EXPECT_THROW(parse_scalar(FieldSpec::finite(5), "x"), Error);
  try {
    FieldScalar::zero(FieldSpec::rational()).inv();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
}

}  // namespace
