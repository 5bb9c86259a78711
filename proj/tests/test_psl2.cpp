#include <gtest/gtest.h>

#include "ctcsa/psl2.hpp"
#include "ctcsa/recipe.hpp"
#include "ctcsa/subgroups.hpp"
#include "oracles/oracles.hpp"

using namespace ctcsa;

namespace {

// |SL(2,q)| by brute force over all q^4 matrices, arithmetic done by the
// polynomial oracle on the field's modulus.
std::size_t count_sl2_naive(std::uint32_t q) {
  const auto [p, f] = prime_power(q);
  if (f == 1) return oracle::count_sl2(p);
  const FieldSpec k = FieldSpec::finite(p, f);
  std::vector<oracle::Poly> el(q);
  for (std::uint32_t c = 0; c < q; ++c) {
    oracle::Poly poly(f);
    std::uint32_t x = c;
    for (auto& v : poly) {
      v = x % p;
      x /= p;
    }
    el[c] = poly;
  }
  oracle::Poly one(f, 0);
  one[0] = 1;
  std::size_t count = 0;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t d = 0; d < q; ++d) {
      const auto ad = oracle::poly_mul_mod(el[a], el[d], k.modulus(), p);
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c) {
          auto bc = oracle::poly_mul_mod(el[b], el[c], k.modulus(), p);
          for (auto& v : bc) v = (p - v) % p;
          count += oracle::poly_add(ad, bc, p) == one;
        }
    }
  return count;
}

class Psl2Order : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(Psl2Order, ClosureMatchesEnumerationAndFormula) {
  const std::uint32_t q = GetParam();
  const std::size_t sl = count_sl2_naive(q);
  const std::size_t psl = q % 2 == 0 ? sl : sl / 2;
  EXPECT_EQ(psl, oracle::psl2_order_formula(q));
  EXPECT_EQ(psl2_order(q), oracle::psl2_order_formula(q));
  EXPECT_EQ(psl2_group(q).order(), psl);
  if (q <= 13) {
    EXPECT_EQ(sl2_group(q).order(), sl);
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, Psl2Order, ::testing::Values(2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u));

TEST(Mat2, ParseAndPrint) {
  const FieldSpec qq = FieldSpec::rational();
  const Mat2 m = parse_mat2(qq, "[[3/5, 4/5], [-4/5, 3/5]]");
  EXPECT_TRUE(m.det().is_one());
  EXPECT_EQ(parse_mat2(qq, m.to_string()), m);
  EXPECT_EQ(m * m.inverse(), Mat2::identity(qq));
  EXPECT_THROW(parse_mat2(qq, "[[1,2],[3]]"), Error);
  EXPECT_THROW(ProjMat2(Mat2::from_ints(qq, 1, 1, 1, 1)), Error);
}

TEST(ProjMat2, SignCanonical) {
  const FieldSpec k = FieldSpec::finite(7);
  const Mat2 m = Mat2::from_ints(k, 2, 3, 1, 2);
  EXPECT_EQ(ProjMat2(m), ProjMat2(-m));
  EXPECT_EQ(canonical_sign(m), canonical_sign(-m));
}

TEST(Char0, RationalPairCommutes) {
  const FieldSpec qq = FieldSpec::rational();
  const ProjMat2 b(Mat2::from_ints(qq, 0, 1, -1, 0));
  const ProjMat2 c(parse_mat2(qq, "[[3/5,4/5],[-4/5,3/5]]"));
  EXPECT_TRUE(commutes(b, c));
  EXPECT_FALSE((b * c).is_identity());
}

TEST(Char0, TripleOverGaussianRationals) {
  const FieldSpec qi = FieldSpec::gaussian_rational();
  const auto t = char0_ct_counterexample(FieldScalar::from_gaussian(0, 1), FieldScalar::zero(qi));
  EXPECT_TRUE(commutes(t.a, t.b));
  EXPECT_TRUE(commutes(t.b, t.c));
  EXPECT_FALSE(commutes(t.a, t.c));
  // No rational x, y with x^2 + y^2 = -1.
  const FieldSpec qq = FieldSpec::rational();
  EXPECT_THROW(char0_ct_counterexample(FieldScalar::one(qq), FieldScalar::zero(qq)), Error);
  EXPECT_THROW(char0_ct_counterexample(FieldScalar::one(FieldSpec::finite(5)), FieldScalar::from_int(FieldSpec::finite(5), 2)),
               Error);
}

TEST(Char0, GaussianTUV) {
  const auto t = gaussian_tuv_example();
  EXPECT_TRUE(commutes(t.b, t.a));
  EXPECT_TRUE(commutes(t.b, t.c));
  EXPECT_FALSE(commutes(t.a, t.c));
}

TEST(Automorphisms, Sl24Relations) {
  const FiniteGroup g = sl2_group(4);
  const auto alpha = inner_automorphism(g, *find_matrix(g, {1, 1, 0, 1}));
  const auto beta = inner_automorphism(g, *find_matrix(g, {1, 0, 1, 1}));
  const auto tau = frobenius_automorphism(g);
  EXPECT_EQ(compose(alpha, tau), compose(tau, alpha));
  EXPECT_EQ(compose(beta, tau), compose(tau, beta));
  EXPECT_NE(compose(alpha, beta), compose(beta, alpha));
  EXPECT_FALSE(tau.is_identity());
  EXPECT_TRUE(power(tau, 2).is_identity());
  EXPECT_EQ(automorphism_order(frobenius_automorphism(sl2_group(16))), 4u);
  EXPECT_TRUE(frobenius_automorphism(sl2_group(2)).is_identity());
  EXPECT_THROW(frobenius_automorphism(sl2_group(3)), Error);
  EXPECT_THROW(frobenius_automorphism(build_group("cyclic:4")), Error);
}

TEST(Automorphisms, FrobeniusSquaresEntries) {
  const FiniteGroup g = sl2_group(8);
  const auto tau = frobenius_automorphism(g);
  for (Elem x = 0; x < g.order(); ++x) {
    const Mat2 m = element_matrix(g, x);
    const Mat2 img = element_matrix(g, tau(x));
    for (int i = 0; i < 4; ++i) EXPECT_EQ(img.entries()[i], m.entries()[i] * m.entries()[i]);
  }
}

TEST(Automorphisms, ConjugationKernel) {
  const FiniteGroup g = psl2_group(4);
  EXPECT_TRUE(conjugation_kernel(g, SubgroupSet::whole(g)).is_trivial());
  const FiniteGroup d = build_group("dihedral:4");
  EXPECT_EQ(conjugation_kernel(d, SubgroupSet::whole(d)).size(), 2u);
  const Elem s[] = {1};
  const SubgroupSet h = subgroup_generated(build_group("symmetric:3"), s);
  ASSERT_FALSE(is_normal(h));
  EXPECT_THROW(conjugation_kernel(h.parent(), h), Error);
}

TEST(ScalarCentralizer, HoldsUpToSixteen) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) EXPECT_TRUE(scalar_centralizer_check(q)) << q;
  EXPECT_THROW(scalar_centralizer_check(17), Error);
}

}  // namespace
