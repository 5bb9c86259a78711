#include <gtest/gtest.h>

#include <map>
#include <random>

#include "ctcsa/constructors.hpp"
#include "ctcsa/isomorphism.hpp"
#include "ctcsa/recipe.hpp"
#include "ctcsa/subgroups.hpp"
#include "oracles/oracles.hpp"

using namespace ctcsa;

namespace {

struct Case {
  const char* recipe;
  std::vector<oracle::Perm> perms;
};

std::vector<Case> permutation_cases() {
  return {
      {"symmetric:3", oracle::symmetric(3)},      {"symmetric:4", oracle::symmetric(4)},
      {"alternating:4", oracle::symmetric(4, true)}, {"alternating:5", oracle::symmetric(5, true)},
      {"dihedral:4", oracle::dihedral(4)},        {"dihedral:5", oracle::dihedral(5)},
      {"dihedral:6", oracle::dihedral(6)},        {"frobenius:2,3", oracle::frobenius(2, 3)},
      {"frobenius:3,7", oracle::frobenius(3, 7)}, {"frobenius:5,11", oracle::frobenius(5, 11)},
  };
}

TEST(Group, ConstructorsMatchPermutationOracle) {
  for (const auto& c : permutation_cases()) {
    SCOPED_TRACE(c.recipe);
    const FiniteGroup g = build_group(c.recipe);
    const oracle::Stats want = oracle::stats(c.perms);
    EXPECT_EQ(g.order(), want.order);
    EXPECT_EQ(center(g).size(), want.center);
    std::size_t pairs = 0;
    std::map<std::size_t, std::size_t> hist;
    for (Elem x = 0; x < g.order(); ++x) {
      pairs += centralizer(g, x).size();
      ++hist[g.element_order(x)];
    }
    EXPECT_EQ(pairs, want.commuting_pairs);
    EXPECT_EQ(hist, want.order_histogram);
    EXPECT_FALSE(check_group_axioms(g).has_value());
  }
}

TEST(Group, Orders) {
  EXPECT_EQ(cyclic(1).order(), 1u);
  EXPECT_EQ(cyclic(30).order(), 30u);
  EXPECT_EQ(dihedral(12).order(), 24u);
  EXPECT_EQ(symmetric(5).order(), 120u);
  EXPECT_EQ(build_group("direct(symmetric:3,symmetric:3)").order(), 36u);
  EXPECT_EQ(build_group("semidirect(direct(cyclic:2,cyclic:2),cyclic:3,involution-cycle)").order(), 12u);
}

TEST(Group, ConstructorErrors) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code_of([] { frobenius_pq(4, 7); }), ErrorCode::NonPrime);
  EXPECT_EQ(code_of([] { frobenius_pq(3, 5); }), ErrorCode::DivisibilityViolated);
  EXPECT_EQ(code_of([] { build_group("symmetric:7", Caps{100, 50, 100}); }), ErrorCode::OrderCapExceeded);
  EXPECT_EQ(code_of([] { build_group("semidirect(cyclic:5,cyclic:2,power:3)"); }), ErrorCode::ActionNotHomomorphism);
}

TEST(Recipe, RoundTripAndErrors) {
  for (const char* text : {"cyclic:7", "frobenius:3,7", "direct(symmetric:3,cyclic:2)",
                           "semidirect(cyclic:7,cyclic:3,power:2)",
                           "semidirect(direct(cyclic:2,cyclic:2),cyclic:3,involution-cycle)"}) {
    const Recipe r = parse_recipe(text);
    EXPECT_EQ(r.to_string(), text);
    EXPECT_EQ(parse_recipe(r.to_string()), r);
  }
  EXPECT_EQ(parse_recipe(" direct( cyclic:2 , cyclic:3 ) ").to_string(), "direct(cyclic:2,cyclic:3)");
  for (const char* bad : {"", "cyclic", "cyclic:", "cyclic:x", "direct(cyclic:2)", "nosuch:3", "cyclic:3)"}) {
    EXPECT_THROW(build_group(bad), Error) << bad;
  }
}

TEST(Subgroups, NormalStructureOfS4) {
  const FiniteGroup s4 = symmetric(4);
  std::vector<std::size_t> sizes;
  for (const auto& n : normal_subgroups(s4)) sizes.push_back(n.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 4, 12, 24}));
  EXPECT_TRUE(is_solvable(s4));
  EXPECT_EQ(derived_length(s4), 3u);
  EXPECT_EQ(monolith(s4)->size(), 4u);
  EXPECT_EQ(fitting_subgroup(s4).size(), 4u);
  EXPECT_FALSE(is_nilpotent(s4));
}

TEST(Subgroups, SimplicityAndMaximalAbelian) {
  EXPECT_TRUE(is_simple(alternating(5)));
  EXPECT_FALSE(is_simple(alternating(4)));
  EXPECT_FALSE(is_solvable(alternating(5)));
  // A5: 6 cyclic subgroups of order 5, 10 of order 3, 5 Klein four-groups.
  EXPECT_EQ(maximal_abelian_subgroups(alternating(5)).size(), 21u);
  EXPECT_EQ(maximal_abelian_subgroups(cyclic(6)).size(), 1u);
}

TEST(Subgroups, PropertyNormalClosureIsSmallestNormalSupergroup) {
  const FiniteGroup g = symmetric(4);
  std::mt19937_64 rng(7);
  const auto normals = normal_subgroups(g);
  for (int trial = 0; trial < 40; ++trial) {
    const Elem seed[] = {static_cast<Elem>(rng() % g.order())};
    const SubgroupSet n = normal_closure(g, seed);
    EXPECT_TRUE(is_normal(n));
    for (const auto& m : normals) {
      if (m.contains(seed[0])) {
        EXPECT_TRUE(n.is_subset_of(m));
      }
    }
  }
}

TEST(Subgroups, PropertyCentralizerElementsCommute) {
  const FiniteGroup g = build_group("direct(alternating:4,cyclic:2)");
  for (Elem x = 0; x < g.order(); ++x) {
    const SubgroupSet c = centralizer(g, x);
    for (Elem y = 0; y < g.order(); ++y) EXPECT_EQ(c.contains(y), g.commute(x, y));
  }
}

TEST(Subgroups, MalnormalExamples) {
  const FiniteGroup s3 = symmetric(3);
  for (const auto& n : normal_subgroups(s3)) {
    if (n.size() == 3) {
      EXPECT_FALSE(is_malnormal(n).malnormal);
    }
  }
  const Elem t[] = {*s3.find_label("(1 2)")};
  EXPECT_TRUE(is_malnormal(subgroup_generated(s3, t)).malnormal);
}

TEST(Isomorphism, KnownPairs) {
  EXPECT_TRUE(is_isomorphic(alternating(5), build_group("psl2:4")).isomorphic);
  EXPECT_TRUE(is_isomorphic(alternating(4), build_group("psl2:3")).isomorphic);
  EXPECT_TRUE(is_isomorphic(build_group("psl2:4"), build_group("psl2:5")).isomorphic);
  EXPECT_TRUE(is_isomorphic(build_group("semidirect(cyclic:7,cyclic:3,power:2)"), frobenius_pq(3, 7)).isomorphic);
  EXPECT_TRUE(is_isomorphic(build_group("semidirect(direct(cyclic:2,cyclic:2),cyclic:3,involution-cycle)"),
                            alternating(4))
                  .isomorphic);
  EXPECT_FALSE(is_isomorphic(cyclic(4), build_group("direct(cyclic:2,cyclic:2)")).isomorphic);
  EXPECT_FALSE(is_isomorphic(dihedral(6), alternating(4)).isomorphic);
  const auto r = is_isomorphic(dihedral(3), symmetric(3));
  ASSERT_TRUE(r.isomorphic);
  const FiniteGroup d = dihedral(3), s = symmetric(3);
  for (Elem x = 0; x < d.order(); ++x)
    for (Elem y = 0; y < d.order(); ++y) EXPECT_EQ(r.map[d.mul(x, y)], s.mul(r.map[x], r.map[y]));
}

}  // namespace
