#include <gtest/gtest.h>

#include <random>

#include "ctcsa/logic.hpp"
#include "ctcsa/properties.hpp"
#include "ctcsa/recipe.hpp"

using namespace ctcsa;

namespace {

ErrorCode code_of(std::string_view text) {
  try {
    parse_sentence(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

TEST(Parse, Examples) {
  const Sentence ct = parse_sentence("forall x,y,z ((y != 1 & [x,y] = 1 & [y,z] = 1) -> [x,z] = 1)");
  EXPECT_EQ(ct.prefix.size(), 3u);
  EXPECT_EQ(ct.matrix.kind, Formula::Kind::implication);
  EXPECT_EQ(ct, builtin("CT")[0]);
  EXPECT_NO_THROW(parse_sentence("forall x (x = x)"));
  EXPECT_EQ(code_of("forall x (y = 1)"), ErrorCode::UnboundVariable);
  EXPECT_EQ(code_of("forall x,x (x = x)"), ErrorCode::DuplicateBinding);
  EXPECT_EQ(code_of("forall x (x = )"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("forall x (x = x"), ErrorCode::SyntaxError);
}

TEST(Parse, SyntaxErrorCarriesPosition) {
  try {
    parse_sentence("forall x (x = x) &");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_GE(e.position(), 17u);
  }
}

TEST(Parse, UnicodeAndSugar) {
  const Sentence a = parse_sentence("∀x,y (¬([x,y] ≠ 1) ∨ x = y → x^2 = y^-1 y x x)");
  const Sentence b = parse_sentence("forall x,y (!(x^-1 y^-1 x y != 1) | x = y -> xx = y^-1yxx)");
  EXPECT_EQ(a, b);
  EXPECT_EQ(parse_sentence("exists x (x x = 1)"), parse_sentence("∃x (x^2 = 1)"));
}

TEST(Parse, SentenceLines) {
  const auto ss = parse_sentence_lines("# comment\nforall x (x = x)\n\nexists y (y = 1)  # trailing\n");
  EXPECT_EQ(ss.size(), 2u);
}

TEST(Builtins, Structure) {
  EXPECT_EQ(builtin("CSA"), (std::vector<Sentence>{builtin("CT")[0], builtin("MAL")[0]}));
  EXPECT_EQ(negate(builtin("MAL")[0]), builtin("NOTMAL")[0]);
  EXPECT_EQ(negate(negate(builtin("MAL")[0])).prefix, builtin("MAL")[0].prefix);
  for (const char* name : {"CT", "MAL", "NOTMAL"}) {
    const Sentence s = builtin(name)[0];
    EXPECT_EQ(parse_sentence(to_string(s)), s) << name;
    EXPECT_EQ(parse_sentence(builtin_text(name)), s) << name;
  }
  EXPECT_THROW(builtin("XYZ"), Error);
}

// ---- random round-trip --------------------------------------------------

class RandomSentences {
 public:
  explicit RandomSentences(std::uint64_t seed) : rng_(seed) {}

  Sentence next() {
    Sentence s;
    const std::vector<std::string> pool{"x", "y", "z", "w"};
    const std::size_t n = 1 + rng_() % 4;
    for (std::size_t i = 0; i < n; ++i) {
      s.prefix.push_back({rng_() % 2 ? Quantifier::forall : Quantifier::exists, pool[i]});
      vars_.push_back(pool[i]);
    }
    s.matrix = formula(3);
    vars_.clear();
    return s;
  }

 private:
  Word word() {
    if (rng_() % 6 == 0) return {Letter{}};
    Word w;
    const std::size_t len = 1 + rng_() % 4;
    for (std::size_t i = 0; i < len; ++i) w.push_back({vars_[rng_() % vars_.size()], rng_() % 3 == 0});
    return w;
  }

  Formula formula(int depth) {
    const auto pick = depth == 0 ? 0 : rng_() % 5;
    switch (pick) {
      case 1: return Formula::negation(formula(depth - 1));
      case 2: return Formula::conjunction({formula(depth - 1), formula(depth - 1), formula(depth - 1)});
      case 3: return Formula::disjunction({formula(depth - 1), formula(depth - 1)});
      case 4: return Formula::implication(formula(depth - 1), formula(depth - 1));
      default: return Formula::make_atom({word(), rng_() % 2 == 0, word()});
    }
  }

  std::mt19937_64 rng_;
  std::vector<std::string> vars_;
};

TEST(RoundTrip, HundredRandomSentences) {
  RandomSentences gen(20240601);
  for (int i = 0; i < 100; ++i) {
    const Sentence s = gen.next();
    const std::string text = to_string(s);
    Sentence back;
    ASSERT_NO_THROW(back = parse_sentence(text)) << text;
    EXPECT_EQ(back, s) << text;
  }
}

TEST(RoundTrip, NegationIsAnInvolutionOnVerdicts) {
  RandomSentences gen(99);
  const FiniteGroup g = build_group("symmetric:3");
  for (int i = 0; i < 60; ++i) {
    const Sentence s = gen.next();
    if (s.prefix.size() > 3) continue;
    EXPECT_EQ(evaluate(negate(s), g).verdict, !evaluate(s, g).verdict) << to_string(s);
  }
}

// ---- evaluation ---------------------------------------------------------

TEST(Evaluate, Examples) {
  const FiniteGroup s3 = build_group("symmetric:3");
  EXPECT_TRUE(evaluate(builtin("CT")[0], s3).verdict);
  const Sentence mal = builtin("MAL")[0];
  const EvalResult r = evaluate(mal, s3);
  EXPECT_FALSE(r.verdict);
  ASSERT_TRUE(r.assignment.has_value());
  EXPECT_FALSE(evaluate_matrix(mal, s3, *r.assignment));
  EXPECT_FALSE(evaluate(builtin("CT")[0], build_group("dihedral:4")).verdict);
  const EvalResult n = evaluate(builtin("NOTMAL")[0], s3);
  EXPECT_TRUE(n.verdict);
  ASSERT_TRUE(n.assignment.has_value());
  EXPECT_TRUE(evaluate_matrix(builtin("NOTMAL")[0], s3, *n.assignment));
}

TEST(Evaluate, MixedQuantifiers) {
  const FiniteGroup c6 = build_group("cyclic:6");
  EXPECT_TRUE(evaluate(parse_sentence("forall x exists y (y y = x x)"), c6).verdict);
  EXPECT_FALSE(evaluate(parse_sentence("forall x exists y (y y = x)"), c6).verdict);
  EXPECT_TRUE(evaluate(parse_sentence("exists x forall y (x y = y)"), c6).verdict);
  EXPECT_TRUE(evaluate(parse_sentence("forall x (x^6 = 1)"), c6).verdict);
}

TEST(Evaluate, AgreesWithDecidersOnSmallGroups) {
  for (const char* recipe : {"symmetric:3", "symmetric:4", "alternating:4", "dihedral:5", "frobenius:3,7", "cyclic:8",
                             "psl2:4", "direct(symmetric:3,cyclic:2)"}) {
    const FiniteGroup g = build_group(recipe);
    EXPECT_EQ(evaluate_all(builtin("CT"), g).verdict, is_ct(g).verdict) << recipe;
    EXPECT_EQ(evaluate_all(builtin("CSA"), g).verdict, is_csa(g).verdict) << recipe;
    EXPECT_EQ(evaluate(builtin("NOTMAL")[0], g).verdict, !evaluate(builtin("MAL")[0], g).verdict) << recipe;
  }
}

TEST(Evaluate, DepthCap) {
  const FiniteGroup big = build_group("psl2:11");
  EXPECT_THROW(evaluate(parse_sentence("forall a,b,c,d (a b c d = d c b a)"), big), Error);
  EXPECT_NO_THROW(evaluate(parse_sentence("forall a,b,c,d (a b c d = d c b a)"), build_group("cyclic:5")));
}

}  // namespace
