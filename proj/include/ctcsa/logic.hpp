#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctcsa/group.hpp"

namespace ctcsa {

/// One factor of a word: a variable, its inverse, or the constant 1 (empty
/// name).
struct Letter {
  std::string var;
  bool inverse = false;
  bool is_one() const noexcept { return var.empty(); }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Words are kept exactly as written after sugar expansion; the only
/// normalization is that 1 is dropped from words with other letters.
using Word = std::vector<Letter>;

struct Atom {
  Word lhs;
  bool equal = true;  // false for !=
  Word rhs;
  friend bool operator==(const Atom&, const Atom&) = default;
};

struct Formula {
  enum class Kind { atom, negation, conjunction, disjunction, implication };
  Kind kind = Kind::atom;
  Atom atom;                       // kind == atom
  std::vector<Formula> children;   // 1 for negation, 2 for implication, >= 2 otherwise

  static Formula make_atom(Atom a);
  static Formula negation(Formula f);
  /// Nested conjunctions are flattened; a single operand is returned as is.
  static Formula conjunction(std::vector<Formula> fs);
  static Formula disjunction(std::vector<Formula> fs);
  static Formula implication(Formula lhs, Formula rhs);

  friend bool operator==(const Formula&, const Formula&) = default;
};

enum class Quantifier { forall, exists };

struct Binding {
  Quantifier quantifier = Quantifier::forall;
  std::string var;
  friend bool operator==(const Binding&, const Binding&) = default;
};

/// A prenex sentence: quantifier prefix and quantifier-free matrix.
struct Sentence {
  std::vector<Binding> prefix;
  Formula matrix;
  friend bool operator==(const Sentence&, const Sentence&) = default;
};

/// Grammar (ASCII forms first, Unicode alternatives accepted):
///   sentence   := (("forall" | "∀" | "exists" | "∃") var ("," var)*)* formula
///   formula    := disjunct ("->" | "→") formula | disjunct
///   disjunct   := conjunct (("|" | "∨") conjunct)*
///   conjunct   := unary (("&" | "∧") unary)*
///   unary      := ("!" | "¬") unary | "(" formula ")" | word ("=" | "!=" | "≠") word
///   word       := factor+            factor := (var | "1" | "[" word "," word "]") ("^" "-"? digits)?
///   var        := letter (digit | "_")*
/// Throws SyntaxError (with a byte offset), UnboundVariable or DuplicateBinding.
Sentence parse_sentence(std::string_view text);

/// One sentence per non-blank line; text after '#' is ignored.
std::vector<Sentence> parse_sentence_lines(std::string_view text);

std::string to_string(const Word& w);
std::string to_string(const Formula& f);
/// Inserts parentheses only where needed, so parse_sentence(to_string(s)) == s.
std::string to_string(const Sentence& s);

/// Dual sentence with the matrix in negation normal form.
Sentence negate(const Sentence& s);
Formula negation_normal_form(const Formula& f, bool negated = false);

/// "CT", "MAL", "NOTMAL" give one sentence; "CSA" gives {CT, MAL}.  Throws
/// UnknownBuiltin.
std::vector<Sentence> builtin(std::string_view name);
/// Source text of a single-sentence builtin.
std::string builtin_text(std::string_view name);

struct EvalResult {
  bool verdict = false;
  /// Counterexample of a false all-universal sentence, or witness of a true
  /// all-existential one, in prefix order.
  std::optional<std::vector<std::pair<std::string, Elem>>> assignment;
  std::size_t sentence_index = 0;  // evaluate_all: the sentence that decided
};

/// Exhaustive evaluation in index order with three-valued pruning.  Throws
/// DepthCapExceeded for more than three quantifiers on groups above 600
/// elements.
EvalResult evaluate(const Sentence& s, const FiniteGroup& g);
/// Conjunction of sentences; stops at the first false one.
EvalResult evaluate_all(const std::vector<Sentence>& ss, const FiniteGroup& g);
/// The matrix under a full assignment of the prefix variables.
bool evaluate_matrix(const Sentence& s, const FiniteGroup& g, const std::vector<std::pair<std::string, Elem>>& assignment);

}  // namespace ctcsa
