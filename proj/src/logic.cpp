#include "ctcsa/logic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace ctcsa {

// ---------------------------------------------------------------------------
// Construction

Formula Formula::make_atom(Atom a) {
  Formula f;
  f.kind = Kind::atom;
  f.atom = std::move(a);
  return f;
}

Formula Formula::negation(Formula g) {
  Formula f;
  f.kind = Kind::negation;
  f.children.push_back(std::move(g));
  return f;
}

namespace {

Formula flattened(Formula::Kind kind, std::vector<Formula> fs) {
  if (fs.empty()) throw Error(ErrorCode::InvalidArgument, "empty connective");
  if (fs.size() == 1) return std::move(fs.front());
  Formula f;
  f.kind = kind;
  for (auto& g : fs) {
    if (g.kind == kind) {
      for (auto& h : g.children) f.children.push_back(std::move(h));
    } else {
      f.children.push_back(std::move(g));
    }
  }
  return f;
}

}  // namespace

Formula Formula::conjunction(std::vector<Formula> fs) { return flattened(Kind::conjunction, std::move(fs)); }
Formula Formula::disjunction(std::vector<Formula> fs) { return flattened(Kind::disjunction, std::move(fs)); }

Formula Formula::implication(Formula lhs, Formula rhs) {
  Formula f;
  f.kind = Kind::implication;
  f.children.push_back(std::move(lhs));
  f.children.push_back(std::move(rhs));
  return f;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) {
    if (!l.is_one()) l.inverse = !l.inverse;
  }
  return out;
}

Word normalized(Word w) {
  const bool all_ones = std::all_of(w.begin(), w.end(), [](const Letter& l) { return l.is_one(); });
  if (all_ones) return Word{Letter{}};
  std::erase_if(w, [](const Letter& l) { return l.is_one(); });
  return w;
}

class SentenceParser {
 public:
  explicit SentenceParser(std::string_view text) : s_(text) {}

  Sentence parse() {
    Sentence out;
    for (;;) {
      skip_ws();
      std::optional<Quantifier> q;
      if (keyword("forall") || literal("∀")) {
        q = Quantifier::forall;
      } else if (keyword("exists") || literal("∃")) {
        q = Quantifier::exists;
      }
      if (!q) break;
      do {
        skip_ws();
        const std::size_t at = pos_;
        std::string v = variable();
        if (!bound_.insert(v).second) {
          throw Error(ErrorCode::DuplicateBinding, "variable '" + v + "' bound twice (offset " + std::to_string(at) + ")");
        }
        out.prefix.push_back({*q, std::move(v)});
        skip_ws();
      } while (literal(","));
    }
    out.matrix = formula();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected input");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(pos_, what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char cur() const { return at_end() ? '\0' : s_[pos_]; }

  bool literal(std::string_view lit) {
    if (s_.substr(pos_, lit.size()) != lit) return false;
    pos_ += lit.size();
    return true;
  }

  bool keyword(std::string_view kw) {
    if (s_.substr(pos_, kw.size()) != kw) return false;
    const std::size_t end = pos_ + kw.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
    pos_ = end;
    return true;
  }

  static bool is_letter(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) != 0; }

  std::string variable() {
    if (!is_letter(cur())) fail("expected a variable");
    std::string v(1, s_[pos_++]);
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(cur())) || cur() == '_')) v.push_back(s_[pos_++]);
    return v;
  }

  Formula formula() {
    Formula lhs = disjunct();
    skip_ws();
    if (literal("->") || literal("→")) {
      Formula rhs = formula();
      return Formula::implication(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Formula disjunct() {
    std::vector<Formula> parts{conjunct()};
    for (;;) {
      skip_ws();
      if (!(literal("|") || literal("∨"))) break;
      parts.push_back(conjunct());
    }
    return Formula::disjunction(std::move(parts));
  }

  Formula conjunct() {
    std::vector<Formula> parts{unary()};
    for (;;) {
      skip_ws();
      if (!(literal("&") || literal("∧"))) break;
      parts.push_back(unary());
    }
    return Formula::conjunction(std::move(parts));
  }

  Formula unary() {
    skip_ws();
    if (cur() == '!' && s_.substr(pos_, 2) != "!=") {
      ++pos_;
      return Formula::negation(unary());
    }
    if (literal("¬")) return Formula::negation(unary());
    if (literal("(")) {
      Formula f = formula();
      skip_ws();
      if (!literal(")")) fail("expected ')'");
      return f;
    }
    return Formula::make_atom(atom());
  }

  Atom atom() {
    Atom a;
    a.lhs = word();
    skip_ws();
    if (literal("!=") || literal("≠")) {
      a.equal = false;
    } else if (literal("=")) {
      a.equal = true;
    } else {
      fail("expected '=' or '!='");
    }
    a.rhs = word();
    return a;
  }

  bool starts_factor() {
    skip_ws();
    return is_letter(cur()) || cur() == '1' || cur() == '[';
  }

  Word word() {
    if (!starts_factor()) fail("expected a word");
    Word w;
    while (starts_factor()) {
      Word f = factor();
      w.insert(w.end(), f.begin(), f.end());
    }
    return normalized(std::move(w));
  }

  Word factor() {
    Word base;
    if (cur() == '[') {
      ++pos_;
      Word u = word();
      skip_ws();
      if (!literal(",")) fail("expected ',' in commutator");
      Word v = word();
      skip_ws();
      if (!literal("]")) fail("expected ']'");
      // [u, v] = u^-1 v^-1 u v
      base = inverse_word(u);
      const Word vi = inverse_word(v);
      base.insert(base.end(), vi.begin(), vi.end());
      base.insert(base.end(), u.begin(), u.end());
      base.insert(base.end(), v.begin(), v.end());
    } else if (cur() == '1') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(cur()))) fail("the only numeric constant is 1");
      base.push_back(Letter{});
    } else {
      const std::size_t at = pos_;
      std::string v = variable();
      if (!bound_.contains(v)) {
        throw Error(ErrorCode::UnboundVariable, "variable '" + v + "' is not bound (offset " + std::to_string(at) + ")");
      }
      base.push_back(Letter{std::move(v), false});
    }
    skip_ws();
    if (!literal("^")) return base;
    skip_ws();
    const bool negative = literal("-");
    if (!std::isdigit(static_cast<unsigned char>(cur()))) fail("expected an exponent");
    long long k = 0;
    while (std::isdigit(static_cast<unsigned char>(cur()))) {
      k = k * 10 + (s_[pos_++] - '0');
      if (k > 1000) fail("exponent too large");
    }
    const Word unit = negative ? inverse_word(base) : base;
    Word out;
    for (long long i = 0; i < k; ++i) out.insert(out.end(), unit.begin(), unit.end());
    if (out.empty()) out.push_back(Letter{});
    return out;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::set<std::string> bound_;
};

}  // namespace

Sentence parse_sentence(std::string_view text) { return SentenceParser(text).parse(); }

std::vector<Sentence> parse_sentence_lines(std::string_view text) {
  std::vector<Sentence> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) out.push_back(parse_sentence(line));
    start = end + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

int precedence(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::implication: return 1;
    case Formula::Kind::disjunction: return 2;
    case Formula::Kind::conjunction: return 3;
    case Formula::Kind::negation: return 4;
    case Formula::Kind::atom: return 5;
  }
  return 5;
}

std::string print(const Formula& f, int min_prec) {
  std::string body;
  switch (f.kind) {
    case Formula::Kind::atom:
      body = to_string(f.atom.lhs) + (f.atom.equal ? " = " : " != ") + to_string(f.atom.rhs);
      break;
    case Formula::Kind::negation: {
      const Formula& c = f.children[0];
      body = "!" + (c.kind == Formula::Kind::atom ? "(" + print(c, 0) + ")" : print(c, 4));
      break;
    }
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: {
      const bool conj = f.kind == Formula::Kind::conjunction;
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        if (i) body += conj ? " & " : " | ";
        body += print(f.children[i], conj ? 4 : 3);
      }
      break;
    }
    case Formula::Kind::implication:
      body = print(f.children[0], 2) + " -> " + print(f.children[1], 1);
      break;
  }
  return precedence(f) < min_prec ? "(" + body + ")" : body;
}

}  // namespace

std::string to_string(const Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (l.is_one()) {
      out += "1";
    } else {
      out += l.var;
      if (l.inverse) out += "^-1";
    }
  }
  return out;
}

std::string to_string(const Formula& f) { return print(f, 0); }

std::string to_string(const Sentence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.prefix.size(); ++i) {
    const bool starts_group = i == 0 || s.prefix[i - 1].quantifier != s.prefix[i].quantifier;
    if (starts_group) {
      if (i) out += " ";
      out += s.prefix[i].quantifier == Quantifier::forall ? "forall " : "exists ";
    } else {
      out += ",";
    }
    out += s.prefix[i].var;
  }
  if (s.prefix.empty()) return to_string(s.matrix);
  return out + " (" + to_string(s.matrix) + ")";
}

// ---------------------------------------------------------------------------
// Negation and builtins

Formula negation_normal_form(const Formula& f, bool negated) {
  switch (f.kind) {
    case Formula::Kind::atom: {
      Atom a = f.atom;
      if (negated) a.equal = !a.equal;
      return Formula::make_atom(std::move(a));
    }
    case Formula::Kind::negation: return negation_normal_form(f.children[0], !negated);
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: {
      std::vector<Formula> parts;
      for (const auto& c : f.children) parts.push_back(negation_normal_form(c, negated));
      const bool conj = (f.kind == Formula::Kind::conjunction) != negated;
      return conj ? Formula::conjunction(std::move(parts)) : Formula::disjunction(std::move(parts));
    }
    case Formula::Kind::implication: {
      Formula lhs = negation_normal_form(f.children[0], false);
      Formula rhs = negation_normal_form(f.children[1], negated);
      if (!negated) return Formula::implication(std::move(lhs), std::move(rhs));
      std::vector<Formula> parts;
      parts.push_back(std::move(lhs));
      parts.push_back(std::move(rhs));
      return Formula::conjunction(std::move(parts));
    }
  }
  return f;
}

Sentence negate(const Sentence& s) {
  Sentence out;
  for (const auto& b : s.prefix) {
    out.prefix.push_back({b.quantifier == Quantifier::forall ? Quantifier::exists : Quantifier::forall, b.var});
  }
  out.matrix = negation_normal_form(s.matrix, true);
  return out;
}

std::string builtin_text(std::string_view name) {
  if (name == "CT") return "forall x,y,z ((y != 1 & [x,y] = 1 & [y,z] = 1) -> [x,z] = 1)";
  if (name == "MAL") return "forall x,y,z ((x != 1 & y != 1 & [x,y] = 1 & [x,z^-1 y z] = 1) -> [y,z] = 1)";
  if (name == "NOTMAL") return "exists x,y,z (x != 1 & y != 1 & [x,y] = 1 & [x,z^-1 y z] = 1 & [y,z] != 1)";
  throw Error(ErrorCode::UnknownBuiltin, "no single-sentence builtin named '" + std::string(name) + "'");
}

std::vector<Sentence> builtin(std::string_view name) {
  if (name == "CSA") return {parse_sentence(builtin_text("CT")), parse_sentence(builtin_text("MAL"))};
  if (name == "CT" || name == "MAL" || name == "NOTMAL") return {parse_sentence(builtin_text(name))};
  throw Error(ErrorCode::UnknownBuiltin, "unknown builtin '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

constexpr std::size_t kDeepPrefixOrderCap = 600;

struct CompiledAtom {
  std::vector<std::pair<std::size_t, bool>> lhs, rhs;  // (slot, inverse)
  bool equal = true;
  int max_slot = -1;
};

struct Node {
  Formula::Kind kind;
  std::size_t atom = 0;
  std::vector<Node> children;
};

// Truth values: 0 false, 1 true, 2 unknown.
class Evaluator {
 public:
  Evaluator(const Sentence& s, const FiniteGroup& g) : s_(s), g_(g), values_(s.prefix.size(), 0) {
    for (std::size_t i = 0; i < s.prefix.size(); ++i) slot_[s.prefix[i].var] = i;
    root_ = compile(s.matrix);
    atom_value_.assign(atoms_.size(), 2);
  }

  std::vector<std::pair<std::size_t, bool>> compile_word(const Word& w, int& max_slot) {
    std::vector<std::pair<std::size_t, bool>> out;
    for (const auto& l : w) {
      if (l.is_one()) continue;
      auto it = slot_.find(l.var);
      if (it == slot_.end()) throw Error(ErrorCode::UnboundVariable, "variable '" + l.var + "' is not bound");
      out.emplace_back(it->second, l.inverse);
      max_slot = std::max(max_slot, static_cast<int>(it->second));
    }
    return out;
  }

  Node compile(const Formula& f) {
    Node n{f.kind, 0, {}};
    if (f.kind == Formula::Kind::atom) {
      CompiledAtom a;
      a.lhs = compile_word(f.atom.lhs, a.max_slot);
      a.rhs = compile_word(f.atom.rhs, a.max_slot);
      a.equal = f.atom.equal;
      n.atom = atoms_.size();
      atoms_.push_back(std::move(a));
    }
    for (const auto& c : f.children) n.children.push_back(compile(c));
    return n;
  }

  Elem word_value(const std::vector<std::pair<std::size_t, bool>>& w) const {
    Elem acc = 0;
    for (const auto& [slot, inverse] : w) acc = g_.mul(acc, inverse ? g_.inv(values_[slot]) : values_[slot]);
    return acc;
  }

  void refresh_atoms(int level) {
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      const auto& a = atoms_[i];
      if (a.max_slot != level) continue;
      atom_value_[i] = ((word_value(a.lhs) == word_value(a.rhs)) == a.equal) ? 1 : 0;
    }
  }

  int kleene(const Node& n, int level) const {
    switch (n.kind) {
      case Formula::Kind::atom: return atoms_[n.atom].max_slot <= level ? atom_value_[n.atom] : 2;
      case Formula::Kind::negation: {
        const int v = kleene(n.children[0], level);
        return v == 2 ? 2 : 1 - v;
      }
      case Formula::Kind::conjunction: {
        int out = 1;
        for (const auto& c : n.children) {
          const int v = kleene(c, level);
          if (v == 0) return 0;
          if (v == 2) out = 2;
        }
        return out;
      }
      case Formula::Kind::disjunction: {
        int out = 0;
        for (const auto& c : n.children) {
          const int v = kleene(c, level);
          if (v == 1) return 1;
          if (v == 2) out = 2;
        }
        return out;
      }
      case Formula::Kind::implication: {
        const int a = kleene(n.children[0], level);
        if (a == 0) return 1;
        const int b = kleene(n.children[1], level);
        if (b == 1) return 1;
        if (a == 1 && b == 0) return 0;
        return 2;
      }
    }
    return 2;
  }

  EvalResult run() {
    const auto& prefix = s_.prefix;
    if (prefix.size() > 3 && g_.order() > kDeepPrefixOrderCap) {
      throw Error(ErrorCode::DepthCapExceeded, std::to_string(prefix.size()) + " quantifiers over a group of order " +
                                                   std::to_string(g_.order()));
    }
    std::optional<Quantifier> uniform;
    if (!prefix.empty()) {
      uniform = prefix[0].quantifier;
      for (const auto& b : prefix) {
        if (b.quantifier != *uniform) uniform.reset();
      }
    }
    refresh_atoms(-1);
    EvalResult out;
    const int pre = kleene(root_, -1);
    if (pre != 2) {
      out.verdict = pre == 1;
    } else {
      out.verdict = recurse(0, uniform);
    }
    if (uniform && captured_ && out.verdict == (*uniform == Quantifier::exists)) {
      std::vector<std::pair<std::string, Elem>> a;
      for (std::size_t i = 0; i < prefix.size(); ++i) a.emplace_back(prefix[i].var, (*captured_)[i]);
      out.assignment = std::move(a);
    } else if (uniform && pre != 2 && out.verdict == (*uniform == Quantifier::exists)) {
      std::vector<std::pair<std::string, Elem>> a;
      for (const auto& b : prefix) a.emplace_back(b.var, 0);
      out.assignment = std::move(a);
    }
    return out;
  }

  bool check(const std::vector<Elem>& values) {
    values_ = values;
    const int depth = static_cast<int>(values_.size());
    for (int l = -1; l < depth; ++l) refresh_atoms(l);
    return kleene(root_, depth) == 1;
  }

 private:
  bool recurse(std::size_t level, const std::optional<Quantifier>& uniform) {
    const bool forall = s_.prefix[level].quantifier == Quantifier::forall;
    const int lv = static_cast<int>(level);
    for (Elem v = 0; v < g_.order(); ++v) {
      values_[level] = v;
      refresh_atoms(lv);
      int r = kleene(root_, lv);
      if (r != 2) {
        if (uniform && !captured_ && (r == 1) == !forall) {
          std::vector<Elem> snap(values_.begin(), values_.begin() + lv + 1);
          snap.resize(values_.size(), 0);
          captured_ = std::move(snap);
        }
      } else {
        r = recurse(level + 1, uniform) ? 1 : 0;
      }
      if (forall && r == 0) return false;
      if (!forall && r == 1) return true;
    }
    return forall;
  }

  const Sentence& s_;
  const FiniteGroup& g_;
  std::map<std::string, std::size_t> slot_;
  std::vector<CompiledAtom> atoms_;
  std::vector<int> atom_value_;
  Node root_;
  std::vector<Elem> values_;
  std::optional<std::vector<Elem>> captured_;
};

}  // namespace

EvalResult evaluate(const Sentence& s, const FiniteGroup& g) { return Evaluator(s, g).run(); }

EvalResult evaluate_all(const std::vector<Sentence>& ss, const FiniteGroup& g) {
  EvalResult last;
  last.verdict = true;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    last = evaluate(ss[i], g);
    last.sentence_index = i;
    if (!last.verdict) return last;
  }
  return last;
}

bool evaluate_matrix(const Sentence& s, const FiniteGroup& g,
                     const std::vector<std::pair<std::string, Elem>>& assignment) {
  std::vector<Elem> values(s.prefix.size(), 0);
  std::vector<bool> set(s.prefix.size(), false);
  for (const auto& [name, value] : assignment) {
    for (std::size_t i = 0; i < s.prefix.size(); ++i) {
      if (s.prefix[i].var == name) {
        if (value >= g.order()) throw Error(ErrorCode::InvalidArgument, "element index out of range");
        values[i] = value;
        set[i] = true;
      }
    }
  }
  if (std::find(set.begin(), set.end(), false) != set.end()) {
    throw Error(ErrorCode::InvalidArgument, "assignment does not cover every bound variable");
  }
  return Evaluator(s, g).check(values);
}

}  // namespace ctcsa
