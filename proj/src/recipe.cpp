#include "ctcsa/recipe.hpp"

#include <cctype>
#include <set>

#include "ctcsa/constructors.hpp"
#include "ctcsa/psl2.hpp"

namespace ctcsa {

namespace {

const std::set<std::string, std::less<>> kLeafArity1{"cyclic", "dihedral", "symmetric", "alternating", "psl2", "sl2"};

class RecipeParser {
 public:
  explicit RecipeParser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }
  }

  Recipe parse_all() {
    Recipe r = parse();
    if (pos_ != s_.size()) fail("trailing characters");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::RecipeError, "recipe '" + s_ + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  bool peek(char ch) const { return pos_ < s_.size() && s_[pos_] == ch; }

  void expect(char ch) {
    if (!peek(ch)) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  std::string name() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a family name");
    return s_.substr(start, pos_ - start);
  }

  std::uint32_t number() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > 0xffffffffULL) fail("number too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return static_cast<std::uint32_t>(v);
  }

  Recipe parse() {
    Recipe r;
    r.family = name();
    if (r.family == "direct" || r.family == "semidirect") {
      expect('(');
      r.children.push_back(parse());
      expect(',');
      r.children.push_back(parse());
      if (r.family == "semidirect") {
        expect(',');
        int depth = 0;
        const std::size_t start = pos_;
        while (pos_ < s_.size() && !(depth == 0 && s_[pos_] == ')')) {
          if (s_[pos_] == '(') ++depth;
          if (s_[pos_] == ')') --depth;
          ++pos_;
        }
        r.action = s_.substr(start, pos_ - start);
        if (r.action.empty()) fail("empty action name");
      }
      expect(')');
      return r;
    }
    const bool known = kLeafArity1.contains(r.family) || r.family == "frobenius";
    if (!known) fail("unknown family '" + r.family + "'");
    expect(':');
    r.params.push_back(number());
    while (peek(',') && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      r.params.push_back(number());
    }
    const std::size_t want = r.family == "frobenius" ? 2 : 1;
    if (r.params.size() != want) {
      fail(r.family + " takes " + std::to_string(want) + " parameter" + (want == 1 ? "" : "s"));
    }
    return r;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Recipe::to_string() const {
  if (family == "direct") return "direct(" + children[0].to_string() + "," + children[1].to_string() + ")";
  if (family == "semidirect") {
    return "semidirect(" + children[0].to_string() + "," + children[1].to_string() + "," + action + ")";
  }
  std::string out = family + ":";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(params[i]);
  }
  return out;
}

Recipe parse_recipe(std::string_view text) { return RecipeParser(text).parse_all(); }

FiniteGroup build_group(const Recipe& r, const Caps& caps) {
  if (r.family == "cyclic") return cyclic(r.params[0], caps);
  if (r.family == "dihedral") return dihedral(r.params[0], caps);
  if (r.family == "symmetric") return symmetric(r.params[0], caps);
  if (r.family == "alternating") return alternating(r.params[0], caps);
  if (r.family == "frobenius") return frobenius_pq(r.params[0], r.params[1], caps);
  if (r.family == "psl2" || r.family == "sl2") {
    return r.family == "psl2" ? psl2_group(r.params[0], caps) : sl2_group(r.params[0], caps);
  }
  if (r.family == "direct") {
    return direct_product(build_group(r.children[0], caps), build_group(r.children[1], caps), caps);
  }
  if (r.family == "semidirect") {
    const FiniteGroup a = build_group(r.children[0], caps);
    const FiniteGroup h = build_group(r.children[1], caps);
    return semidirect_product(a, h, named_action(a, h, r.action), caps).renamed(r.to_string());
  }
  throw Error(ErrorCode::RecipeError, "unknown family '" + r.family + "'");
}

FiniteGroup build_group(std::string_view text, const Caps& caps) { return build_group(parse_recipe(text), caps); }

}  // namespace ctcsa
