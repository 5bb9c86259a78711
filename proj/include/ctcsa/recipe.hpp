#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ctcsa/caps.hpp"
#include "ctcsa/group.hpp"

namespace ctcsa {

/// A parsed group recipe such as "psl2:7" or "direct(symmetric:3,cyclic:2)".
struct Recipe {
  std::string family;                  // cyclic, dihedral, ..., direct, semidirect
  std::vector<std::uint32_t> params;   // numeric parameters of leaf families
  std::vector<Recipe> children;        // operands of direct / semidirect
  std::string action;                  // semidirect only

  /// Canonical text form; parse_recipe(to_string()) reproduces the recipe.
  std::string to_string() const;
  friend bool operator==(const Recipe&, const Recipe&) = default;
};

/// Grammar:
///   recipe := leaf | "direct(" recipe "," recipe ")"
///           | "semidirect(" recipe "," recipe "," action ")"
///   leaf   := name ":" number ("," number)*
/// A comma followed by a digit continues the parameter list of a leaf.
/// Whitespace is ignored.  Throws RecipeError.
Recipe parse_recipe(std::string_view text);

FiniteGroup build_group(const Recipe& recipe, const Caps& caps = default_caps());
FiniteGroup build_group(std::string_view text, const Caps& caps = default_caps());

}  // namespace ctcsa
