#pragma once

#include <string>
#include <vector>

#include "ctcsa/caps.hpp"
#include "ctcsa/group.hpp"

namespace ctcsa {

/// Z/n, elements labelled a^k.
FiniteGroup cyclic(std::uint32_t n, const Caps& caps = default_caps());
/// Symmetries of the n-gon as permutations of n points; order 2n, n >= 3.
FiniteGroup dihedral(std::uint32_t n, const Caps& caps = default_caps());
/// S_n on n <= 7 points.
FiniteGroup symmetric(std::uint32_t n, const Caps& caps = default_caps());
/// A_n on n <= 7 points.
FiniteGroup alternating(std::uint32_t n, const Caps& caps = default_caps());

/// C_q x| C_p with t x t^-1 = x^r, r the smallest element of multiplicative
/// order p mod q.  Throws NonPrime or DivisibilityViolated.
FiniteGroup frobenius_pq(std::uint32_t p, std::uint32_t q, const Caps& caps = default_caps());
/// The exponent r used by frobenius_pq.
std::uint32_t frobenius_exponent(std::uint32_t p, std::uint32_t q);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const Caps& caps = default_caps());

/// One automorphism of `a` (as an index permutation) per element of `h`.
using ActionTable = std::vector<std::vector<Elem>>;

/// A x| H with (a1, h1)(a2, h2) = (a1 action[h1](a2), h1 h2).  Every table
/// entry is checked to be an automorphism (ActionNotAutomorphism) and the map
/// h -> action[h] a homomorphism (ActionNotHomomorphism).
FiniteGroup semidirect_product(const FiniteGroup& a, const FiniteGroup& h, const ActionTable& action,
                               const Caps& caps = default_caps());

/// Builds an action of a cyclic group h on a from a named automorphism of a's
/// generator: "power:r" (a cyclic, x -> x^r), "inversion" (x -> x^-1),
/// "involution-cycle" (a of order 4 with three involutions, cycled in index
/// order).  Throws RecipeError for unknown names or a non-cyclic h.
ActionTable named_action(const FiniteGroup& a, const FiniteGroup& h, const std::string& name);

/// True iff perm is a bijection fixing 0 that respects a's table.
bool is_automorphism(const FiniteGroup& a, const std::vector<Elem>& perm);

}  // namespace ctcsa
