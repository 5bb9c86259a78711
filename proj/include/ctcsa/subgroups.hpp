#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ctcsa/caps.hpp"
#include "ctcsa/group.hpp"

namespace ctcsa {

// Centralizers ------------------------------------------------------------

SubgroupSet centralizer(const FiniteGroup& g, Elem x);
/// C_H(x) for a subgroup H.
SubgroupSet centralizer_in(const SubgroupSet& h, Elem x);
/// Elements centralizing every member of `of`.
SubgroupSet centralizer_of_subgroup(const SubgroupSet& of);
SubgroupSet center(const FiniteGroup& g);
SubgroupSet center_of(const SubgroupSet& h);

// Closures -----------------------------------------------------------------

SubgroupSet subgroup_generated(const FiniteGroup& g, std::span<const Elem> seeds);
SubgroupSet normal_closure(const FiniteGroup& g, std::span<const Elem> seeds);
/// Normal closure of `seeds` inside the subgroup `ambient` (seeds must lie in it).
SubgroupSet normal_closure_in(const SubgroupSet& ambient, std::span<const Elem> seeds);
/// Smallest subgroup containing both.
SubgroupSet join(const SubgroupSet& a, const SubgroupSet& b);
SubgroupSet intersection(const SubgroupSet& a, const SubgroupSet& b);

bool is_normal(const SubgroupSet& h);
/// Is `h` normal in `ambient` (h must be contained in ambient)?
bool is_normal_in(const SubgroupSet& h, const SubgroupSet& ambient);

// Conjugacy and normal structure --------------------------------------------

/// Conjugacy classes, each sorted, ordered by smallest member.
std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g);
std::vector<std::vector<Elem>> conjugacy_classes_in(const SubgroupSet& h);

/// All normal subgroups, sorted by size then members.  Throws OrderCapExceeded
/// above caps.normal_enum_cap.
std::vector<SubgroupSet> normal_subgroups(const FiniteGroup& g, const Caps& caps = default_caps());
std::vector<SubgroupSet> minimal_normal_subgroups(const FiniteGroup& g, const Caps& caps = default_caps());
std::optional<SubgroupSet> monolith(const FiniteGroup& g, const Caps& caps = default_caps());
bool is_simple(const FiniteGroup& g, const Caps& caps = default_caps());

/// True iff `h` has a nontrivial abelian normal subgroup: some nontrivial
/// element whose normal closure in h is abelian (a minimal normal subgroup
/// is the normal closure of any of its nontrivial elements).
std::optional<SubgroupSet> abelian_normal_subgroup(const SubgroupSet& h);

// Series -------------------------------------------------------------------

SubgroupSet derived_subgroup(const SubgroupSet& h);
/// G = G^0 > G^1 > ... until the series stabilizes (the last entry repeats no more).
std::vector<SubgroupSet> derived_series(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);
bool is_solvable(const SubgroupSet& h);
/// Number of steps to reach the trivial group; nullopt when not solvable.
std::optional<std::size_t> derived_length(const FiniteGroup& g);

std::vector<SubgroupSet> lower_central_series(const FiniteGroup& g);
std::vector<SubgroupSet> lower_central_series_of(const SubgroupSet& h);
bool is_nilpotent(const FiniteGroup& g);
bool is_nilpotent(const SubgroupSet& h);
/// Join of all nilpotent normal subgroups.
SubgroupSet fitting_subgroup(const FiniteGroup& g, const Caps& caps = default_caps());

// Abelian structure ----------------------------------------------------------

/// Subgroups maximal among abelian subgroups, sorted.
std::vector<SubgroupSet> maximal_abelian_subgroups(const FiniteGroup& g);

struct MalnormalResult {
  bool malnormal = true;
  std::optional<Elem> violator;  // first g outside H with gHg^-1 ∩ H != 1
  std::optional<Elem> witness;   // an h != 1 in H with g h g^-1 in H
};

MalnormalResult is_malnormal(const SubgroupSet& h);

/// The subgroup as a FiniteGroup of its own, labels inherited from the parent.
/// The second member maps new indices to parent indices.
std::pair<FiniteGroup, std::vector<Elem>> subgroup_as_group(const SubgroupSet& h);

}  // namespace ctcsa
