#include "ctcsa/subgroups.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "closure.hpp"

namespace ctcsa {

namespace {

// Trusted subgroup from a bitset already known to be closed.
SubgroupSet from_closed(const FiniteGroup& g, const Bitset& members) {
  detail::SubgroupCloser closer(g);
  for (auto i = members.find_first(); i != Bitset::npos; i = members.find_next(i)) {
    closer.add(static_cast<Elem>(i));
  }
  return std::move(closer).finish();
}

void require_members(const SubgroupSet& h, std::span<const Elem> xs) {
  for (Elem x : xs) {
    if (x >= h.parent().order() || !h.contains(x)) {
      throw Error(ErrorCode::InvalidArgument, "element " + std::to_string(x) + " is not in the ambient subgroup");
    }
  }
}

std::vector<std::vector<Elem>> orbits_under_conjugation(const FiniteGroup& g, const std::vector<Elem>& domain,
                                                        const std::vector<Elem>& conjugators) {
  Bitset seen(g.order());
  std::vector<std::vector<Elem>> classes;
  for (Elem x : domain) {
    if (seen.test(x)) continue;
    std::vector<Elem> cls{x};
    seen.set(x);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (Elem s : conjugators) {
        const Elem y = g.conj(s, cls[i]);
        if (!seen.test(y)) {
          seen.set(y);
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool by_size_then_members(const SubgroupSet& a, const SubgroupSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements() < b.elements();
}

}  // namespace

SubgroupSet centralizer(const FiniteGroup& g, Elem x) { return centralizer_in(SubgroupSet::whole(g), x); }

SubgroupSet centralizer_in(const SubgroupSet& h, Elem x) {
  const FiniteGroup& g = h.parent();
  Bitset members(g.order());
  for (Elem y : h.elements()) {
    if (g.commute(x, y)) members.set(y);
  }
  return from_closed(g, members);
}

SubgroupSet centralizer_of_subgroup(const SubgroupSet& of) {
  const FiniteGroup& g = of.parent();
  Bitset members(g.order());
  for (Elem y = 0; y < g.order(); ++y) {
    bool all = true;
    for (Elem s : of.generators()) {
      if (!g.commute(s, y)) {
        all = false;
        break;
      }
    }
    if (all) members.set(y);
  }
  return from_closed(g, members);
}

SubgroupSet center(const FiniteGroup& g) { return center_of(SubgroupSet::whole(g)); }

SubgroupSet center_of(const SubgroupSet& h) {
  const FiniteGroup& g = h.parent();
  Bitset members(g.order());
  for (Elem y : h.elements()) {
    bool all = true;
    for (Elem s : h.generators()) {
      if (!g.commute(s, y)) {
        all = false;
        break;
      }
    }
    if (all) members.set(y);
  }
  return from_closed(g, members);
}

SubgroupSet subgroup_generated(const FiniteGroup& g, std::span<const Elem> seeds) {
  detail::SubgroupCloser closer(g);
  for (Elem x : seeds) {
    if (x >= g.order()) throw Error(ErrorCode::InvalidArgument, "element index out of range");
    closer.add(x);
  }
  return std::move(closer).finish();
}

SubgroupSet normal_closure(const FiniteGroup& g, std::span<const Elem> seeds) {
  for (Elem x : seeds) {
    if (x >= g.order()) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  }
  detail::SubgroupCloser closer(g);
  closer.add_closed_under_conjugation(seeds, g.generators());
  return std::move(closer).finish();
}

SubgroupSet normal_closure_in(const SubgroupSet& ambient, std::span<const Elem> seeds) {
  require_members(ambient, seeds);
  detail::SubgroupCloser closer(ambient.parent());
  closer.add_closed_under_conjugation(seeds, ambient.generators());
  return std::move(closer).finish();
}

SubgroupSet join(const SubgroupSet& a, const SubgroupSet& b) {
  detail::SubgroupCloser closer(a.parent());
  for (Elem x : a.generators()) closer.add(x);
  for (Elem x : b.generators()) closer.add(x);
  return std::move(closer).finish();
}

SubgroupSet intersection(const SubgroupSet& a, const SubgroupSet& b) {
  return from_closed(a.parent(), a.members() & b.members());
}

bool is_normal(const SubgroupSet& h) { return is_normal_in(h, SubgroupSet::whole(h.parent())); }

bool is_normal_in(const SubgroupSet& h, const SubgroupSet& ambient) {
  if (!h.is_subset_of(ambient)) return false;
  const FiniteGroup& g = h.parent();
  for (Elem s : ambient.generators()) {
    for (Elem x : h.generators()) {
      if (!h.contains(g.conj(s, x))) return false;
    }
  }
  return true;
}

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g) {
  return conjugacy_classes_in(SubgroupSet::whole(g));
}

std::vector<std::vector<Elem>> conjugacy_classes_in(const SubgroupSet& h) {
  return orbits_under_conjugation(h.parent(), h.elements(), h.generators());
}

std::vector<SubgroupSet> normal_subgroups(const FiniteGroup& g, const Caps& caps) {
  if (g.order() > caps.normal_enum_cap) {
    detail::throw_order_cap(caps.normal_enum_cap, "normal-subgroup enumeration of " + g.provenance());
  }
  std::vector<SubgroupSet> all{SubgroupSet::trivial(g)};
  std::set<Bitset> known{all.front().members()};
  auto offer = [&](SubgroupSet s) {
    if (known.insert(s.members()).second) all.push_back(std::move(s));
  };
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.front() == 0) continue;
    const Elem rep[] = {cls.front()};
    offer(normal_closure(g, rep));
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (all[i].is_subset_of(all[j]) || all[j].is_subset_of(all[i])) continue;
      offer(join(all[i], all[j]));
    }
  }
  std::sort(all.begin(), all.end(), by_size_then_members);
  return all;
}

std::vector<SubgroupSet> minimal_normal_subgroups(const FiniteGroup& g, const Caps& caps) {
  const auto all = normal_subgroups(g, caps);
  std::vector<SubgroupSet> out;
  for (const auto& n : all) {
    if (n.is_trivial()) continue;
    const bool minimal = std::none_of(all.begin(), all.end(), [&](const SubgroupSet& m) {
      return !m.is_trivial() && m.size() < n.size() && m.is_subset_of(n);
    });
    if (minimal) out.push_back(n);
  }
  return out;
}

std::optional<SubgroupSet> monolith(const FiniteGroup& g, const Caps& caps) {
  auto mins = minimal_normal_subgroups(g, caps);
  if (mins.size() != 1) return std::nullopt;
  return mins.front();
}

bool is_simple(const FiniteGroup& g, const Caps&) {
  if (g.order() == 1) return false;
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.front() == 0) continue;
    const Elem rep[] = {cls.front()};
    if (!normal_closure(g, rep).is_whole()) return false;
  }
  return true;
}

std::optional<SubgroupSet> abelian_normal_subgroup(const SubgroupSet& h) {
  for (const auto& cls : conjugacy_classes_in(h)) {
    if (cls.front() == 0) continue;
    const Elem rep[] = {cls.front()};
    auto n = normal_closure_in(h, rep);
    if (n.is_abelian()) return n;
  }
  return std::nullopt;
}

SubgroupSet derived_subgroup(const SubgroupSet& h) {
  const FiniteGroup& g = h.parent();
  std::vector<Elem> seeds;
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(g.commutator(gens[i], gens[j]));
  }
  return normal_closure_in(h, seeds);
}

namespace {

std::vector<SubgroupSet> derived_series_of(const SubgroupSet& h) {
  std::vector<SubgroupSet> series{h};
  while (!series.back().is_trivial()) {
    auto next = derived_subgroup(series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

}  // namespace

std::vector<SubgroupSet> derived_series(const FiniteGroup& g) { return derived_series_of(SubgroupSet::whole(g)); }
bool is_solvable(const FiniteGroup& g) { return derived_series(g).back().is_trivial(); }
bool is_solvable(const SubgroupSet& h) { return derived_series_of(h).back().is_trivial(); }

std::optional<std::size_t> derived_length(const FiniteGroup& g) {
  const auto series = derived_series(g);
  if (!series.back().is_trivial()) return std::nullopt;
  return series.size() - 1;
}

std::vector<SubgroupSet> lower_central_series_of(const SubgroupSet& h) {
  const FiniteGroup& g = h.parent();
  std::vector<SubgroupSet> series{h};
  while (!series.back().is_trivial()) {
    std::vector<Elem> seeds;
    for (Elem a : series.back().generators()) {
      for (Elem s : h.generators()) seeds.push_back(g.commutator(a, s));
    }
    auto next = normal_closure_in(h, seeds);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<SubgroupSet> lower_central_series(const FiniteGroup& g) {
  return lower_central_series_of(SubgroupSet::whole(g));
}

bool is_nilpotent(const FiniteGroup& g) { return lower_central_series(g).back().is_trivial(); }
bool is_nilpotent(const SubgroupSet& h) { return lower_central_series_of(h).back().is_trivial(); }

SubgroupSet fitting_subgroup(const FiniteGroup& g, const Caps& caps) {
  SubgroupSet fit = SubgroupSet::trivial(g);
  for (const auto& n : normal_subgroups(g, caps)) {
    if (!n.is_subset_of(fit) && is_nilpotent(n)) fit = join(fit, n);
  }
  return fit;
}

namespace {

void collect_maximal_abelian(const SubgroupSet& h, std::set<Bitset>& visited,
                             std::map<std::vector<Elem>, SubgroupSet>& found) {
  if (!visited.insert(h.members()).second) return;
  if (h.is_abelian()) {
    found.emplace(h.elements(), h);
    return;
  }
  const SubgroupSet z = center_of(h);
  for (Elem y : h.elements()) {
    if (z.contains(y)) continue;
    collect_maximal_abelian(centralizer_in(h, y), visited, found);
  }
}

}  // namespace

std::vector<SubgroupSet> maximal_abelian_subgroups(const FiniteGroup& g) {
  std::set<Bitset> visited;
  std::map<std::vector<Elem>, SubgroupSet> found;
  collect_maximal_abelian(SubgroupSet::whole(g), visited, found);
  std::vector<SubgroupSet> out;
  out.reserve(found.size());
  for (auto& [key, s] : found) out.push_back(std::move(s));
  return out;
}

MalnormalResult is_malnormal(const SubgroupSet& h) {
  const FiniteGroup& g = h.parent();
  for (Elem x = 0; x < g.order(); ++x) {
    if (h.contains(x)) continue;
    for (Elem y : h.elements()) {
      if (y != 0 && h.contains(g.conj(x, y))) return {false, x, y};
    }
  }
  return {};
}

std::pair<FiniteGroup, std::vector<Elem>> subgroup_as_group(const SubgroupSet& h) {
  const FiniteGroup& g = h.parent();
  std::vector<Elem> gens = h.generators();
  if (gens.empty()) gens.push_back(0);
  auto result = close_generators_with_elements<Elem>(
      std::span<const Elem>(gens), [&](Elem a, Elem b) { return g.mul(a, b); }, [&](Elem a) { return g.inv(a); },
      [](Elem a) { return a; }, [&](Elem a) { return g.label(a); }, "subgroup of " + g.provenance(),
      static_cast<std::size_t>(g.order()) + 1);
  return {FiniteGroup(std::move(result.parts)), std::move(result.elements)};
}

}  // namespace ctcsa
