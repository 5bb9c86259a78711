#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ctcsa/caps.hpp"
#include "ctcsa/error.hpp"
#include "ctcsa/field.hpp"

namespace ctcsa {

/// Index of a group element inside its Cayley table.  Index 0 is the identity.
using Elem = std::uint32_t;
using Bitset = boost::dynamic_bitset<>;

/// Entries of 2x2 matrices as finite-field codes, one per group element.
struct MatrixRealization {
  FieldSpec field;
  bool projective = false;
  std::vector<std::array<std::uint32_t, 4>> entries;  // row-major a, b, c, d
};

/// Everything a FiniteGroup is made of.  Built by the constructors below and
/// frozen into a FiniteGroup.
struct GroupParts {
  std::uint32_t order = 0;
  std::vector<Elem> table;  // row-major order x order
  std::vector<Elem> inverse;
  std::vector<std::string> labels;
  std::vector<Elem> generators;
  std::string provenance;
  std::optional<MatrixRealization> matrices;
};

/// A closed finite group stored as a Cayley table.  Cheap to copy: copies
/// share the immutable table.
class FiniteGroup {
 public:
  /// Trusted: the parts must already satisfy the group invariants.
  explicit FiniteGroup(GroupParts parts);

  /// Validating constructor for a caller-supplied table (identity at 0, Latin
  /// square, associativity).  Throws NonClosedArithmetic.
  static FiniteGroup from_table(std::uint32_t order, std::vector<Elem> table, std::vector<std::string> labels,
                                std::string provenance);

  std::uint32_t order() const noexcept { return d_->order; }
  Elem mul(Elem a, Elem b) const noexcept { return d_->table[static_cast<std::size_t>(a) * d_->order + b]; }
  Elem inv(Elem a) const noexcept { return d_->inverse[a]; }
  /// g x g^-1
  Elem conj(Elem g, Elem x) const noexcept { return mul(mul(g, x), inv(g)); }
  /// a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const noexcept { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  bool commute(Elem a, Elem b) const noexcept { return mul(a, b) == mul(b, a); }
  Elem power(Elem a, long long k) const;
  std::uint32_t element_order(Elem a) const;

  std::span<const Elem> row(Elem a) const noexcept {
    return {d_->table.data() + static_cast<std::size_t>(a) * d_->order, d_->order};
  }
  std::span<const Elem> table() const noexcept { return d_->table; }
  const std::string& label(Elem a) const { return d_->labels.at(a); }
  const std::vector<std::string>& labels() const noexcept { return d_->labels; }
  const std::vector<Elem>& generators() const noexcept { return d_->generators; }
  const std::string& provenance() const noexcept { return d_->provenance; }
  const MatrixRealization* matrices() const noexcept { return d_->matrices ? &*d_->matrices : nullptr; }

  bool is_abelian() const;
  /// Elements by label; nullopt if absent.
  std::optional<Elem> find_label(const std::string& label) const;

  bool same_group(const FiniteGroup& other) const noexcept { return d_ == other.d_; }
  /// A copy of this group carrying a different provenance string.
  FiniteGroup renamed(std::string provenance) const;

 private:
  std::shared_ptr<const GroupParts> d_;
};

/// Checks every table invariant: identity at 0, Latin rows and columns,
/// inverses, and associativity (exhaustive up to 128 elements, otherwise
/// 10^5 pseudo-random triples).  Returns a description of the first failure.
std::optional<std::string> check_group_axioms(const FiniteGroup& g);

namespace detail {

/// Builds the Cayley table from a breadth-first closure: right[x * k + j] is
/// the index of x * gen_j, and element i > 0 was found as parent[i] * gen_via[i].
void assemble_table(GroupParts& parts, const std::vector<Elem>& right, const std::vector<Elem>& parent,
                    const std::vector<std::uint32_t>& via, std::size_t gen_count);

[[noreturn]] void throw_order_cap(std::size_t cap, const std::string& what);

}  // namespace detail

template <class T>
struct ClosureResult {
  GroupParts parts;
  std::vector<T> elements;  // elements[i] is the value at table index i
};

/// Breadth-first closure of `gens` under right multiplication.  `key` maps an
/// element to a hashable canonical form, so equal group elements must have
/// equal keys.  The identity is mul(g, inv(g)) for the first generator and is
/// placed at index 0; other elements are numbered by discovery.
template <class T, class Mul, class Inv, class Key, class Label>
ClosureResult<T> close_generators_with_elements(std::span<const T> gens, Mul&& mul, Inv&& inv, Key&& key,
                                                Label&& label, std::string provenance, std::size_t cap) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "closure needs at least one generator");
  using K = std::decay_t<decltype(key(gens[0]))>;

  const T identity = mul(gens[0], inv(gens[0]));
  const K identity_key = key(identity);
  for (const T& g : gens) {
    if (key(mul(g, inv(g))) != identity_key || key(mul(identity, g)) != key(g)) {
      throw Error(ErrorCode::NonClosedArithmetic, "generator arithmetic is not a group operation");
    }
  }

  ClosureResult<T> out;
  std::unordered_map<K, Elem> index;
  std::vector<Elem> parent{0};
  std::vector<std::uint32_t> via{0};
  std::vector<Elem> right;
  out.elements.push_back(identity);
  index.emplace(identity_key, 0);

  const std::size_t k = gens.size();
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      T next = mul(out.elements[i], gens[j]);
      auto [it, inserted] = index.try_emplace(key(next), static_cast<Elem>(out.elements.size()));
      if (inserted) {
        if (out.elements.size() >= cap) detail::throw_order_cap(cap, provenance);
        out.elements.push_back(std::move(next));
        parent.push_back(static_cast<Elem>(i));
        via.push_back(static_cast<std::uint32_t>(j));
      }
      right.push_back(it->second);
    }
  }

  GroupParts& parts = out.parts;
  parts.order = static_cast<std::uint32_t>(out.elements.size());
  parts.provenance = std::move(provenance);
  parts.labels.reserve(parts.order);
  for (const T& e : out.elements) parts.labels.push_back(label(e));
  for (std::size_t j = 0; j < k; ++j) {
    const Elem g = right[j];
    if (g != 0 && std::find(parts.generators.begin(), parts.generators.end(), g) == parts.generators.end()) {
      parts.generators.push_back(g);
    }
  }
  detail::assemble_table(parts, right, parent, via, k);
  return out;
}

template <class T, class Mul, class Inv, class Key, class Label>
FiniteGroup close_generators(std::span<const T> gens, Mul&& mul, Inv&& inv, Key&& key, Label&& label,
                             std::string provenance, std::size_t cap) {
  return FiniteGroup(close_generators_with_elements<T>(gens, mul, inv, key, label, std::move(provenance), cap).parts);
}

/// A subgroup of a FiniteGroup, as a membership bitset over element indices.
class SubgroupSet {
 public:
  /// Validates closure under the table and inverses.  Throws NotSubgroup.
  static SubgroupSet from_members(const FiniteGroup& parent, Bitset members);
  static SubgroupSet from_elements(const FiniteGroup& parent, std::span<const Elem> elements);
  static SubgroupSet whole(const FiniteGroup& parent);
  static SubgroupSet trivial(const FiniteGroup& parent);

  const FiniteGroup& parent() const noexcept { return parent_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Elem x) const { return members_.test(x); }
  const Bitset& members() const noexcept { return members_; }
  /// Members in increasing index order.
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  /// A generating set with at most log2(size) elements.
  const std::vector<Elem>& generators() const noexcept { return generators_; }

  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return elements_.size() == parent_.order(); }
  bool is_subset_of(const SubgroupSet& other) const { return members_.is_subset_of(other.members_); }
  bool is_abelian() const;

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.parent_.same_group(b.parent_) && a.members_ == b.members_;
  }
  /// Order by member bitset, used for deterministic sorted output.
  friend bool operator<(const SubgroupSet& a, const SubgroupSet& b) { return a.elements_ < b.elements_; }

  /// "{label, label, ...}"
  std::string describe(std::size_t max_items = 12) const;

  /// Trusted construction from a closure result.
  SubgroupSet(FiniteGroup parent, Bitset members, std::vector<Elem> generators);

 private:
  FiniteGroup parent_;
  Bitset members_;
  std::vector<Elem> elements_;
  std::vector<Elem> generators_;
};

}  // namespace ctcsa
