#include "ctcsa/group.hpp"

#include <random>
#include <sstream>

#include "closure.hpp"

namespace ctcsa {

namespace detail {

void assemble_table(GroupParts& parts, const std::vector<Elem>& right, const std::vector<Elem>& parent,
                    const std::vector<std::uint32_t>& via, std::size_t gen_count) {
  const std::size_t n = parts.order;
  parts.table.assign(n * n, 0);
  parts.inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    Elem* row = parts.table.data() + a * n;
    row[0] = static_cast<Elem>(a);
    for (std::size_t j = 1; j < n; ++j) {
      row[j] = right[static_cast<std::size_t>(row[parent[j]]) * gen_count + via[j]];
      if (row[j] == 0) parts.inverse[a] = static_cast<Elem>(j);
    }
  }
  // Rows of a group table are permutations; anything else means the supplied
  // arithmetic was not associative.
  std::vector<std::uint32_t> seen(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const Elem* row = parts.table.data() + a * n;
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[row[j]] == a + 1) {
        throw Error(ErrorCode::NonClosedArithmetic, "closure produced a non-Latin table for " + parts.provenance);
      }
      seen[row[j]] = static_cast<std::uint32_t>(a + 1);
    }
  }
}

void throw_order_cap(std::size_t cap, const std::string& what) {
  throw Error(ErrorCode::OrderCapExceeded, what + " exceeds order cap " + std::to_string(cap));
}

}  // namespace detail

FiniteGroup::FiniteGroup(GroupParts parts) : d_(std::make_shared<const GroupParts>(std::move(parts))) {}

FiniteGroup FiniteGroup::from_table(std::uint32_t order, std::vector<Elem> table, std::vector<std::string> labels,
                                    std::string provenance) {
  if (order == 0 || table.size() != static_cast<std::size_t>(order) * order) {
    throw Error(ErrorCode::NonClosedArithmetic, "table size does not match order");
  }
  if (labels.empty()) {
    for (std::uint32_t i = 0; i < order; ++i) labels.push_back("g" + std::to_string(i));
  }
  if (labels.size() != order) throw Error(ErrorCode::InvalidArgument, "label count does not match order");
  GroupParts parts;
  parts.order = order;
  parts.table = std::move(table);
  parts.labels = std::move(labels);
  parts.provenance = std::move(provenance);
  parts.inverse.assign(order, 0);
  for (Elem x : parts.table) {
    if (x >= order) throw Error(ErrorCode::NonClosedArithmetic, "table entry out of range");
  }
  for (std::uint32_t a = 0; a < order; ++a) {
    for (std::uint32_t b = 0; b < order; ++b) {
      if (parts.table[static_cast<std::size_t>(a) * order + b] == 0) parts.inverse[a] = b;
    }
  }
  FiniteGroup g(std::move(parts));
  if (auto problem = check_group_axioms(g)) throw Error(ErrorCode::NonClosedArithmetic, *problem);
  // greedy generating set
  detail::SubgroupCloser closer(g);
  for (Elem x = 1; x < order; ++x) closer.add(x);
  GroupParts with_gens = *g.d_;
  with_gens.generators = closer.generators();
  return FiniteGroup(std::move(with_gens));
}

Elem FiniteGroup::power(Elem a, long long k) const {
  Elem base = k < 0 ? inv(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Elem acc = 0;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::uint32_t FiniteGroup::element_order(Elem a) const {
  std::uint32_t k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

FiniteGroup FiniteGroup::renamed(std::string provenance) const {
  GroupParts parts = *d_;
  parts.provenance = std::move(provenance);
  return FiniteGroup(std::move(parts));
}

bool FiniteGroup::is_abelian() const {
  const auto& gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commute(gens[i], gens[j])) return false;
    }
  }
  return true;
}

std::optional<Elem> FiniteGroup::find_label(const std::string& label) const {
  for (Elem i = 0; i < order(); ++i) {
    if (d_->labels[i] == label) return i;
  }
  return std::nullopt;
}

std::optional<std::string> check_group_axioms(const FiniteGroup& g) {
  const std::uint32_t n = g.order();
  for (Elem i = 0; i < n; ++i) {
    if (g.mul(0, i) != i || g.mul(i, 0) != i) return "index 0 is not the identity at " + std::to_string(i);
    if (g.mul(i, g.inv(i)) != 0 || g.mul(g.inv(i), i) != 0) return "bad inverse at " + std::to_string(i);
  }
  std::vector<std::uint32_t> row_seen(n, 0);
  std::vector<std::uint32_t> col_seen(n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem r = g.mul(a, b);
      const Elem c = g.mul(b, a);
      if (row_seen[r] == a + 1) return "row " + std::to_string(a) + " is not a permutation";
      if (col_seen[c] == a + 1) return "column " + std::to_string(a) + " is not a permutation";
      row_seen[r] = a + 1;
      col_seen[c] = a + 1;
    }
  }
  auto assoc = [&](Elem a, Elem b, Elem c) { return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)); };
  if (n <= 128) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (!assoc(a, b, c)) return "associativity fails";
  } else {
    std::mt19937_64 rng(0x5eed);
    for (int t = 0; t < 100000; ++t) {
      if (!assoc(static_cast<Elem>(rng() % n), static_cast<Elem>(rng() % n), static_cast<Elem>(rng() % n))) {
        return "associativity fails";
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

SubgroupSet::SubgroupSet(FiniteGroup parent, Bitset members, std::vector<Elem> generators)
    : parent_(std::move(parent)), members_(std::move(members)), generators_(std::move(generators)) {
  elements_.reserve(members_.count());
  for (auto i = members_.find_first(); i != Bitset::npos; i = members_.find_next(i)) {
    elements_.push_back(static_cast<Elem>(i));
  }
}

SubgroupSet SubgroupSet::from_members(const FiniteGroup& parent, Bitset members) {
  const std::uint32_t n = parent.order();
  if (members.size() != n) throw Error(ErrorCode::NotSubgroup, "bitset size does not match group order");
  if (!members.test(0)) throw Error(ErrorCode::NotSubgroup, "subset does not contain the identity");
  std::vector<Elem> elems;
  for (auto i = members.find_first(); i != Bitset::npos; i = members.find_next(i)) elems.push_back(static_cast<Elem>(i));
  for (Elem a : elems) {
    if (!members.test(parent.inv(a))) throw Error(ErrorCode::NotSubgroup, "not closed under inverses");
    for (Elem b : elems) {
      if (!members.test(parent.mul(a, b))) throw Error(ErrorCode::NotSubgroup, "not closed under multiplication");
    }
  }
  if (n % elems.size() != 0) throw Error(ErrorCode::NotSubgroup, "size does not divide the group order");
  detail::SubgroupCloser closer(parent);
  for (Elem x : elems) closer.add(x);
  return std::move(closer).finish();
}

SubgroupSet SubgroupSet::from_elements(const FiniteGroup& parent, std::span<const Elem> elements) {
  Bitset members(parent.order());
  for (Elem x : elements) {
    if (x >= parent.order()) throw Error(ErrorCode::NotSubgroup, "element index out of range");
    members.set(x);
  }
  return from_members(parent, std::move(members));
}

SubgroupSet SubgroupSet::whole(const FiniteGroup& parent) {
  Bitset all(parent.order());
  all.set();
  return SubgroupSet(parent, std::move(all), parent.generators());
}

SubgroupSet SubgroupSet::trivial(const FiniteGroup& parent) {
  Bitset one(parent.order());
  one.set(0);
  return SubgroupSet(parent, std::move(one), {});
}

bool SubgroupSet::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (!parent_.commute(generators_[i], generators_[j])) return false;
    }
  }
  return true;
}

std::string SubgroupSet::describe(std::size_t max_items) const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < elements_.size() && i < max_items; ++i) {
    if (i) out << ", ";
    out << parent_.label(elements_[i]);
  }
  if (elements_.size() > max_items) out << ", ... (" << elements_.size() << " elements)";
  out << "}";
  return out.str();
}

}  // namespace ctcsa
