#pragma once

#include <deque>
#include <span>
#include <vector>

#include "ctcsa/group.hpp"

namespace ctcsa::detail {

/// Incremental subgroup closure.  Each accepted generator at least doubles
/// the subgroup, so at most log2(n) generators are ever kept.
class SubgroupCloser {
 public:
  explicit SubgroupCloser(const FiniteGroup& g) : g_(g), members_(g.order()) {
    members_.set(0);
    list_.push_back(0);
  }

  /// Extends the subgroup by x.  Returns false if x was already a member.
  bool add(Elem x) {
    if (members_.test(x)) return false;
    gens_.push_back(x);
    const std::size_t old = list_.size();
    for (std::size_t i = 0; i < old; ++i) push(g_.mul(list_[i], x));
    for (std::size_t j = old; j < list_.size(); ++j) {
      for (Elem s : gens_) push(g_.mul(list_[j], s));
    }
    return true;
  }

  /// Adds the seeds and keeps adding conjugates of every accepted generator
  /// by each conjugator until stable.
  void add_closed_under_conjugation(std::span<const Elem> seeds, std::span<const Elem> conjugators) {
    std::deque<Elem> pending(seeds.begin(), seeds.end());
    while (!pending.empty()) {
      const Elem c = pending.front();
      pending.pop_front();
      if (!add(c)) continue;
      for (Elem g : conjugators) pending.push_back(g_.conj(g, c));
    }
  }

  const Bitset& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return list_.size(); }
  const std::vector<Elem>& generators() const noexcept { return gens_; }

  SubgroupSet finish() && { return SubgroupSet(g_, std::move(members_), std::move(gens_)); }

 private:
  void push(Elem y) {
    if (!members_.test(y)) {
      members_.set(y);
      list_.push_back(y);
    }
  }

  const FiniteGroup& g_;
  Bitset members_;
  std::vector<Elem> list_;
  std::vector<Elem> gens_;
};

}  // namespace ctcsa::detail
