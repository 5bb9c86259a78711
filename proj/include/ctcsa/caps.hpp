#pragma once

#include <cstddef>

namespace ctcsa {

/// Size limits shared by the group engine, the deciders and the evaluator.
struct Caps {
  std::size_t order_cap = 4096;        // largest group built by closure
  std::size_t triple_scan_cap = 600;   // O(n^3) scans, isomorphism search
  std::size_t normal_enum_cap = 2000;  // normal-subgroup enumeration
};

/// Defaults, with CTCSA_ORDER_CAP from the environment applied when set.
const Caps& default_caps();

}  // namespace ctcsa
