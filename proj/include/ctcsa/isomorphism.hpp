#pragma once

#include <vector>

#include "ctcsa/group.hpp"

namespace ctcsa {

struct IsomorphismResult {
  bool isomorphic = false;
  std::vector<Elem> generators;  // a generating set of the first group
  std::vector<Elem> images;      // their images in the second group
  std::vector<Elem> map;         // full element map when isomorphic
};

/// Backtracking search over images of a small generating set of g, pruned by
/// element order and centralizer size.  Complete.  Throws OrderCapExceeded
/// above 600 elements.
IsomorphismResult is_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

/// Extends generator images to a full map by walking the Cayley graph of g.
/// Returns an empty vector if the images are inconsistent or the map is not
/// injective.
std::vector<Elem> extend_homomorphism(const FiniteGroup& g, const std::vector<Elem>& gens, const FiniteGroup& h,
                                      const std::vector<Elem>& images);

}  // namespace ctcsa
