#include "ctcsa/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "closure.hpp"

namespace ctcsa {

namespace {

constexpr std::uint32_t kIsoCap = 600;
constexpr Elem kUnset = static_cast<Elem>(-1);

// Partial map on <gens> defined by walking the Cayley graph.  False on a
// conflict or a collision.
bool walk(const FiniteGroup& g, const std::vector<Elem>& gens, const FiniteGroup& h, const std::vector<Elem>& images,
          std::vector<Elem>& phi) {
  phi.assign(g.order(), kUnset);
  Bitset used(h.order());
  std::vector<Elem> queue{0};
  phi[0] = 0;
  used.set(0);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Elem y = g.mul(x, gens[j]);
      const Elem fy = h.mul(phi[x], images[j]);
      if (phi[y] == kUnset) {
        if (used.test(fy)) return false;
        used.set(fy);
        phi[y] = fy;
        queue.push_back(y);
      } else if (phi[y] != fy) {
        return false;
      }
    }
  }
  return true;
}

struct Profile {
  std::uint32_t order;
  std::uint32_t centralizer;
  friend auto operator<=>(const Profile&, const Profile&) = default;
};

std::vector<Profile> profiles(const FiniteGroup& g) {
  std::vector<Profile> out(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    std::uint32_t c = 0;
    for (Elem y = 0; y < g.order(); ++y) c += g.commute(x, y) ? 1 : 0;
    out[x] = {g.element_order(x), c};
  }
  return out;
}

// Generators chosen greedily, largest element order first.
std::vector<Elem> greedy_generators(const FiniteGroup& g, const std::vector<Profile>& prof) {
  std::vector<Elem> order(g.order());
  for (Elem x = 0; x < g.order(); ++x) order[x] = x;
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return prof[a].order > prof[b].order; });
  detail::SubgroupCloser closer(g);
  for (Elem x : order) {
    if (closer.size() == g.order()) break;
    closer.add(x);
  }
  return closer.generators();
}

}  // namespace

std::vector<Elem> extend_homomorphism(const FiniteGroup& g, const std::vector<Elem>& gens, const FiniteGroup& h,
                                      const std::vector<Elem>& images) {
  if (gens.size() != images.size()) throw Error(ErrorCode::InvalidArgument, "one image per generator");
  std::vector<Elem> phi;
  if (!walk(g, gens, h, images, phi)) return {};
  if (std::find(phi.begin(), phi.end(), kUnset) != phi.end()) return {};
  return phi;
}

IsomorphismResult is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() > kIsoCap || h.order() > kIsoCap) {
    detail::throw_order_cap(kIsoCap, "isomorphism test of " + g.provenance() + " and " + h.provenance());
  }
  IsomorphismResult out;
  if (g.order() != h.order()) return out;
  const auto pg = profiles(g);
  const auto ph = profiles(h);
  {
    std::map<Profile, std::uint32_t> cg, ch;
    for (const auto& p : pg) ++cg[p];
    for (const auto& p : ph) ++ch[p];
    if (cg != ch) return out;
  }
  const auto gens = greedy_generators(g, pg);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Elem y = 0; y < h.order(); ++y) {
      if (ph[y] == pg[gens[i]]) candidates[i].push_back(y);
    }
  }
  std::vector<Elem> images;
  std::vector<Elem> phi;
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == gens.size()) {
      return walk(g, gens, h, images, phi) && std::find(phi.begin(), phi.end(), kUnset) == phi.end();
    }
    const std::vector<Elem> prefix(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(depth) + 1);
    for (Elem y : candidates[depth]) {
      images.push_back(y);
      if (walk(g, prefix, h, images, phi) && self(self, depth + 1)) return true;
      images.pop_back();
    }
    return false;
  };
  if (search(search, 0)) {
    out.isomorphic = true;
    out.generators = gens;
    out.images = images;
    out.map = phi;
  }
  return out;
}

}  // namespace ctcsa
