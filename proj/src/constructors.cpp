#include "ctcsa/constructors.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace ctcsa {

namespace {

// Permutations of points 0..n-1, composed left to right: (a*b)(i) = b(a(i)).
using Perm = std::u16string;

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Perm perm_inv(const Perm& a) {
  Perm r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<char16_t>(i);
  return r;
}

Perm perm_identity(std::size_t n) {
  Perm r(n, 0);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<char16_t>(i);
  return r;
}

Perm perm_cycle(std::size_t n, std::initializer_list<std::size_t> cycle) {
  Perm r = perm_identity(n);
  std::vector<std::size_t> c(cycle);
  for (std::size_t i = 0; i < c.size(); ++i) r[c[i]] = static_cast<char16_t>(c[(i + 1) % c.size()]);
  return r;
}

/// Cycle notation on points 1..n.
std::string cycle_label(const Perm& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

FiniteGroup close_perms(const std::vector<Perm>& gens, std::string provenance, const Caps& caps) {
  return close_generators<Perm>(std::span<const Perm>(gens), perm_mul, perm_inv, [](const Perm& p) { return p; },
                                cycle_label, std::move(provenance), caps.order_cap);
}

std::string power_label(const std::string& base, std::uint32_t k) {
  if (k == 0) return "";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a * b % m; }

std::uint32_t multiplicative_order(std::uint32_t r, std::uint32_t q) {
  std::uint32_t k = 1;
  for (std::uint64_t x = r % q; x != 1; x = mulmod(x, r, q)) {
    if (++k > q) return 0;
  }
  return k;
}

using Pair = std::pair<Elem, Elem>;

struct PairHashKey {
  std::uint64_t operator()(const Pair& p) const { return (static_cast<std::uint64_t>(p.first) << 32) | p.second; }
};

}  // namespace

FiniteGroup cyclic(std::uint32_t n, const Caps& caps) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclic group of order 0");
  if (n > caps.order_cap) detail::throw_order_cap(caps.order_cap, "cyclic:" + std::to_string(n));
  const std::vector<std::uint32_t> gens{n == 1 ? 0u : 1u};
  return close_generators<std::uint32_t>(
      std::span<const std::uint32_t>(gens), [n](std::uint32_t a, std::uint32_t b) { return (a + b) % n; },
      [n](std::uint32_t a) { return (n - a) % n; }, [](std::uint32_t a) { return a; },
      [](std::uint32_t k) { return k == 0 ? std::string("1") : power_label("a", k); }, "cyclic:" + std::to_string(n),
      caps.order_cap);
}

FiniteGroup dihedral(std::uint32_t n, const Caps& caps) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "dihedral:n needs n >= 3");
  if (2ull * n > caps.order_cap) detail::throw_order_cap(caps.order_cap, "dihedral:" + std::to_string(n));
  Perm rotation(n, 0);
  Perm reflection(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    rotation[i] = static_cast<char16_t>((i + 1) % n);
    reflection[i] = static_cast<char16_t>((n - i) % n);
  }
  return close_perms({rotation, reflection}, "dihedral:" + std::to_string(n), caps);
}

FiniteGroup symmetric(std::uint32_t n, const Caps& caps) {
  if (n == 0 || n > 7) throw Error(ErrorCode::InvalidArgument, "symmetric:n needs 1 <= n <= 7");
  if (n == 1) return close_perms({perm_identity(1)}, "symmetric:1", caps);
  Perm cycle(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) cycle[i] = static_cast<char16_t>((i + 1) % n);
  return close_perms({perm_cycle(n, {0, 1}), cycle}, "symmetric:" + std::to_string(n), caps);
}

FiniteGroup alternating(std::uint32_t n, const Caps& caps) {
  if (n == 0 || n > 7) throw Error(ErrorCode::InvalidArgument, "alternating:n needs 1 <= n <= 7");
  std::vector<Perm> gens;
  for (std::uint32_t i = 2; i < n; ++i) gens.push_back(perm_cycle(n, {0, 1, i}));
  if (gens.empty()) gens.push_back(perm_identity(n));
  return close_perms(gens, "alternating:" + std::to_string(n), caps);
}

std::uint32_t frobenius_exponent(std::uint32_t p, std::uint32_t q) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (!is_prime(q)) throw Error(ErrorCode::NonPrime, std::to_string(q) + " is not prime");
  if ((q - 1) % p != 0) {
    throw Error(ErrorCode::DivisibilityViolated, std::to_string(p) + " does not divide " + std::to_string(q) + " - 1");
  }
  for (std::uint32_t r = 2; r < q; ++r) {
    if (multiplicative_order(r, q) == p) return r;
  }
  throw Error(ErrorCode::DivisibilityViolated, "no element of order " + std::to_string(p) + " mod " + std::to_string(q));
}

FiniteGroup frobenius_pq(std::uint32_t p, std::uint32_t q, const Caps& caps) {
  const std::uint32_t r = frobenius_exponent(p, q);
  // r^b mod q for b < p
  std::vector<std::uint32_t> rpow(p, 1);
  for (std::uint32_t b = 1; b < p; ++b) rpow[b] = static_cast<std::uint32_t>(mulmod(rpow[b - 1], r, q));
  // (a, b) stands for x^a t^b; t^b x^a = x^(a r^b) t^b.
  auto mul = [&](const Pair& u, const Pair& v) {
    return Pair{static_cast<Elem>((u.first + mulmod(v.first, rpow[u.second], q)) % q), (u.second + v.second) % p};
  };
  auto inv = [&](const Pair& u) {
    const std::uint32_t b = (p - u.second) % p;
    return Pair{static_cast<Elem>(mulmod(q - u.first, rpow[b], q) % q), b};
  };
  auto label = [](const Pair& u) {
    std::string s = power_label("x", u.first);
    const std::string t = power_label("t", u.second);
    if (!s.empty() && !t.empty()) s += " ";
    s += t;
    return s.empty() ? std::string("1") : s;
  };
  const std::vector<Pair> gens{{1, 0}, {0, 1}};
  return close_generators<Pair>(std::span<const Pair>(gens), mul, inv, PairHashKey{}, label,
                                "frobenius:" + std::to_string(p) + "," + std::to_string(q), caps.order_cap);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const Caps& caps) {
  if (static_cast<std::uint64_t>(a.order()) * b.order() > caps.order_cap) {
    detail::throw_order_cap(caps.order_cap, "direct(" + a.provenance() + "," + b.provenance() + ")");
  }
  std::vector<Pair> gens;
  for (Elem x : a.generators()) gens.push_back({x, 0});
  for (Elem y : b.generators()) gens.push_back({0, y});
  if (gens.empty()) gens.push_back({0, 0});
  auto mul = [&](const Pair& u, const Pair& v) { return Pair{a.mul(u.first, v.first), b.mul(u.second, v.second)}; };
  auto inv = [&](const Pair& u) { return Pair{a.inv(u.first), b.inv(u.second)}; };
  auto label = [&](const Pair& u) { return "(" + a.label(u.first) + ", " + b.label(u.second) + ")"; };
  return close_generators<Pair>(std::span<const Pair>(gens), mul, inv, PairHashKey{}, label,
                                "direct(" + a.provenance() + "," + b.provenance() + ")", caps.order_cap);
}

bool is_automorphism(const FiniteGroup& a, const std::vector<Elem>& perm) {
  const std::uint32_t n = a.order();
  if (perm.size() != n || perm[0] != 0) return false;
  std::vector<bool> hit(n, false);
  for (Elem x : perm) {
    if (x >= n || hit[x]) return false;
    hit[x] = true;
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (perm[a.mul(x, y)] != a.mul(perm[x], perm[y])) return false;
    }
  }
  return true;
}

FiniteGroup semidirect_product(const FiniteGroup& a, const FiniteGroup& h, const ActionTable& action,
                               const Caps& caps) {
  if (action.size() != h.order()) {
    throw Error(ErrorCode::ActionNotHomomorphism, "action table needs one entry per element of the acting group");
  }
  for (Elem x = 0; x < h.order(); ++x) {
    if (!is_automorphism(a, action[x])) {
      throw Error(ErrorCode::ActionNotAutomorphism, "action of " + h.label(x) + " is not an automorphism");
    }
  }
  for (Elem x = 0; x < h.order(); ++x) {
    for (Elem y = 0; y < h.order(); ++y) {
      const auto& xy = action[h.mul(x, y)];
      for (Elem e = 0; e < a.order(); ++e) {
        if (xy[e] != action[x][action[y][e]]) {
          throw Error(ErrorCode::ActionNotHomomorphism,
                      "action of " + h.label(x) + " * " + h.label(y) + " is not the composite");
        }
      }
    }
  }
  const std::string name = "semidirect(" + a.provenance() + "," + h.provenance() + ")";
  if (static_cast<std::uint64_t>(a.order()) * h.order() > caps.order_cap) detail::throw_order_cap(caps.order_cap, name);

  // (a, h)^-1 = (action[h^-1](a^-1), h^-1)
  auto mul = [&](const Pair& u, const Pair& v) {
    return Pair{a.mul(u.first, action[u.second][v.first]), h.mul(u.second, v.second)};
  };
  auto inv = [&](const Pair& u) {
    const Elem hi = h.inv(u.second);
    return Pair{action[hi][a.inv(u.first)], hi};
  };
  auto label = [&](const Pair& u) { return "(" + a.label(u.first) + "; " + h.label(u.second) + ")"; };
  std::vector<Pair> gens;
  for (Elem x : a.generators()) gens.push_back({x, 0});
  for (Elem y : h.generators()) gens.push_back({0, y});
  if (gens.empty()) gens.push_back({0, 0});
  return close_generators<Pair>(std::span<const Pair>(gens), mul, inv, PairHashKey{}, label, name, caps.order_cap);
}

ActionTable named_action(const FiniteGroup& a, const FiniteGroup& h, const std::string& name) {
  if (h.generators().size() > 1) {
    throw Error(ErrorCode::RecipeError, "named actions need a cyclic acting group with one generator");
  }
  const std::uint32_t n = a.order();
  std::vector<Elem> base(n);
  std::iota(base.begin(), base.end(), 0);

  if (name.rfind("power:", 0) == 0) {
    long long r = 0;
    try {
      r = std::stoll(name.substr(6));
    } catch (const std::exception&) {
      throw Error(ErrorCode::RecipeError, "bad exponent in action '" + name + "'");
    }
    if (a.generators().size() > 1) throw Error(ErrorCode::RecipeError, "power action needs a cyclic group");
    if (n > 1) {
      const Elem gen = a.generators().front();
      for (std::uint32_t k = 0; k < n; ++k) base[a.power(gen, k)] = a.power(gen, static_cast<long long>(k) * r);
    }
  } else if (name == "inversion") {
    for (Elem x = 0; x < n; ++x) base[x] = a.inv(x);
  } else if (name == "involution-cycle") {
    std::vector<Elem> involutions;
    for (Elem x = 1; x < n; ++x) {
      if (a.element_order(x) == 2) involutions.push_back(x);
    }
    if (n != 4 || involutions.size() != 3) {
      throw Error(ErrorCode::RecipeError, "involution-cycle needs a group of order 4 with three involutions");
    }
    for (std::size_t i = 0; i < 3; ++i) base[involutions[i]] = involutions[(i + 1) % 3];
  } else {
    throw Error(ErrorCode::RecipeError, "unknown action '" + name + "'");
  }

  ActionTable table(h.order());
  std::vector<Elem> current(n);
  std::iota(current.begin(), current.end(), 0);
  if (h.order() == 1) {
    table[0] = current;
    return table;
  }
  const Elem gen = h.generators().front();
  Elem x = 0;
  for (std::uint32_t j = 0; j < h.order(); ++j) {
    table[x] = current;
    std::vector<Elem> next(n);
    for (Elem e = 0; e < n; ++e) next[e] = base[current[e]];
    current = std::move(next);
    x = h.mul(x, gen);
  }
  return table;
}

}  // namespace ctcsa
