// Test-only reference implementations.  Nothing here touches the library's
// tables or closures.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

// ---- polynomial arithmetic over GF(p) ------------------------------------

using Poly = std::vector<std::uint32_t>;  // lowest coefficient first

inline Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
  Poly prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  prod = trim(prod);
  const std::size_t deg = modulus.size() - 1;  // modulus is monic
  while (prod.size() > deg) {
    const std::uint32_t lead = prod.back();
    const std::size_t shift = prod.size() - 1 - deg;
    for (std::size_t i = 0; i <= deg; ++i) prod[shift + i] = (prod[shift + i] + p - lead * modulus[i] % p) % p;
    prod = trim(prod);
  }
  prod.resize(deg, 0);
  return prod;
}

inline Poly poly_add(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = ((i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0)) % p;
  }
  return out;
}

// ---- permutation groups --------------------------------------------------

using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {  // apply b, then a
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

inline Perm identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline std::vector<Perm> close(const std::vector<Perm>& gens) {
  std::set<Perm> seen{identity(static_cast<int>(gens.front().size()))};
  std::vector<Perm> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Perm y = compose(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline bool is_even(const Perm& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 == 0;
}

inline std::vector<Perm> symmetric(int n, bool even_only = false) {
  std::vector<Perm> out;
  Perm p = identity(n);
  do {
    if (!even_only || is_even(p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<Perm> dihedral(int n) {
  Perm r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  return close({r, s});
}

// Affine maps x -> a x + b on Z_q with a in the order-p subgroup of units.
inline std::vector<Perm> frobenius(int p, int q) {
  int a = 2;
  for (;; ++a) {
    int x = 1, k = 0;
    do {
      x = x * a % q;
      ++k;
    } while (x != 1);
    if (k == p) break;
  }
  Perm mul(q), add(q);
  for (int x = 0; x < q; ++x) {
    mul[x] = x * a % q;
    add[x] = (x + 1) % q;
  }
  return close({mul, add});
}

struct Stats {
  std::size_t order = 0;
  std::size_t center = 0;
  std::size_t commuting_pairs = 0;
  bool ct = true;
  std::map<std::size_t, std::size_t> order_histogram;
};

inline std::size_t perm_order(const Perm& p) {
  Perm x = p;
  const Perm e = identity(static_cast<int>(p.size()));
  std::size_t k = 1;
  while (x != e) {
    x = compose(x, p);
    ++k;
  }
  return k;
}

// CT by the literal definition: commuting is transitive on nontrivial elements.
inline Stats stats(const std::vector<Perm>& g) {
  Stats s;
  s.order = g.size();
  const std::size_t n = g.size();
  std::vector<std::vector<bool>> c(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = compose(g[i], g[j]) == compose(g[j], g[i]);
  const Perm e = identity(static_cast<int>(g.front().size()));
  for (std::size_t i = 0; i < n; ++i) {
    s.center += std::all_of(c[i].begin(), c[i].end(), [](bool b) { return b; });
    s.commuting_pairs += std::count(c[i].begin(), c[i].end(), true);
    ++s.order_histogram[perm_order(g[i])];
  }
  for (std::size_t y = 0; y < n && s.ct; ++y) {
    if (g[y] == e) continue;
    for (std::size_t x = 0; x < n && s.ct; ++x) {
      if (g[x] == e || !c[x][y]) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (g[z] != e && c[y][z] && !c[x][z]) {
          s.ct = false;
          break;
        }
      }
    }
  }
  return s;
}

// ---- 2x2 matrices over GF(p), p prime ------------------------------------

// |SL(2,p)| by enumerating every matrix with determinant 1.
inline std::size_t count_sl2(std::uint32_t p) {
  std::size_t count = 0;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        for (std::uint32_t d = 0; d < p; ++d) count += (a * d + p * p - b * c) % p == 1;
  return count;
}

inline std::uint64_t psl2_order_formula(std::uint64_t q) { return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1); }

}  // namespace oracle
