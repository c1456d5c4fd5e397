#pragma once

// Slow reference implementations used only by tests. They work on plain
// tables and vectors and share no code with the library's algorithms.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "centra/group.hpp"

namespace oracle {

using Table = std::vector<std::vector<std::size_t>>;
using Subset = std::vector<bool>;

inline Table table_of(const centra::FiniteGroup& g) {
  const std::size_t n = g.order();
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a][b] = g.mul(static_cast<centra::Element>(a), static_cast<centra::Element>(b));
  return t;
}

inline std::size_t identity(const Table& t) {
  for (std::size_t e = 0; e < t.size(); ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < t.size() && ok; ++x) ok = t[e][x] == x && t[x][e] == x;
    if (ok) return e;
  }
  return t.size();
}

inline Subset centralizer(const Table& t, std::size_t x) {
  Subset c(t.size());
  for (std::size_t y = 0; y < t.size(); ++y) c[y] = t[x][y] == t[y][x];
  return c;
}

inline Subset center(const Table& t) {
  Subset z(t.size(), true);
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y)
      if (t[x][y] != t[y][x]) z[x] = false;
  return z;
}

inline std::size_t count(const Subset& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

/// Number of distinct centralizers, comparing every pair element by element.
inline std::size_t cent_count_all_pairs(const Table& t) {
  std::vector<Subset> distinct;
  for (std::size_t x = 0; x < t.size(); ++x) {
    Subset c = centralizer(t, x);
    bool seen = false;
    for (const Subset& d : distinct) {
      bool same = true;
      for (std::size_t i = 0; i < t.size() && same; ++i) same = c[i] == d[i];
      if (same) {
        seen = true;
        break;
      }
    }
    if (!seen) distinct.push_back(std::move(c));
  }
  return distinct.size();
}

/// Closure of `gens` by repeated multiplication until nothing new appears.
inline Subset closure(const Table& t, const std::vector<std::size_t>& gens) {
  Subset s(t.size());
  std::vector<std::size_t> members{identity(t)};
  s[members[0]] = true;
  for (std::size_t g : gens)
    if (!s[g]) {
      s[g] = true;
      members.push_back(g);
    }
  for (bool grew = true; grew;) {
    grew = false;
    const auto snapshot = members;
    for (std::size_t a : snapshot)
      for (std::size_t b : snapshot)
        if (!s[t[a][b]]) {
          s[t[a][b]] = true;
          members.push_back(t[a][b]);
          grew = true;
        }
  }
  return s;
}

/// Subgroup count by testing every subset for closure. Only for order <= 12.
inline std::size_t subgroup_count_by_subsets(const Table& t) {
  const std::size_t n = t.size();
  const std::size_t e = identity(t);
  std::size_t found = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (((mask >> e) & 1U) == 0) continue;
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a)
      for (std::size_t b = 0; b < n && closed; ++b)
        if (((mask >> a) & 1U) && ((mask >> b) & 1U)) closed = (mask >> t[a][b]) & 1U;
    if (closed) ++found;
  }
  return found;
}

/// Subgroup count for groups whose subgroups are all 2-generated.
inline std::size_t subgroup_count_two_generated(const Table& t) {
  std::set<Subset> seen;
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a; b < t.size(); ++b) seen.insert(closure(t, {a, b}));
  return seen.size();
}

inline std::size_t element_order(const Table& t, std::size_t x) {
  const std::size_t e = identity(t);
  std::size_t k = 1;
  for (std::size_t p = x; p != e; p = t[p][x]) ++k;
  return k;
}

inline std::map<std::size_t, std::size_t> order_histogram(const Table& t) {
  std::map<std::size_t, std::size_t> h;
  for (std::size_t x = 0; x < t.size(); ++x) ++h[element_order(t, x)];
  return h;
}

/// Sizes of G, G', G'', ... computed from explicit commutators.
inline std::vector<std::size_t> derived_sizes(const Table& t) {
  const std::size_t n = t.size();
  std::vector<std::size_t> inv(n);
  const std::size_t e = identity(t);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (t[x][y] == e) inv[x] = y;
  Subset current(n, true);
  std::vector<std::size_t> sizes{n};
  while (true) {
    std::vector<std::size_t> comms;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (current[a] && current[b]) comms.push_back(t[t[inv[a]][inv[b]]][t[a][b]]);
    Subset next = closure(t, comms);
    if (next == current) break;
    current = std::move(next);
    sizes.push_back(count(current));
  }
  return sizes;
}

/// Largest pairwise non-commuting subset, by checking every subset. n <= 20.
inline std::size_t max_noncommuting_subsets(const Table& t) {
  const std::size_t n = t.size();
  std::size_t best = 1;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = a + 1; b < n && ok; ++b)
        if (((mask >> a) & 1U) && ((mask >> b) & 1U)) ok = t[a][b] != t[b][a];
    if (ok) best = size;
  }
  return best;
}

/// Largest pairwise non-commuting set by Bron-Kerbosch with pivoting on the
/// element-level graph, without any coset or centralizer reduction.
inline std::size_t max_noncommuting_bron_kerbosch(const Table& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) adj[a][b] = t[a][b] != t[b][a];
  std::size_t best = 1;
  const auto recurse = [&](auto&& self, std::size_t size, std::vector<std::size_t> p,
                           std::vector<std::size_t> x) -> void {
    if (p.empty() && x.empty()) {
      best = std::max(best, size);
      return;
    }
    if (size + p.size() <= best) return;
    std::size_t pivot = p.empty() ? x.front() : p.front();
    std::size_t most = 0;
    for (const auto* set : {&p, &x})
      for (std::size_t u : *set) {
        std::size_t d = 0;
        for (std::size_t v : p) d += adj[u][v] ? 1 : 0;
        if (d >= most) {
          most = d;
          pivot = u;
        }
      }
    const auto candidates = p;
    for (std::size_t v : candidates) {
      if (adj[pivot][v]) continue;
      std::vector<std::size_t> p2, x2;
      for (std::size_t u : p)
        if (adj[v][u]) p2.push_back(u);
      for (std::size_t u : x)
        if (adj[v][u]) x2.push_back(u);
      self(self, size + 1, std::move(p2), std::move(x2));
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  recurse(recurse, 0, all, {});
  return best;
}

/// Isomorphism by trying every bijection. n <= 8.
inline bool isomorphic_by_permutations(const Table& a, const Table& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool hom = true;
    for (std::size_t x = 0; x < a.size() && hom; ++x)
      for (std::size_t y = 0; y < a.size() && hom; ++y) hom = p[a[x][y]] == b[p[x]][p[y]];
    if (hom) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Tables written out from the defining formulas.

/// Heisenberg group mod p: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
inline Table heisenberg(std::size_t p) {
  const std::size_t n = p * p * p;
  Table t(n, std::vector<std::size_t>(n));
  const auto idx = [p](std::size_t a, std::size_t b, std::size_t c) { return (a * p + b) * p + c; };
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t c = 0; c < p; ++c)
        for (std::size_t a2 = 0; a2 < p; ++a2)
          for (std::size_t b2 = 0; b2 < p; ++b2)
            for (std::size_t c2 = 0; c2 < p; ++c2)
              t[idx(a, b, c)][idx(a2, b2, c2)] = idx((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
  return t;
}

/// Dihedral group of order 2m on (rotation i, flip f): r^i s^f.
inline Table dihedral(std::size_t m) {
  Table t(2 * m, std::vector<std::size_t>(2 * m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t f = 0; f < 2; ++f)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t h = 0; h < 2; ++h) {
          // r^i s^f r^j s^h = r^(i + (-1)^f j) s^(f+h)
          const std::size_t rot = f == 0 ? (i + j) % m : (i + m - j) % m;
          t[i * 2 + f][j * 2 + h] = rot * 2 + ((f + h) % 2);
        }
  return t;
}

/// Direct product with index a * |B| + b.
inline Table product(const Table& a, const Table& b) {
  const std::size_t nb = b.size();
  Table t(a.size() * nb, std::vector<std::size_t>(a.size() * nb));
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y)
      t[x][y] = a[x / nb][y / nb] * nb + b[x % nb][y % nb];
  return t;
}

inline Table cyclic(std::size_t n) {
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

}  // namespace oracle
