#pragma once

// Deliberately naive reference implementations used only by tests. Nothing
// here calls into the library beyond reading a Graph's edge list, so agreement
// with the library is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "blockmean/graph.hpp"
#include "blockmean/polynomial.hpp"

namespace naive {

struct Adj {
  int n = 0;
  std::vector<std::uint32_t> rows;

  bool edge(int u, int v) const { return (rows[u] >> v) & 1U; }
};

inline Adj from(const blockmean::Graph& g) {
  Adj a{g.order(), std::vector<std::uint32_t>(g.order(), 0)};
  for (auto [u, v] : g.edges()) {
    a.rows[u] |= 1U << v;
    a.rows[v] |= 1U << u;
  }
  return a;
}

inline int bits(std::uint32_t s) { return __builtin_popcount(s); }

// Breadth-first search restricted to s.
inline bool connected(const Adj& a, std::uint32_t s) {
  if (s == 0) return false;
  std::uint32_t seen = s & (~s + 1);
  std::vector<int> queue{__builtin_ctz(s)};
  while (!queue.empty()) {
    int u = queue.back();
    queue.pop_back();
    for (int v = 0; v < a.n; ++v) {
      if (((s >> v) & 1U) && !((seen >> v) & 1U) && a.edge(u, v)) {
        seen |= 1U << v;
        queue.push_back(v);
      }
    }
  }
  return seen == s;
}

// Orders up to 20 only.
inline std::uint32_t full(int n) { return (1U << n) - 1; }

// Number of connected induced subgraphs of each order passing `keep`, over all 2^n subsets.
inline std::vector<unsigned long long> counts(const Adj& a, const std::function<bool(std::uint32_t)>& keep) {
  std::vector<unsigned long long> c(a.n + 1, 0);
  for (std::uint32_t s = 1; s <= full(a.n); ++s) {
    if (keep(s) && connected(a, s)) ++c[bits(s)];
  }
  return c;
}

inline std::vector<unsigned long long> all(const Adj& a) {
  return counts(a, [](std::uint32_t) { return true; });
}
inline std::vector<unsigned long long> containing(const Adj& a, std::uint32_t every) {
  return counts(a, [every](std::uint32_t s) { return (s & every) == every; });
}
inline std::vector<unsigned long long> meeting(const Adj& a, std::uint32_t any) {
  return counts(a, [any](std::uint32_t s) { return (s & any) != 0; });
}

inline blockmean::IntPolynomial poly(const std::vector<unsigned long long>& c) {
  std::vector<blockmean::Integer> coeffs;
  for (auto x : c) coeffs.emplace_back(static_cast<unsigned long>(x));
  return blockmean::IntPolynomial(coeffs);
}

inline blockmean::Rational mean(const std::vector<unsigned long long>& c) {
  unsigned long long n = 0, w = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    n += c[i];
    w += i * c[i];
  }
  blockmean::Rational r(blockmean::Integer(static_cast<unsigned long>(w)), blockmean::Integer(static_cast<unsigned long>(n)));
  r.canonicalize();
  return r;
}

inline int components(const Adj& a, std::uint32_t s) {
  int count = 0;
  std::uint32_t left = s;
  while (left != 0) {
    std::uint32_t comp = left & (~left + 1);
    for (bool grew = true; grew;) {
      grew = false;
      for (int v = 0; v < a.n; ++v) {
        if (((left >> v) & 1U) && !((comp >> v) & 1U) && (a.rows[v] & comp)) {
          comp |= 1U << v;
          grew = true;
        }
      }
    }
    left &= ~comp;
    ++count;
  }
  return count;
}

inline bool is_cut(const Adj& a, int v) {
  return components(a, full(a.n) & ~(1U << v)) > components(a, full(a.n));
}

inline bool is_clique(const Adj& a, std::uint32_t s) {
  for (int u = 0; u < a.n; ++u) {
    for (int v = u + 1; v < a.n; ++v) {
      if (((s >> u) & 1U) && ((s >> v) & 1U) && !a.edge(u, v)) return false;
    }
  }
  return true;
}

// Connected, and every vertex set of three or more vertices inducing a
// 2-connected subgraph is a clique.
inline bool is_block_graph(const Adj& a) {
  if (!connected(a, full(a.n))) return false;
  for (std::uint32_t s = 1; s <= full(a.n); ++s) {
    if (bits(s) < 3 || !connected(a, s)) continue;
    bool two_connected = true;
    for (int v = 0; v < a.n && two_connected; ++v) {
      if ((s >> v) & 1U) two_connected = connected(a, s & ~(1U << v));
    }
    if (two_connected && !is_clique(a, s)) return false;
  }
  return true;
}

// Minimum adjacency code over all n! relabelings; n <= 7.
inline std::uint64_t perm_canon(const Adj& a) {
  std::vector<int> p(a.n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (int j = 1; j < a.n; ++j) {
      for (int i = 0; i < j; ++i) code = (code << 1) | (a.edge(p[i], p[j]) ? 1 : 0);
    }
    best = std::min(best, code);
  } while (std::next_permutation(p.begin(), p.end()));
  return (static_cast<std::uint64_t>(a.n) << 56) | best;
}

// Isomorphism classes of labeled graphs on n <= 6 vertices passing `keep`.
inline std::set<std::uint64_t> classes(int n, const std::function<bool(const Adj&)>& keep) {
  const int pairs = n * (n - 1) / 2;
  std::set<std::uint64_t> out;
  for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
    Adj a{n, std::vector<std::uint32_t>(n, 0)};
    int bit = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++bit) {
        if ((mask >> bit) & 1U) {
          a.rows[i] |= 1U << j;
          a.rows[j] |= 1U << i;
        }
      }
    }
    if (keep(a)) out.insert(perm_canon(a));
  }
  return out;
}

}  // namespace naive
