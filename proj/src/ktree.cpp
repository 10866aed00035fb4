#include "blockmean/ktree.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "blockmean/cis.hpp"
#include "blockmean/errors.hpp"

namespace blockmean {

namespace {

void require_k(int k) {
  if (k < 1) throw InputError("k must be at least 1, got " + std::to_string(k));
}

// Peels simplicial degree-k vertices. Returns the removal sequence (last
// removed first in build order) or nothing if g is not a k-tree.
std::optional<KTree> peel(const Graph& g, int k) {
  if (k < 1 || g.order() < k) return std::nullopt;
  const long n = g.order();
  if (static_cast<long>(g.size()) != static_cast<long>(k) * (k - 1) / 2 + (n - k) * k) return std::nullopt;

  VertexSet alive = g.vertices();
  std::vector<KTree::Step> removed;
  while (popcount(alive) > k) {
    bool found = false;
    for (int v : members(alive)) {
      const VertexSet nb = g.neighbours(v) & alive;
      if (popcount(nb) == k && g.is_clique(nb)) {
        removed.push_back({v, nb});
        alive &= ~bit(v);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  if (!g.is_clique(alive)) return std::nullopt;
  KTree t;
  t.graph = g;
  t.k = k;
  t.base = alive;
  t.build_order.assign(removed.rbegin(), removed.rend());
  return t;
}

void extend_cliques(VertexSet clique, VertexSet candidates, int size, const Graph& g, std::vector<VertexSet>& out) {
  if (popcount(clique) == size) {
    out.push_back(clique);
    return;
  }
  while (candidates != 0) {
    const int v = lowest(candidates);
    candidates &= candidates - 1;
    extend_cliques(clique | bit(v), candidates & g.neighbours(v), size, g, out);
  }
}

}  // namespace

bool is_k_tree(const Graph& g, int k) { return peel(g, k).has_value(); }

KTree as_k_tree(const Graph& g, int k) {
  require_k(k);
  auto t = peel(g, k);
  if (!t) throw InputError("graph is not a " + std::to_string(k) + "-tree");
  return *t;
}

KTree build_k_tree(int k, const std::vector<VertexSet>& attachments) {
  require_k(k);
  const int n = k + static_cast<int>(attachments.size());
  if (n > kMaxOrder) throw InputError("k-tree order exceeds " + std::to_string(kMaxOrder));
  std::vector<Edge> edges;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) edges.emplace_back(a, b);
  }
  KTree t;
  t.k = k;
  t.base = prefix_mask(k);
  for (int i = 0; i < static_cast<int>(attachments.size()); ++i) {
    const int v = k + i;
    const VertexSet c = attachments[i];
    const Graph so_far = Graph::build(v, edges);
    if (popcount(c) != k || (c & ~prefix_mask(v)) != 0 || !so_far.is_clique(c)) {
      throw InputError("attachment " + std::to_string(i) + " " + format_set(c) + " is not a " + std::to_string(k) +
                       "-clique of the k-tree built so far");
    }
    for (int u : members(c)) edges.emplace_back(u, v);
    t.build_order.push_back({v, c});
  }
  t.graph = Graph::build(n, edges);
  return t;
}

KTree random_k_tree(std::mt19937_64& rng, int k, int n) {
  require_k(k);
  if (n < k) throw InputError("k-tree order must be at least k");
  std::vector<VertexSet> cliques{prefix_mask(k)};
  std::vector<VertexSet> attachments;
  for (int v = k; v < n; ++v) {
    const VertexSet c = cliques[std::uniform_int_distribution<std::size_t>(0, cliques.size() - 1)(rng)];
    attachments.push_back(c);
    for (int x : members(c)) cliques.push_back((c & ~bit(x)) | bit(v));
  }
  return build_k_tree(k, attachments);
}

std::vector<VertexSet> cliques_of_size(const Graph& g, int size) {
  std::vector<VertexSet> out;
  if (size < 1) return out;
  extend_cliques(0, g.vertices(), size, g, out);
  std::sort(out.begin(), out.end());
  return out;
}

Graph dual(const KTree& t) {
  if (t.order() <= t.k) throw PreconditionError("dual: k-tree has no (k+1)-clique");
  const auto cliques = cliques_of_size(t.graph, t.k + 1);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < cliques.size(); ++a) {
    for (std::size_t b = a + 1; b < cliques.size(); ++b) {
      if (popcount(cliques[a] & cliques[b]) == t.k) edges.emplace_back(a, b);
    }
  }
  return Graph::build(static_cast<int>(cliques.size()), edges);
}

Rational mean_sub_k_tree(const KTree& t) {
  if (t.order() <= t.k) throw PreconditionError("mean_sub_k_tree: trivial k-tree");
  const auto p = phi_fast(dual(t));
  const Integer k_cliques = Integer(t.order() - t.k) * t.k + 1;
  Rational r(p.derivative_at_one(), p.at_one() + k_cliques);
  r.canonicalize();
  return r + t.k;
}

std::vector<VertexSet> enum_sub_k_trees_brute(const KTree& t) {
  if (t.order() > kSubKTreeOracleCap) {
    throw InputError("sub-k-tree oracle is limited to " + std::to_string(kSubKTreeOracleCap) + " vertices");
  }
  std::vector<VertexSet> out;
  const VertexSet all = t.graph.vertices();
  for (VertexSet s = 1; s <= all; ++s) {
    const int size = popcount(s);
    if (size == t.k ? t.graph.is_clique(s) : size > t.k && is_k_tree(t.graph.induced(s), t.k)) out.push_back(s);
  }
  return out;
}

Rational mean_sub_k_tree_brute(const KTree& t) {
  const auto sets = enum_sub_k_trees_brute(t);
  if (sets.empty()) throw PreconditionError("mean_sub_k_tree_brute: no sub-k-trees");
  Integer total = 0;
  for (VertexSet s : sets) total += popcount(s);
  Rational r(total, Integer(static_cast<unsigned long>(sets.size())));
  r.canonicalize();
  return r;
}

}  // namespace blockmean
