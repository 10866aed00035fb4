#include "blockmean/improve.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "blockmean/blocks.hpp"
#include "blockmean/cis.hpp"
#include "blockmean/errors.hpp"
#include "blockmean/families.hpp"

namespace blockmean {

std::string_view move_name(Move m) {
  switch (m) {
    case Move::Stretching: return "stretching";
    case Move::VertexGluing: return "vertex_gluing";
    case Move::EdgeGluing: return "edge_gluing";
  }
  return "?";
}

namespace {

// Block-cut tree as an explicit graph: node b < nb is block b, node nb + c is
// cut vertex c.
struct TreeView {
  const BlockCutTree& bct;
  int nb;
  std::vector<std::vector<int>> adj;

  explicit TreeView(const BlockCutTree& t, int n) : bct(t), nb(t.block_count()), adj(nb + n) {
    for (auto [b, c] : t.incidence) {
      adj[b].push_back(nb + c);
      adj[nb + c].push_back(b);
    }
  }

  bool is_block(int node) const { return node < nb; }
  int cut(int node) const { return node - nb; }
  VertexSet vertices(int node) const { return is_block(node) ? bct.blocks[node] : bit(cut(node)); }
  int degree(int node) const { return static_cast<int>(adj[node].size()); }
  bool cyclic(int node) const { return is_block(node) && popcount(bct.blocks[node]) >= 3; }
  // Tie key: (size, lowest vertex).
  std::pair<int, int> key(int node) const { return {popcount(vertices(node)), lowest(vertices(node))}; }
};

// The nodes of a pendant path of T hanging off `root` via `first`, ordered
// outwards; empty if the component contains a node of degree >= 3.
std::vector<int> pendant_walk(const TreeView& t, int root, int first) {
  std::vector<int> walk;
  int prev = root, cur = first;
  while (true) {
    if (t.degree(cur) > 2) return {};
    walk.push_back(cur);
    int next = -1;
    for (int x : t.adj[cur]) {
      if (x != prev) next = x;
    }
    if (next < 0) return walk;
    prev = cur;
    cur = next;
  }
}

// Vertices of G to delete and the vertex the replacement path hangs from.
struct Rearrangement {
  VertexSet removed = 0;
  int anchor = -1;
  std::pair<int, int> key;
};

// walk alternates cut and block nodes; walk.back() is an end-block. Picks the
// cyclic block farthest out whose predecessor in the walk is a cut vertex:
// that block together with everything beyond it is a broom hanging from the cut.
std::optional<Rearrangement> stretch_in(const TreeView& t, const std::vector<int>& walk) {
  for (std::size_t j = walk.size(); j-- > 1;) {
    if (!t.cyclic(walk[j]) || t.is_block(walk[j - 1])) continue;
    Rearrangement r;
    r.anchor = t.cut(walk[j - 1]);
    for (std::size_t i = j; i < walk.size(); ++i) {
      if (t.is_block(walk[i])) r.removed |= t.vertices(walk[i]);
    }
    r.removed &= ~bit(r.anchor);
    r.key = t.key(walk[j]);
    return r;
  }
  return std::nullopt;
}

// Vertices of a bridge-only pendant arm, excluding the cut vertex it hangs from.
VertexSet arm_vertices(const TreeView& t, const std::vector<int>& walk, int root_vertex) {
  VertexSet s = 0;
  for (int node : walk) {
    if (t.is_block(node)) s |= t.vertices(node);
  }
  return s & ~bit(root_vertex);
}

Graph rearrange(const Graph& g, VertexSet removed, int anchor) {
  const VertexSet keep = g.vertices() & ~removed;
  const int new_anchor = popcount(keep & (bit(anchor) - 1));
  return attach_path(g.induced(keep), new_anchor, popcount(removed));
}

std::pair<Graph, Move> path_shaped(const Graph& g, const TreeView& t) {
  // Walk T from one end-block to the other.
  std::vector<int> walk;
  int start = 0;
  while (t.degree(start) > 1) ++start;
  walk = pendant_walk(t, -1, start);
  std::vector<int> reversed(walk.rbegin(), walk.rend());

  std::optional<Rearrangement> best;
  for (const auto* w : {&walk, &reversed}) {
    auto c = stretch_in(t, *w);
    if (c && (!best || c->key < best->key)) best = c;
  }
  if (!best) throw std::logic_error("improve_step: block-cut path without a cyclic block");
  return {rearrange(g, best->removed, best->anchor), Move::Stretching};
}

std::pair<Graph, Move> branched(const Graph& g, const TreeView& t) {
  // A branch node whose components, except possibly one, are pendant paths.
  int u = -1;
  std::vector<std::vector<int>> arms;
  for (int node = 0; node < static_cast<int>(t.adj.size()); ++node) {
    if (t.degree(node) < 3) continue;
    std::vector<std::vector<int>> found;
    for (int x : t.adj[node]) {
      auto w = pendant_walk(t, node, x);
      if (!w.empty()) found.push_back(std::move(w));
    }
    if (t.degree(node) - static_cast<int>(found.size()) > 1) continue;
    if (u < 0 || t.key(node) < t.key(u)) {
      u = node;
      arms = std::move(found);
    }
  }
  if (u < 0) throw std::logic_error("improve_step: no branch node with pendant paths");

  // Arms as walks starting at the cut vertex they hang from.
  for (auto& w : arms) {
    if (!t.is_block(u)) w.insert(w.begin(), u);
  }

  std::optional<Rearrangement> best;
  for (const auto& w : arms) {
    auto c = stretch_in(t, w);
    if (c && (!best || c->key < best->key)) best = c;
  }
  if (best) return {rearrange(g, best->removed, best->anchor), Move::Stretching};

  // Every arm is an antenna. Take the two smallest by (length, lowest vertex).
  struct Arm {
    int root;
    VertexSet vertices;
    std::pair<int, int> key() const { return {popcount(vertices), lowest(vertices)}; }
  };
  std::vector<Arm> antenna_arms;
  for (const auto& w : arms) {
    const int root = t.cut(w.front());
    antenna_arms.push_back({root, arm_vertices(t, w, root)});
  }
  std::sort(antenna_arms.begin(), antenna_arms.end(),
            [](const Arm& a, const Arm& b) { return a.key() < b.key(); });
  const Arm& first = antenna_arms[0];
  const Arm& second = antenna_arms[1];
  const VertexSet removed = first.vertices | second.vertices;
  if (!t.is_block(u)) return {rearrange(g, removed, t.cut(u)), Move::VertexGluing};
  return {rearrange(g, removed, second.root), Move::EdgeGluing};
}

}  // namespace

Improvement improve_step(const Graph& g) {
  require_connected(g, "improve_step");
  if (!is_block_graph(g)) throw PreconditionError("improve_step: not a block graph");
  if (is_path(g)) throw PreconditionError("improve_step: already minimal (the graph is a path)");

  Improvement step;
  step.before = mean(g).mean;
  const auto bct = block_decomposition(g);
  if (bct.block_count() == 1) {
    step.graph = path(g.order());
    step.move = Move::Stretching;
  } else {
    TreeView t(bct, g.order());
    std::tie(step.graph, step.move) =
        block_cut_tree_is_path(bct) ? path_shaped(g, t) : branched(g, t);
  }
  step.after = mean(step.graph).mean;
  if (!(step.after < step.before)) {
    throw std::logic_error("improve_step: " + std::string(move_name(step.move)) + " did not decrease the mean");
  }
  return step;
}

std::vector<Improvement> improve_to_path(const Graph& g) {
  std::vector<Improvement> steps;
  Graph cur = g;
  while (!is_path(cur)) {
    steps.push_back(improve_step(cur));
    cur = steps.back().graph;
  }
  return steps;
}

}  // namespace blockmean
