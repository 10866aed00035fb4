#include "blockmean/blocks.hpp"

#include <algorithm>

#include "blockmean/errors.hpp"

namespace blockmean {

std::vector<int> BlockCutTree::blocks_containing(int v) const {
  std::vector<int> out;
  for (int b = 0; b < block_count(); ++b) {
    if ((blocks[b] >> v) & 1U) out.push_back(b);
  }
  return out;
}

int BlockCutTree::block_with(int u, int v) const {
  VertexSet both = bit(u) | bit(v);
  for (int b = 0; b < block_count(); ++b) {
    if ((blocks[b] & both) == both) return b;
  }
  return -1;
}

namespace {

struct Dfs {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<Edge> stack;
  std::vector<VertexSet> blocks;
  VertexSet cuts = 0;
  int clock = 0;

  void visit(int v, int parent) {
    disc[v] = low[v] = clock++;
    int children = 0;
    for (int w : members(g.neighbours(v))) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        ++children;
        stack.emplace_back(v, w);
        visit(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (parent >= 0 || children > 1) cuts |= bit(v);
          VertexSet block = 0;
          Edge e;
          do {
            e = stack.back();
            stack.pop_back();
            block |= bit(e.first) | bit(e.second);
          } while (e != Edge{v, w});
          blocks.push_back(block);
        }
      } else if (disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  }
};

}  // namespace

BlockCutTree block_decomposition(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("block_decomposition: empty graph");
  require_connected(g, "block_decomposition");
  BlockCutTree t;
  if (g.order() == 1) {
    t.blocks.push_back(bit(0));
    return t;
  }
  Dfs dfs{g, std::vector<int>(g.order(), -1), std::vector<int>(g.order(), 0), {}, {}, 0, 0};
  dfs.visit(0, -1);
  t.blocks = std::move(dfs.blocks);
  std::sort(t.blocks.begin(), t.blocks.end());
  t.cut_vertices = dfs.cuts;
  for (int b = 0; b < t.block_count(); ++b) {
    for (int c : members(t.blocks[b] & t.cut_vertices)) t.incidence.emplace_back(b, c);
  }
  return t;
}

bool is_block_graph(const Graph& g) {
  auto t = block_decomposition(g);
  return std::all_of(t.blocks.begin(), t.blocks.end(), [&](VertexSet b) { return g.is_clique(b); });
}

bool block_cut_tree_is_path(const BlockCutTree& t) {
  for (int b = 0; b < t.block_count(); ++b) {
    if (popcount(t.cuts_of(b)) > 2) return false;
  }
  for (int c : members(t.cut_vertices)) {
    if (t.blocks_containing(c).size() > 2) return false;
  }
  return true;
}

}  // namespace blockmean
