#pragma once

#include <utility>
#include <vector>

#include "blockmean/graph.hpp"

namespace blockmean {

// Blocks and cut vertices of a connected graph. Blocks are ordered by their
// vertex bitmask; incidence lists (block index, cut vertex) pairs.
struct BlockCutTree {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices = 0;
  std::vector<std::pair<int, int>> incidence;

  bool is_cut(int v) const { return (cut_vertices >> v) & 1U; }
  std::vector<int> blocks_containing(int v) const;
  // Cut vertices of block b.
  VertexSet cuts_of(int b) const { return blocks[b] & cut_vertices; }
  // Index of the unique block containing both u and v, or -1.
  int block_with(int u, int v) const;
  int block_count() const { return static_cast<int>(blocks.size()); }
};

// Single DFS with low-point values. Requires a connected graph with n >= 1;
// K_1 yields one block {0}.
BlockCutTree block_decomposition(const Graph& g);

// True iff every block induces a clique. Requires a connected graph.
bool is_block_graph(const Graph& g);

// True iff the block-cut tree is itself a path (single block included).
bool block_cut_tree_is_path(const BlockCutTree& t);

}  // namespace blockmean
