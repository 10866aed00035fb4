#pragma once

#include <random>
#include <vector>

#include "blockmean/graph.hpp"
#include "blockmean/polynomial.hpp"

namespace blockmean {

inline constexpr int kSubKTreeOracleCap = 12;

// A k-tree with the order in which it can be built from its base k-clique:
// each step adds `vertex` adjacent to exactly the k-clique `clique`.
struct KTree {
  struct Step {
    int vertex;
    VertexSet clique;
  };
  Graph graph;
  int k = 1;
  VertexSet base = 0;
  std::vector<Step> build_order;

  int order() const { return graph.order(); }
};

// True iff g is K_k, or g has a simplicial vertex of degree k whose removal
// leaves a k-tree. False for k < 1.
bool is_k_tree(const Graph& g, int k);

// Recovers a build order by peeling simplicial vertices of degree k.
// InputError if g is not a k-tree.
KTree as_k_tree(const Graph& g, int k);

// Base clique 0..k-1, then vertex k+i joined to attachments[i]. InputError if
// an attachment is not a k-clique of the graph built so far.
KTree build_k_tree(int k, const std::vector<VertexSet>& attachments);

// Each step attaches to a uniformly chosen current k-clique.
KTree random_k_tree(std::mt19937_64& rng, int k, int n);

// Vertex sets of all cliques of exactly `size` vertices, ascending by mask.
std::vector<VertexSet> cliques_of_size(const Graph& g, int size);

// Vertices are the (k+1)-cliques of T ascending by mask, adjacent when they
// share k vertices. PreconditionError if T has order <= k.
Graph dual(const KTree& t);

// Mean order of the sub-k-trees of T from the CIS counts of its dual:
// W' / (N' + (n-k)k + 1) + k.
Rational mean_sub_k_tree(const KTree& t);

// Oracle: every vertex set inducing a k-tree of order >= k+1, plus every
// k-clique. InputError above kSubKTreeOracleCap vertices.
std::vector<VertexSet> enum_sub_k_trees_brute(const KTree& t);
Rational mean_sub_k_tree_brute(const KTree& t);

}  // namespace blockmean
