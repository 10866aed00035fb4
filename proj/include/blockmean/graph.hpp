#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace blockmean {

// Vertex subsets are bitmasks; bit i is vertex i.
using VertexSet = std::uint64_t;
using Edge = std::pair<int, int>;

inline constexpr int kMaxOrder = 64;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
constexpr int popcount(VertexSet s) { return std::popcount(s); }
constexpr int lowest(VertexSet s) { return std::countr_zero(s); }
constexpr VertexSet prefix_mask(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }

std::vector<int> members(VertexSet s);
std::string format_set(VertexSet s);

// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Throws InputError on out-of-range vertices, self-loops, or n > kMaxOrder.
  // Duplicate edges collapse.
  static Graph build(int n, std::span<const Edge> edges);
  static Graph build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  static Graph empty(int n) { return build(n, {}); }

  int order() const { return n_; }
  std::size_t size() const;
  VertexSet vertices() const { return prefix_mask(n_); }
  VertexSet neighbours(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const { return popcount(adj_[v]); }
  std::vector<Edge> edges() const;

  // Vertices of the subgraph are renumbered in increasing order of their old ids.
  Graph induced(VertexSet keep) const;
  Graph without(int v) const { return induced(vertices() & ~bit(v)); }

  // Connected components restricted to `within` (defaults to all vertices),
  // ordered by lowest member.
  std::vector<VertexSet> components(VertexSet within) const;
  std::vector<VertexSet> components() const { return components(vertices()); }
  VertexSet component_of(int v, VertexSet within) const;
  bool connected(VertexSet within) const;
  bool connected() const { return connected(vertices()); }
  bool is_clique(VertexSet s) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

bool is_path(const Graph& g);
bool is_complete(const Graph& g);
bool is_tree(const Graph& g);

// Throws PreconditionError naming two components when g is disconnected.
void require_connected(const Graph& g, const char* operation);

// Edge-list text format: first non-comment line "n m", then m lines "u v".
// '#' starts a comment. Parse errors throw InputError carrying the line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

}  // namespace blockmean
