#include "blockmean/families.hpp"

#include <algorithm>
#include <string>

#include "blockmean/errors.hpp"

namespace blockmean {

namespace {

void require_positive(int value, const char* what) {
  if (value < 1) throw InputError(std::string(what) + " must be at least 1, got " + std::to_string(value));
}

void add_clique(std::vector<Edge>& edges, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) edges.emplace_back(vs[i], vs[j]);
  }
}

}  // namespace

Graph path(int n) {
  require_positive(n, "path order");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(n, edges);
}

Graph complete(int n) {
  require_positive(n, "clique order");
  std::vector<int> vs(n);
  for (int i = 0; i < n; ++i) vs[i] = i;
  std::vector<Edge> edges;
  add_clique(edges, vs);
  return Graph::build(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw InputError("cycle order must be at least 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::build(n, edges);
}

Graph star(int leaves) {
  require_positive(leaves, "star leaf count");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::build(leaves + 1, edges);
}

Graph broom(int s, int t) {
  require_positive(s, "broom clique size");
  require_positive(t, "broom tail length");
  std::vector<int> clique(s);
  for (int i = 0; i < s; ++i) clique[i] = i;
  std::vector<Edge> edges;
  add_clique(edges, clique);
  for (int c = 0; c < s; ++c) edges.emplace_back(c, s);
  for (int i = s; i + 1 < s + t; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(s + t, edges);
}

Graph caterpillar(const std::vector<int>& legs) {
  if (legs.empty()) throw InputError("caterpillar needs at least one spine vertex");
  const int spine = static_cast<int>(legs.size());
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  int next = spine;
  for (int i = 0; i < spine; ++i) {
    if (legs[i] < 0) throw InputError("caterpillar leg count must be nonnegative");
    for (int l = 0; l < legs[i]; ++l) edges.emplace_back(i, next++);
  }
  return Graph::build(next, edges);
}

Graph spider(const std::vector<int>& legs) {
  std::vector<Edge> edges;
  int next = 1;
  for (int len : legs) {
    require_positive(len, "spider leg length");
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::build(next, edges);
}

Glued glue_at_vertex_mapped(const Graph& h, int v, const Graph& g, int u) {
  if (v < 0 || v >= h.order()) throw InputError("glue: vertex " + std::to_string(v) + " not in H");
  if (u < 0 || u >= g.order()) throw InputError("glue: vertex " + std::to_string(u) + " not in G");
  Glued out;
  out.from_h.assign(h.order(), 0);
  out.from_g.assign(g.order(), 0);
  int next = 1;
  for (int x = 0; x < h.order(); ++x) {
    if (x != v) out.from_h[x] = next++;
  }
  for (int x = 0; x < g.order(); ++x) {
    if (x != u) out.from_g[x] = next++;
  }
  std::vector<Edge> edges;
  for (auto [a, b] : h.edges()) edges.emplace_back(out.from_h[a], out.from_h[b]);
  for (auto [a, b] : g.edges()) edges.emplace_back(out.from_g[a], out.from_g[b]);
  out.graph = Graph::build(next, edges);
  return out;
}

Graph attach_path(const Graph& g, int anchor, int length) {
  if (anchor < 0 || anchor >= g.order()) throw InputError("attach_path: anchor out of range");
  auto edges = g.edges();
  int prev = anchor;
  for (int i = 0; i < length; ++i) {
    edges.emplace_back(prev, g.order() + i);
    prev = g.order() + i;
  }
  return Graph::build(g.order() + length, edges);
}

std::vector<Antenna> antennas(const Graph& g) {
  require_connected(g, "antennas");
  if (is_path(g)) throw PreconditionError("antennas: graph is a path, antennas are undefined");
  std::vector<Antenna> out;
  for (int w = 0; w < g.order(); ++w) {
    if (g.degree(w) > 1) continue;
    Antenna a{w, {w}, -1, 0};
    int prev = -1, cur = w;
    for (;;) {
      VertexSet ahead = g.neighbours(cur) & ~(prev >= 0 ? bit(prev) : 0);
      int next = lowest(ahead);
      if (g.degree(next) >= 3) {
        a.incident_vertex = next;
        a.incident_block = bit(cur) | bit(next);
        break;
      }
      a.vertices.push_back(next);
      prev = cur;
      cur = next;
    }
    out.push_back(std::move(a));
  }
  return out;
}

bool is_caterpillar(const Graph& g) {
  if (!is_tree(g)) return false;
  VertexSet spine = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= 2) spine |= bit(v);
  }
  if (!spine) return true;
  return is_path(g.induced(spine));
}

Graph random_block_graph(std::mt19937_64& rng, int n, int max_block) {
  require_positive(n, "block graph order");
  if (max_block < 2) throw InputError("max_block must be at least 2");
  std::vector<Edge> edges;
  int order = 1;
  while (order < n) {
    int room = std::min(max_block - 1, n - order);
    int added = std::uniform_int_distribution<int>(1, room)(rng);
    int anchor = std::uniform_int_distribution<int>(0, order - 1)(rng);
    std::vector<int> block{anchor};
    for (int i = 0; i < added; ++i) block.push_back(order + i);
    add_clique(edges, block);
    order += added;
  }
  return Graph::build(n, edges);
}

}  // namespace blockmean
