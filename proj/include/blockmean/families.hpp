#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "blockmean/graph.hpp"

namespace blockmean {

Graph path(int n);
Graph complete(int n);
Graph cycle(int n);
Graph star(int leaves);  // K_{1,leaves}, centre 0

// K_s joined completely to one end of a path on t vertices. The clique is
// 0..s-1, the path s..s+t-1 with s adjacent to every clique vertex.
Graph broom(int s, int t);

// Spine path 0..k-1; spine vertex i carries legs[i] pendant leaves.
Graph caterpillar(const std::vector<int>& legs);

// Centre 0 with one pendant path per entry of `legs`.
Graph spider(const std::vector<int>& legs);

struct Glued {
  Graph graph;
  std::vector<int> from_h;  // from_h[x] = id of H's vertex x in the result
  std::vector<int> from_g;
};

// Identifies vertex v of H with vertex u of G. The identified vertex becomes 0,
// H's remaining vertices follow in order, then G's.
Glued glue_at_vertex_mapped(const Graph& h, int v, const Graph& g, int u);
inline Graph glue_at_vertex(const Graph& h, int v, const Graph& g, int u) {
  return glue_at_vertex_mapped(h, v, g, u).graph;
}

// Adds a path of `length` new vertices hanging from `anchor`. New vertices get
// ids order()..order()+length-1, the first adjacent to anchor.
Graph attach_path(const Graph& g, int anchor, int length);

struct Antenna {
  int leaf;
  std::vector<int> vertices;  // leaf first, up to but excluding the incident vertex
  int incident_vertex;
  VertexSet incident_block;   // the bridge joining the antenna to incident_vertex

  int length() const { return static_cast<int>(vertices.size()); }
};

// One antenna per leaf (degree <= 1). Throws PreconditionError when g is a
// path or disconnected.
std::vector<Antenna> antennas(const Graph& g);

// Tree whose vertices of degree >= 2 induce a path (possibly empty).
bool is_caterpillar(const Graph& g);

// Connected block graph on n vertices grown by attaching cliques of random
// size (at most max_block) at uniformly chosen vertices.
Graph random_block_graph(std::mt19937_64& rng, int n, int max_block = 4);

}  // namespace blockmean
