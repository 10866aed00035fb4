#include "blockmean/cis.hpp"

#include "blockmean/blocks.hpp"
#include "blockmean/errors.hpp"

namespace blockmean {

CisReport CisReport::of(const IntPolynomial& p) {
  CisReport r{p.at_one(), p.derivative_at_one(), Rational(0)};
  if (r.count != 0) {
    r.mean = Rational(r.total_order, r.count);
    r.mean.canonicalize();
  }
  return r;
}

namespace {

void extend(const Graph& g, VertexSet set, VertexSet extension, VertexSet closed_nbhd, VertexSet above,
            const std::function<void(VertexSet)>& visit) {
  visit(set);
  while (extension) {
    int w = lowest(extension);
    extension &= extension - 1;
    VertexSet fresh = g.neighbours(w) & ~closed_nbhd & above;
    extend(g, set | bit(w), extension | fresh, closed_nbhd | g.neighbours(w) | bit(w), above, visit);
  }
}

std::vector<Integer> tally(const Graph& g, const std::function<bool(VertexSet)>& keep) {
  std::vector<unsigned long> counts(g.order() + 1, 0);
  for_each_connected_set(g, [&](VertexSet s) {
    if (keep(s)) ++counts[popcount(s)];
  });
  return std::vector<Integer>(counts.begin(), counts.end());
}

void require_block_graph(const Graph& g, const char* operation) {
  require_connected(g, operation);
  if (!is_block_graph(g)) throw PreconditionError(std::string(operation) + ": graph is not a block graph");
}

void require_vertex(const Graph& g, int v, const char* operation) {
  if (v < 0 || v >= g.order()) {
    throw InputError(std::string(operation) + ": vertex " + std::to_string(v) + " out of range");
  }
}

struct LocalRecursion {
  const Graph& g;
  BlockCutTree tree;
  std::vector<std::vector<int>> blocks_at;

  explicit LocalRecursion(const Graph& graph) : g(graph), tree(block_decomposition(graph)), blocks_at(graph.order()) {
    for (int v = 0; v < g.order(); ++v) blocks_at[v] = tree.blocks_containing(v);
  }

  // Local polynomial at v of the piece of G hanging from v away from block
  // `from` (-1: the whole graph). Each block B at v contributes
  // x * prod_{u in B-v} (1 + hanging(u, B)); k such branches combine as
  // x^{1-k} * prod(branches).
  IntPolynomial hanging(int v, int from) const {
    const IntPolynomial x = IntPolynomial::monomial(1);
    IntPolynomial product = IntPolynomial::one();
    int branches = 0;
    for (int b : blocks_at[v]) {
      if (b == from) continue;
      IntPolynomial branch = x;
      for (int u : members(tree.blocks[b] & ~bit(v))) branch = branch * (IntPolynomial::one() + hanging(u, b));
      product = product * branch;
      ++branches;
    }
    if (branches == 0) return x;
    return product.divided_by_x(branches - 1);
  }
};

// A vertex whose deletion leaves a connected block graph: any vertex of K_n,
// otherwise the lowest non-cut vertex of the first end-block.
int peelable_vertex(const Graph& g) {
  auto t = block_decomposition(g);
  if (t.block_count() == 1) return 0;
  for (int b = 0; b < t.block_count(); ++b) {
    if (popcount(t.cuts_of(b)) == 1) return lowest(t.blocks[b] & ~t.cut_vertices);
  }
  throw std::logic_error("block-cut tree without an end-block");
}

bool components_are_block_graphs(const Graph& g) {
  for (VertexSet c : g.components()) {
    if (!is_block_graph(g.induced(c))) return false;
  }
  return true;
}

}  // namespace

void for_each_connected_set(const Graph& g, const std::function<void(VertexSet)>& visit) {
  for (int v = 0; v < g.order(); ++v) {
    VertexSet above = g.vertices() & ~prefix_mask(v + 1);
    extend(g, bit(v), g.neighbours(v) & above, g.neighbours(v) | bit(v), above, visit);
  }
}

std::vector<VertexSet> connected_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for_each_connected_set(g, [&](VertexSet s) { out.push_back(s); });
  return out;
}

IntPolynomial phi_brute(const Graph& g) {
  return IntPolynomial(tally(g, [](VertexSet) { return true; }));
}

IntPolynomial phi_local_brute(const Graph& g, int v) {
  require_vertex(g, v, "phi_local_brute");
  return IntPolynomial(tally(g, [v](VertexSet s) { return (s >> v) & 1U; }));
}

IntPolynomial phi_local_set_brute(const Graph& g, VertexSet all_of) {
  return IntPolynomial(tally(g, [all_of](VertexSet s) { return (s & all_of) == all_of; }));
}

IntPolynomial phi_star_brute(const Graph& g, VertexSet any_of) {
  return IntPolynomial(tally(g, [any_of](VertexSet s) { return (s & any_of) != 0; }));
}

IntPolynomial phi_local_fast(const Graph& g, int v) {
  require_vertex(g, v, "phi_local_fast");
  require_block_graph(g, "phi_local_fast");
  return LocalRecursion(g).hanging(v, -1);
}

IntPolynomial phi_fast(const Graph& g) {
  IntPolynomial total;
  for (VertexSet c : g.components()) {
    Graph piece = g.induced(c);
    if (!is_block_graph(piece)) throw PreconditionError("phi_fast: a component is not a block graph");
    // Phi_G = Phi_{G,v} + Phi_{G-v}; deleting a non-cut vertex keeps a connected block graph.
    while (piece.order() > 0) {
      int v = peelable_vertex(piece);
      total += LocalRecursion(piece).hanging(v, -1);
      piece = piece.without(v);
    }
  }
  return total;
}

IntPolynomial phi(const Graph& g) { return components_are_block_graphs(g) ? phi_fast(g) : phi_brute(g); }

IntPolynomial phi_local(const Graph& g, int v) {
  require_vertex(g, v, "phi_local");
  if (g.connected() && is_block_graph(g)) return LocalRecursion(g).hanging(v, -1);
  return phi_local_brute(g, v);
}

CisReport mean(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("mean: empty graph");
  require_connected(g, "mean");
  return CisReport::of(phi(g));
}

CisReport local_mean(const Graph& g, int v) {
  require_connected(g, "local_mean");
  return CisReport::of(phi_local(g, v));
}

CisReport mean_star(const Graph& g, VertexSet any_of) {
  require_connected(g, "mean_star");
  if (!(any_of & g.vertices())) throw InputError("mean_star: vertex set is empty");
  return CisReport::of(phi_star_brute(g, any_of));
}

Rational mu(const Graph& g, int v) {
  require_connected(g, "mu");
  auto local = CisReport::of(phi_local(g, v));
  if (local.count < 2) throw PreconditionError("mu: undefined on a single vertex (N_{G,v} - 1 = 0)");
  Rational out(local.total_order - local.count, local.count - 1);
  out.canonicalize();
  return out;
}

}  // namespace blockmean
