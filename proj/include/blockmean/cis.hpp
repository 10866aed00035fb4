#pragma once

#include <functional>
#include <vector>

#include "blockmean/graph.hpp"
#include "blockmean/polynomial.hpp"

namespace blockmean {

// Count N, total order W and mean M = W/N of a family of connected induced subgraphs.
struct CisReport {
  Integer count;
  Integer total_order;
  Rational mean;

  static CisReport of(const IntPolynomial& p);
};

// Calls visit(S) once for every nonempty vertex set S inducing a connected
// subgraph. Sets are produced grouped by minimum vertex, ascending, growing
// each set only through vertices above its minimum.
void for_each_connected_set(const Graph& g, const std::function<void(VertexSet)>& visit);
std::vector<VertexSet> connected_sets(const Graph& g);

// Brute-force polynomials by enumeration. Valid for any graph (disconnected
// graphs included: every connected induced subgraph lies in one component).
IntPolynomial phi_brute(const Graph& g);
IntPolynomial phi_local_brute(const Graph& g, int v);
IntPolynomial phi_local_set_brute(const Graph& g, VertexSet all_of);   // contains every vertex of U
IntPolynomial phi_star_brute(const Graph& g, VertexSet any_of);        // contains at least one vertex of U

// Block-graph recursions. phi_local_fast needs a connected block graph;
// phi_fast accepts a graph whose components are block graphs.
IntPolynomial phi_local_fast(const Graph& g, int v);
IntPolynomial phi_fast(const Graph& g);

// Engine entry points: the recursion on block graphs, enumeration otherwise.
IntPolynomial phi(const Graph& g);
IntPolynomial phi_local(const Graph& g, int v);

// Require connected input (PreconditionError otherwise).
CisReport mean(const Graph& g);
CisReport local_mean(const Graph& g, int v);
CisReport mean_star(const Graph& g, VertexSet any_of);

// (W_{G,v} - N_{G,v}) / (N_{G,v} - 1), the mean order of the connected induced
// subgraphs of G - v meeting N(v). PreconditionError on K_1.
Rational mu(const Graph& g, int v);

}  // namespace blockmean
