#pragma once

#include <vector>

#include "blockmean/graph.hpp"

namespace blockmean {

inline constexpr int kConnectedHardCap = 8;

// One canonical representative per isomorphism class of connected block
// graphs of order n, sorted by certificate. Built by attaching end-blocks
// K_{j+1} to every vertex of every class of order n-j, plus K_n.
//
// When BLOCKMEAN_CACHE_DIR is set, each order's certificates are read from
// (or written to) <dir>/block-<n>.certs.
std::vector<Graph> gen_block_graphs(int n, int workers = 1);

// Connected graphs of order n <= 8, by adding a vertex with every nonempty
// neighbourhood to each class of order n-1. Cached as connected-<n>.certs.
std::vector<Graph> gen_connected_graphs(int n, int workers = 1);

}  // namespace blockmean
