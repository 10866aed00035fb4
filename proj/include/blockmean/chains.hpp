#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "blockmean/cis.hpp"
#include "blockmean/graph.hpp"

namespace blockmean {

enum class ChainKind { VertexGluing, EdgeGluing, Stretching };

std::string_view chain_name(ChainKind kind);
ChainKind parse_chain(std::string_view name);  // "vertex" | "edge" | "stretch"

// A one-parameter family G_1, G_2, ... of block graphs of equal order,
// with engine-computed counts beside the closed-form predictions.
struct FamilyChain {
  ChainKind kind = ChainKind::VertexGluing;
  int n = 0;
  int strict_through = 0;  // means must strictly increase over s = 1..strict_through
  std::vector<Graph> graphs;  // graphs[s-1] = G_s
  std::vector<CisReport> engine;
  std::vector<Rational> formula_count, formula_total;
  bool chain_ok = false;
  std::optional<bool> symmetry_ok;  // only for the gluing families
  bool closed_form_ok = false;

  bool ok() const { return chain_ok && symmetry_ok.value_or(true) && closed_form_ok; }
};

// G_s: P_n = u_1..u_n with u_s identified with v of H, s = 1..n.
// Needs a connected block graph H of order >= 2 and n >= 3.
FamilyChain family_vertex_gluing(const Graph& h, int v, int n);

// G_s: a leaf of P_s glued to u and a leaf of P_{n-s} glued to v, s = 1..n-1.
// Needs |H| >= 3, n >= 4, u and v adjacent non-cut vertices.
FamilyChain family_edge_gluing(const Graph& h, int u, int v, int n);

// G_s: u of H identified with a clique vertex of the broom F_{s,n-s}, s = 1..n-1.
// Needs a connected block graph H of order >= 2 and n >= 3.
FamilyChain family_stretching(const Graph& h, int u, int n);

}  // namespace blockmean
