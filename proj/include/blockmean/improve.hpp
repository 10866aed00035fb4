#pragma once

#include <string_view>
#include <vector>

#include "blockmean/graph.hpp"
#include "blockmean/polynomial.hpp"

namespace blockmean {

enum class Move { Stretching, VertexGluing, EdgeGluing };

std::string_view move_name(Move m);

struct Improvement {
  Graph graph;
  Move move = Move::Stretching;
  Rational before, after;  // mean CIS order of the input and of `graph`
};

// One step of the constructive descent towards P_n: a connected block graph of
// the same order with strictly smaller mean. Every rearrangement moves a
// cyclic block or a pair of antennas into a single pendant path.
//
// When several blocks, cut vertices or antennas qualify, the one with the
// smallest (size, lowest vertex) is used. Throws PreconditionError when g is
// not a connected block graph or is already a path.
Improvement improve_step(const Graph& g);

// Applies improve_step until a path is reached; one entry per step.
std::vector<Improvement> improve_to_path(const Graph& g);

}  // namespace blockmean
