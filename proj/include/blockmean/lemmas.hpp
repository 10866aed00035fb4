#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blockmean/graph.hpp"
#include "blockmean/polynomial.hpp"

namespace blockmean {

// Outcome of checking one statement on one configuration. A verdict on a
// configuration outside the statement's hypotheses is recorded as not
// applicable instead of failing.
struct Verdict {
  std::string statement;
  bool applicable = true;
  std::string reason;
  bool holds = false;
  bool equality = false;
  // Set when the statement characterizes its equality case; the observed
  // equality flag must then match it.
  std::optional<bool> equality_expected;
  Rational lhs, rhs;
  std::string graph;          // certificate hex of the graph
  std::vector<int> vertices;  // vertex, ordered pair or block the verdict is about

  bool ok() const { return !applicable || (holds && (!equality_expected || *equality_expected == equality)); }

  static Verdict skipped(std::string statement, std::string graph, std::vector<int> vertices, std::string reason);
};

// Statement identifiers, in sweep order.
inline constexpr std::array<std::string_view, 9> kStatements = {
    "local_sum",         // M_{G,v} = sum M_{G_i,v} - (k-1) at a vertex splitting G into G_1..G_k
    "block_star",        // M*_{G,U} = (N*+1)/N* sum W_{G_i,u_i}/(N_{G_i,u_i}+1) for a block U
    "leaf_count_bound",  // W_{G,v} <= (N_{G,v}^2 + N_{G,v})/2, equality iff path at a leaf
    "adjacent_count",    // N_{G-v,u} <= N_{G,v} - 1 for adjacent u,v, equality iff v is a leaf
    "noncut_count",      // N_{G,v} <= N_{G-v} + 1 at a non-cut vertex, equality iff complete
    "count_weight",      // N_G <= W_{G,u}
    "weight_bound",      // W_{G-v} <= N_{G,v} N_{G-v} / 2
    "mu",                // mu_{G,v} >= M_{G-v} at a non-cut vertex, equality iff complete
    "local_global",      // M_G <= M_{G,v} and M_G <= M*_{G,B}
};
bool is_statement(std::string_view name);

std::vector<Verdict> verify_local_sum(const Graph& g);
std::vector<Verdict> verify_block_star(const Graph& g);
// leaf_count_bound, adjacent_count, noncut_count and count_weight over every
// applicable vertex / adjacent ordered pair.
std::vector<Verdict> verify_count_bounds(const Graph& g);
Verdict verify_weight_bound(const Graph& g, int v);
Verdict verify_mu(const Graph& g, int v);
std::vector<Verdict> verify_local_global(const Graph& g);

// Every statement (or only `statement` when nonempty) at every vertex, pair and block of g.
std::vector<Verdict> verify_graph(const Graph& g, std::string_view statement = {});

struct StatementTally {
  std::string statement;
  std::size_t checked = 0, skipped = 0, held = 0, equalities = 0, failed = 0;
};

struct SweepReport {
  int max_n = 0;
  std::size_t graphs = 0;
  std::vector<StatementTally> tallies;  // kStatements order, filtered
  std::vector<Verdict> verdicts;        // applicable verdicts, in generation order
  std::vector<Verdict> failures;

  bool ok() const { return failures.empty(); }
};

// Runs verify_graph over every connected block graph of order 1..max_n.
// Output is independent of `workers`.
SweepReport verify_sweep(int max_n, std::string_view statement = {}, int workers = 1);

}  // namespace blockmean
