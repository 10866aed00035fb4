#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blockmean/chains.hpp"
#include "blockmean/cis.hpp"
#include "blockmean/graph.hpp"
#include "blockmean/improve.hpp"
#include "blockmean/ktree.hpp"
#include "blockmean/lemmas.hpp"
#include "blockmean/search.hpp"

namespace blockmean {

enum class Format { Table, Json, Csv };

Format parse_format(std::string_view name);  // "table" | "json" | "csv"

// "num/den", always with a denominator.
std::string format_rational(const Rational& r);
// Rounded half away from zero to `places` decimals, computed exactly.
std::string format_decimal(const Rational& r, int places = 6);

struct VertexRow {
  int vertex;
  CisReport local;
  std::optional<Rational> mu;  // absent on K_1
};

struct ComputeReport {
  Graph graph;
  std::string cert;
  bool block_graph = false;
  IntPolynomial phi;
  CisReport global;
  std::vector<VertexRow> vertices;
};

// Requires a connected graph.
ComputeReport compute_report(const Graph& g);

struct SearchRow {
  SearchResult result;
  Verdict min_theorem;
  std::optional<Verdict> max_conjecture;  // block graphs only
};

SearchRow search_row(Family family, int n, int workers = 1);

struct KTreeReport {
  KTree tree;
  Graph dual;
  bool dual_is_block_graph = false;
  CisReport dual_stats;
  Integer k_cliques;
  Rational formula;
  std::optional<Rational> oracle;  // when the tree is within the oracle cap
};

KTreeReport ktree_report(const KTree& t);

std::string render(const ComputeReport& r, Format f);
std::string render(const SweepReport& r, Format f);
std::string render(const std::vector<SearchRow>& rows, Format f);
std::string render(const FamilyChain& c, Format f);
std::string render(const KTreeReport& r, Format f);
std::string render(const std::vector<Improvement>& steps, const Graph& start, Format f);

}  // namespace blockmean
