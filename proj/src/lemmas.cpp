#include "blockmean/lemmas.hpp"

#include <algorithm>

#include "blockmean/blocks.hpp"
#include "blockmean/canon.hpp"
#include "blockmean/cis.hpp"
#include "blockmean/errors.hpp"
#include "blockmean/generate.hpp"
#include "blockmean/parallel.hpp"

namespace blockmean {

Verdict Verdict::skipped(std::string statement, std::string graph, std::vector<int> vertices, std::string reason) {
  Verdict v;
  v.statement = std::move(statement);
  v.applicable = false;
  v.reason = std::move(reason);
  v.graph = std::move(graph);
  v.vertices = std::move(vertices);
  return v;
}

bool is_statement(std::string_view name) {
  return std::find(kStatements.begin(), kStatements.end(), name) != kStatements.end();
}

namespace {

struct Stats {
  Integer n, w;
  Rational mean() const { return n == 0 ? Rational(0) : ratio(w, n); }
  static Rational ratio(const Integer& a, const Integer& b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
  }
};

Stats stats(const IntPolynomial& p) { return {p.at_one(), p.derivative_at_one()}; }

int index_in(VertexSet s, int v) { return popcount(s & prefix_mask(v)); }

bool block_graph(const Graph& g) { return g.order() > 0 && g.connected() && is_block_graph(g); }

Verdict compare(std::string statement, const std::string& graph, std::vector<int> vertices, Rational lhs, Rational rhs,
                bool holds, std::optional<bool> equality_expected) {
  Verdict v;
  v.statement = std::move(statement);
  v.graph = graph;
  v.vertices = std::move(vertices);
  v.equality = lhs == rhs;
  v.holds = holds;
  v.equality_expected = equality_expected;
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  return v;
}

Verdict at_most(std::string statement, const std::string& graph, std::vector<int> vertices, Rational lhs, Rational rhs,
                std::optional<bool> equality_expected = std::nullopt) {
  bool holds = lhs <= rhs;
  return compare(std::move(statement), graph, std::move(vertices), std::move(lhs), std::move(rhs), holds,
                 equality_expected);
}

std::vector<int> as_list(VertexSet s) { return members(s); }

}  // namespace

std::vector<Verdict> verify_local_sum(const Graph& g) {
  const std::string cert = canonical_cert(g).hex();
  std::vector<Verdict> out;
  if (!block_graph(g)) {
    out.push_back(Verdict::skipped("local_sum", cert, {}, "not a connected block graph"));
    return out;
  }
  for (int v = 0; v < g.order(); ++v) {
    auto parts = g.components(g.vertices() & ~bit(v));
    if (parts.empty()) {
      out.push_back(Verdict::skipped("local_sum", cert, {v}, "G - v is empty"));
      continue;
    }
    Rational local = stats(phi_local_brute(g, v)).mean();
    Rational sum = 0;
    bool dominates = true;
    for (VertexSet part : parts) {
      VertexSet keep = part | bit(v);
      Rational piece = stats(phi_local_brute(g.induced(keep), index_in(keep, v))).mean();
      sum += piece;
      dominates = dominates && local >= piece;
    }
    Rational rhs = sum - static_cast<long>(parts.size() - 1);
    out.push_back(compare("local_sum", cert, {v}, local, rhs, local == rhs && dominates, true));
  }
  return out;
}

std::vector<Verdict> verify_block_star(const Graph& g) {
  const std::string cert = canonical_cert(g).hex();
  std::vector<Verdict> out;
  if (!block_graph(g)) {
    out.push_back(Verdict::skipped("block_star", cert, {}, "not a connected block graph"));
    return out;
  }
  auto tree = block_decomposition(g);
  for (VertexSet block : tree.blocks) {
    std::vector<Edge> outside;
    for (auto [a, b] : g.edges()) {
      if (!((block >> a) & 1U && (block >> b) & 1U)) outside.emplace_back(a, b);
    }
    Graph cut = Graph::build(g.order(), outside);
    Stats star = stats(phi_star_brute(g, block));
    Rational sum = 0;
    for (int u : members(block)) {
      VertexSet piece = cut.component_of(u, cut.vertices());
      Stats local = stats(phi_local_brute(g.induced(piece), index_in(piece, u)));
      sum += Stats::ratio(local.w, local.n + 1);
    }
    Rational rhs = Stats::ratio(star.n + 1, star.n) * sum;
    Rational lhs = star.mean();
    out.push_back(compare("block_star", cert, as_list(block), lhs, rhs, lhs == rhs, true));
  }
  return out;
}

std::vector<Verdict> verify_count_bounds(const Graph& g) {
  const std::string cert = canonical_cert(g).hex();
  std::vector<Verdict> out;
  if (g.order() == 0 || !g.connected()) {
    for (auto name : {"leaf_count_bound", "adjacent_count", "noncut_count", "count_weight"}) {
      out.push_back(Verdict::skipped(name, cert, {}, "not a connected graph"));
    }
    return out;
  }
  const bool path_graph = is_path(g);
  const bool complete_graph = is_complete(g);
  const bool blocky = is_block_graph(g);
  const BlockCutTree tree = block_decomposition(g);
  const Stats whole = stats(phi_brute(g));
  std::vector<Stats> local(g.order());
  for (int v = 0; v < g.order(); ++v) local[v] = stats(phi_local_brute(g, v));

  for (int v = 0; v < g.order(); ++v) {
    const Integer& n = local[v].n;
    out.push_back(at_most("leaf_count_bound", cert, {v}, Rational(local[v].w), Stats::ratio(n * n + n, 2),
                          path_graph && g.degree(v) <= 1));
  }
  for (int v = 0; v < g.order(); ++v) {
    Graph rest = g.without(v);
    for (int u : members(g.neighbours(v))) {
      int u_in_rest = u < v ? u : u - 1;
      Stats left = stats(phi_local_brute(rest, u_in_rest));
      out.push_back(at_most("adjacent_count", cert, {u, v}, Rational(left.n), Rational(local[v].n - 1),
                            g.degree(v) == 1));
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    if (!blocky) {
      out.push_back(Verdict::skipped("noncut_count", cert, {v}, "not a block graph"));
    } else if (tree.is_cut(v)) {
      out.push_back(Verdict::skipped("noncut_count", cert, {v}, "v is a cut vertex"));
    } else {
      Stats rest = stats(phi_brute(g.without(v)));
      out.push_back(at_most("noncut_count", cert, {v}, Rational(local[v].n), Rational(rest.n + 1), complete_graph));
    }
  }
  for (int u = 0; u < g.order(); ++u) {
    if (g.order() < 2) {
      out.push_back(Verdict::skipped("count_weight", cert, {u}, "order below 2"));
      continue;
    }
    out.push_back(at_most("count_weight", cert, {u}, Rational(whole.n), Rational(local[u].w)));
  }
  return out;
}

Verdict verify_weight_bound(const Graph& g, int v) {
  const std::string cert = canonical_cert(g).hex();
  if (!block_graph(g)) return Verdict::skipped("weight_bound", cert, {v}, "not a connected block graph");
  Stats rest = stats(phi_brute(g.without(v)));
  Stats local = stats(phi_local_brute(g, v));
  return at_most("weight_bound", cert, {v}, Rational(rest.w), Stats::ratio(local.n * rest.n, 2));
}

Verdict verify_mu(const Graph& g, int v) {
  const std::string cert = canonical_cert(g).hex();
  if (!block_graph(g)) return Verdict::skipped("mu", cert, {v}, "not a connected block graph");
  if (g.order() < 2) return Verdict::skipped("mu", cert, {v}, "order below 2");
  if (block_decomposition(g).is_cut(v)) return Verdict::skipped("mu", cert, {v}, "v is a cut vertex");
  Stats local = stats(phi_local_brute(g, v));
  Rational lhs = Stats::ratio(local.w - local.n, local.n - 1);
  Rational rhs = stats(phi_brute(g.without(v))).mean();
  bool holds = lhs >= rhs;
  return compare("mu", cert, {v}, lhs, rhs, holds, is_complete(g));
}

std::vector<Verdict> verify_local_global(const Graph& g) {
  const std::string cert = canonical_cert(g).hex();
  if (!block_graph(g)) return {Verdict::skipped("local_global", cert, {}, "not a connected block graph")};
  std::vector<Verdict> out;
  Rational global = stats(phi_brute(g)).mean();
  for (int v = 0; v < g.order(); ++v) {
    out.push_back(at_most("local_global", cert, {v}, global, stats(phi_local_brute(g, v)).mean()));
  }
  for (VertexSet block : block_decomposition(g).blocks) {
    out.push_back(at_most("local_global", cert, as_list(block), global, stats(phi_star_brute(g, block)).mean()));
  }
  return out;
}

std::vector<Verdict> verify_graph(const Graph& g, std::string_view statement) {
  auto wanted = [&](std::string_view name) { return statement.empty() || statement == name; };
  std::vector<Verdict> out;
  auto take = [&](std::vector<Verdict> vs) {
    for (auto& v : vs) {
      if (wanted(v.statement)) out.push_back(std::move(v));
    }
  };
  if (wanted("local_sum")) take(verify_local_sum(g));
  if (wanted("block_star")) take(verify_block_star(g));
  if (wanted("leaf_count_bound") || wanted("adjacent_count") || wanted("noncut_count") || wanted("count_weight")) {
    take(verify_count_bounds(g));
  }
  for (int v = 0; v < g.order(); ++v) {
    if (wanted("weight_bound")) out.push_back(verify_weight_bound(g, v));
  }
  for (int v = 0; v < g.order(); ++v) {
    if (wanted("mu")) out.push_back(verify_mu(g, v));
  }
  if (wanted("local_global")) take(verify_local_global(g));
  return out;
}

SweepReport verify_sweep(int max_n, std::string_view statement, int workers) {
  if (max_n < 1) throw InputError("verify: max order must be at least 1");
  if (!statement.empty() && !is_statement(statement)) {
    throw InputError("verify: unknown statement \"" + std::string(statement) + "\"");
  }
  SweepReport report;
  report.max_n = max_n;
  for (auto name : kStatements) {
    if (statement.empty() || statement == name) report.tallies.push_back({std::string(name)});
  }
  std::vector<Graph> graphs;
  for (int n = 1; n <= max_n; ++n) {
    auto level = gen_block_graphs(n);
    graphs.insert(graphs.end(), level.begin(), level.end());
  }
  report.graphs = graphs.size();
  std::vector<std::vector<Verdict>> results(graphs.size());
  parallel_for(graphs.size(), workers, [&](std::size_t i) { results[i] = verify_graph(graphs[i], statement); });

  for (auto& batch : results) {
    for (auto& v : batch) {
      auto tally = std::find_if(report.tallies.begin(), report.tallies.end(),
                                [&](const StatementTally& t) { return t.statement == v.statement; });
      if (!v.applicable) {
        ++tally->skipped;
        continue;
      }
      ++tally->checked;
      if (v.holds) ++tally->held;
      if (v.equality) ++tally->equalities;
      if (!v.ok()) {
        ++tally->failed;
        report.failures.push_back(v);
      }
      report.verdicts.push_back(std::move(v));
    }
  }
  return report;
}

}  // namespace blockmean
