#include <doctest.h>

#include <algorithm>
#include <random>

#include "blockmean/blocks.hpp"
#include "blockmean/canon.hpp"
#include "blockmean/chains.hpp"
#include "blockmean/errors.hpp"
#include "blockmean/families.hpp"
#include "blockmean/generate.hpp"
#include "blockmean/improve.hpp"
#include "blockmean/lemmas.hpp"

using namespace blockmean;

namespace {

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

const Verdict& find(const std::vector<Verdict>& vs, std::string_view statement, std::vector<int> at) {
  auto it = std::find_if(vs.begin(), vs.end(),
                         [&](const Verdict& v) { return v.statement == statement && v.vertices == at; });
  REQUIRE(it != vs.end());
  return *it;
}

}  // namespace

TEST_CASE("count bounds on named graphs") {
  auto p4 = verify_count_bounds(path(4));
  const auto& leaf = find(p4, "leaf_count_bound", {0});
  CHECK(leaf.lhs == 10);
  CHECK(leaf.rhs == 10);
  CHECK(leaf.equality);
  CHECK(leaf.ok());

  auto k3 = verify_count_bounds(complete(3));
  const auto& noncut = find(k3, "noncut_count", {1});
  CHECK(noncut.lhs == 4);
  CHECK(noncut.rhs == 4);
  CHECK(noncut.equality);

  auto p3 = verify_count_bounds(path(3));
  const auto& cw = find(p3, "count_weight", {1});
  CHECK(cw.lhs == 6);
  CHECK(cw.rhs == 8);
  CHECK(find(p3, "adjacent_count", {1, 0}).equality);
  CHECK_FALSE(find(p3, "adjacent_count", {0, 1}).equality);
  CHECK_FALSE(find(p3, "noncut_count", {1}).applicable);
}

TEST_CASE("weight bound examples") {
  auto k2 = verify_weight_bound(complete(2), 0);
  CHECK(k2.lhs == 1);
  CHECK(k2.rhs == 1);
  CHECK(k2.holds);

  auto p3 = verify_weight_bound(path(3), 1);
  CHECK(p3.lhs == 2);
  CHECK(p3.rhs == 4);

  Graph k3p = Graph::build(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  auto pendant = verify_weight_bound(k3p, 3);
  CHECK(pendant.lhs == 12);
  CHECK(pendant.rhs == q(35, 2));
  CHECK(pendant.ok());
}

TEST_CASE("mu examples") {
  for (int n = 2; n <= 4; ++n) {
    auto v = verify_mu(complete(n), 0);
    CHECK(v.equality);
    CHECK(v.ok());
  }
  auto leaf = verify_mu(path(3), 0);
  CHECK(leaf.lhs == q(3, 2));
  CHECK(leaf.rhs == q(4, 3));
  CHECK_FALSE(leaf.equality);

  auto tail = verify_mu(broom(3, 2), 4);
  CHECK(tail.lhs == q(5, 2));
  CHECK(tail.rhs == q(32, 15));
  CHECK(tail.ok());

  CHECK_FALSE(verify_mu(path(3), 1).applicable);
  CHECK_FALSE(verify_mu(cycle(4), 0).applicable);
}

TEST_CASE("local-global examples") {
  for (const auto& v : verify_local_global(path(3))) {
    CHECK(v.lhs == q(5, 3));
    CHECK(v.ok());
  }
  auto k3 = verify_local_global(complete(3));
  CHECK(find(k3, "local_global", {0}).rhs == 2);
  CHECK(find(k3, "local_global", {0}).lhs == q(12, 7));
}

TEST_CASE("identities hold on named graphs") {
  for (const Graph& g : {spider({1, 2, 3}), broom(4, 3), caterpillar({2, 0, 1})}) {
    for (const auto& v : verify_local_sum(g)) CHECK(v.ok());
    for (const auto& v : verify_block_star(g)) CHECK(v.ok());
  }
}

TEST_CASE("lemma sweep up to order 7") {
  auto r = verify_sweep(7);
  CHECK(r.ok());
  CHECK(r.graphs == 98);
  for (const auto& t : r.tallies) {
    CHECK(t.checked > 0);
    CHECK(t.failed == 0);
  }
  auto tally = [&](std::string_view s) {
    return *std::find_if(r.tallies.begin(), r.tallies.end(), [&](const auto& t) { return t.statement == s; });
  };
  // Complete graphs K_2..K_7 contribute one equality per vertex.
  CHECK(tally("mu").equalities == 2 + 3 + 4 + 5 + 6 + 7);
  // Paths P_2..P_7 at both leaves, plus K_1.
  CHECK(tally("leaf_count_bound").equalities == 1 + 2 * 6);

  CHECK_THROWS_AS(verify_sweep(4, "no_such_statement"), InputError);
  CHECK_THROWS_AS(verify_sweep(0), InputError);

  auto only = verify_sweep(6, "mu");
  REQUIRE(only.tallies.size() == 1);
  for (const auto& v : only.verdicts) CHECK(v.statement == "mu");
}

TEST_CASE("sweep output does not depend on worker count") {
  auto a = verify_sweep(6, "", 1);
  auto b = verify_sweep(6, "", 3);
  REQUIRE(a.verdicts.size() == b.verdicts.size());
  for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
    CHECK(a.verdicts[i].graph == b.verdicts[i].graph);
    CHECK(a.verdicts[i].statement == b.verdicts[i].statement);
    CHECK(a.verdicts[i].lhs == b.verdicts[i].lhs);
  }
}

TEST_CASE("count bounds hold on connected graphs that are not block graphs") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : gen_connected_graphs(n)) {
      for (const auto& v : verify_count_bounds(g)) CHECK(v.ok());
    }
  }
}

TEST_CASE("vertex gluing family") {
  auto c = family_vertex_gluing(complete(2), 0, 3);
  REQUIRE(c.graphs.size() == 3);
  CHECK(isomorphic(c.graphs[0], path(4)));
  CHECK(c.engine[0].count == 10);
  CHECK(c.formula_count[0] == 10);
  CHECK(c.engine[0].mean < c.engine[1].mean);
  CHECK(c.ok());

  auto k3 = family_vertex_gluing(complete(3), 1, 5);
  CHECK(k3.strict_through == 3);
  CHECK(k3.ok());

  CHECK_THROWS_AS(family_vertex_gluing(complete(1), 0, 4), PreconditionError);
  CHECK_THROWS_AS(family_vertex_gluing(complete(2), 0, 2), PreconditionError);
  CHECK_THROWS_AS(family_vertex_gluing(cycle(4), 0, 4), PreconditionError);
}

TEST_CASE("edge gluing family") {
  auto c = family_edge_gluing(complete(3), 0, 1, 4);
  REQUIRE(c.graphs.size() == 3);
  CHECK(c.engine[1].count == 19);
  CHECK(c.engine[1].total_order == 47);
  CHECK(c.formula_count[1] == 19);
  CHECK(c.engine[0].mean < c.engine[1].mean);
  CHECK(c.ok());

  CHECK(family_edge_gluing(complete(4), 2, 3, 6).ok());

  Graph k3p = Graph::build(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  CHECK_THROWS_AS(family_edge_gluing(k3p, 0, 1, 5), PreconditionError);  // 0 is a cut vertex
  CHECK_THROWS_AS(family_edge_gluing(path(3), 0, 2, 5), PreconditionError);
  CHECK_THROWS_AS(family_edge_gluing(complete(3), 0, 1, 3), PreconditionError);
}

TEST_CASE("stretching family") {
  auto c = family_stretching(complete(2), 0, 3);
  REQUIRE(c.graphs.size() == 2);
  CHECK(isomorphic(c.graphs[0], path(4)));
  CHECK(c.formula_count[0] == 10);
  CHECK(c.engine[0].mean < c.engine[1].mean);
  CHECK(c.ok());
  CHECK_FALSE(c.symmetry_ok.has_value());

  CHECK(family_stretching(path(3), 0, 4).ok());
  CHECK_THROWS_AS(family_stretching(complete(2), 0, 2), PreconditionError);
}

TEST_CASE("family chains on random hosts") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 40; ++i) {
    Graph h = random_block_graph(rng, 2 + static_cast<int>(rng() % 6));
    const int n = 3 + static_cast<int>(rng() % 8);
    const int v = static_cast<int>(rng() % h.order());
    CHECK(family_vertex_gluing(h, v, n).ok());
    CHECK(family_stretching(h, v, n).ok());
  }
}

TEST_CASE("improvement moves") {
  auto k4 = improve_step(complete(4));
  CHECK(k4.move == Move::Stretching);
  CHECK(k4.before == q(32, 15));
  CHECK(k4.after < k4.before);

  auto s = improve_step(star(3));
  CHECK(s.move == Move::VertexGluing);
  CHECK(s.before == q(23, 11));
  CHECK(s.after < s.before);

  CHECK(improve_step(spider({2, 2, 2})).move == Move::VertexGluing);

  // Triangle with a pendant vertex at each corner: the branch is the block.
  Graph sun = Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
  auto e = improve_step(sun);
  CHECK(e.move == Move::EdgeGluing);
  CHECK(e.after < e.before);

  // Path-shaped block-cut tree with a cyclic end-block.
  CHECK(improve_step(broom(3, 3)).move == Move::Stretching);

  CHECK_THROWS_AS(improve_step(path(5)), PreconditionError);
  CHECK_THROWS_AS(improve_step(cycle(5)), PreconditionError);
}

TEST_CASE("descent reaches the path from every block graph up to order 7") {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : gen_block_graphs(n)) {
      auto steps = improve_to_path(g);
      Rational last = mean(g).mean;
      for (const auto& s : steps) {
        CHECK(s.graph.order() == n);
        CHECK(s.graph.connected());
        CHECK(is_block_graph(s.graph));
        CHECK(s.before == last);
        CHECK(s.after < s.before);
        last = s.after;
      }
      CHECK(is_path(steps.empty() ? g : steps.back().graph));
    }
  }
}
