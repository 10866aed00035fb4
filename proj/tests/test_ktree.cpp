#include <doctest.h>

#include <random>

#include "blockmean/blocks.hpp"
#include "blockmean/canon.hpp"
#include "blockmean/errors.hpp"
#include "blockmean/families.hpp"
#include "blockmean/generate.hpp"
#include "blockmean/ktree.hpp"
#include "oracle.hpp"

using namespace blockmean;

namespace {

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("k-tree recognition") {
  CHECK(is_k_tree(path(5), 1));
  CHECK(is_k_tree(complete(2), 2));
  CHECK(is_k_tree(complete(4), 3));
  CHECK(is_k_tree(Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}), 2));
  CHECK_FALSE(is_k_tree(cycle(4), 2));
  CHECK_FALSE(is_k_tree(cycle(4), 1));
  CHECK_FALSE(is_k_tree(complete(4), 2));
  CHECK_FALSE(is_k_tree(path(3), 0));
  CHECK_THROWS_AS(as_k_tree(cycle(5), 2), InputError);

  auto t = as_k_tree(Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}), 2);
  CHECK(t.build_order.size() == 2);
  CHECK(popcount(t.base) == 2);
}

TEST_CASE("building k-trees from attachments") {
  auto t = build_k_tree(2, {0b011, 0b011});
  CHECK(t.order() == 4);
  CHECK(t.graph.size() == 5);
  CHECK_FALSE(t.graph.adjacent(2, 3));
  CHECK(isomorphic(dual(t), complete(2)));
  CHECK_THROWS_AS(build_k_tree(2, {0b101}), InputError);  // {0,2} does not exist yet
  CHECK_THROWS_AS(build_k_tree(2, {0b111}), InputError);

  auto fan = build_k_tree(2, {0b011, 0b101, 0b1001});
  CHECK(isomorphic(dual(fan), path(3)));

  auto shared = build_k_tree(2, {0b011, 0b011, 0b011});
  CHECK(isomorphic(dual(shared), complete(3)));
}

TEST_CASE("duals are block graphs and clique counts follow the order") {
  std::mt19937_64 rng(7);
  for (int k = 1; k <= 4; ++k) {
    for (int i = 0; i < 25; ++i) {
      const int n = k + 1 + static_cast<int>(rng() % 9);
      auto t = random_k_tree(rng, k, n);
      CHECK(t.order() == n);
      CHECK(is_k_tree(t.graph, k));
      CHECK(cliques_of_size(t.graph, k).size() == static_cast<std::size_t>((n - k) * k + 1));
      CHECK(cliques_of_size(t.graph, k + 1).size() == static_cast<std::size_t>(n - k));
      Graph d = dual(t);
      CHECK(d.order() == n - k);
      CHECK(is_block_graph(d));
      auto again = as_k_tree(t.graph, k);
      CHECK(again.order() == n);
    }
  }
  CHECK_THROWS_AS(dual(as_k_tree(complete(2), 2)), PreconditionError);
}

TEST_CASE("mean sub-k-tree order on small examples") {
  CHECK(mean_sub_k_tree(as_k_tree(path(3), 1)) == q(5, 3));
  CHECK(mean_sub_k_tree(as_k_tree(star(3), 1)) == q(23, 11));
  for (int k = 1; k <= 5; ++k) {
    auto t = as_k_tree(complete(k + 1), k);
    CHECK(mean_sub_k_tree(t) == q((k + 1) * (k + 1), k + 2));
    CHECK(mean_sub_k_tree_brute(t) == mean_sub_k_tree(t));
  }
  CHECK_THROWS_AS(mean_sub_k_tree(as_k_tree(complete(3), 3)), PreconditionError);
}

TEST_CASE("trees: sub-1-trees are the connected induced subgraphs") {
  for (int n = 2; n <= 9; ++n) {
    for (const Graph& g : gen_block_graphs(n)) {
      if (g.size() != static_cast<std::size_t>(n - 1)) continue;
      auto t = as_k_tree(g, 1);
      CHECK(mean_sub_k_tree(t) == naive::mean(naive::all(naive::from(g))));
      CHECK(mean_sub_k_tree_brute(t) == mean_sub_k_tree(t));
    }
  }
}

TEST_CASE("formula agrees with the subset oracle on random k-trees") {
  std::mt19937_64 rng(13);
  for (int k = 2; k <= 4; ++k) {
    for (int i = 0; i < 20; ++i) {
      const int n = k + 1 + static_cast<int>(rng() % (11 - k));
      auto t = random_k_tree(rng, k, n);
      CHECK(mean_sub_k_tree(t) == mean_sub_k_tree_brute(t));
    }
  }
  std::mt19937_64 big(1);
  CHECK_THROWS_AS(enum_sub_k_trees_brute(random_k_tree(big, 2, kSubKTreeOracleCap + 1)), InputError);
}
