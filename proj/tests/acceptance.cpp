// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "blockmean/blocks.hpp"
#include "blockmean/chains.hpp"
#include "blockmean/cis.hpp"
#include "blockmean/families.hpp"
#include "blockmean/generate.hpp"
#include "blockmean/improve.hpp"
#include "blockmean/ktree.hpp"
#include "blockmean/lemmas.hpp"
#include "blockmean/report.hpp"
#include "blockmean/search.hpp"
#include "oracle.hpp"

using namespace blockmean;

namespace {

Rational q(const Integer& a, const Integer& b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

// Each check returns an empty string on success, otherwise what went wrong.
using Check = std::function<std::string()>;

std::string closed_forms() {
  for (int n = 1; n <= 30; ++n) {
    if (mean(path(n)).mean != q(n + 2, 3)) return "path mean wrong at n = " + std::to_string(n);
  }
  for (int n = 1; n <= 20; ++n) {
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n));
    if (mean(complete(n)).mean != q(Integer(n) * two_pow / 2, two_pow - 1)) {
      return "complete mean wrong at n = " + std::to_string(n);
    }
  }
  return "";
}

std::string oracle_equivalence() {
  std::size_t checked = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : gen_block_graphs(n)) {
      if (phi_fast(g) != phi_brute(g)) return "mismatch on " + canonical_cert(g).hex();
      ++checked;
    }
  }
  std::mt19937_64 rng(20240501);
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + static_cast<int>(rng() % 14);
    Graph g = random_block_graph(rng, n, 2 + static_cast<int>(rng() % 5));
    if (phi_fast(g) != phi_brute(g)) return "mismatch on random " + canonical_cert(g).hex();
  }
  return checked == 263 ? "" : "expected 263 classes, saw " + std::to_string(checked);
}

std::string min_theorem() {
  const std::size_t classes[] = {2, 4, 9, 22, 59, 165, 496, 1540};
  for (int n = 3; n <= 10; ++n) {
    auto r = extremal_scan(Family::Block, n, 4);
    if (r.count != classes[n - 3]) return "n = " + std::to_string(n) + ": " + std::to_string(r.count) + " classes";
    auto v = check_min_theorem(r);
    if (!v.ok()) return "n = " + std::to_string(n) + ": min " + format_rational(v.lhs);
  }
  return "";
}

std::string max_observations() {
  for (int n = 3; n <= 10; ++n) {
    auto v = check_max_conjecture(n);
    if (!v.ok()) return "n = " + std::to_string(n) + ": maximizer fails the expected shape";
  }
  return "";
}

std::string lemma_suite() {
  auto r = verify_sweep(8, {}, 4);
  for (const auto& t : r.tallies) {
    if (t.checked == 0) return t.statement + " was never checked";
  }
  if (!r.ok()) {
    const auto& f = r.failures.front();
    return std::to_string(r.failures.size()) + " failures, first " + f.statement + " on " + f.graph;
  }
  return "";
}

std::string family_chains() {
  std::mt19937_64 rng(7351);
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
  for (int i = 0; i < 200; ++i) {
    Graph h = random_block_graph(rng, pick(2, 8));
    const int v = pick(0, h.order() - 1);
    const int n = pick(3, 12);
    if (!family_vertex_gluing(h, v, n).ok()) return "vertex gluing fails on " + canonical_cert(h).hex();
  }
  for (int i = 0; i < 200; ++i) {
    Graph h = random_block_graph(rng, pick(2, 8));
    const int u = pick(0, h.order() - 1);
    const int n = pick(3, 12);
    if (!family_stretching(h, u, n).ok()) return "stretching fails on " + canonical_cert(h).hex();
  }
  for (int i = 0; i < 200;) {
    Graph h = random_block_graph(rng, pick(3, 8));
    const auto tree = block_decomposition(h);
    std::vector<std::pair<int, int>> pairs;
    for (auto [a, b] : h.edges()) {
      if (!tree.is_cut(a) && !tree.is_cut(b)) pairs.emplace_back(a, b);
    }
    if (pairs.empty()) continue;
    auto [a, b] = pairs[rng() % pairs.size()];
    const int n = pick(4, 12);
    if (!family_edge_gluing(h, a, b, n).ok()) return "edge gluing fails on " + canonical_cert(h).hex();
    ++i;
  }
  return "";
}

std::string constructive() {
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& g : gen_block_graphs(n)) {
      if (is_path(g)) continue;
      auto steps = improve_to_path(g);
      Rational last = mean(g).mean;
      for (const auto& s : steps) {
        if (!(s.after < last)) return "no strict decrease from " + canonical_cert(g).hex();
        if (!is_block_graph(s.graph) || s.graph.order() != n) return "left the class from " + canonical_cert(g).hex();
        last = s.after;
      }
      if (steps.empty() || !is_path(steps.back().graph)) return "did not reach P_n from " + canonical_cert(g).hex();
    }
  }
  return "";
}

std::string general_graphs() {
  for (int n = 1; n <= 7; ++n) {
    auto r = extremal_scan(Family::Connected, n, 4);
    if (!check_min_theorem(r).ok()) return "n = " + std::to_string(n);
  }
  return "";
}

std::string k_tree_bridge() {
  for (int n = 2; n <= 9; ++n) {
    for (const Graph& g : gen_block_graphs(n)) {
      if (g.size() != static_cast<std::size_t>(n - 1)) continue;
      if (mean_sub_k_tree(as_k_tree(g, 1)) != naive::mean(naive::all(naive::from(g)))) {
        return "tree " + canonical_cert(g).hex();
      }
    }
  }
  std::mt19937_64 rng(99);
  for (int k : {2, 3}) {
    for (int i = 0; i < 50; ++i) {
      const int n = k + 1 + static_cast<int>(rng() % static_cast<unsigned>(10 - k));
      auto t = random_k_tree(rng, k, n);
      if (mean_sub_k_tree(t) != mean_sub_k_tree_brute(t)) {
        return std::to_string(k) + "-tree of order " + std::to_string(n) + " disagrees";
      }
    }
  }
  return "";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Check>> criteria{
      {"path and clique closed forms", closed_forms},
      {"fast recursion equals enumeration", oracle_equivalence},
      {"unique minimizer P_n, n = 3..10", min_theorem},
      {"maximizer shape, n = 3..10", max_observations},
      {"statement sweep, n <= 8", lemma_suite},
      {"family chains, 200 instances each", family_chains},
      {"descent to the path, n <= 8", constructive},
      {"connected graphs, unique minimizer P_n, n <= 7", general_graphs},
      {"k-tree bridge", k_tree_bridge},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = criteria[i].second();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    std::printf("criterion %zu %s: %s (%.2f s)%s%s\n", i + 1, problem.empty() ? "PASS" : "FAIL", criteria[i].first,
                took.count(), problem.empty() ? "" : " - ", problem.c_str());
    failed += !problem.empty();
  }
  return failed == 0 ? 0 : 1;
}
