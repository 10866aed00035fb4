#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <set>

#include "blockmean/blocks.hpp"
#include "blockmean/canon.hpp"
#include "blockmean/errors.hpp"
#include "blockmean/families.hpp"
#include "blockmean/generate.hpp"
#include "blockmean/search.hpp"
#include "oracle.hpp"

using namespace blockmean;

namespace {

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

std::set<std::uint64_t> perm_codes(const std::vector<Graph>& graphs) {
  std::set<std::uint64_t> out;
  for (const Graph& g : graphs) out.insert(naive::perm_canon(naive::from(g)));
  return out;
}

}  // namespace

TEST_CASE("block graph class counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 9, 22, 59, 165, 496};
  for (int n = 1; n <= 9; ++n) CHECK(gen_block_graphs(n).size() == expected[n - 1]);
}

TEST_CASE("connected graph class counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) CHECK(gen_connected_graphs(n).size() == expected[n - 1]);
  CHECK_THROWS_AS(gen_connected_graphs(kConnectedHardCap + 1), InputError);
}

TEST_CASE("generation is complete against exhaustive labeled enumeration") {
  for (int n = 1; n <= 6; ++n) {
    auto blocks = naive::classes(n, [](const naive::Adj& a) { return naive::is_block_graph(a); });
    CHECK(perm_codes(gen_block_graphs(n)) == blocks);
    auto connected = naive::classes(n, [](const naive::Adj& a) { return naive::connected(a, naive::full(a.n)); });
    CHECK(perm_codes(gen_connected_graphs(n)) == connected);
  }
}

TEST_CASE("generated classes are distinct block graphs sorted by certificate") {
  for (int n = 1; n <= 8; ++n) {
    auto graphs = gen_block_graphs(n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      CHECK(graphs[i].order() == n);
      CHECK(is_block_graph(graphs[i]));
      if (i > 0) CHECK(canonical_cert(graphs[i - 1]) < canonical_cert(graphs[i]));
    }
  }
}

TEST_CASE("generation does not depend on worker count") {
  for (int n : {7, 8}) {
    auto a = gen_block_graphs(n, 1);
    auto b = gen_block_graphs(n, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  }
  auto a = extremal_scan(Family::Block, 8, 1);
  auto b = extremal_scan(Family::Block, 8, 4);
  CHECK(a.min_mean == b.min_mean);
  CHECK(a.max_mean == b.max_mean);
  CHECK(a.argmin == b.argmin);
  CHECK(a.argmax == b.argmax);
}

TEST_CASE("certificate cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "blockmean-cache-test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ::setenv("BLOCKMEAN_CACHE_DIR", dir.c_str(), 1);
  auto fresh = gen_block_graphs(6);
  CHECK(std::filesystem::exists(dir / "block-6.certs"));
  auto cached = gen_block_graphs(6);
  auto connected = gen_connected_graphs(5);
  CHECK(std::filesystem::exists(dir / "connected-5.certs"));
  CHECK(gen_connected_graphs(5).size() == connected.size());
  ::unsetenv("BLOCKMEAN_CACHE_DIR");
  std::filesystem::remove_all(dir);
  REQUIRE(fresh.size() == cached.size());
  for (std::size_t i = 0; i < fresh.size(); ++i) CHECK(canonical_cert(fresh[i]) == canonical_cert(cached[i]));
}

TEST_CASE("extremal scans on small orders") {
  auto b3 = extremal_scan(Family::Block, 3);
  CHECK(b3.count == 2);
  CHECK(b3.min_mean == q(5, 3));
  CHECK(b3.max_mean == q(12, 7));
  CHECK(b3.argmin == std::vector<CanonicalCert>{canonical_cert(path(3))});
  CHECK(b3.argmax == std::vector<CanonicalCert>{canonical_cert(complete(3))});

  auto c5 = extremal_scan(Family::Connected, 5);
  CHECK(c5.count == 21);
  CHECK(c5.min_mean == q(7, 3));
  CHECK(c5.argmin == std::vector<CanonicalCert>{canonical_cert(path(5))});

  for (int n = 1; n <= 8; ++n) CHECK(check_min_theorem(n).ok());
  for (int n = 3; n <= 8; ++n) CHECK(check_max_conjecture(n).ok());
  CHECK_FALSE(check_max_conjecture(2).applicable);
  CHECK_THROWS_AS(parse_family("trees"), InputError);
}

TEST_CASE("scan extremes agree with the naive oracle") {
  for (int n = 2; n <= 6; ++n) {
    auto r = extremal_scan(Family::Block, n);
    Rational lo = r.max_mean, hi = r.min_mean;
    for (const Graph& g : gen_block_graphs(n)) {
      const auto m = naive::mean(naive::all(naive::from(g)));
      if (m < lo) lo = m;
      if (m > hi) hi = m;
    }
    CHECK(lo == r.min_mean);
    CHECK(hi == r.max_mean);
  }
}
