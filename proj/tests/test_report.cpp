#include <doctest.h>

#include <json.hpp>

#include "blockmean/errors.hpp"
#include "blockmean/families.hpp"
#include "blockmean/ktree.hpp"
#include "blockmean/report.hpp"

using namespace blockmean;
using nlohmann::json;

namespace {

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("rational formatting") {
  CHECK(format_rational(q(5, 3)) == "5/3");
  CHECK(format_rational(Rational(4)) == "4/1");
  CHECK(format_decimal(q(5, 3)) == "1.666667");
  CHECK(format_decimal(q(12, 7)) == "1.714286");
  CHECK(format_decimal(q(1, 8), 2) == "0.13");
  CHECK(format_decimal(q(-1, 8), 2) == "-0.13");
  CHECK(format_decimal(q(1, 3), 0) == "0");
  CHECK(format_decimal(q(1, 2000000), 6) == "0.000001");
  CHECK(format_decimal(q(-1, 3000000), 6) == "0.000000");
  CHECK(format_decimal(Rational(7)) == "7.000000");
  CHECK_THROWS_AS(parse_format("xml"), InputError);
}

TEST_CASE("compute report") {
  auto r = compute_report(path(3));
  CHECK(r.block_graph);
  CHECK(r.global.count == 6);
  CHECK(r.global.mean == q(5, 3));
  REQUIRE(r.vertices.size() == 3);
  CHECK(r.vertices[0].mu == q(3, 2));

  auto j = json::parse(render(r, Format::Json));
  CHECK(j["N"] == "6");
  CHECK(j["W"] == "10");
  CHECK(j["M"]["num"] == "5");
  CHECK(j["M"]["den"] == "3");
  CHECK(j["phi"] == json::array({"0", "3", "2", "1"}));
  CHECK(j["vertices"].size() == 3);

  const auto csv = render(r, Format::Csv);
  CHECK(csv.rfind("scope,count,total_order,mean,mu\ngraph,6,10,5/3,\n", 0) == 0);
  CHECK(render(r, Format::Table).find("1.666667") != std::string::npos);

  CHECK_FALSE(compute_report(complete(1)).vertices[0].mu.has_value());
  CHECK_FALSE(compute_report(cycle(4)).block_graph);
  CHECK_THROWS_AS(compute_report(Graph::empty(2)), PreconditionError);
}

TEST_CASE("search and k-tree reports") {
  auto row = search_row(Family::Block, 4);
  auto j = json::parse(render(std::vector<SearchRow>{row}, Format::Json));
  REQUIRE(j.size() == 1);
  CHECK(j[0]["count"] == 4);
  CHECK(j[0]["min_theorem"] == true);
  CHECK(j[0]["max_conjecture"] == true);

  auto c = search_row(Family::Connected, 4);
  CHECK_FALSE(c.max_conjecture.has_value());
  CHECK(render(std::vector<SearchRow>{c}, Format::Csv).find(",n/a\n") != std::string::npos);

  auto k = ktree_report(as_k_tree(star(3), 1));
  CHECK(k.dual_is_block_graph);
  CHECK(k.formula == q(23, 11));
  REQUIRE(k.oracle.has_value());
  CHECK(*k.oracle == k.formula);
  auto kj = json::parse(render(k, Format::Json));
  CHECK(kj["agree"] == true);
  CHECK(kj["k_cliques"] == "4");
}
