#include "blockmean/search.hpp"

#include <algorithm>

#include "blockmean/cis.hpp"
#include "blockmean/errors.hpp"
#include "blockmean/families.hpp"
#include "blockmean/generate.hpp"
#include "blockmean/parallel.hpp"

namespace blockmean {

std::string_view family_name(Family f) { return f == Family::Block ? "block" : "connected"; }

Family parse_family(std::string_view name) {
  if (name == "block") return Family::Block;
  if (name == "connected") return Family::Connected;
  throw InputError("unknown family \"" + std::string(name) + "\" (expected block or connected)");
}

SearchResult extremal_scan(Family family, int n, int workers) {
  const auto start = std::chrono::steady_clock::now();
  auto graphs = family == Family::Block ? gen_block_graphs(n, workers) : gen_connected_graphs(n, workers);
  if (graphs.empty()) throw PreconditionError("extremal_scan: empty family");

  std::vector<Rational> means(graphs.size());
  std::vector<CanonicalCert> certs(graphs.size());
  parallel_for(graphs.size(), workers, [&](std::size_t i) {
    means[i] = mean(graphs[i]).mean;
    certs[i] = canonical_cert(graphs[i]);
  });

  SearchResult r;
  r.family = family;
  r.n = n;
  r.count = graphs.size();
  r.min_mean = *std::min_element(means.begin(), means.end());
  r.max_mean = *std::max_element(means.begin(), means.end());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (means[i] == r.min_mean) r.argmin.push_back(certs[i]);
    if (means[i] == r.max_mean) r.argmax.push_back(certs[i]);
  }
  std::sort(r.argmin.begin(), r.argmin.end());
  std::sort(r.argmax.begin(), r.argmax.end());
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

namespace {

Verdict scan_verdict(std::string statement, const SearchResult& r, Rational lhs, Rational rhs, bool holds) {
  Verdict v;
  v.statement = std::move(statement);
  v.holds = holds;
  v.equality = lhs == rhs;
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  v.vertices = {r.n};
  return v;
}

}  // namespace

Verdict check_min_theorem(const SearchResult& r) {
  Rational expected(r.n + 2, 3);
  expected.canonicalize();
  bool unique_path = r.argmin.size() == 1 && r.argmin.front() == canonical_cert(path(r.n));
  auto v = scan_verdict("min_theorem", r, r.min_mean, expected, unique_path && r.min_mean == expected);
  v.graph = r.argmin.empty() ? "" : r.argmin.front().hex();
  return v;
}

Verdict check_min_theorem(int n, int workers) { return check_min_theorem(extremal_scan(Family::Block, n, workers)); }

Verdict check_max_conjecture(const SearchResult& r) {
  if (r.n < 3) {
    Verdict v = Verdict::skipped("max_conjecture", "", {r.n}, "order below 3");
    return v;
  }
  bool holds;
  if (r.n <= 4) {
    holds = r.argmax.size() == 1 && r.argmax.front() == canonical_cert(complete(r.n));
  } else {
    holds = std::all_of(r.argmax.begin(), r.argmax.end(),
                        [](const CanonicalCert& c) { return is_caterpillar(decode_cert(c)); });
  }
  auto v = scan_verdict("max_conjecture", r, r.max_mean, r.max_mean, holds);
  v.graph = r.argmax.empty() ? "" : r.argmax.front().hex();
  return v;
}

Verdict check_max_conjecture(int n, int workers) {
  return check_max_conjecture(extremal_scan(Family::Block, n, workers));
}

}  // namespace blockmean
