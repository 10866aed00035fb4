// blockmean: exact connected-induced-subgraph means of block graphs.
#include <blockmean.h>

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitInput = 2;

constexpr int kBlockCap = 10, kBlockLongCap = 11;
constexpr int kConnectedCap = 7, kConnectedLongCap = 8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphDeleter {
  void operator()(bm_graph* g) const { bm_graph_free(g); }
};
using GraphPtr = std::unique_ptr<bm_graph, GraphDeleter>;

struct KTreeDeleter {
  void operator()(bm_ktree* t) const { bm_ktree_free(t); }
};
using KTreePtr = std::unique_ptr<bm_ktree, KTreeDeleter>;

// Thrown after a library call fails; carries the status as the exit code.
struct Failed {
  int status;
};

void check(bm_status s) {
  if (s == BM_OK || s == BM_VERDICT_FAILED) return;
  std::cerr << "blockmean: " << bm_last_error() << '\n';
  throw Failed{static_cast<int>(s)};
}

// Prints a report owned by the library and returns the exit code for it.
int emit(bm_status s, char** text) {
  check(s);
  std::fputs(*text, stdout);
  bm_free_string(*text);
  *text = nullptr;
  return s == BM_VERDICT_FAILED ? 1 : 0;
}

int parse_int(std::string_view s, const char* what) {
  int value = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw UsageError(std::string("invalid ") + what + " \"" + std::string(s) + "\"");
  }
  return value;
}

// "a..b" or a single order.
std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int n = parse_int(s, "order");
    return {n, n};
  }
  return {parse_int(s.substr(0, dots), "order"), parse_int(s.substr(dots + 2), "order")};
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --input FILE or --graph NAME:P1,P2,...
GraphPtr load_graph(const std::string& input, const std::string& named) {
  bm_graph* g = nullptr;
  if (!input.empty() && !named.empty()) throw UsageError("give either --input or --graph, not both");
  if (!input.empty()) {
    check(bm_graph_parse(read_file(input).c_str(), &g));
  } else if (!named.empty()) {
    const auto colon = named.find(':');
    const std::string name = named.substr(0, colon);
    std::vector<int> params;
    if (colon != std::string::npos) {
      std::stringstream rest(named.substr(colon + 1));
      std::string item;
      while (std::getline(rest, item, ',')) params.push_back(parse_int(item, "graph parameter"));
    }
    check(bm_graph_family(name.c_str(), params.data(), params.size(), &g));
  } else {
    throw UsageError("a graph is required (--input FILE or --graph NAME:PARAMS)");
  }
  return GraphPtr(g);
}

bm_format to_format(const std::string& s) {
  if (s == "table") return BM_FORMAT_TABLE;
  if (s == "json") return BM_FORMAT_JSON;
  if (s == "csv") return BM_FORMAT_CSV;
  throw UsageError("unknown format " + s);
}

void report_elapsed(std::chrono::steady_clock::time_point start) {
  const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
  std::fprintf(stderr, "elapsed %.3f s\n", d.count());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact connected-induced-subgraph polynomials and means of block graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bm_version()));

  std::string format = "table", input, named, statement, family, range;
  int max_n = 6, workers = 1, n = 0, k = 1, u = 0, v = 1;
  std::uint64_t seed = 0;
  bool long_run = false, descent = false, random = false;

  auto add_graph = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "Edge-list file ('-' for stdin)");
    cmd->add_option("--graph", named, "Named graph, e.g. broom:3,2 or spider:2,2,1");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  };

  auto* compute = app.add_subcommand("compute", "Polynomial, counts and means of one graph");
  add_graph(compute);
  add_format(compute);
  compute->add_flag("--descent", descent, "Also print the mean-decreasing descent to the path");

  auto* verify = app.add_subcommand("verify", "Check every statement over all block graphs up to an order");
  verify->add_option("--max-n", max_n, "Largest order swept")->check(CLI::PositiveNumber);
  verify->add_option("--statement", statement, "Restrict to one statement");
  verify->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--long-run", long_run, "Raise the order cap");
  add_format(verify);

  auto* search = app.add_subcommand("search", "Extremal mean scan over a graph family");
  search->add_option("--family", family, "block or connected")->required();
  search->add_option("--n", range, "Order or range a..b")->required();
  search->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--long-run", long_run, "Raise the order cap");
  add_format(search);

  auto* fam = app.add_subcommand("family", "Build and check a one-parameter family G_1, G_2, ...");
  fam->add_option("--family", family, "vertex, edge or stretch")->required();
  add_graph(fam);
  fam->add_option("--u", u, "Anchor vertex of the host graph");
  fam->add_option("--v", v, "Second anchor (edge family)");
  fam->add_option("--n", n, "Family size parameter")->required();
  add_format(fam);

  auto* ktree = app.add_subcommand("ktree", "Dual block graph and mean sub-k-tree order");
  add_graph(ktree);
  ktree->add_option("--k", k, "Clique parameter")->check(CLI::PositiveNumber);
  ktree->add_flag("--random", random, "Sample a random k-tree of order --n");
  ktree->add_option("--n", n, "Order of the random k-tree");
  ktree->add_option("--seed", seed, "Random seed");
  add_format(ktree);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    const bm_format fmt = to_format(format);
    char* out = nullptr;

    if (compute->parsed()) {
      auto g = load_graph(input, named);
      int code = emit(bm_compute(g.get(), fmt, &out), &out);
      if (descent) {
        std::fputs("\n", stdout);
        code = std::max(code, emit(bm_descent(g.get(), fmt, &out), &out));
      }
      return code;
    }
    if (verify->parsed()) {
      const int cap = long_run ? kBlockLongCap : kBlockCap;
      if (max_n > cap) throw UsageError("--max-n above " + std::to_string(cap) + (long_run ? "" : " needs --long-run"));
      const auto start = std::chrono::steady_clock::now();
      bm_verify_options options{max_n, statement.c_str(), workers, fmt};
      const int code = emit(bm_verify(&options, &out), &out);
      report_elapsed(start);
      return code;
    }
    if (search->parsed()) {
      const auto [lo, hi] = parse_range(range);
      int cap;
      if (family == "block") {
        cap = long_run ? kBlockLongCap : kBlockCap;
      } else if (family == "connected") {
        cap = long_run ? kConnectedLongCap : kConnectedCap;
      } else {
        throw UsageError("unknown family " + family + " (expected block or connected)");
      }
      if (lo < 1 || hi < lo) throw UsageError("invalid order range " + range);
      if (hi > cap) {
        throw UsageError(family + " search above n = " + std::to_string(cap) + (long_run ? "" : " needs --long-run"));
      }
      const auto start = std::chrono::steady_clock::now();
      bm_search_options options{family.c_str(), lo, hi, workers, fmt};
      const int code = emit(bm_search(&options, &out), &out);
      report_elapsed(start);
      return code;
    }
    if (fam->parsed()) {
      auto h = load_graph(input, named);
      bm_family_options options{family.c_str(), h.get(), u, v, n, fmt};
      return emit(bm_family(&options, &out), &out);
    }
    if (ktree->parsed()) {
      bm_ktree* raw = nullptr;
      if (random) {
        if (!input.empty() || !named.empty()) throw UsageError("--random does not take a graph");
        check(bm_ktree_random(k, n, seed, &raw));
      } else {
        auto g = load_graph(input, named);
        check(bm_ktree_from_graph(g.get(), k, &raw));
      }
      KTreePtr t(raw);
      return emit(bm_ktree_report(t.get(), fmt, &out), &out);
    }
  } catch (const UsageError& e) {
    std::cerr << "blockmean: " << e.what() << '\n';
    return kExitInput;
  } catch (const Failed& f) {
    return f.status;
  }
  return 0;
}
