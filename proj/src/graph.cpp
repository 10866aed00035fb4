#include "blockmean/graph.hpp"

#include <istream>
#include <sstream>

#include "blockmean/errors.hpp"

namespace blockmean {

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(popcount(s));
  for (; s; s &= s - 1) out.push_back(lowest(s));
  return out;
}

std::string format_set(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : members(s)) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

Graph Graph::build(int n, std::span<const Edge> edges) {
  if (n < 0 || n > kMaxOrder) {
    throw InputError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxOrder));
  }
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, 0);
  for (auto [u, v] : edges) {
    std::string pair = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge " + pair + " has a vertex outside 0.." + std::to_string(n - 1));
    if (u == v) throw InputError("edge " + pair + " is a self-loop");
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
  }
  return g;
}

std::size_t Graph::size() const {
  std::size_t twice = 0;
  for (VertexSet row : adj_) twice += popcount(row);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : members(adj_[u] & ~prefix_mask(u + 1))) out.emplace_back(u, v);
  }
  return out;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::vector<int> new_id(n_, -1);
  int next = 0;
  for (int v : members(keep)) new_id[v] = next++;
  Graph h;
  h.n_ = next;
  h.adj_.assign(next, 0);
  for (int v : members(keep)) {
    for (int w : members(adj_[v] & keep)) h.adj_[new_id[v]] |= bit(new_id[w]);
  }
  return h;
}

VertexSet Graph::component_of(int v, VertexSet within) const {
  VertexSet seen = bit(v);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (int u : members(frontier)) next |= adj_[u];
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> Graph::components(VertexSet within) const {
  std::vector<VertexSet> out;
  within &= vertices();
  while (within) {
    VertexSet c = component_of(lowest(within), within);
    out.push_back(c);
    within &= ~c;
  }
  return out;
}

bool Graph::connected(VertexSet within) const {
  within &= vertices();
  if (!within) return true;
  return component_of(lowest(within), within) == within;
}

bool Graph::is_clique(VertexSet s) const {
  for (int v : members(s)) {
    if (((adj_[v] | bit(v)) & s) != s) return false;
  }
  return true;
}

bool is_path(const Graph& g) {
  if (g.order() == 0 || !g.connected() || g.size() != static_cast<std::size_t>(g.order() - 1)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

bool is_complete(const Graph& g) { return g.is_clique(g.vertices()); }

bool is_tree(const Graph& g) {
  return g.order() > 0 && g.connected() && g.size() == static_cast<std::size_t>(g.order() - 1);
}

void require_connected(const Graph& g, const char* operation) {
  auto parts = g.components();
  if (parts.size() > 1) {
    throw PreconditionError(std::string(operation) + ": graph is disconnected (components " + format_set(parts[0]) +
                            " and " + format_set(parts[1]) + ")");
  }
}

namespace {

// Strips a '#' comment and reports whether anything but whitespace remains.
bool content(std::string& line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  return line.find_first_not_of(" \t\r") != std::string::npos;
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw InputError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (!content(line)) continue;
    std::istringstream fields(line);
    long a, b;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      parse_fail(line_no, "expected two integers, got \"" + line + "\"");
    }
    if (n < 0) {
      if (a < 0 || a > kMaxOrder) parse_fail(line_no, "vertex count must be in 0.." + std::to_string(kMaxOrder));
      if (b < 0) parse_fail(line_no, "edge count must be nonnegative");
      n = a;
      m = b;
      continue;
    }
    if (static_cast<long>(edges.size()) == m) parse_fail(line_no, "more edges than the declared " + std::to_string(m));
    if (a < 0 || b < 0 || a >= n || b >= n) {
      parse_fail(line_no, "edge (" + std::to_string(a) + "," + std::to_string(b) + ") has a vertex outside 0.." +
                              std::to_string(n - 1));
    }
    if (a == b) parse_fail(line_no, "edge (" + std::to_string(a) + "," + std::to_string(b) + ") is a self-loop");
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (n < 0) parse_fail(line_no, "missing header line \"n m\"");
  if (static_cast<long>(edges.size()) != m) {
    parse_fail(line_no, "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph::build(static_cast<int>(n), edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace blockmean
