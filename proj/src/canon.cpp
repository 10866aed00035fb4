#include "blockmean/canon.hpp"

#include <algorithm>

#include "blockmean/errors.hpp"

namespace blockmean {

namespace {

using Cells = std::vector<VertexSet>;
using Bits = std::vector<bool>;

// Equitable refinement. Each cell splits by the vector of neighbour counts
// into every current cell; sub-cells are ordered by that vector, which keeps
// the whole procedure label-invariant.
void refine(const Graph& g, Cells& cells) {
  for (;;) {
    const std::size_t k = cells.size();
    Cells next;
    next.reserve(g.order());
    std::vector<std::pair<std::vector<std::uint8_t>, int>> keyed;
    for (VertexSet cell : cells) {
      if (popcount(cell) == 1) {
        next.push_back(cell);
        continue;
      }
      keyed.clear();
      for (int v : members(cell)) {
        std::vector<std::uint8_t> counts(k);
        for (std::size_t c = 0; c < k; ++c) counts[c] = static_cast<std::uint8_t>(popcount(g.neighbours(v) & cells[c]));
        keyed.emplace_back(std::move(counts), v);
      }
      std::sort(keyed.begin(), keyed.end());
      VertexSet group = 0;
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i > 0 && keyed[i].first != keyed[i - 1].first) {
          next.push_back(group);
          group = 0;
        }
        group |= bit(keyed[i].second);
      }
      next.push_back(group);
    }
    cells = std::move(next);
    if (cells.size() == k) return;
  }
}

bool twins(const Graph& g, int a, int b) {
  return (g.neighbours(a) & ~bit(b)) == (g.neighbours(b) & ~bit(a));
}

struct Search {
  const Graph& g;
  Bits best;
  std::vector<int> best_order;
  bool have_best = false;

  // Bits for columns 1..fixed-1 of the order given by the leading singletons.
  Bits prefix(const std::vector<int>& order) const {
    Bits out;
    for (std::size_t j = 1; j < order.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) out.push_back(g.adjacent(order[i], order[j]));
    }
    return out;
  }

  void run(Cells cells) {
    std::vector<int> order;
    std::size_t first_open = 0;
    while (first_open < cells.size() && popcount(cells[first_open]) == 1) {
      order.push_back(lowest(cells[first_open]));
      ++first_open;
    }
    Bits head = prefix(order);
    if (have_best) {
      auto cmp = std::lexicographical_compare_three_way(head.begin(), head.end(), best.begin(),
                                                        best.begin() + static_cast<std::ptrdiff_t>(head.size()));
      if (cmp > 0) return;
    }
    if (first_open == cells.size()) {
      if (!have_best || head < best) {
        best = std::move(head);
        best_order = std::move(order);
        have_best = true;
      }
      return;
    }
    VertexSet target = cells[first_open];
    std::vector<int> tried;
    for (int v : members(target)) {
      if (std::any_of(tried.begin(), tried.end(), [&](int r) { return twins(g, r, v); })) continue;
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(first_open));
      child.push_back(bit(v));
      child.push_back(target & ~bit(v));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(first_open) + 1, cells.end());
      refine(g, child);
      run(std::move(child));
    }
  }
};

constexpr char kHex[] = "0123456789abcdef";

}  // namespace

std::vector<int> canonical_order(const Graph& g) {
  if (g.order() == 0) return {};
  Cells cells{g.vertices()};
  refine(g, cells);
  Search search{g, {}, {}, false};
  search.run(std::move(cells));
  return search.best_order;
}

CanonicalCert canonical_cert(const Graph& g) {
  auto order = canonical_order(g);
  const int n = g.order();
  CanonicalCert cert;
  cert.bytes.push_back(static_cast<std::uint8_t>(n));
  std::uint8_t acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = static_cast<std::uint8_t>((acc << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0));
      if (++filled == 8) {
        cert.bytes.push_back(acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) cert.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
  return cert;
}

Graph decode_cert(const CanonicalCert& cert) {
  if (cert.bytes.empty()) throw InputError("empty certificate");
  const int n = cert.bytes[0];
  const std::size_t pairs = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  if (cert.bytes.size() != 1 + (pairs + 7) / 8) throw InputError("certificate length does not match its order");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((cert.bytes[1 + k / 8] >> (7 - k % 8)) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph::build(n, edges);
}

std::string CanonicalCert::hex() const {
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kHex[b >> 4]);
    out.push_back(kHex[b & 15]);
  }
  return out;
}

CanonicalCert CanonicalCert::from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw InputError(std::string("invalid hex digit '") + c + "' in certificate");
  };
  if (hex.size() % 2 != 0) throw InputError("certificate hex has odd length");
  CanonicalCert cert;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    cert.bytes.push_back(static_cast<std::uint8_t>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
  }
  return cert;
}

}  // namespace blockmean
