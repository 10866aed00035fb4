#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "blockmean/graph.hpp"

namespace blockmean {

// Isomorphism-invariant encoding: one byte holding n, followed by the
// adjacency bits of the canonical relabeling in column order
// (0,1),(0,2),(1,2),(0,3),... packed most-significant bit first.
// Two graphs are isomorphic iff their certificates are equal.
struct CanonicalCert {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  static CanonicalCert from_hex(std::string_view hex);
  int order() const { return bytes.empty() ? 0 : bytes.front(); }

  auto operator<=>(const CanonicalCert&) const = default;
};

CanonicalCert canonical_cert(const Graph& g);

// Canonical order: position i of the result holds the original vertex placed at i.
std::vector<int> canonical_order(const Graph& g);

// The canonical representative encoded by a certificate.
Graph decode_cert(const CanonicalCert& cert);

inline bool isomorphic(const Graph& a, const Graph& b) { return canonical_cert(a) == canonical_cert(b); }

}  // namespace blockmean
