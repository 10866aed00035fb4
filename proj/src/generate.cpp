#include "blockmean/generate.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>

#include "blockmean/canon.hpp"
#include "blockmean/errors.hpp"
#include "blockmean/families.hpp"
#include "blockmean/parallel.hpp"

namespace blockmean {

namespace {

using Level = std::vector<Graph>;

std::optional<std::filesystem::path> cache_file(const char* family, int n) {
  const char* dir = std::getenv("BLOCKMEAN_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir) / (std::string(family) + "-" + std::to_string(n) + ".certs");
}

std::optional<Level> read_cache(const std::filesystem::path& file, int n) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  Level level;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cert = CanonicalCert::from_hex(line);
    if (cert.order() != n) throw InputError("cache file " + file.string() + " holds a graph of the wrong order");
    level.push_back(decode_cert(cert));
  }
  return level;
}

void write_cache(const std::filesystem::path& file, const std::map<CanonicalCert, Graph>& classes) {
  std::filesystem::create_directories(file.parent_path());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    for (const auto& [cert, g] : classes) out << cert.hex() << '\n';
  }
  std::filesystem::rename(tmp, file);
}

// Certificates of all candidates are computed in parallel; the ordered map is
// the single merge point and stores the decoded canonical representative.
Level dedup(const std::vector<Graph>& candidates, int workers, const std::optional<std::filesystem::path>& cache) {
  std::vector<CanonicalCert> certs(candidates.size());
  parallel_for(candidates.size(), workers, [&](std::size_t i) { certs[i] = canonical_cert(candidates[i]); });
  std::map<CanonicalCert, Graph> classes;
  for (const auto& cert : certs) {
    if (!classes.contains(cert)) classes.emplace(cert, decode_cert(cert));
  }
  if (cache) write_cache(*cache, classes);
  Level level;
  level.reserve(classes.size());
  for (auto& [cert, g] : classes) level.push_back(std::move(g));
  return level;
}

Graph attach_clique(const Graph& parent, int anchor, int added) {
  auto edges = parent.edges();
  const int base = parent.order();
  for (int i = 0; i < added; ++i) {
    edges.emplace_back(anchor, base + i);
    for (int j = 0; j < i; ++j) edges.emplace_back(base + j, base + i);
  }
  return Graph::build(base + added, edges);
}

std::vector<Level> block_levels(int n, int workers) {
  std::vector<Level> levels(n + 1);
  for (int m = 1; m <= n; ++m) {
    auto cache = cache_file("block", m);
    if (cache) {
      if (auto cached = read_cache(*cache, m)) {
        levels[m] = std::move(*cached);
        continue;
      }
    }
    std::vector<Graph> candidates{complete(m)};
    for (int added = 1; added < m; ++added) {
      for (const Graph& parent : levels[m - added]) {
        for (int anchor = 0; anchor < parent.order(); ++anchor) {
          candidates.push_back(attach_clique(parent, anchor, added));
        }
      }
    }
    levels[m] = dedup(candidates, workers, cache);
  }
  return levels;
}

}  // namespace

std::vector<Graph> gen_block_graphs(int n, int workers) {
  if (n < 1) throw InputError("gen_block_graphs: order must be at least 1");
  if (n > kMaxOrder) throw InputError("gen_block_graphs: order exceeds " + std::to_string(kMaxOrder));
  return std::move(block_levels(n, workers)[n]);
}

std::vector<Graph> gen_connected_graphs(int n, int workers) {
  if (n < 1) throw InputError("gen_connected_graphs: order must be at least 1");
  if (n > kConnectedHardCap) {
    throw InputError("gen_connected_graphs: order " + std::to_string(n) + " exceeds the hard cap of " +
                     std::to_string(kConnectedHardCap));
  }
  Level level{complete(1)};
  for (int m = 2; m <= n; ++m) {
    auto cache = cache_file("connected", m);
    if (cache) {
      if (auto cached = read_cache(*cache, m)) {
        level = std::move(*cached);
        continue;
      }
    }
    std::vector<Graph> candidates;
    const VertexSet all_old = prefix_mask(m - 1);
    for (const Graph& parent : level) {
      auto edges = parent.edges();
      for (VertexSet nbhd = 1; nbhd <= all_old; ++nbhd) {
        auto grown = edges;
        for (int u : members(nbhd)) grown.emplace_back(u, m - 1);
        candidates.push_back(Graph::build(m, grown));
      }
    }
    level = dedup(candidates, workers, cache);
  }
  return level;
}

}  // namespace blockmean
