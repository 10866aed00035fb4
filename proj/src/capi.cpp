#include "blockmean.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <random>
#include <string>

#include "blockmean/blocks.hpp"
#include "blockmean/canon.hpp"
#include "blockmean/chains.hpp"
#include "blockmean/cis.hpp"
#include "blockmean/errors.hpp"
#include "blockmean/families.hpp"
#include "blockmean/improve.hpp"
#include "blockmean/ktree.hpp"
#include "blockmean/report.hpp"

struct bm_graph {
  blockmean::Graph g;
};

struct bm_ktree {
  blockmean::KTree t;
};

namespace {

using namespace blockmean;

thread_local std::string last_error;

bm_status fail(bm_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <class Fn>
bm_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    return fn();
  } catch (const InputError& e) {
    return fail(BM_INVALID_INPUT, e.what());
  } catch (const PreconditionError& e) {
    return fail(BM_PRECONDITION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BM_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BM_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require_out(const void* p) {
  if (p == nullptr) throw InputError("null argument");
}

Format to_format(bm_format f) {
  switch (f) {
    case BM_FORMAT_TABLE: return Format::Table;
    case BM_FORMAT_JSON: return Format::Json;
    case BM_FORMAT_CSV: return Format::Csv;
  }
  throw InputError("unknown output format");
}

int param(const int* params, std::size_t count, std::size_t i, const char* name) {
  if (i >= count) throw InputError(std::string(name) + " needs at least " + std::to_string(i + 1) + " parameter(s)");
  return params[i];
}

Graph named_graph(std::string_view name, const int* params, std::size_t count) {
  if (count > 0 && params == nullptr) throw InputError("null parameter array");
  std::vector<int> all(params, params + count);
  if (name == "path") return path(param(params, count, 0, "path"));
  if (name == "complete") return complete(param(params, count, 0, "complete"));
  if (name == "cycle") return cycle(param(params, count, 0, "cycle"));
  if (name == "star") return star(param(params, count, 0, "star"));
  if (name == "broom") return broom(param(params, count, 0, "broom"), param(params, count, 1, "broom"));
  if (name == "caterpillar") return caterpillar(all);
  if (name == "spider") return spider(all);
  throw InputError("unknown graph family \"" + std::string(name) + "\"");
}

}  // namespace

extern "C" {

const char* bm_version(void) { return "0.1.0"; }

const char* bm_last_error(void) { return last_error.c_str(); }

void bm_free_string(char* s) { std::free(s); }

bm_status bm_graph_from_edges(int n, const int* edges, size_t m, bm_graph** out) {
  return guarded([&] {
    require_out(out);
    if (m > 0 && edges == nullptr) throw InputError("null edge array");
    if (n < 0) throw InputError("negative order");
    std::vector<Edge> list;
    for (size_t i = 0; i < m; ++i) list.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = new bm_graph{Graph::build(n, list)};
    return BM_OK;
  });
}

bm_status bm_graph_parse(const char* text, bm_graph** out) {
  return guarded([&] {
    require_out(out);
    require_out(text);
    *out = new bm_graph{parse_edge_list(std::string(text))};
    return BM_OK;
  });
}

bm_status bm_graph_family(const char* name, const int* params, size_t count, bm_graph** out) {
  return guarded([&] {
    require_out(out);
    require_out(name);
    *out = new bm_graph{named_graph(name, params, count)};
    return BM_OK;
  });
}

void bm_graph_free(bm_graph* g) { delete g; }

int bm_graph_order(const bm_graph* g) { return g == nullptr ? -1 : g->g.order(); }

bm_status bm_graph_to_edge_list(const bm_graph* g, char** out) {
  return guarded([&] {
    require_out(g);
    require_out(out);
    *out = copy_string(format_edge_list(g->g));
    return BM_OK;
  });
}

bm_status bm_graph_cert_hex(const bm_graph* g, char** out) {
  return guarded([&] {
    require_out(g);
    require_out(out);
    *out = copy_string(canonical_cert(g->g).hex());
    return BM_OK;
  });
}

bm_status bm_graph_is_block_graph(const bm_graph* g, int* out) {
  return guarded([&] {
    require_out(g);
    require_out(out);
    require_connected(g->g, "is_block_graph");
    *out = is_block_graph(g->g) ? 1 : 0;
    return BM_OK;
  });
}

bm_status bm_graph_mean(const bm_graph* g, char** out) {
  return guarded([&] {
    require_out(g);
    require_out(out);
    *out = copy_string(format_rational(mean(g->g).mean));
    return BM_OK;
  });
}

bm_status bm_compute(const bm_graph* g, bm_format format, char** out) {
  return guarded([&] {
    require_out(g);
    require_out(out);
    const Format f = to_format(format);
    *out = copy_string(render(compute_report(g->g), f));
    return BM_OK;
  });
}

bm_status bm_descent(const bm_graph* g, bm_format format, char** out) {
  return guarded([&] {
    require_out(g);
    require_out(out);
    const Format f = to_format(format);
    require_connected(g->g, "descent");
    if (!is_block_graph(g->g)) throw PreconditionError("descent: not a block graph");
    *out = copy_string(render(improve_to_path(g->g), g->g, f));
    return BM_OK;
  });
}

bm_status bm_verify(const bm_verify_options* options, char** out) {
  return guarded([&] {
    require_out(options);
    require_out(out);
    const Format f = to_format(options->format);
    const std::string statement = options->statement == nullptr ? "" : options->statement;
    const auto report = verify_sweep(options->max_n, statement, options->workers);
    *out = copy_string(render(report, f));
    return report.ok() ? BM_OK : BM_VERDICT_FAILED;
  });
}

bm_status bm_search(const bm_search_options* options, char** out) {
  return guarded([&] {
    require_out(options);
    require_out(out);
    require_out(options->family);
    const Format f = to_format(options->format);
    const Family family = parse_family(options->family);
    if (options->n_min < 1 || options->n_max < options->n_min) throw InputError("invalid order range");
    std::vector<SearchRow> rows;
    bool ok = true;
    for (int n = options->n_min; n <= options->n_max; ++n) {
      rows.push_back(search_row(family, n, options->workers));
      ok = ok && rows.back().min_theorem.ok() && (!rows.back().max_conjecture || rows.back().max_conjecture->ok());
    }
    *out = copy_string(render(rows, f));
    return ok ? BM_OK : BM_VERDICT_FAILED;
  });
}

bm_status bm_family(const bm_family_options* options, char** out) {
  return guarded([&] {
    require_out(options);
    require_out(out);
    require_out(options->kind);
    require_out(options->host);
    const Format f = to_format(options->format);
    const Graph& h = options->host->g;
    FamilyChain chain;
    switch (parse_chain(options->kind)) {
      case ChainKind::VertexGluing: chain = family_vertex_gluing(h, options->u, options->n); break;
      case ChainKind::EdgeGluing: chain = family_edge_gluing(h, options->u, options->v, options->n); break;
      case ChainKind::Stretching: chain = family_stretching(h, options->u, options->n); break;
    }
    *out = copy_string(render(chain, f));
    return chain.ok() ? BM_OK : BM_VERDICT_FAILED;
  });
}

bm_status bm_ktree_from_graph(const bm_graph* g, int k, bm_ktree** out) {
  return guarded([&] {
    require_out(g);
    require_out(out);
    *out = new bm_ktree{as_k_tree(g->g, k)};
    return BM_OK;
  });
}

bm_status bm_ktree_random(int k, int n, uint64_t seed, bm_ktree** out) {
  return guarded([&] {
    require_out(out);
    if (n > kMaxOrder) throw InputError("k-tree order exceeds " + std::to_string(kMaxOrder));
    std::mt19937_64 rng(seed);
    *out = new bm_ktree{random_k_tree(rng, k, n)};
    return BM_OK;
  });
}

void bm_ktree_free(bm_ktree* t) { delete t; }

int bm_ktree_order(const bm_ktree* t) { return t == nullptr ? -1 : t->t.order(); }

bm_status bm_ktree_report(const bm_ktree* t, bm_format format, char** out) {
  return guarded([&] {
    require_out(t);
    require_out(out);
    const Format f = to_format(format);
    const auto report = ktree_report(t->t);
    *out = copy_string(render(report, f));
    const bool ok = report.dual_is_block_graph && (!report.oracle || *report.oracle == report.formula);
    return ok ? BM_OK : BM_VERDICT_FAILED;
  });
}

}  // extern "C"
