#include "blockmean/chains.hpp"

#include <string>

#include "blockmean/blocks.hpp"
#include "blockmean/canon.hpp"
#include "blockmean/closed_forms.hpp"
#include "blockmean/errors.hpp"
#include "blockmean/families.hpp"

namespace blockmean {

using closed_form::binomial;

std::string_view chain_name(ChainKind kind) {
  switch (kind) {
    case ChainKind::VertexGluing: return "vertex";
    case ChainKind::EdgeGluing: return "edge";
    case ChainKind::Stretching: return "stretch";
  }
  return "?";
}

ChainKind parse_chain(std::string_view name) {
  if (name == "vertex") return ChainKind::VertexGluing;
  if (name == "edge") return ChainKind::EdgeGluing;
  if (name == "stretch") return ChainKind::Stretching;
  throw InputError("unknown family chain \"" + std::string(name) + "\" (expected vertex, edge or stretch)");
}

namespace {

struct Counts {
  Integer n, w;
};

Counts counts(const IntPolynomial& p) { return {p.at_one(), p.derivative_at_one()}; }

void require_block_host(const Graph& h, int min_order, const char* what) {
  if (h.order() < min_order) {
    throw PreconditionError(std::string(what) + ": H must have order at least " + std::to_string(min_order));
  }
  require_connected(h, what);
  if (!is_block_graph(h)) throw PreconditionError(std::string(what) + ": H is not a block graph");
}

void require_vertex(const Graph& h, int v, const char* what) {
  if (v < 0 || v >= h.order()) throw InputError(std::string(what) + ": vertex " + std::to_string(v) + " not in H");
}

// Evaluates every member with the engine and compares to the predictions.
void finish(FamilyChain& chain) {
  chain.closed_form_ok = true;
  for (std::size_t i = 0; i < chain.graphs.size(); ++i) {
    chain.engine.push_back(CisReport::of(phi_fast(chain.graphs[i])));
    chain.closed_form_ok = chain.closed_form_ok && Rational(chain.engine[i].count) == chain.formula_count[i] &&
                           Rational(chain.engine[i].total_order) == chain.formula_total[i];
  }
  chain.chain_ok = true;
  for (int s = 2; s <= chain.strict_through; ++s) {
    chain.chain_ok = chain.chain_ok && chain.engine[s - 2].mean < chain.engine[s - 1].mean;
  }
}

// graphs[s-1] is isomorphic to graphs[mirror(s)-1] for every s.
template <class Mirror>
bool mirrored(const FamilyChain& chain, Mirror mirror) {
  std::vector<CanonicalCert> certs;
  for (const auto& g : chain.graphs) certs.push_back(canonical_cert(g));
  const int count = static_cast<int>(certs.size());
  for (int s = 1; s <= count; ++s) {
    if (certs[s - 1] != certs[mirror(s) - 1]) return false;
  }
  return true;
}

Rational q(const Integer& a) { return Rational(a); }

}  // namespace

FamilyChain family_vertex_gluing(const Graph& h, int v, int n) {
  require_vertex(h, v, "family_vertex_gluing");
  require_block_host(h, 2, "family_vertex_gluing");
  if (n < 3) throw PreconditionError("family_vertex_gluing: path order must be at least 3");

  FamilyChain chain;
  chain.kind = ChainKind::VertexGluing;
  chain.n = n;
  chain.strict_through = (n + 1) / 2;
  const Counts whole = counts(phi(h));
  const Counts at_v = counts(phi_local(h, v));
  const Graph p = path(n);
  for (int s = 1; s <= n; ++s) {
    chain.graphs.push_back(glue_at_vertex(p, s - 1, h, v));
    // Phi_{P_n,u_s}(1) = s(n-s+1), Phi'_{P_n,u_s}(1) = s(n-s+1)(n+1)/2.
    const Integer through = Integer(s) * (n - s + 1);
    Rational through_w(through * (n + 1), 2);
    through_w.canonicalize();
    chain.formula_count.push_back(q(binomial(n + 1, 2) + whole.n - at_v.n + through * (at_v.n - 1)));
    chain.formula_total.push_back(q(binomial(n + 2, 3) + whole.w - at_v.w) + through_w * q(at_v.n - 1) +
                                  q(through * (at_v.w - at_v.n)));
  }
  finish(chain);
  chain.symmetry_ok = mirrored(chain, [n](int s) { return n - s + 1; });
  return chain;
}

FamilyChain family_edge_gluing(const Graph& h, int u, int v, int n) {
  require_vertex(h, u, "family_edge_gluing");
  require_vertex(h, v, "family_edge_gluing");
  require_block_host(h, 3, "family_edge_gluing");
  if (n < 4) throw PreconditionError("family_edge_gluing: n must be at least 4");
  if (u == v || !h.adjacent(u, v)) throw PreconditionError("family_edge_gluing: u and v must be adjacent");
  auto tree = block_decomposition(h);
  if (tree.is_cut(u) || tree.is_cut(v)) throw PreconditionError("family_edge_gluing: u and v must be non-cut vertices");

  FamilyChain chain;
  chain.kind = ChainKind::EdgeGluing;
  chain.n = n;
  chain.strict_through = n / 2;
  // F = H - v, with u renumbered inside F.
  const Graph f = h.without(v);
  const int u_in_f = u < v ? u : u - 1;
  const Counts f_u = counts(phi_local(f, u_in_f));
  const Counts f_minus_u = counts(phi(f.without(u_in_f)));
  for (int s = 1; s <= n - 1; ++s) {
    chain.graphs.push_back(attach_path(attach_path(h, u, s - 1), v, n - s - 1));
    const Integer spread = Integer(s) * (n - s) + n;
    chain.formula_count.push_back(q(f_u.n * spread + f_minus_u.n + binomial(s, 2) + binomial(n - s, 2)));
    chain.formula_total.push_back(q(f_u.w * spread +
                                    f_u.n * (Integer(s) * (n - s) + binomial(s, 2) * (n - s + 1) +
                                             Integer(s + 1) * binomial(n - s, 2)) +
                                    f_minus_u.w + binomial(s + 1, 3) + binomial(n - s + 1, 3)));
  }
  finish(chain);
  chain.symmetry_ok = mirrored(chain, [n](int s) { return n - s; });
  return chain;
}

FamilyChain family_stretching(const Graph& h, int u, int n) {
  require_vertex(h, u, "family_stretching");
  require_block_host(h, 2, "family_stretching");
  if (n < 3) throw PreconditionError("family_stretching: n must be at least 3");

  FamilyChain chain;
  chain.kind = ChainKind::Stretching;
  chain.n = n;
  chain.strict_through = n - 1;
  const Counts at_u = counts(phi_local(h, u));
  const Counts rest = counts(phi(h.without(u)));
  for (int s = 1; s <= n - 1; ++s) {
    chain.graphs.push_back(glue_at_vertex(h, u, broom(s, n - s), 0));
    const Rational pow_s1 = Rational(Integer(1) << (s - 1));
    const Rational pow_s2 = pow_s1 / 2;
    chain.formula_count.push_back(pow_s1 * q(Integer(n - s + 1) * (at_u.n + 1)) + q(rest.n + binomial(n - s, 2) - 1));
    chain.formula_total.push_back(pow_s2 * q(Integer(n - s + 1) * ((n - 1) * (at_u.n + 1) + 2 * at_u.w)) +
                                  q(rest.w + binomial(n - s + 1, 3)));
  }
  finish(chain);
  return chain;
}

}  // namespace blockmean
