#include "blockmean/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "blockmean/blocks.hpp"
#include "blockmean/canon.hpp"
#include "blockmean/errors.hpp"

namespace blockmean {

using json = nlohmann::ordered_json;

Format parse_format(std::string_view name) {
  if (name == "table") return Format::Table;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw InputError("unknown format \"" + std::string(name) + "\" (expected table, json or csv)");
}

std::string format_rational(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string format_decimal(const Rational& r, int places) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  const Integer num = abs(r.get_num()) * scale;
  const Integer den = r.get_den();
  const Integer rounded = (2 * num + den) / (2 * den);
  std::string digits = rounded.get_str();
  if (static_cast<int>(digits.size()) <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = r < 0 && rounded != 0 ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return out;
}

namespace {

std::string both(const Rational& r) { return format_rational(r) + " (" + format_decimal(r) + ")"; }

json to_json(const Rational& r) { return {{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}}; }

json to_json(const IntPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

json to_json(const CisReport& r) {
  return {{"N", r.count.get_str()}, {"W", r.total_order.get_str()}, {"M", to_json(r.mean)}};
}

json to_json(const Verdict& v) {
  json j{{"statement", v.statement}, {"applicable", v.applicable}};
  if (!v.applicable) j["reason"] = v.reason;
  j["holds"] = v.holds;
  j["equality"] = v.equality;
  j["equality_expected"] = v.equality_expected ? json(*v.equality_expected) : json(nullptr);
  j["lhs"] = to_json(v.lhs);
  j["rhs"] = to_json(v.rhs);
  j["graph"] = v.graph;
  j["vertices"] = v.vertices;
  return j;
}

json edges_json(const Graph& g) {
  json a = json::array();
  for (auto [u, v] : g.edges()) a.push_back({u, v});
  return a;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* bool_word(bool b) { return b ? "true" : "false"; }

std::string join_certs(const std::vector<CanonicalCert>& certs) {
  std::string s;
  for (const auto& c : certs) {
    if (!s.empty()) s += ';';
    s += c.hex();
  }
  return s;
}

// Left-aligned columns sized to their widest cell.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

std::string members_text(const std::vector<int>& vs) {
  std::string s;
  for (int v : vs) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

}  // namespace

ComputeReport compute_report(const Graph& g) {
  require_connected(g, "compute");
  ComputeReport r;
  r.graph = g;
  r.cert = canonical_cert(g).hex();
  r.block_graph = is_block_graph(g);
  r.phi = phi(g);
  r.global = CisReport::of(r.phi);
  for (int v = 0; v < g.order(); ++v) {
    VertexRow row{v, CisReport::of(phi_local(g, v)), std::nullopt};
    if (g.order() >= 2) row.mu = mu(g, v);
    r.vertices.push_back(std::move(row));
  }
  return r;
}

SearchRow search_row(Family family, int n, int workers) {
  SearchRow row{extremal_scan(family, n, workers), {}, std::nullopt};
  row.min_theorem = check_min_theorem(row.result);
  if (family == Family::Block) row.max_conjecture = check_max_conjecture(row.result);
  return row;
}

KTreeReport ktree_report(const KTree& t) {
  KTreeReport r;
  r.tree = t;
  r.dual = dual(t);
  r.dual_is_block_graph = r.dual.connected() && is_block_graph(r.dual);
  r.dual_stats = CisReport::of(phi_fast(r.dual));
  r.k_cliques = Integer(t.order() - t.k) * t.k + 1;
  r.formula = mean_sub_k_tree(t);
  if (t.order() <= kSubKTreeOracleCap) r.oracle = mean_sub_k_tree_brute(t);
  return r;
}

std::string render(const ComputeReport& r, Format f) {
  switch (f) {
    case Format::Json: {
      json j{{"order", r.graph.order()},
             {"edges", edges_json(r.graph)},
             {"cert", r.cert},
             {"block_graph", r.block_graph},
             {"phi", to_json(r.phi)}};
      j["N"] = r.global.count.get_str();
      j["W"] = r.global.total_order.get_str();
      j["M"] = to_json(r.global.mean);
      json vs = json::array();
      for (const auto& row : r.vertices) {
        json v{{"vertex", row.vertex}, {"local", to_json(row.local)}};
        v["mu"] = row.mu ? to_json(*row.mu) : json(nullptr);
        vs.push_back(std::move(v));
      }
      j["vertices"] = std::move(vs);
      return dump(j);
    }
    case Format::Csv: {
      std::ostringstream out;
      out << "scope,count,total_order,mean,mu\n";
      out << "graph," << r.global.count << ',' << r.global.total_order << ',' << format_rational(r.global.mean) << ",\n";
      for (const auto& row : r.vertices) {
        out << "vertex " << row.vertex << ',' << row.local.count << ',' << row.local.total_order << ','
            << format_rational(row.local.mean) << ',' << (row.mu ? format_rational(*row.mu) : "") << '\n';
      }
      return out.str();
    }
    case Format::Table: break;
  }
  std::ostringstream out;
  out << "order " << r.graph.order() << ", size " << r.graph.size() << ", block graph: " << yes_no(r.block_graph)
      << "\ncert " << r.cert << "\nPhi(x) = " << r.phi.to_string() << "\nN = " << r.global.count
      << "\nW = " << r.global.total_order << "\nM = " << both(r.global.mean) << "\n\n";
  std::vector<std::vector<std::string>> rows{{"v", "N_v", "W_v", "M_v", "mu_v"}};
  for (const auto& row : r.vertices) {
    rows.push_back({std::to_string(row.vertex), row.local.count.get_str(), row.local.total_order.get_str(),
                    both(row.local.mean), row.mu ? both(*row.mu) : "-"});
  }
  out << table(rows);
  return out.str();
}

std::string render(const SweepReport& r, Format f) {
  switch (f) {
    case Format::Json: {
      json tallies = json::array();
      for (const auto& t : r.tallies) {
        tallies.push_back({{"statement", t.statement},
                           {"checked", t.checked},
                           {"skipped", t.skipped},
                           {"held", t.held},
                           {"equalities", t.equalities},
                           {"failed", t.failed}});
      }
      json failures = json::array();
      for (const auto& v : r.failures) failures.push_back(to_json(v));
      return dump({{"max_n", r.max_n},
                   {"graphs", r.graphs},
                   {"tallies", tallies},
                   {"failures", failures},
                   {"ok", r.ok()}});
    }
    case Format::Csv: {
      std::ostringstream out;
      out << "cert,statement,holds,equality,lhs,rhs\n";
      for (const auto& v : r.verdicts) {
        out << v.graph << ',' << v.statement << ',' << bool_word(v.holds) << ',' << bool_word(v.equality) << ','
            << format_rational(v.lhs) << ',' << format_rational(v.rhs) << '\n';
      }
      return out.str();
    }
    case Format::Table: break;
  }
  std::ostringstream out;
  out << "connected block graphs of order 1.." << r.max_n << ": " << r.graphs << "\n\n";
  std::vector<std::vector<std::string>> rows{{"statement", "checked", "skipped", "held", "equalities", "failed"}};
  for (const auto& t : r.tallies) {
    rows.push_back({t.statement, std::to_string(t.checked), std::to_string(t.skipped), std::to_string(t.held),
                    std::to_string(t.equalities), std::to_string(t.failed)});
  }
  out << table(rows);
  if (!r.failures.empty()) {
    out << "\nfailures:\n";
    for (const auto& v : r.failures) {
      out << "  " << v.statement << " graph " << v.graph << " at [" << members_text(v.vertices)
          << "]: lhs " << format_rational(v.lhs) << ", rhs " << format_rational(v.rhs) << ", equality "
          << bool_word(v.equality) << '\n';
    }
  }
  out << "\n" << (r.ok() ? "all verdicts hold" : "FAILED") << '\n';
  return out.str();
}

std::string render(const std::vector<SearchRow>& rows, Format f) {
  auto max_word = [](const SearchRow& s) -> std::string {
    if (!s.max_conjecture) return "n/a";
    if (!s.max_conjecture->applicable) return "skipped";
    return bool_word(s.max_conjecture->holds);
  };
  switch (f) {
    case Format::Json: {
      json a = json::array();
      for (const auto& s : rows) {
        const auto& r = s.result;
        json j{{"family", family_name(r.family)}, {"n", r.n}, {"count", r.count},
               {"min", to_json(r.min_mean)},      {"max", to_json(r.max_mean)}};
        json argmin = json::array(), argmax = json::array();
        for (const auto& c : r.argmin) argmin.push_back(c.hex());
        for (const auto& c : r.argmax) argmax.push_back(c.hex());
        j["argmin"] = std::move(argmin);
        j["argmax"] = std::move(argmax);
        j["min_theorem"] = s.min_theorem.holds;
        j["max_conjecture"] =
            s.max_conjecture && s.max_conjecture->applicable ? json(s.max_conjecture->holds) : json(nullptr);
        a.push_back(std::move(j));
      }
      return dump(a);
    }
    case Format::Csv: {
      std::ostringstream out;
      out << "n,count,min,max,argmin,argmax,min_theorem,max_conjecture\n";
      for (const auto& s : rows) {
        const auto& r = s.result;
        out << r.n << ',' << r.count << ',' << format_rational(r.min_mean) << ',' << format_rational(r.max_mean)
            << ',' << join_certs(r.argmin) << ',' << join_certs(r.argmax) << ',' << bool_word(s.min_theorem.holds)
            << ',' << max_word(s) << '\n';
      }
      return out.str();
    }
    case Format::Table: break;
  }
  std::vector<std::vector<std::string>> t{
      {"n", "count", "min", "max", "argmin", "argmax", "min_theorem", "max_conjecture"}};
  for (const auto& s : rows) {
    const auto& r = s.result;
    t.push_back({std::to_string(r.n), std::to_string(r.count), both(r.min_mean), both(r.max_mean),
                 std::to_string(r.argmin.size()), std::to_string(r.argmax.size()), bool_word(s.min_theorem.holds),
                 max_word(s)});
  }
  return table(t);
}

std::string render(const FamilyChain& c, Format f) {
  const std::string symmetry = c.symmetry_ok ? bool_word(*c.symmetry_ok) : "n/a";
  switch (f) {
    case Format::Json: {
      json members = json::array();
      for (std::size_t i = 0; i < c.graphs.size(); ++i) {
        members.push_back({{"s", i + 1},
                           {"cert", canonical_cert(c.graphs[i]).hex()},
                           {"engine", to_json(c.engine[i])},
                           {"formula_N", to_json(c.formula_count[i])},
                           {"formula_W", to_json(c.formula_total[i])}});
      }
      return dump({{"family", chain_name(c.kind)},
                   {"n", c.n},
                   {"strict_through", c.strict_through},
                   {"members", members},
                   {"chain_ok", c.chain_ok},
                   {"symmetry_ok", c.symmetry_ok ? json(*c.symmetry_ok) : json(nullptr)},
                   {"closed_form_ok", c.closed_form_ok}});
    }
    case Format::Csv: {
      std::ostringstream out;
      out << "s,cert,count,total_order,mean,formula_count,formula_total\n";
      for (std::size_t i = 0; i < c.graphs.size(); ++i) {
        out << i + 1 << ',' << canonical_cert(c.graphs[i]).hex() << ',' << c.engine[i].count << ','
            << c.engine[i].total_order << ',' << format_rational(c.engine[i].mean) << ','
            << format_rational(c.formula_count[i]) << ',' << format_rational(c.formula_total[i]) << '\n';
      }
      return out.str();
    }
    case Format::Table: break;
  }
  std::ostringstream out;
  out << chain_name(c.kind) << " family, n = " << c.n << ", strictly increasing through s = " << c.strict_through
      << "\n\n";
  std::vector<std::vector<std::string>> t{{"s", "N", "W", "M", "closed form"}};
  for (std::size_t i = 0; i < c.graphs.size(); ++i) {
    const bool match =
        Rational(c.engine[i].count) == c.formula_count[i] && Rational(c.engine[i].total_order) == c.formula_total[i];
    t.push_back({std::to_string(i + 1), c.engine[i].count.get_str(), c.engine[i].total_order.get_str(),
                 both(c.engine[i].mean), match ? "match" : "MISMATCH"});
  }
  out << table(t) << "\nchain " << bool_word(c.chain_ok) << ", symmetry " << symmetry << ", closed forms "
      << bool_word(c.closed_form_ok) << '\n';
  return out.str();
}

std::string render(const KTreeReport& r, Format f) {
  const bool agree = r.oracle && *r.oracle == r.formula;
  switch (f) {
    case Format::Json: {
      json steps = json::array();
      for (const auto& s : r.tree.build_order) steps.push_back({{"vertex", s.vertex}, {"clique", members(s.clique)}});
      json j{{"k", r.tree.k},
             {"order", r.tree.order()},
             {"edges", edges_json(r.tree.graph)},
             {"base", members(r.tree.base)},
             {"build_order", steps},
             {"k_cliques", r.k_cliques.get_str()},
             {"dual", {{"order", r.dual.order()},
                       {"edges", edges_json(r.dual)},
                       {"block_graph", r.dual_is_block_graph},
                       {"N", r.dual_stats.count.get_str()},
                       {"W", r.dual_stats.total_order.get_str()}}},
             {"mean_sub_k_tree", to_json(r.formula)}};
      j["oracle"] = r.oracle ? to_json(*r.oracle) : json(nullptr);
      j["agree"] = r.oracle ? json(agree) : json(nullptr);
      return dump(j);
    }
    case Format::Csv: {
      std::ostringstream out;
      out << "k,order,k_cliques,dual_order,dual_N,dual_W,mean_sub_k_tree,oracle,agree\n";
      out << r.tree.k << ',' << r.tree.order() << ',' << r.k_cliques << ',' << r.dual.order() << ','
          << r.dual_stats.count << ',' << r.dual_stats.total_order << ',' << format_rational(r.formula) << ','
          << (r.oracle ? format_rational(*r.oracle) : "") << ',' << (r.oracle ? bool_word(agree) : "") << '\n';
      return out.str();
    }
    case Format::Table: break;
  }
  std::ostringstream out;
  out << r.tree.k << "-tree of order " << r.tree.order() << ", " << r.k_cliques << " k-cliques\n"
      << "dual: order " << r.dual.order() << ", block graph " << yes_no(r.dual_is_block_graph) << ", N "
      << r.dual_stats.count << ", W " << r.dual_stats.total_order << "\n"
      << "mean sub-k-tree order " << both(r.formula) << '\n';
  if (r.oracle) {
    out << "oracle " << both(*r.oracle) << (agree ? ", agrees" : ", DISAGREES") << '\n';
  } else {
    out << "oracle skipped above " << kSubKTreeOracleCap << " vertices\n";
  }
  return out.str();
}

std::string render(const std::vector<Improvement>& steps, const Graph& start, Format f) {
  switch (f) {
    case Format::Json: {
      json a = json::array();
      for (const auto& s : steps) {
        a.push_back({{"move", move_name(s.move)},
                     {"before", to_json(s.before)},
                     {"after", to_json(s.after)},
                     {"cert", canonical_cert(s.graph).hex()},
                     {"edges", edges_json(s.graph)}});
      }
      return dump({{"start", canonical_cert(start).hex()}, {"steps", a}});
    }
    case Format::Csv: {
      std::ostringstream out;
      out << "step,move,before,after,cert\n";
      for (std::size_t i = 0; i < steps.size(); ++i) {
        out << i + 1 << ',' << move_name(steps[i].move) << ',' << format_rational(steps[i].before) << ','
            << format_rational(steps[i].after) << ',' << canonical_cert(steps[i].graph).hex() << '\n';
      }
      return out.str();
    }
    case Format::Table: break;
  }
  std::vector<std::vector<std::string>> t{{"step", "move", "before", "after", "cert"}};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    t.push_back({std::to_string(i + 1), std::string(move_name(steps[i].move)), both(steps[i].before),
                 both(steps[i].after), canonical_cert(steps[i].graph).hex()});
  }
  return table(t);
}

}  // namespace blockmean
