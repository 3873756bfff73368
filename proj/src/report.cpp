#include "invgraph/report.hpp"

#include <limits>
#include <sstream>

#include "invgraph/graph6.hpp"

namespace invgraph {

namespace {

json int_to_json(const Int& v) {
  // Stays a JSON number while it fits; decimal string beyond 64 bits.
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

}  // namespace

json to_json(const Signing& s) { return json(s.d); }

json to_json_pairs(const std::vector<std::pair<int, int>>& pairs) {
  json out = json::array();
  for (auto [i, j] : pairs) out.push_back(json::array({i, j}));
  return out;
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.size(); ++j) {
      const Rational& e = m.at(i, j);
      row.push_back(numerator(e).str() + "/" + denominator(e).str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Multigraph& g) {
  json rows = json::array();
  for (int i = 0; i < g.order(); ++i) {
    json row = json::array();
    for (int j = 0; j < g.order(); ++j) row.push_back(g.weight(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"n", g.order()}, {"weights", std::move(rows)}};
}

json to_json(const IntPolynomial& p) {
  json coeffs = json::array();
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) coeffs.push_back(int_to_json(*it));
  return coeffs;
}

json to_json(const Classification& c) {
  return json{
      {"graph6", to_graph6(c.graph)},
      {"n", c.graph.order()},
      {"det", int_to_json(c.det)},
      {"integral", c.integral},
      {"bipartite", c.bipartite},
      {"positive_signing", c.positive_signing ? to_json(*c.positive_signing) : json(nullptr)},
      {"negative_signing", c.negative_signing ? to_json(*c.negative_signing) : json(nullptr)},
      {"verdict", to_string(c.verdict)},
  };
}

json to_json(const InverseGraph& inv) {
  return json{
      {"graph", to_json(inv.graph)},
      {"signing", to_json(inv.signing)},
      {"sign", inv.sign},
  };
}

json to_json(const Census& c) {
  json graphs = json::array();
  for (std::size_t i = 0; i < c.graphs.size(); ++i) {
    json maxes = json::array();
    for (const SimpleGraph& s : c.inverse_max_subgraphs[i]) maxes.push_back(to_graph6(s));
    graphs.push_back(json{
        {"graph6", to_graph6(c.graphs[i])},
        {"classification", to_json(c.classifications[i])},
        {"inverse", c.inverses[i] ? to_json(*c.inverses[i]) : json(nullptr)},
        {"char_poly", to_json(c.char_polys[i])},
        {"max_unique_pm_subgraphs", std::move(maxes)},
    });
  }
  json counts;
  for (const auto& [verdict, count] : c.counts) counts[to_string(verdict)] = count;
  return json{
      {"n", c.n},
      {"count", c.graphs.size()},
      {"graphs", std::move(graphs)},
      {"counts", std::move(counts)},
      {"isospectral_pairs", to_json_pairs(c.isospectral_pairs)},
      {"selfinvertible", json(c.selfinvertible)},
      {"self_contained", json(c.self_contained)},
      {"mutual_pairs", to_json_pairs(c.mutual_pairs)},
      {"max_self_contained", json(c.max_self_contained)},
      {"max_mutual_pairs", to_json_pairs(c.max_mutual_pairs)},
  };
}

json make_report(const std::string& command, json payload) {
  payload["command"] = command;
  payload["format_version"] = kReportFormatVersion;
  return payload;
}

namespace {

std::string signing_text(const std::optional<Signing>& s) {
  if (!s) return "none";
  std::string out;
  for (int d : s->d) {
    if (!out.empty()) out += ' ';
    out += d > 0 ? "+1" : "-1";
  }
  return out;
}

std::string index_list_text(const std::vector<int>& v) {
  if (v.empty()) return "none";
  std::string out;
  for (int i : v) {
    if (!out.empty()) out += ", ";
    out += std::to_string(i + 1);
  }
  return out;
}

std::string pair_list_text(const std::vector<std::pair<int, int>>& v) {
  if (v.empty()) return "none";
  std::string out;
  for (auto [i, j] : v) {
    if (!out.empty()) out += ", ";
    out += "(" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
  }
  return out;
}

}  // namespace

std::string classification_text(const Classification& c) {
  std::ostringstream out;
  out << "graph: " << to_graph6(c.graph) << "  (n = " << c.graph.order()
      << ", edges = " << c.graph.edge_count() << ")\n";
  out << "determinant: " << c.det << "\n";
  out << "bipartite: " << (c.bipartite ? "yes" : "no") << "\n";
  out << "integral inverse: " << (c.integral ? "yes" : "no") << "\n";
  out << "nonnegative signing: " << signing_text(c.positive_signing) << "\n";
  out << "nonpositive signing: " << signing_text(c.negative_signing) << "\n";
  out << "verdict: " << to_string(c.verdict) << "\n";
  return out.str();
}

std::string census_table_text(const Census& c) {
  std::ostringstream out;
  out << "census n = " << c.n << ": " << c.graphs.size()
      << " connected graphs with a unique perfect matching\n\n";
  out << "   #  graph6      det  verdict\n";
  for (std::size_t i = 0; i < c.graphs.size(); ++i) {
    std::string g6 = to_graph6(c.graphs[i]);
    out << "  " << (i + 1 < 10 ? " " : "") << (i + 1) << "  " << g6
        << std::string(g6.size() < 10 ? 10 - g6.size() : 1, ' ')
        << (c.classifications[i].det < 0 ? " " : "  ") << c.classifications[i].det << "  "
        << to_string(c.classifications[i].verdict) << "\n";
  }
  out << "\ncounts:";
  bool first = true;
  for (const auto& [verdict, count] : c.counts) {
    out << (first ? " " : ", ") << to_string(verdict) << " " << count;
    first = false;
  }
  out << "\n";
  return out.str();
}

std::string census_relations_text(const Census& c) {
  std::ostringstream out;
  out << "relations for n = " << c.n << " (1-based census indices)\n\n";
  out << "selfinvertible: " << index_list_text(c.selfinvertible) << "\n";
  out << "isospectral pairs: " << pair_list_text(c.isospectral_pairs) << "\n\n";
  out << "subgraph-embedding convention:\n";
  out << "  self-contained in own inverse: " << index_list_text(c.self_contained) << "\n";
  out << "  mutual containment pairs: " << pair_list_text(c.mutual_pairs) << "\n\n";
  out << "maximal unique-PM-subgraph convention:\n";
  out << "  self-contained in own inverse: " << index_list_text(c.max_self_contained) << "\n";
  out << "  mutual containment pairs: " << pair_list_text(c.max_mutual_pairs) << "\n";
  return out.str();
}

}  // namespace invgraph
