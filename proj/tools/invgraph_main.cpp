#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "invgraph/enumerate.hpp"
#include "invgraph/graph6.hpp"
#include "invgraph/report.hpp"

namespace {

using namespace invgraph;

std::string read_source(const std::string& inline_graph, const std::string& input) {
  if (!inline_graph.empty()) return inline_graph;
  if (input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream f(input);
  if (!f) throw std::runtime_error("cannot open input file: " + input);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

// Accepts graph6 or a 1-based edge list ("u v" per line); auto-detected:
// graph6 bytes are all >= 63, so a leading integer token means edge list.
SimpleGraph parse_graph(const std::string& raw) {
  std::istringstream probe(raw);
  std::string first_token;
  if (!(probe >> first_token)) throw std::runtime_error("empty input");
  bool numeric = first_token.find_first_not_of("0123456789") == std::string::npos;
  if (!numeric) return from_graph6(first_token);

  std::istringstream lines(raw);
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) continue;  // blank line
    std::string trailing;
    if (!(ls >> v) || (ls >> trailing))
      throw std::runtime_error("edge list: expected two vertex labels per line");
    if (u < 1 || v < 1 || u > 62 || v > 62 || u == v)
      throw std::runtime_error("edge list: labels must be distinct and in 1..62");
    n = std::max(n, static_cast<int>(std::max(u, v)));
    edges.emplace_back(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
  }
  return SimpleGraph::from_edges(n, edges);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"classification of graphs with a unique perfect matching by invertibility"};
  app.require_subcommand(1);

  std::string graph_arg, input_arg;
  std::string format = "text";  // invert defaults to dot instead
  int n = 0;
  bool serial = false;

  auto add_graph_input = [&](CLI::App* cmd) {
    cmd->add_option("graph", graph_arg, "graph6 string");
    cmd->add_option("--input", input_arg, "input file with graph6 or 1-based edge list, - for stdin");
  };
  auto add_n = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "vertex count")->required()->check(CLI::IsMember({2, 4, 6}));
    cmd->add_flag("--serial", serial, "disable the parallel kernels");
  };
  auto add_format = [&](CLI::App* cmd, const char* choices, const char* a, const char* b) {
    cmd->add_option("--format", format, choices)->check(CLI::IsMember({a, b}));
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "invertibility classification of one graph");
  add_graph_input(classify_cmd);
  add_format(classify_cmd, "text (default) or json", "text", "json");

  CLI::App* invert_cmd = app.add_subcommand("invert", "inverse graph of an invertible graph");
  add_graph_input(invert_cmd);
  add_format(invert_cmd, "dot (default) or json", "dot", "json");

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "connected unique-PM graphs, one graph6 per line");
  add_n(enum_cmd);
  add_format(enum_cmd, "text (default) or json", "text", "json");

  CLI::App* table_cmd = app.add_subcommand("table", "per-graph verdict table with aggregate counts");
  add_n(table_cmd);
  add_format(table_cmd, "text (default) or json", "text", "json");

  CLI::App* rel_cmd = app.add_subcommand("relations", "selfinvertibility, isospectrality, containment relations");
  add_n(rel_cmd);
  add_format(rel_cmd, "text (default) or json", "text", "json");

  CLI11_PARSE(app, argc, argv);
  ExecMode mode = serial ? ExecMode::serial : ExecMode::parallel;

  if (classify_cmd->parsed() || invert_cmd->parsed()) {
    if (graph_arg.empty() == input_arg.empty())
      throw std::runtime_error("provide exactly one of: a graph6 argument, or --input");
    SimpleGraph g = parse_graph(read_source(graph_arg, input_arg));
    std::string g6 = to_graph6(g);
    if (classify_cmd->parsed()) {
      Classification c = classify(g);
      if (format == "json")
        emit(make_report("classify", json{{"input", g6}, {"classification", to_json(c)}}));
      else
        std::cout << classification_text(c);
    } else {
      InverseGraph inv = inverse_graph(g);  // not_invertible_error -> exit 1
      if (format == "json") {
        emit(make_report("invert", json{{"input", g6}, {"inverse", to_json(inv)}}));
      } else {
        std::cout << "// inverse graph of " << g6 << "\n";
        std::cout << "// sign: " << (inv.sign > 0 ? "+1" : "-1") << "\n";
        std::cout << "// signing:";
        for (int d : inv.signing.d) std::cout << " " << (d > 0 ? "+1" : "-1");
        std::cout << "\n" << to_dot(inv.graph);
      }
    }
    return 0;
  }

  if (enum_cmd->parsed()) {
    std::vector<SimpleGraph> graphs = unique_pm_graphs(n, mode);
    if (format == "json") {
      json list = json::array();
      for (const SimpleGraph& g : graphs) list.push_back(to_graph6(g));
      emit(make_report("enumerate", json{{"n", n}, {"graphs", std::move(list)}}));
    } else {
      for (const SimpleGraph& g : graphs) std::cout << to_graph6(g) << "\n";
    }
    return 0;
  }

  Census c = census(n, mode);
  if (table_cmd->parsed()) {
    if (format == "json")
      emit(make_report("table", json{{"census", to_json(c)}}));
    else
      std::cout << census_table_text(c);
  } else {
    if (format == "json") {
      emit(make_report("relations", json{{"n", n},
                                         {"selfinvertible", json(c.selfinvertible)},
                                         {"isospectral_pairs", to_json_pairs(c.isospectral_pairs)},
                                         {"self_contained", json(c.self_contained)},
                                         {"mutual_pairs", to_json_pairs(c.mutual_pairs)},
                                         {"max_self_contained", json(c.max_self_contained)},
                                         {"max_mutual_pairs", to_json_pairs(c.max_mutual_pairs)}}));
    } else {
      std::cout << census_relations_text(c);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
