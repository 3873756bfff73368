#include <doctest.h>

#include <string>
#include <vector>

#include "goldens.hpp"
#include "invgraph/enumerate.hpp"
#include "invgraph/graph6.hpp"
#include "invgraph/invert.hpp"
#include "invgraph/report.hpp"

using namespace invgraph;

namespace {

SimpleGraph fulvene() {
  return SimpleGraph::from_edges(6, golden::fulvene_edges);
}

}  // namespace

TEST_CASE("classification JSON") {
  json j = to_json(classify(fulvene()));
  CHECK(j["graph6"] == golden::fulvene_g6);
  CHECK(j["n"] == 6);
  CHECK(j["det"] == -1);
  CHECK(j["integral"] == true);
  CHECK(j["bipartite"] == false);
  CHECK(j["positive_signing"].is_null());
  REQUIRE(j["negative_signing"].is_array());
  CHECK(j["negative_signing"] == json({1, 1, -1, -1, -1, 1}));
  CHECK(j["verdict"] == "negative-only");
}

TEST_CASE("inverse graph JSON") {
  json j = to_json(inverse_graph(fulvene()));
  CHECK(j["sign"] == -1);
  CHECK(j["graph"]["n"] == 6);
  json rows = j["graph"]["weights"];
  REQUIRE(rows.size() == 6);
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k)
      CHECK(rows[i][k] == golden::fulvene_inverse_weights[i][k]);
}

TEST_CASE("rational matrices render as p/q strings") {
  RationalMatrix r(2);
  r.at(0, 0) = Rational(1, 3);
  r.at(0, 1) = Rational(-2, 3);
  r.at(1, 0) = 4;
  r.at(1, 1) = 0;
  json j = to_json(r);
  CHECK(j[0][0] == "1/3");
  CHECK(j[0][1] == "-2/3");
  CHECK(j[1][0] == "4/1");
  CHECK(j[1][1] == "0/1");
}

TEST_CASE("polynomial JSON uses descending coefficients") {
  IntPolynomial p;
  p.coeffs = {Int(-1), Int(0), Int(1)};  // x^2 - 1, stored ascending
  CHECK(to_json(p) == json({1, 0, -1}));
}

TEST_CASE("huge integers fall back to decimal strings") {
  IntMatrix m(1);
  m.at(0, 0) = Int("123456789012345678901234567890");
  json j = to_json(m);
  CHECK(j[0][0] == "123456789012345678901234567890");
  IntMatrix small(1);
  small.at(0, 0) = -42;
  CHECK(to_json(small)[0][0] == -42);
}

TEST_CASE("census JSON carries the full record") {
  json j = to_json(census(2));
  CHECK(j["n"] == 2);
  CHECK(j["count"] == 1);
  REQUIRE(j["graphs"].size() == 1);
  const json& row = j["graphs"][0];
  CHECK(row["graph6"] == "A_");
  CHECK(row["classification"]["verdict"] == "bipartite-both");
  CHECK(row["inverse"]["sign"] == 1);
  CHECK(row["char_poly"] == json({1, 0, -1}));
  CHECK(row["max_unique_pm_subgraphs"] == json({"A_"}));
  CHECK(j["counts"]["bipartite-both"] == 1);
  CHECK(j["counts"]["singular"] == 0);
  CHECK(j["selfinvertible"] == json({0}));
  CHECK(j["isospectral_pairs"] == json::array());
  CHECK(j["mutual_pairs"] == json::array());
}

TEST_CASE("report envelope") {
  json r = make_report("classify", json{{"x", 1}});
  CHECK(r["command"] == "classify");
  CHECK(r["format_version"] == kReportFormatVersion);
  CHECK(r["x"] == 1);
}

TEST_CASE("JSON dumps are deterministic") {
  Census c = census(4);
  CHECK(to_json(c).dump() == to_json(c).dump());
  std::string a = to_json(classify(fulvene())).dump(2);
  std::string b = to_json(classify(fulvene())).dump(2);
  CHECK(a == b);
}

TEST_CASE("classification text") {
  std::string t = classification_text(classify(fulvene()));
  CHECK(t.find("graph: EhcO  (n = 6, edges = 6)") != std::string::npos);
  CHECK(t.find("determinant: -1") != std::string::npos);
  CHECK(t.find("bipartite: no") != std::string::npos);
  CHECK(t.find("integral inverse: yes") != std::string::npos);
  CHECK(t.find("nonnegative signing: none") != std::string::npos);
  CHECK(t.find("nonpositive signing: +1 +1 -1 -1 -1 +1") != std::string::npos);
  CHECK(t.find("verdict: negative-only") != std::string::npos);
}

TEST_CASE("census table text") {
  std::string t = census_table_text(census(4));
  CHECK(t.find("census n = 4: 2 connected graphs with a unique perfect matching") !=
        std::string::npos);
  CHECK(t.find("CL") != std::string::npos);
  CHECK(t.find("CN") != std::string::npos);
  CHECK(t.find("bipartite-both 1") != std::string::npos);
  CHECK(t.find("positive-only 1") != std::string::npos);
}

TEST_CASE("census relations text uses 1-based indices") {
  std::string t = census_relations_text(census(6));
  CHECK(t.find("selfinvertible: 1, 4, 10") != std::string::npos);
  CHECK(t.find("isospectral pairs: (3, 12)") != std::string::npos);
  // Maximal-convention lists.
  CHECK(t.find("1, 2, 3, 4, 10, 13, 17") != std::string::npos);
  CHECK(t.find("(5, 6), (7, 8), (15, 19)") != std::string::npos);
}
