#pragma once

#include <json.hpp>
#include <string>

#include "invgraph/enumerate.hpp"
#include "invgraph/invert.hpp"

namespace invgraph {

using json = nlohmann::json;

// Bumped only on breaking report-format changes.
inline constexpr const char* kReportFormatVersion = "1";

json to_json(const Signing& s);
json to_json_pairs(const std::vector<std::pair<int, int>>& pairs);
json to_json(const IntMatrix& m);       // rows of integer strings-safe values
json to_json(const RationalMatrix& m);  // rows of "p/q" strings
json to_json(const Multigraph& g);      // {"n": ..., "weights": row-major rows}
json to_json(const IntPolynomial& p);   // descending coefficients
json to_json(const Classification& c);
json to_json(const InverseGraph& inv);
json to_json(const Census& c);

// Report envelope: {"command": ..., "format_version": ...} + payload fields.
json make_report(const std::string& command, json payload);

// Human-readable renderings used by the CLI.
std::string classification_text(const Classification& c);
std::string census_table_text(const Census& c);
std::string census_relations_text(const Census& c);

}  // namespace invgraph
