#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sdimlab/graph.hpp"
#include "sdimlab/invariants.hpp"

namespace sdim {

/// Parses the edge-list format: a header line "n m" followed by m lines
/// "u v" of 0-based ids. Blank lines and lines starting with '#' are
/// ignored. Errors report the 1-based line number.
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list for normalized graphs.
std::string render_edge_list(const Graph& g);

/// {"labels": ["...", ...]} indexed by vertex id.
std::string render_label_json(const Graph& g);
/// Applies a sidecar produced by render_label_json.
Graph apply_label_json(const Graph& g, std::string_view json_text);

/// Undirected DOT with display labels as node names.
std::string render_dot(const Graph& g, std::string_view name = "G");

/// Rational as {"num": "...", "den": "..."}.
std::string rational_json(const Rational& r);

struct NamedValue {
  std::string name;
  Rational value;
};

/// One-line statement of what a parameter name means, e.g. for "sdim_f".
std::string_view citation_for(std::string_view param);

/// The schema-stable value document:
///   {"graph": {"source", "order", "size"},
///    "params": [name, ...],
///    "values": {name: {"num", "den"}},
///    "citations": {name: statement}}
std::string render_values_json(const Graph& g, std::string_view source,
                               const std::vector<NamedValue>& values);

/// Every scalar field of a report, in a fixed order.
std::vector<NamedValue> report_values(const InvariantReport& report);

/// render_values_json over report_values, with the strong resolving graph
/// added under "graph".
std::string render_report_json(const Graph& g, const InvariantReport& report, std::string_view source);

/// Two-column table, rationals as p/q.
std::string render_values_table(const std::vector<NamedValue>& values);
std::string render_report_table(const InvariantReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace sdim
