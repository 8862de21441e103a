#include "sdimlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "sdimlab/error.hpp"

namespace sdim {

namespace {

using nlohmann::json;

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + message);
}

std::uint64_t parse_count(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    parse_fail(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::string dot_quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

json rational_node(const Rational& r) {
  return json{{"num", r.numerator_string()}, {"den", r.denominator_string()}};
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = split_whitespace(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() != 2) {
      parse_fail(line_no, "expected two integers, got " + std::to_string(tokens.size()) + " fields");
    }
    const std::uint64_t a = parse_count(tokens[0], line_no);
    const std::uint64_t b = parse_count(tokens[1], line_no);
    if (!have_header) {
      have_header = true;
      n = a;
      m = b;
      if (n > std::numeric_limits<Vertex>::max()) parse_fail(line_no, "vertex count too large");
    } else {
      if (edges.size() == m) parse_fail(line_no, "more edge lines than the declared " + std::to_string(m));
      if (a >= n || b >= n) {
        parse_fail(line_no, "vertex id " + std::to_string(std::max(a, b)) + " out of range 0.." +
                                (n == 0 ? std::string("(none)") : std::to_string(n - 1)));
      }
      if (a == b) parse_fail(line_no, "self-loop on vertex " + std::to_string(a));
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (end == text.size()) break;
  }
  if (!have_header) parse_fail(line_no, "missing header line \"n m\"");
  if (edges.size() != m) {
    parse_fail(line_no, "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph::from_edges(n, edges);
}

std::string render_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string render_label_json(const Graph& g) {
  json labels = json::array();
  for (Vertex v = 0; v < g.order(); ++v) labels.push_back(g.label(v));
  return json{{"labels", labels}}.dump(2) + "\n";
}

Graph apply_label_json(const Graph& g, std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("label file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("labels") || !doc["labels"].is_array()) {
    throw Error(ErrorCode::parse_error, "label file: expected {\"labels\": [...]}");
  }
  std::vector<std::string> labels;
  for (const auto& item : doc["labels"]) {
    if (!item.is_string()) throw Error(ErrorCode::parse_error, "label file: labels must be strings");
    labels.push_back(item.get<std::string>());
  }
  if (labels.size() != g.order()) {
    throw Error(ErrorCode::parse_error, "label file: " + std::to_string(labels.size()) + " labels for " +
                                            std::to_string(g.order()) + " vertices");
  }
  return g.with_labels(std::move(labels));
}

std::string render_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << dot_quote(name) << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << dot_quote(g.label(v)) << ";\n";
  for (const auto& [u, v] : g.edges()) {
    out << "  " << dot_quote(g.label(u)) << " -- " << dot_quote(g.label(v)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string rational_json(const Rational& r) { return rational_node(r).dump(); }

std::string_view citation_for(std::string_view param) {
  if (param == "order") return "number of vertices";
  if (param == "size") return "number of edges";
  if (param == "boundary") return "|M(G)|: vertices with at least one mutually maximally distant partner";
  if (param == "sdim_f") return "minimum total weight of g: V -> [0,1] with g(S{x,y}) >= 1 for every pair";
  if (param == "sdim_f_reduced") return "fractional vertex cover number of the strong resolving graph";
  if (param == "sl_f") return "minimum total weight of g: V -> [0,1] with g(SL{x,y}) >= 1 for every pair";
  if (param == "sdim") return "sdim(G) = vertex cover number of the strong resolving graph";
  if (param == "sr_matching") return "maximum matching size of the strong resolving graph";
  if (param == "sr_vertex_cover") return "vertex cover number of the strong resolving graph";
  if (param == "leaves") return "number of degree-one vertices";
  if (param == "diameter") return "largest distance between two vertices";
  return "";
}

std::string render_values_json(const Graph& g, std::string_view source, const std::vector<NamedValue>& values) {
  json doc;
  doc["graph"] = json{{"source", std::string(source)}, {"order", g.order()}, {"size", g.size()}};
  doc["params"] = json::array();
  doc["values"] = json::object();
  doc["citations"] = json::object();
  for (const auto& [name, value] : values) {
    doc["params"].push_back(name);
    doc["values"][name] = rational_node(value);
    doc["citations"][name] = std::string(citation_for(name));
  }
  return doc.dump(2) + "\n";
}

std::vector<NamedValue> report_values(const InvariantReport& report) {
  auto count = [](std::size_t v) { return Rational(static_cast<long>(v)); };
  return {
      {"order", count(report.order)},
      {"boundary", count(report.boundary_size)},
      {"sdim_f", report.sdim_f},
      {"sdim", count(report.sdim)},
      {"sr_matching", count(report.sr_matching)},
      {"sr_vertex_cover", count(report.sr_vertex_cover)},
      {"leaves", count(report.leaves)},
      {"diameter", count(report.diameter)},
  };
}

std::string render_report_json(const Graph& g, const InvariantReport& report, std::string_view source) {
  json doc = json::parse(render_values_json(g, source, report_values(report)));
  json sr = json::parse(report.sr.to_json());
  json components = json::array();
  for (const auto& c : report.sr_components) {
    json node{{"order", c.order}, {"bipartite", c.is_bipartite}, {"regular", c.is_regular}};
    if (c.is_regular) node["degree"] = *c.regular_degree;
    components.push_back(node);
  }
  sr["components"] = components;
  doc["graph"]["strong_resolving_graph"] = sr;
  json witness = json::array();
  for (const auto& w : report.witness.values()) witness.push_back(rational_node(w));
  doc["graph"]["witness"] = witness;
  return doc.dump(2) + "\n";
}

std::string render_values_table(const std::vector<NamedValue>& values) {
  std::size_t width = 0;
  for (const auto& v : values) width = std::max(width, v.name.size());
  std::ostringstream out;
  for (const auto& [name, value] : values) {
    out << std::left << std::setw(static_cast<int>(width + 2)) << name << value.to_string() << '\n';
  }
  return out.str();
}

std::string render_report_table(const InvariantReport& report) {
  std::string out = render_values_table(report_values(report));
  out += "sr_components";
  for (const auto& c : report.sr_components) {
    out += " [n=" + std::to_string(c.order);
    if (c.is_regular) out += " " + std::to_string(*c.regular_degree) + "-regular";
    if (c.is_bipartite) out += " bipartite";
    out += "]";
  }
  return out + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_error, "cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error(ErrorCode::io_error, "write to '" + path + "' failed");
}

}  // namespace sdim
