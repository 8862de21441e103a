#include "sdimlab/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdimlab/distance.hpp"
#include "sdimlab/error.hpp"
#include "sdimlab/families.hpp"
#include "sdimlab/invariants.hpp"
#include "sdimlab/io.hpp"
#include "sdimlab/products.hpp"
#include "sdimlab/resolving.hpp"
#include "sdimlab/verify.hpp"

namespace sdim::cli {

namespace {

const std::vector<std::string> kParams{"order", "size", "boundary", "sdim_f", "sdim_f_reduced", "sl_f",
                                       "sdim", "sr_matching", "sr_vertex_cover", "leaves", "diameter",
                                       "report"};

struct GraphSource {
  std::string family;
  std::string input;
  std::string labels;
};

struct Loaded {
  Graph graph;
  std::string name;
};

// "-" reads stdin. A path that exists is read as an edge list; anything else
// is parsed as an inline family spec.
Loaded load_operand(const std::string& text, std::istream& in) {
  if (text == "-") {
    std::string all{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return {parse_edge_list(all), "stdin"};
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(text, ec)) return {parse_edge_list(read_file(text)), text};
  const FamilySpec spec = FamilySpec::parse(text);
  return {generate(spec), spec.to_string()};
}

Loaded load(const GraphSource& source, std::istream& in) {
  Loaded loaded;
  if (!source.family.empty()) {
    const FamilySpec spec = FamilySpec::parse(source.family);
    loaded = {generate(spec), spec.to_string()};
  } else {
    loaded.name = source.input == "-" ? "stdin" : source.input;
    if (source.input == "-") {
      loaded.graph = load_operand("-", in).graph;
    } else {
      loaded.graph = parse_edge_list(read_file(source.input));
    }
  }
  if (!source.labels.empty()) loaded.graph = apply_label_json(loaded.graph, read_file(source.labels));
  return loaded;
}

void add_source_options(CLI::App* cmd, GraphSource& source) {
  auto* family = cmd->add_option("--family", source.family, "Inline family, e.g. cycle:7 or gq:4");
  auto* input = cmd->add_option("--input", source.input, "Edge-list file ('-' for stdin)");
  family->excludes(input);
  input->excludes(family);
  cmd->add_option("--labels", source.labels, "Label sidecar JSON for --input");
}

Rational count(std::size_t v) { return Rational(static_cast<long>(v)); }

Rational compute_param(const std::string& name, const Graph& g, bool reduced) {
  if (name == "order") return count(g.order());
  if (name == "size") return count(g.size());
  if (name == "leaves") return count(g.leaf_count());
  if (name == "sdim_f") return reduced ? sdim_f_reduced(g).value : sdim_f(g).value;
  if (name == "sdim_f_reduced") return sdim_f_reduced(g).value;
  if (name == "sl_f") return sl_f(g);
  if (name == "sdim") return count(sdim(g));
  if (name == "diameter") {
    if (!is_connected(g)) throw Error(ErrorCode::disconnected_input, "diameter needs a connected graph");
    return count(all_pairs_distances(g).diameter());
  }
  const StrongResolvingGraph sr = strong_resolving_graph(g);
  if (name == "boundary") return count(sr.boundary.size());
  if (name == "sr_matching") return count(max_matching(sr.graph));
  if (name == "sr_vertex_cover") return count(vertex_cover_number(sr.graph));
  throw Error(ErrorCode::invalid_params, "unknown parameter '" + name + "'");
}

// Writes the graph as an edge list, plus a label sidecar next to it when the
// output goes to a file.
void emit_graph(const Graph& g, const std::string& output, std::string labels_out, bool dot, std::ostream& out) {
  const std::string body = dot ? render_dot(g) : render_edge_list(g);
  if (output.empty() || output == "-") {
    out << body;
  } else {
    write_file(output, body);
    if (labels_out.empty() && !dot) labels_out = output + ".labels.json";
  }
  if (!labels_out.empty()) write_file(labels_out, render_label_json(g));
}

ProductKind parse_kind(const std::string& kind) {
  if (kind == "corona") return ProductKind::corona;
  if (kind == "lexicographic") return ProductKind::lexicographic;
  if (kind == "cartesian") return ProductKind::cartesian;
  return ProductKind::direct;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact fractional strong metric dimension toolkit", "sdimlab"};
  app.require_subcommand(1, 1);

  // compute
  GraphSource compute_source;
  std::vector<std::string> params;
  bool compute_json = false;
  bool compute_table = false;
  bool reduced = false;
  auto* compute = app.add_subcommand("compute", "Compute invariants of one graph");
  add_source_options(compute, compute_source);
  compute->add_option("--param", params, "Parameter to compute (repeatable); default: report")
      ->check(CLI::IsMember(kParams));
  auto* compute_json_flag = compute->add_flag("--json", compute_json, "JSON document");
  auto* compute_table_flag = compute->add_flag("--table", compute_table, "Two-column table");
  compute_json_flag->excludes(compute_table_flag);
  compute_table_flag->excludes(compute_json_flag);
  compute->add_flag("--allow-reduced-lp", reduced, "Solve sdim_f over strong resolving graph edges only");

  // product
  std::string kind, left, right, product_output, product_labels_out;
  bool product_dot = false;
  bool product_edgelist = false;
  auto* product = app.add_subcommand("product", "Build a graph product");
  product->add_option("--kind", kind, "corona | lexicographic | cartesian | direct")
      ->required()
      ->check(CLI::IsMember({"corona", "lexicographic", "cartesian", "direct"}));
  product->add_option("--left", left, "Left factor: family spec or edge-list file")->required();
  product->add_option("--right", right, "Right factor: family spec or edge-list file")->required();
  product->add_option("--output", product_output, "Write here instead of stdout");
  product->add_option("--labels-out", product_labels_out, "Label sidecar path");
  auto* product_dot_flag = product->add_flag("--dot", product_dot, "DOT output");
  auto* product_el_flag = product->add_flag("--edgelist", product_edgelist, "Edge-list output (default)");
  product_dot_flag->excludes(product_el_flag);
  product_el_flag->excludes(product_dot_flag);

  // srgraph
  GraphSource sr_source;
  bool sr_json = false, sr_dot = false, sr_edgelist = false;
  auto* srgraph = app.add_subcommand("srgraph", "Print the strong resolving graph");
  add_source_options(srgraph, sr_source);
  auto* sr_json_flag = srgraph->add_flag("--json", sr_json, "JSON in base ids (default)");
  auto* sr_dot_flag = srgraph->add_flag("--dot", sr_dot, "DOT with base labels");
  auto* sr_el_flag = srgraph->add_flag("--edgelist", sr_edgelist, "Edge list in boundary-local ids");
  sr_json_flag->excludes(sr_dot_flag)->excludes(sr_el_flag);
  sr_dot_flag->excludes(sr_json_flag)->excludes(sr_el_flag);
  sr_el_flag->excludes(sr_json_flag)->excludes(sr_dot_flag);

  // family
  std::string family_name, family_output, family_labels_out;
  std::vector<long> family_params;
  bool family_dot = false, family_edgelist = false;
  auto* family = app.add_subcommand("family", "Generate a named family member");
  family->add_option("--name", family_name, "Family name")->required();
  family->add_option("--params", family_params, "Integer parameters")->delimiter(',');
  family->add_option("--output", family_output, "Write here instead of stdout");
  family->add_option("--labels-out", family_labels_out, "Label sidecar path");
  auto* family_dot_flag = family->add_flag("--dot", family_dot, "DOT output");
  auto* family_el_flag = family->add_flag("--edgelist", family_edgelist, "Edge-list output (default)");
  family_dot_flag->excludes(family_el_flag);
  family_el_flag->excludes(family_dot_flag);

  // verify
  std::string suite = "paper";
  VerifyOptions verify_options;
  bool verify_json = false, verify_table = false;
  auto* verify = app.add_subcommand("verify", "Run the closed-form acceptance battery");
  verify->add_option("--suite", suite, "Battery name")->check(CLI::IsMember({"paper"}));
  verify->add_option("--archive-dir", verify_options.archive_dir, "Fixture directory for failures ('' disables)");
  verify->add_option("--criteria", verify_options.only, "Only these criteria")->delimiter(',');
  verify->add_option("--property-count", verify_options.property_corpus_size,
                     "Random graphs in the property suite");
  auto* verify_json_flag = verify->add_flag("--json", verify_json, "JSON check list");
  auto* verify_table_flag = verify->add_flag("--table", verify_table, "Per-check table (default)");
  verify_json_flag->excludes(verify_table_flag);
  verify_table_flag->excludes(verify_json_flag);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) {
      if (compute_source.family.empty() && compute_source.input.empty()) {
        err << "compute: one of --family or --input is required\n";
        return 2;
      }
      const Loaded loaded = load(compute_source, in);
      if (params.empty() || std::find(params.begin(), params.end(), "report") != params.end()) {
        if (params.size() > 1) {
          err << "compute: --param report cannot be combined with other parameters\n";
          return 2;
        }
        const InvariantReport report = invariant_report(loaded.graph, {reduced});
        out << (compute_json ? render_report_json(loaded.graph, report, loaded.name) : render_report_table(report));
        return 0;
      }
      std::vector<NamedValue> values;
      for (const auto& p : params) values.push_back({p, compute_param(p, loaded.graph, reduced)});
      if (compute_json) {
        out << render_values_json(loaded.graph, loaded.name, values);
      } else if (compute_table || values.size() > 1) {
        out << render_values_table(values);
      } else {
        out << values.front().value << '\n';
      }
      return 0;
    }

    if (product->parsed()) {
      const Loaded g = load_operand(left, in);
      const Loaded h = load_operand(right, in);
      const Product p = make_product(parse_kind(kind), g.graph, h.graph);
      emit_graph(p.graph, product_output, product_labels_out, product_dot, out);
      return 0;
    }

    if (srgraph->parsed()) {
      if (sr_source.family.empty() && sr_source.input.empty()) {
        err << "srgraph: one of --family or --input is required\n";
        return 2;
      }
      const Loaded loaded = load(sr_source, in);
      const StrongResolvingGraph sr = strong_resolving_graph(loaded.graph);
      if (sr_dot) {
        std::vector<std::string> labels;
        for (Vertex b : sr.boundary) labels.push_back(loaded.graph.label(b));
        out << render_dot(sr.graph.with_labels(labels), "G_SR");
      } else if (sr_edgelist) {
        out << render_edge_list(sr.graph);
      } else {
        out << sr.to_json() << '\n';
      }
      return 0;
    }

    if (family->parsed()) {
      FamilySpec spec = FamilySpec::parse(family_name);
      spec.params.insert(spec.params.end(), family_params.begin(), family_params.end());
      emit_graph(generate(spec), family_output, family_labels_out, family_dot, out);
      return 0;
    }

    if (verify->parsed()) {
      const VerifyReport report = run_verify_suite(verify_options);
      if (verify_json) {
        nlohmann::json doc = nlohmann::json::array();
        for (const auto& c : report.checks) {
          doc.push_back({{"id", c.id},
                         {"criterion", c.criterion},
                         {"expected", c.expected},
                         {"computed", c.computed},
                         {"citation", c.citation},
                         {"passed", c.passed}});
        }
        out << doc.dump(2) << '\n';
      } else {
        out << render_verify_table(report);
      }
      return report.all_passed() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace sdim::cli
