#include "sdimlab/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <string>

#include "sdimlab/error.hpp"

namespace sdim {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 14> kNames{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::complete_multipartite, "complete_multipartite"},
    {Family::star, "star"},
    {Family::wheel, "wheel"},
    {Family::petersen, "petersen"},
    {Family::hypercube, "hypercube"},
    {Family::house, "house"},
    {Family::fig5_example, "fig5_example"},
    {Family::gq_full, "gq_full"},
    {Family::gq_core, "gq_core"},
    {Family::random_tree, "random_tree"},
    {Family::random_connected, "random_connected"},
}};

constexpr std::array<std::pair<std::string_view, Family>, 4> kAliases{{
    {"gq", Family::gq_full},
    {"multipartite", Family::complete_multipartite},
    {"tree", Family::random_tree},
    {"random", Family::random_connected},
}};

[[noreturn]] void bad_params(const std::string& message) { throw Error(ErrorCode::invalid_params, message); }

std::vector<std::string> labelled(std::string_view prefix, std::size_t count, std::size_t first = 1) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(std::string(prefix) + std::to_string(first + i));
  return out;
}

// u1..uk become ids 0..k-1.
Graph from_one_based(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  for (const auto& [u, v] : edges) list.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  return Graph::from_edges(n, list, labelled("u", n));
}

Graph gq_graph(std::size_t q, bool with_pendants) {
  const std::size_t k = q + 1;
  auto a = [&](std::size_t i) { return static_cast<Vertex>(i); };
  auto b = [&](std::size_t i) { return static_cast<Vertex>(k + i); };
  auto c = [&](std::size_t i) { return static_cast<Vertex>(2 * k + i); };
  auto y = [&](std::size_t i) { return static_cast<Vertex>(3 * k + i); };
  auto z = [&](std::size_t i) { return static_cast<Vertex>(4 * k + i); };
  const auto x = static_cast<Vertex>(with_pendants ? 5 * k : 3 * k);

  std::vector<Edge> edges;
  for (std::size_t i = 0; i <= q; ++i) {
    edges.emplace_back(a(i), b(i));
    edges.emplace_back(b(i), c(i));
  }
  for (std::size_t i = 1; i <= q; ++i) {
    edges.emplace_back(a(i), a(0));
    edges.emplace_back(b(i), b(0));
    edges.emplace_back(c(i), c(0));
  }
  if (with_pendants) {
    for (std::size_t i = 0; i <= q; ++i) {
      edges.emplace_back(a(i), y(i));
      edges.emplace_back(c(i), z(i));
    }
  }
  edges.emplace_back(x, a(0));
  edges.emplace_back(x, c(0));

  std::vector<std::string> labels;
  const std::vector<std::string_view> prefixes =
      with_pendants ? std::vector<std::string_view>{"a", "b", "c", "y", "z"}
                    : std::vector<std::string_view>{"a", "b", "c"};
  for (auto prefix : prefixes) {
    auto block = labelled(prefix, k, 0);
    labels.insert(labels.end(), block.begin(), block.end());
  }
  labels.emplace_back("x");
  const std::size_t n = labels.size();
  return Graph::from_edges(n, edges, std::move(labels));
}

void expect_count(const FamilySpec& spec, std::size_t lo, std::size_t hi) {
  if (spec.params.size() < lo || spec.params.size() > hi) {
    bad_params(std::string(to_string(spec.name)) + " takes " +
               (lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi)) +
               " parameter(s), got " + std::to_string(spec.params.size()));
  }
}

std::size_t at_least(const FamilySpec& spec, std::size_t index, long minimum, const char* what) {
  const long value = spec.params[index];
  if (value < minimum) {
    bad_params(std::string(to_string(spec.name)) + ": " + what + " must be at least " + std::to_string(minimum) +
               ", got " + std::to_string(value));
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

std::string_view to_string(Family family) {
  for (const auto& [f, name] : kNames) {
    if (f == family) return name;
  }
  return "unknown";
}

FamilySpec FamilySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  FamilySpec spec;
  bool known = false;
  for (const auto& [f, n] : kNames) {
    if (n == name) {
      spec.name = f;
      known = true;
    }
  }
  for (const auto& [alias, f] : kAliases) {
    if (alias == name) {
      spec.name = f;
      known = true;
    }
  }
  if (!known) bad_params("unknown family '" + std::string(name) + "'");
  if (colon == std::string_view::npos) return spec;

  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view token = rest.substr(0, comma);
    long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      bad_params("bad parameter '" + std::string(token) + "' in '" + std::string(text) + "'");
    }
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out(sdim::to_string(name));
  for (std::size_t i = 0; i < params.size(); ++i) out += (i == 0 ? ":" : ",") + std::to_string(params[i]);
  return out;
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(i - 1, i);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) bad_params("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph empty_graph(std::size_t n) { return Graph::from_edges(n, {}); }

Graph complete_multipartite_graph(std::vector<std::size_t> parts) {
  if (parts.empty()) bad_params("complete_multipartite needs at least one part");
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] == 0) bad_params("complete_multipartite parts must be positive");
    part_of.insert(part_of.end(), parts[p], p);
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < part_of.size(); ++u) {
    for (Vertex v = u + 1; v < part_of.size(); ++v) {
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(part_of.size(), edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

Graph wheel_graph(std::size_t n) {
  if (n < 4) bad_params("wheel needs at least 4 vertices");
  std::vector<Edge> edges;
  const std::size_t rim = n - 1;
  for (Vertex i = 0; i < rim; ++i) {
    edges.emplace_back(0, i + 1);
    edges.emplace_back(i + 1, static_cast<Vertex>((i + 1) % rim + 1));
  }
  return Graph::from_edges(n, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, edges);
}

Graph hypercube_graph(std::size_t dimension) {
  if (dimension > 16) bad_params("hypercube dimension above 16");
  const std::size_t n = std::size_t{1} << dimension;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t bit = 0; bit < dimension; ++bit) {
      const auto w = static_cast<Vertex>(v ^ (std::size_t{1} << bit));
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph house_graph() { return from_one_based(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {2, 5}}); }

Graph fig5_example_graph() {
  return from_one_based(6, {{1, 2}, {2, 3}, {1, 3}, {3, 5}, {1, 5}, {1, 4}, {3, 4}, {5, 6}});
}

Graph gq_full_graph(std::size_t q) {
  if (q < 1) bad_params("gq_full needs q >= 1");
  return gq_graph(q, true);
}

Graph gq_core_graph(std::size_t q) {
  if (q < 1) bad_params("gq_core needs q >= 1");
  return gq_graph(q, false);
}

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) bad_params("empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return draw % bound;
}

Graph random_tree(std::size_t n, SeededRng& rng) {
  if (n <= 2) return path_graph(n);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng.below(n));
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::vector<Edge> edges;
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  Vertex u = 0;
  while (degree[u] != 1) ++u;
  Vertex v = u + 1;
  while (degree[v] != 1) ++v;
  edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph random_graph(std::size_t n, unsigned percent, SeededRng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.chance(percent)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_connected_graph(std::size_t n, unsigned percent, SeededRng& rng) {
  if (percent == 0 && n > 1) bad_params("edge probability 0 never yields a connected graph");
  while (true) {
    Graph g = random_graph(n, percent, rng);
    if (is_connected(g)) return g;
  }
}

Graph generate(const FamilySpec& spec) {
  switch (spec.name) {
    case Family::path:
      expect_count(spec, 1, 1);
      return path_graph(at_least(spec, 0, 1, "n"));
    case Family::cycle:
      expect_count(spec, 1, 1);
      return cycle_graph(at_least(spec, 0, 3, "n"));
    case Family::complete:
      expect_count(spec, 1, 1);
      return complete_graph(at_least(spec, 0, 1, "n"));
    case Family::complete_multipartite: {
      if (spec.params.empty()) bad_params("complete_multipartite needs part sizes");
      std::vector<std::size_t> parts;
      for (std::size_t i = 0; i < spec.params.size(); ++i) parts.push_back(at_least(spec, i, 1, "part size"));
      return complete_multipartite_graph(parts);
    }
    case Family::star:
      expect_count(spec, 1, 1);
      return star_graph(at_least(spec, 0, 1, "leaf count"));
    case Family::wheel:
      expect_count(spec, 1, 1);
      return wheel_graph(at_least(spec, 0, 4, "n"));
    case Family::petersen:
      expect_count(spec, 0, 0);
      return petersen_graph();
    case Family::hypercube:
      expect_count(spec, 1, 1);
      return hypercube_graph(at_least(spec, 0, 0, "dimension"));
    case Family::house:
      expect_count(spec, 0, 0);
      return house_graph();
    case Family::fig5_example:
      expect_count(spec, 0, 0);
      return fig5_example_graph();
    case Family::gq_full:
      expect_count(spec, 1, 1);
      return gq_full_graph(at_least(spec, 0, 1, "q"));
    case Family::gq_core:
      expect_count(spec, 1, 1);
      return gq_core_graph(at_least(spec, 0, 1, "q"));
    case Family::random_tree: {
      expect_count(spec, 2, 2);
      SeededRng rng(static_cast<std::uint64_t>(at_least(spec, 1, 0, "seed")));
      return random_tree(at_least(spec, 0, 1, "n"), rng);
    }
    case Family::random_connected: {
      expect_count(spec, 2, 3);
      SeededRng rng(static_cast<std::uint64_t>(at_least(spec, 1, 0, "seed")));
      const std::size_t percent = spec.params.size() == 3 ? at_least(spec, 2, 1, "percent") : 50;
      if (percent > 100) bad_params("random_connected: percent must be at most 100");
      return random_connected_graph(at_least(spec, 0, 1, "n"), static_cast<unsigned>(percent), rng);
    }
  }
  bad_params("unknown family");
}

std::vector<NamedGraph> named_corpus() {
  std::vector<std::string> specs;
  for (int n = 2; n <= 8; ++n) specs.push_back("path:" + std::to_string(n));
  for (int n = 3; n <= 10; ++n) specs.push_back("cycle:" + std::to_string(n));
  for (int n = 2; n <= 7; ++n) specs.push_back("complete:" + std::to_string(n));
  for (int k = 2; k <= 6; ++k) specs.push_back("star:" + std::to_string(k));
  for (int n = 4; n <= 9; ++n) specs.push_back("wheel:" + std::to_string(n));
  for (int d = 1; d <= 3; ++d) specs.push_back("hypercube:" + std::to_string(d));
  for (const char* parts : {"1,2", "2,2", "1,1,2", "2,3", "1,2,3", "2,2,2", "3,3", "1,1,1,3"}) {
    specs.push_back(std::string("complete_multipartite:") + parts);
  }
  specs.insert(specs.end(), {"petersen", "house", "fig5_example", "gq_full:1", "gq_full:2", "gq_core:1",
                             "gq_core:2", "gq_core:3"});
  std::vector<NamedGraph> out;
  for (const auto& text : specs) {
    const FamilySpec spec = FamilySpec::parse(text);
    out.push_back({spec.to_string(), generate(spec)});
  }
  return out;
}

std::vector<NamedGraph> corpus(std::uint64_t seed, std::size_t count, std::size_t max_n) {
  if (max_n < 2 && count > 0) bad_params("corpus needs max_n >= 2");
  std::vector<NamedGraph> out = named_corpus();
  SeededRng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = rng.between(2, max_n);
    out.push_back({"random_connected#" + std::to_string(i) + "(n=" + std::to_string(n) + ")",
                   random_connected_graph(n, 50, rng)});
  }
  return out;
}

}  // namespace sdim
