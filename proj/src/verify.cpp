#include "sdimlab/verify.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <sstream>

#include "sdimlab/distance.hpp"
#include "sdimlab/error.hpp"
#include "sdimlab/families.hpp"
#include "sdimlab/hamiltonian.hpp"
#include "sdimlab/invariants.hpp"
#include "sdimlab/io.hpp"
#include "sdimlab/isomorphism.hpp"
#include "sdimlab/products.hpp"
#include "sdimlab/resolving.hpp"

namespace sdim {

namespace {

std::string str(const Rational& r) { return r.to_string(); }
std::string str(std::size_t v) { return std::to_string(v); }
Rational q(std::size_t v) { return Rational(static_cast<long>(v)); }
Rational half(std::size_t v) { return Rational(static_cast<long>(v), 2); }

std::string pad2(int criterion) {
  std::string s = std::to_string(criterion);
  return s.size() < 2 ? "0" + s : s;
}

// Partitions of n into at least two parts, each listed in non-decreasing
// order so the last entry is the largest part.
std::vector<std::vector<std::size_t>> partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t min_part) {
    if (remaining == 0) {
      if (current.size() >= 2) out.push_back(current);
      return;
    }
    for (std::size_t p = min_part; p <= remaining; ++p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, 1);
  return out;
}

std::string parts_name(const std::vector<std::size_t>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s;
}

bool has_true_twins(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (true_twins(g, u, v)) return true;
    }
  }
  return false;
}

class Battery {
 public:
  explicit Battery(const VerifyOptions& options) : options_(options) {}

  bool wanted(int criterion) const {
    return options_.only.empty() ||
           std::find(options_.only.begin(), options_.only.end(), criterion) != options_.only.end();
  }

  void run(int criterion, const std::string& title, const std::function<void()>& body) {
    if (!wanted(criterion)) return;
    criterion_ = criterion;
    const std::size_t first = report_.checks.size();
    const auto start = std::chrono::steady_clock::now();
    try {
      body();
    } catch (const std::exception& e) {
      record("aborted", "completes", e.what(), "criterion body raised", false, nullptr);
    }
    CriterionSummary summary;
    summary.criterion = criterion;
    summary.title = title;
    summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    summary.checks = report_.checks.size() - first;
    summary.failures = static_cast<std::size_t>(std::count_if(
        report_.checks.begin() + static_cast<std::ptrdiff_t>(first), report_.checks.end(),
        [](const CheckResult& c) { return !c.passed; }));
    report_.criteria.push_back(summary);
    if (options_.on_criterion) options_.on_criterion(summary);
  }

  void eq(const std::string& id, const Rational& expected, const Rational& computed, const std::string& citation,
          const Graph& g) {
    record(id, str(expected), str(computed), citation, expected == computed, &g);
  }

  void eq(const std::string& id, std::size_t expected, std::size_t computed, const std::string& citation,
          const Graph& g) {
    record(id, str(expected), str(computed), citation, expected == computed, &g);
  }

  void holds(const std::string& id, bool ok, const std::string& expected, const std::string& computed,
             const std::string& citation, const Graph& g) {
    record(id, expected, computed, citation, ok, &g);
  }

  // lo <= value <= hi
  void between(const std::string& id, const Rational& lo, const Rational& value, const Rational& hi,
               const std::string& citation, const Graph& g) {
    record(id, "[" + str(lo) + ", " + str(hi) + "]", str(value), citation, lo <= value && value <= hi, &g);
  }

  // Runs body; an exception becomes a failed check instead of aborting the criterion.
  void guarded(const std::string& id, const Graph& g, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      record(id + ".error", "no error", e.what(), "computation must succeed", false, &g);
    }
  }

  VerifyReport finish() {
    std::stable_sort(report_.checks.begin(), report_.checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return std::move(report_);
  }

 private:
  void record(const std::string& id, std::string expected, std::string computed, const std::string& citation,
              bool passed, const Graph* g) {
    CheckResult c;
    c.id = pad2(criterion_) + "." + id;
    c.criterion = criterion_;
    c.expected = std::move(expected);
    c.computed = std::move(computed);
    c.citation = citation;
    c.passed = passed;
    if (!passed && g != nullptr) archive(c.id, *g);
    report_.checks.push_back(std::move(c));
  }

  void archive(const std::string& id, const Graph& g) {
    if (options_.archive_dir.empty()) return;
    std::string file = id;
    for (char& ch : file) {
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '.' && ch != '_' && ch != '-') ch = '_';
    }
    try {
      std::filesystem::create_directories(options_.archive_dir);
      const std::string base = options_.archive_dir + "/" + file + ".el";
      write_file(base, "# failing check " + id + "\n" + render_edge_list(g));
      if (g.has_labels()) write_file(base + ".labels.json", render_label_json(g));
    } catch (const std::exception&) {
      // Archiving is best effort; the failure itself is already recorded.
    }
  }

  const VerifyOptions& options_;
  VerifyReport report_;
  int criterion_ = 0;
};

// Cached per-graph data for the property suite.
struct Profile {
  StrongResolution full;
  StrongResolvingGraph sr;
  std::size_t sdim = 0;
  std::size_t nu = 0;
};

Profile profile(const Graph& g) {
  Profile p;
  p.full = sdim_f(g);
  p.sr = strong_resolving_graph(g);
  p.sdim = vertex_cover_number(p.sr.graph);
  p.nu = max_matching(p.sr.graph);
  return p;
}

void property_suite(Battery& b, const VerifyOptions& options) {
  const std::vector<NamedGraph> graphs = corpus(20240601, options.property_corpus_size, 12);
  SeededRng rng(19);

  const std::vector<NamedGraph> right_pool{
      {"path:2", path_graph(2)}, {"path:3", path_graph(3)},   {"cycle:3", cycle_graph(3)},
      {"cycle:4", cycle_graph(4)}, {"star:3", star_graph(3)}, {"house", house_graph()},
      {"path:4", path_graph(4)}, {"cycle:5", cycle_graph(5)},
  };

  for (std::size_t index = 0; index < graphs.size(); ++index) {
    const auto& [name, g] = graphs[index];
    const std::size_t n = g.order();
    if (n < 2) continue;

    b.guarded(name, g, [&] {
      const Profile p = profile(g);
      const Rational& z = p.full.value;
      const std::size_t boundary = p.sr.boundary.size();

      // Sandwich bounds.
      b.holds(name + ".lower", z >= q(p.nu) && z >= half(p.sdim) && z >= Rational(1),
              ">= max(" + str(p.nu) + ", " + str(half(p.sdim)) + ", 1)", str(z),
              "sdim_f(G) >= max{nu(G_SR), sdim(G)/2, 1}", g);
      b.holds(name + ".upper", z <= half(boundary) && z <= q(p.sdim),
              "<= min(" + str(half(boundary)) + ", " + str(p.sdim) + ")", str(z),
              "sdim_f(G) <= min{|M(G)|/2, sdim(G)}", g);
      b.holds(name + ".order_bound", z <= half(n), "<= " + str(half(n)), str(z), "sdim_f(G) <= n/2", g);

      // Full pair LP against the G_SR edge LP.
      b.eq(name + ".reduced_lp", z, sdim_f_reduced(g).value,
           "full-pair LP optimum equals the fractional vertex cover of G_SR", g);

      // Witness validity over every pair's S-set.
      {
        const DistanceMatrix d = all_pairs_distances(g);
        bool ok = p.full.witness.total() == z;
        for (Vertex x = 0; x < n && ok; ++x) {
          for (Vertex y = x + 1; y < n && ok; ++y) {
            ok = p.full.witness.sum_over(s_set(g, d, x, y).support) >= Rational(1);
          }
        }
        for (const auto& w : p.full.witness.values()) ok = ok && w.sign() >= 0 && w <= Rational(1);
        b.holds(name + ".witness", ok, "valid", ok ? "valid" : "invalid",
                "the returned function strongly resolves G and has the optimal weight", g);
      }

      if (n == 2 || (g.size() == n - 1 && g.max_degree() <= 2)) {
        b.eq(name + ".path", Rational(1), z, "sdim_f(P_n) = 1", g);
      } else {
        b.holds(name + ".not_path", z > Rational(1), "> 1", str(z), "sdim_f(G) = 1 only for paths", g);
      }

      if (is_bipartite(p.sr.graph)) {
        b.eq(name + ".bipartite_sr", q(p.sdim), z, "G_SR bipartite implies sdim_f(G) = sdim(G)", g);
      }
      const auto components = component_profile(p.sr.graph);
      if (std::all_of(components.begin(), components.end(), [](const auto& c) { return c.is_regular; })) {
        b.eq(name + ".regular_sr", half(boundary), z, "regular components of G_SR imply sdim_f(G) = |M(G)|/2", g);
      }
      if (2 * p.nu == boundary) {
        b.eq(name + ".perfect_matching_sr", half(boundary), z,
             "a spanning regular subgraph of G_SR implies sdim_f(G) = |M(G)|/2", g);
      }
      if (boundary >= 3 && is_connected(p.sr.graph) && hamiltonian_cycle(p.sr.graph)) {
        b.eq(name + ".hamiltonian_sr", half(boundary), z,
             "a Hamiltonian G_SR implies sdim_f(G) = |M(G)|/2", g);
      }
      if (name.rfind("cycle:", 0) == 0 || name.rfind("complete:", 0) == 0 || name == "petersen" ||
          name.rfind("hypercube:", 0) == 0) {
        b.eq(name + ".vertex_transitive", half(n), z, "vertex-transitive G has sdim_f(G) = n/2", g);
      }

      // Optimal face at cut vertices.
      for (Vertex v : cut_vertices(g)) {
        b.eq(name + ".cut_vertex." + std::to_string(v), Rational(0), max_weight_on_optimal_face(g, v),
             "a cut vertex gets weight 0 in every minimum strong resolving function", g);
      }

      // K_1 ⊙ G with G connected, and the explicit embedding G_SR -> (K_1 ⊙ G)_SR.
      {
        const Product k1g = corona(complete_graph(1), g);
        const Rational value = sdim_f(k1g.graph).value;
        b.between(name + ".k1_corona", z, value, Rational(static_cast<long>(n + 1), 2),
                  "sdim_f(H) <= sdim_f(K_1 . H) <= (1 + |V(H)|)/2 for connected H", k1g.graph);
        const StrongResolvingGraph outer = strong_resolving_graph(k1g.graph);
        const auto outer_edges = outer.base_edges();
        bool embedded = true;
        for (const auto& [u, v] : p.sr.base_edges()) {
          const Edge image{k1g.map.copy_id(0, u), k1g.map.copy_id(0, v)};
          embedded = embedded && std::binary_search(outer_edges.begin(), outer_edges.end(), image);
        }
        b.holds(name + ".k1_corona.embedding", embedded, "G_SR maps into (K_1 . G)_SR",
                embedded ? "embedded" : "not embedded", "MMD pairs of H stay MMD in K_1 . H", k1g.graph);
        if (embedded) {
          b.holds(name + ".k1_corona.monotone", z <= value, "<= " + str(value), str(z),
                  "H_SR subgraph of G_SR implies sdim_f(H) <= sdim_f(G)", k1g.graph);
        }
      }

      // K_1 ⊙ H with H = G ∪ P_k disconnected.
      if (n <= 10) {
        const std::size_t k = 1 + index % 3;
        const Graph h = disjoint_union(g, path_graph(k));
        const std::size_t m = h.order();
        const std::size_t largest = std::max(n, k);
        const Product k1h = corona(complete_graph(1), h);
        b.between(name + ".k1_corona_disconnected", q(std::min(m - largest, m / 2)), sdim_f(k1h.graph).value,
                  half(m), "min{m - a_k, floor(m/2)} <= sdim_f(K_1 . H) <= m/2 for disconnected H", k1h.graph);
      }

      // Corona with a small right factor.
      if (n <= 7) {
        const std::size_t m = 1 + rng.below(std::min<std::size_t>(4, 30 / n - 1));
        const Graph h = random_graph(m, 50, rng);
        const Product gh = corona(g, h);
        b.eq(name + ".corona.m" + std::to_string(m), Rational(static_cast<long>(n * m), 2),
             sdim_f(gh.graph).value, "sdim_f(G . H) = nm/2", gh.graph);
      }

      // Direct product matching bounds.
      {
        const auto& [pool_name, h] = right_pool[index % right_pool.size()];
        const std::size_t nu_g = max_matching(g);
        b.holds(name + ".direct_matching." + pool_name,
                max_matching(direct(g, h).graph) >= 2 * nu_g * max_matching(h),
                ">= " + str(2 * nu_g * max_matching(h)), str(max_matching(direct(g, h).graph)),
                "nu(G x H) >= 2 nu(G) nu(H)", g);
        const std::size_t kn = 2 + index % 3;
        const std::size_t nu_gk = max_matching(direct(g, complete_graph(kn)).graph);
        b.holds(name + ".direct_matching.K" + std::to_string(kn), nu_gk >= kn * nu_g, ">= " + str(kn * nu_g),
                str(nu_gk), "nu(G x K_n) >= n nu(G)", g);
      }

      // Cartesian bounds.
      if (index % 2 == 0 && n <= 9) {
        const auto& [pool_name, h] = right_pool[(index / 2) % right_pool.size()];
        if (n * h.order() <= 36) {
          const Profile ph = profile(h);
          const Product gh = cartesian(g, h);
          const Rational value = sdim_f(gh.graph).value;
          const std::size_t mg = boundary;
          const std::size_t mh = ph.sr.boundary.size();
          const std::string id = name + ".cartesian." + pool_name;
          b.between(id, std::max(2 * z, 2 * ph.full.value), value,
                    std::min(q(mg) * ph.full.value, q(mh) * z),
                    "max{2 sdim_f(G), 2 sdim_f(H)} <= sdim_f(G [] H) <= min{|M(G)| sdim_f(H), |M(H)| sdim_f(G)}",
                    gh.graph);
          b.holds(id + ".matching", value >= q(2 * p.nu * ph.nu), ">= " + str(2 * p.nu * ph.nu), str(value),
                  "sdim_f(G [] H) >= 2 nu(G_SR) nu(H_SR)", gh.graph);
          if (mg >= 3 && mh >= 3 && is_connected(p.sr.graph) && is_connected(ph.sr.graph) &&
              hamiltonian_cycle(p.sr.graph) && hamiltonian_cycle(ph.sr.graph)) {
            b.eq(id + ".hamiltonian", Rational(static_cast<long>(mg * mh), 2), value,
                 "Hamiltonian G_SR and H_SR imply sdim_f(G [] H) = |M(G)||M(H)|/2", gh.graph);
          }
        }
        const std::size_t kn = 2 + (index / 2) % 2;
        if (n * kn <= 27) {
          const Rational value = sdim_f(cartesian(g, complete_graph(kn)).graph).value;
          b.between(name + ".cartesian_K" + std::to_string(kn), q(kn * p.nu), value,
                    Rational(static_cast<long>(kn * boundary), 2), "n nu(G_SR) <= sdim_f(G [] K_n) <= n |M(G)|/2",
                    g);
        }
      }

      // Lexicographic bounds.
      if (index % 2 == 1 && n <= 7) {
        const auto& [pool_name, h] = right_pool[(index / 2) % right_pool.size()];
        const std::size_t m = h.order();
        if (n * m <= 36) {
          const Product gh = lexicographic(g, h);
          const Rational value = sdim_f(gh.graph).value;
          const std::string id = name + ".lexicographic." + pool_name;
          const Rational zh = sdim_f(h).value;
          const std::size_t diam_h = all_pairs_distances(h).diameter();

          const TwinPartition tp = twin_partition(g);
          const Rational twin_bound = q(tp.m1) * sl_f(h) +
                                      half(tp.m2) * sdim_f(lexicographic(complete_graph(2), h).graph).value +
                                      half(tp.m3) * q(m);
          b.holds(id + ".twin_classes", value >= twin_bound, ">= " + str(twin_bound), str(value),
                  "sdim_f(G[H]) >= m1 sl_f(H) + m2/2 sdim_f(K_2[H]) + m3/2 |V(H)|", gh.graph);

          if (!has_true_twins(g)) {
            const std::size_t n1 = boundary;
            const bool small_diam = diam_h <= 2;
            const Graph k1h = corona(complete_graph(1), h).graph;
            const Rational zh_used = small_diam ? zh : sdim_f(k1h).value;
            const std::size_t m1 = small_diam ? strong_resolving_graph(h).boundary.size()
                                              : strong_resolving_graph(k1h).boundary.size();
            const Rational lower = std::max(q(n) * zh_used + (q(m) - q(m1)) * z, (q(n) - q(n1)) * zh_used + q(m) * z);
            const Rational upper = Rational(static_cast<long>(n * m1 + m * n1) - static_cast<long>(n1 * m1), 2);
            b.between(id + (small_diam ? ".diam_le_2" : ".diam_gt_2"), lower, value, upper,
                      small_diam ? "true-twin-free G, diam(H) <= 2: max{n sdim_f(H) + (m-m') sdim_f(G), "
                                   "(n-n') sdim_f(H) + m sdim_f(G)} <= sdim_f(G[H]) <= (nm' + mn' - n'm')/2"
                                 : "true-twin-free G, diam(H) > 2: the same bounds with K_1 . H in place of H",
                      gh.graph);

            if (small_diam && zh == half(m)) {
              b.eq(id + ".half_order", Rational(static_cast<long>(n * m), 2), value,
                   "diam(H) <= 2 and sdim_f(H) = |V(H)|/2 imply sdim_f(G[H]) = |V(G)||V(H)|/2", gh.graph);
            }

            // (G[H])_SR = G_SR[H*] ∪ (n - |M(G)|) (H*)_-.
            const Graph star = star_closure(h);
            Graph expected = lexicographic(p.sr.graph, star).graph;
            const Graph trimmed = drop_isolated(star);
            for (std::size_t i = 0; i + n1 < n; ++i) expected = disjoint_union(expected, trimmed);
            const Graph actual = strong_resolving_graph(gh.graph).graph;
            const bool iso = is_isomorphic(actual, expected);
            b.holds(id + ".structure", iso, "G_SR[H*] + (n-|M(G)|)(H*)_-", iso ? "isomorphic" : "not isomorphic",
                    "(G[H])_SR = G_SR[H*] union (n - |M(G)|) copies of (H*)_- for true-twin-free G", gh.graph);
          }
        }
      }
    });
  }
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verify_suite(const VerifyOptions& options) {
  Battery b(options);

  b.run(1, "paths have sdim_f = 1", [&] {
    for (std::size_t n = 2; n <= 8; ++n) {
      const Graph g = path_graph(n);
      b.eq("path" + std::to_string(n), Rational(1), sdim_f(g).value, "sdim_f(G) = 1 iff G is a path", g);
    }
  });

  b.run(2, "cycles have sdim_f = n/2", [&] {
    for (std::size_t n = 3; n <= 10; ++n) {
      const Graph g = cycle_graph(n);
      b.eq("cycle" + std::to_string(n), half(n), sdim_f(g).value, "sdim_f(C_n) = n/2", g);
    }
  });

  b.run(3, "Petersen graph has sdim_f = 5", [&] {
    const Graph g = petersen_graph();
    b.eq("petersen", Rational(5), sdim_f(g).value, "sdim_f(Petersen) = 5", g);
  });

  b.run(4, "wheels", [&] {
    const Graph w4 = wheel_graph(4);
    b.eq("wheel4", Rational(2), sdim_f(w4).value, "sdim_f(W_4) = 2", w4);
    for (std::size_t n = 5; n <= 9; ++n) {
      const Graph g = wheel_graph(n);
      b.eq("wheel" + std::to_string(n), half(n - 1), sdim_f(g).value, "sdim_f(W_n) = (n-1)/2 for n >= 5", g);
    }
  });

  b.run(5, "trees have sdim_f = leaves/2", [&] {
    SeededRng rng(5);
    for (int i = 0; i < 50; ++i) {
      const Graph t = random_tree(rng.between(2, 12), rng);
      b.eq("tree" + pad2(i) + ".n" + std::to_string(t.order()), half(t.leaf_count()), sdim_f(t).value,
           "sdim_f(T) = sigma(T)/2 for every tree T", t);
    }
  });

  b.run(6, "complete multipartite graphs", [&] {
    for (std::size_t n = 2; n <= 10; ++n) {
      for (const auto& parts : partitions(n)) {
        const Graph g = complete_multipartite_graph(parts);
        const auto ones = std::count(parts.begin(), parts.end(), std::size_t{1});
        const Rational expected = ones == 1 ? half(n - 1) : half(n);
        b.eq("K" + parts_name(parts), expected, sdim_f(g).value,
             "sdim_f(K_{a_1..a_k}) = (n-1)/2 if exactly one a_i = 1, else n/2", g);
      }
    }
  });

  b.run(7, "the G_q gadget", [&] {
    for (std::size_t k = 1; k <= 4; ++k) {
      const Graph g = gq_full_graph(k);
      const std::string id = "gq_full.q" + std::to_string(k);
      const StrongResolvingGraph sr = strong_resolving_graph(g);
      b.eq(id + ".boundary", 3 * k + 3, sr.boundary.size(), "|M(G_q)| = 3q+3", g);
      b.eq(id + ".sdim", 2 * k + 2, sdim(g), "sdim(G_q) = 2q+2", g);
      b.eq(id + ".sdim_f", q(k + 2), sdim_f(g).value, "sdim_f(G_q) = q+2", g);
      const bool iso = is_isomorphic(sr.graph, disjoint_union(complete_graph(2 * k + 2), star_graph(k)));
      b.holds(id + ".sr", iso, "K_{2q+2} + K_{1,q}", iso ? "isomorphic" : "not isomorphic",
              "(G_q)_SR = K_{2q+2} union K_{1,q}", g);
    }
  });

  b.run(8, "corona products", [&] {
    SeededRng rng(8);
    for (int i = 0; i < 30; ++i) {
      const std::size_t n = rng.between(2, 7);
      const std::size_t max_m = std::min<std::size_t>(30 / n - 1, 6);
      const std::size_t m = rng.between(1, max_m);
      const Graph g = random_connected_graph(n, 50, rng);
      const Graph h = random_graph(m, 50, rng);
      const Product p = corona(g, h);
      b.eq("pair" + pad2(i) + ".n" + std::to_string(n) + ".m" + std::to_string(m),
           Rational(static_cast<long>(n * m), 2), sdim_f(p.graph).value, "sdim_f(G . H) = nm/2", p.graph);
    }
  });

  b.run(9, "P_4[P_3]", [&] {
    const Product p = lexicographic(path_graph(4), path_graph(3));
    b.eq("sdim_f", Rational(5), sdim_f(p.graph).value, "sdim_f(P_4[P_3]) = 5", p.graph);
    Graph expected = lexicographic(complete_graph(2), disjoint_union(complete_graph(2), complete_graph(1))).graph;
    expected = disjoint_union(disjoint_union(expected, complete_graph(2)), complete_graph(2));
    const bool iso = is_isomorphic(strong_resolving_graph(p.graph).graph, expected);
    b.holds("sr", iso, "K_2[K_2 + K_1] + 2K_2", iso ? "isomorphic" : "not isomorphic",
            "(P_4[P_3])_SR = K_2[K_2 union K_1] union 2K_2", p.graph);
  });

  b.run(10, "C_5[P_3]", [&] {
    const Product p = lexicographic(cycle_graph(5), path_graph(3));
    b.eq("sdim_f", Rational(15, 2), sdim_f(p.graph).value, "sdim_f(C_5[P_3]) = 15/2", p.graph);
  });

  b.run(11, "lexicographic product with twin classes", [&] {
    const Graph g = fig5_example_graph();
    const Graph h = path_graph(3);
    const TwinPartition tp = twin_partition(g);
    b.eq("m1", std::size_t{2}, tp.m1, "m_1(G) = 2", g);
    b.eq("m2", std::size_t{2}, tp.m2, "m_2(G) = 2", g);
    b.eq("m3", std::size_t{2}, tp.m3, "m_3(G) = 2", g);
    const Rational slf = sl_f(h);
    const Rational k2h = sdim_f(lexicographic(complete_graph(2), h).graph).value;
    b.eq("sl_f_P3", Rational(1), slf, "sl_f(P_3) = sdim_f(P_3) = 1 since diam(P_3) = 2", h);
    b.eq("sdim_f_K2_P3", Rational(3), k2h, "K_2[P_3] has sdim_f 3", h);
    const Rational bound = q(tp.m1) * slf + half(tp.m2) * k2h + half(tp.m3) * q(h.order());
    b.eq("lower_bound", Rational(8), bound, "m1 sl_f(H) + m2/2 sdim_f(K_2[H]) + m3/2 |V(H)| = 2(1)+3+3 = 8", g);
    const Product p = lexicographic(g, h);
    const Rational value = sdim_f(p.graph).value;
    b.eq("sdim_f", Rational(17, 2), value, "sdim_f(G[H]) = 17/2", p.graph);
    b.holds("bound_holds", bound <= value, "8 <= 17/2", str(bound) + " <= " + str(value),
            "the twin-class lower bound holds", p.graph);
  });

  b.run(12, "lexicographic products with the house graph", [&] {
    const Graph house = house_graph();
    const Product hh = lexicographic(house, house);
    b.eq("house_house", Rational(25, 2), sdim_f(hh.graph).value, "sdim_f(house[house]) = 25/2", hh.graph);
    for (std::size_t n = 3; n <= 5; ++n) {
      const Product p = lexicographic(star_graph(n - 1), house);
      b.eq("star" + std::to_string(n) + "_house", half(5 * n - 1), sdim_f(p.graph).value,
           "sdim_f(K_{1,n-1}[house]) = (5n-1)/2", p.graph);
    }
  });

  b.run(13, "grids", [&] {
    for (std::size_t s = 2; s <= 5; ++s) {
      for (std::size_t t = 2; t <= 5; ++t) {
        const Product p = cartesian(path_graph(s), path_graph(t));
        b.eq("P" + std::to_string(s) + "xP" + std::to_string(t), Rational(2), sdim_f(p.graph).value,
             "sdim_f(P_s [] P_t) = 2", p.graph);
      }
    }
  });

  b.run(14, "vertex-transitive Cartesian products", [&] {
    for (const auto& [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 3}, {3, 4}, {4, 5}}) {
      const Product p = cartesian(cycle_graph(n), cycle_graph(m));
      b.eq("C" + std::to_string(n) + "xC" + std::to_string(m), half(n * m), sdim_f(p.graph).value,
           "sdim_f(C_n [] C_m) = nm/2", p.graph);
    }
    for (const auto& [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {4, 3}}) {
      const Product p = cartesian(cycle_graph(n), complete_graph(m));
      b.eq("C" + std::to_string(n) + "xK" + std::to_string(m), half(n * m), sdim_f(p.graph).value,
           "sdim_f(C_n [] K_m) = nm/2", p.graph);
    }
  });

  b.run(15, "strong resolving graph of a Cartesian product", [&] {
    SeededRng rng(15);
    for (int i = 0; i < 20; ++i) {
      const std::size_t n = rng.between(2, 6);
      const std::size_t m = rng.between(2, std::min<std::size_t>(6, 36 / n));
      const Graph g = random_connected_graph(n, 50, rng);
      const Graph h = random_connected_graph(m, 50, rng);
      const Product p = cartesian(g, h);
      const Graph expected = direct(strong_resolving_graph(g).graph, strong_resolving_graph(h).graph).graph;
      const bool iso = is_isomorphic(strong_resolving_graph(p.graph).graph, expected);
      b.holds("pair" + pad2(i) + ".n" + std::to_string(n) + ".m" + std::to_string(m), iso, "G_SR x H_SR",
              iso ? "isomorphic" : "not isomorphic", "(G [] H)_SR = G_SR x H_SR", p.graph);
    }
  });

  b.run(16, "G_q core times a path", [&] {
    for (std::size_t k = 2; k <= 3; ++k) {
      const Graph core = gq_core_graph(k);
      b.eq("gq_core.q" + std::to_string(k) + ".boundary", 3 * k + 1, strong_resolving_graph(core).boundary.size(),
           "|M(G_q)| = 3q+1 for the core gadget", core);
      for (std::size_t n = 2; n <= 3; ++n) {
        const Product p = cartesian(core, path_graph(n));
        b.eq("gq_core.q" + std::to_string(k) + ".P" + std::to_string(n), q(2 * k + 2), sdim_f(p.graph).value,
             "sdim_f(G_q [] P_n) = 2q+2", p.graph);
      }
    }
  });

  b.run(17, "trees times complete graphs", [&] {
    SeededRng rng(17);
    for (int i = 0; i < 10; ++i) {
      const Graph t = random_tree(rng.between(2, 8), rng);
      for (std::size_t n = 2; n <= 3; ++n) {
        const Product p = cartesian(t, complete_graph(n));
        b.eq("tree" + pad2(i) + ".n" + std::to_string(t.order()) + ".K" + std::to_string(n), half(n * t.leaf_count()),
             sdim_f(p.graph).value, "sdim_f(T [] K_n) = n sigma(T)/2", p.graph);
      }
    }
  });

  b.run(18, "matching number of complete multipartite graphs", [&] {
    for (std::size_t n = 2; n <= 10; ++n) {
      for (const auto& parts : partitions(n)) {
        const Graph g = complete_multipartite_graph(parts);
        b.eq("K" + parts_name(parts), std::min(n - parts.back(), n / 2), max_matching(g),
             "nu(K_{a_1..a_k}) = min{n - a_k, floor(n/2)}", g);
      }
    }
  });

  b.run(19, "property suite", [&] { property_suite(b, options); });

  b.run(20, "odd cycles times K_2", [&] {
    for (std::size_t k = 1; k <= 3; ++k) {
      const Graph c = cycle_graph(2 * k + 1);
      const Product p = cartesian(c, complete_graph(2));
      const std::size_t product_sdim = sdim(p.graph);
      const std::size_t cycle_sdim = sdim(c);
      const std::string id = "C" + std::to_string(2 * k + 1) + "xK2";
      b.eq(id + ".sdim", 2 * k + 1, product_sdim, "sdim(C_{2k+1} [] K_2) = 2k+1", p.graph);
      b.eq(id + ".cycle_sdim", k + 1, cycle_sdim, "sdim(C_{2k+1}) = k+1", c);
      b.holds(id + ".strict", product_sdim < 2 * cycle_sdim, "< " + str(2 * cycle_sdim), str(product_sdim),
              "sdim(C_{2k+1} [] K_2) < 2 sdim(C_{2k+1})", p.graph);
    }
  });

  return b.finish();
}

std::string render_verify_table(const VerifyReport& report) {
  std::size_t id_width = 2, exp_width = 8, comp_width = 8;
  for (const auto& c : report.checks) {
    id_width = std::max(id_width, c.id.size());
    exp_width = std::max(exp_width, c.expected.size());
    comp_width = std::max(comp_width, c.computed.size());
  }
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(id_width + 2)) << "id" << std::setw(static_cast<int>(exp_width + 2))
      << "expected" << std::setw(static_cast<int>(comp_width + 2)) << "computed" << "status  source\n";
  for (const auto& c : report.checks) {
    out << std::setw(static_cast<int>(id_width + 2)) << c.id << std::setw(static_cast<int>(exp_width + 2))
        << c.expected << std::setw(static_cast<int>(comp_width + 2)) << c.computed << (c.passed ? "PASS    " : "FAIL    ")
        << c.citation << '\n';
  }
  out << '\n';
  for (const auto& s : report.criteria) {
    out << "criterion " << std::setw(2) << std::right << s.criterion << std::left << "  "
        << (s.failures == 0 && s.checks > 0 ? "PASS" : "FAIL") << "  " << s.checks << " checks, " << s.failures
        << " failed, " << std::fixed << std::setprecision(2) << s.seconds << "s  " << s.title << '\n';
  }
  return out.str();
}

}  // namespace sdim
