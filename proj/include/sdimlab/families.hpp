#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sdimlab/graph.hpp"

namespace sdim {

enum class Family {
  path,
  cycle,
  complete,
  complete_multipartite,
  star,
  wheel,
  petersen,
  hypercube,
  house,
  fig5_example,
  gq_full,
  gq_core,
  random_tree,
  random_connected,
};

std::string_view to_string(Family family);

/// A family name plus its integer parameters:
///   path n | cycle n | complete n | complete_multipartite a1,...,ak |
///   star k (K_{1,k}) | wheel n (n vertices in total) | petersen | hypercube d |
///   house | fig5_example | gq_full q | gq_core q |
///   random_tree n,seed | random_connected n,seed[,percent]
struct FamilySpec {
  Family name = Family::path;
  std::vector<long> params;

  /// Parses the inline form "name" or "name:p1,p2,...". Also accepts the
  /// short aliases "gq" (gq_full), "multipartite", "tree" and "random".
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
};

/// Throws INVALID_PARAMS for a bad parameter list.
Graph generate(const FamilySpec& spec);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph complete_multipartite_graph(std::vector<std::size_t> parts);
Graph star_graph(std::size_t leaves);
/// W_n with n total vertices: hub 0 joined to the cycle 1..n-1.
Graph wheel_graph(std::size_t n);
Graph petersen_graph();
Graph hypercube_graph(std::size_t dimension);
/// 5-cycle u1u2u3u4u5 plus the chord u2u5.
Graph house_graph();
/// Six vertices u1..u6: u1,u3 true twins, u2,u4 false twins.
Graph fig5_example_graph();
/// The gadget G_q on 5q+6 vertices a_i, b_i, c_i, y_i, z_i (0 <= i <= q), x.
Graph gq_full_graph(std::size_t q);
/// G_q without the pendant vertices y_i, z_i (3q+4 vertices).
Graph gq_core_graph(std::size_t q);

/// Seeded generator: std::mt19937_64 with project-defined reductions, so
/// outputs are identical on every standard library (version 1 of the
/// stream layout).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound), bound > 0, by rejection sampling.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  /// True with probability percent/100.
  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

/// Uniform labelled tree via a random Prüfer sequence.
Graph random_tree(std::size_t n, SeededRng& rng);
/// G(n, p) with p = percent/100; may be disconnected.
Graph random_graph(std::size_t n, unsigned percent, SeededRng& rng);
/// G(n, p) resampled until connected.
Graph random_connected_graph(std::size_t n, unsigned percent, SeededRng& rng);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Named families at small parameters, then `count` random connected graphs
/// with 2..max_n vertices (p = 1/2), all determined by `seed`.
std::vector<NamedGraph> corpus(std::uint64_t seed, std::size_t count, std::size_t max_n);

/// Only the named part of corpus().
std::vector<NamedGraph> named_corpus();

}  // namespace sdim
