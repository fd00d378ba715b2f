#pragma once

#include <cstdint>
#include <vector>

#include "morient/graph.hpp"
#include "morient/orientout.hpp"

namespace morient {

struct BruteResult {
  Reach radius;          // minimum over all strongly connected orientations
  OrientationPlan plan;  // lexicographically first witness (counter order)
};

// Enumerates all 2^m total plans over the undirected edges as a binary
// counter (bit k belongs to the k-th undirected edge in id order; bit 0
// orients lower id endpoint -> higher). Errors above `cap` undirected
// edges and suggests raising it.
BruteResult brute_oriented_radius(const MixedGraph& g, int cap = 20);

// Deterministic valid-input generator: a random spanning cycle, then
// `extra_edges` random chords or parallel instances, then a pass that
// directs roughly `directed_fraction` of the edges, keeping an edge
// undirected whenever the drawn direction would break strong
// connectivity. The output always satisfies is_valid_input.
MixedGraph gen_valid(int n, int extra_edges, double directed_fraction, std::uint64_t seed);

struct HuntResult {
  MixedGraph graph;
  Vertex root;
  std::vector<Vertex> x_in, x_out, x_conf;
  bool original_obs_holds;
  bool corrected_obs_holds;
};

struct HuntOptions {
  int max_n = 7;
  int max_edges = 12;
  // Layers up to this many vertices are enumerated exhaustively over the
  // per-pair shapes {none, undirected, arc, reverse arc, 2-cycle}; the
  // shapes cover every stage-0 normal form of the root's multiedges.
  int exhaustive_max_n = 5;
  // Deterministic cap on inspected assignments per layer above the
  // exhaustive limit (the full space is astronomically large there).
  long long layer_budget = 250'000;
};

// Exhaustive small-graph search for conflicted stage-1 states where the
// original observation fails. The corrected observation is asserted on
// every conflicted state encountered. Results are deduplicated by sorted
// per-vertex degree triples and sorted by (n, edges, root).
std::vector<HuntResult> hunt_counterexample(const HuntOptions& opts);
std::vector<HuntResult> hunt_counterexample(int max_n, int max_edges);

}  // namespace morient
