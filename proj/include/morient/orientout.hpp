#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "morient/cycles.hpp"
#include "morient/graph.hpp"

namespace morient {

// Raised when a stage postcondition or the output contract fails. The
// dump carries a self-contained reproduction (graph, root, r, stage
// summary) so a failure is one file away from a bug report.
class ContractViolation : public std::runtime_error {
 public:
  ContractViolation(const std::string& what, std::string dump)
      : std::runtime_error(what), dump_(std::move(dump)) {}
  const std::string& dump() const { return dump_; }

 private:
  std::string dump_;
};

// Working set of the staged orientation: the root u, the eccentricity
// bound r, the neighbor set X with its partition, the per-neighbor
// shortest-cycle lengths l, their sum s, the current working graph and
// the directions committed so far.
struct StageState {
  MixedGraph graph;
  Vertex root = 0;
  int r = 0;
  std::vector<Vertex> x;       // all neighbors of root, ascending
  std::vector<Vertex> x_in;    // has an arc toward root
  std::vector<Vertex> x_out;   // no arc in, has an arc from root
  std::vector<Vertex> x_un;    // joined only by one undirected edge
  std::vector<Vertex> x_conf;  // left undirected by stage 1
  std::map<Vertex, Reach> l;
  Reach s = Reach::finite(0);
  OrientationPlan plan;
};

// Minimal BFS shortest-path tree: only vertices and edges lying on some
// stored terminal path are kept. For an out-tree, paths run root..t and
// parents point toward the root; an in-tree stores t..root and `parent`
// maps each vertex to its next hop toward the root.
struct TreeSkeleton {
  Vertex root = 0;
  bool toward_root = false;
  std::map<Vertex, std::pair<Vertex, int>> parent;  // v -> (next toward root, edge id)
  std::vector<Vertex> terminals;
  std::map<Vertex, std::vector<Vertex>> paths;
  std::set<Vertex> vertices;
  std::set<int> edge_ids;
};

TreeSkeleton build_bfs_tree(const MixedGraph& g, Vertex root, std::span<const Vertex> terminals,
                            bool toward_root);

// The cycle C_j = arc root->v_j followed by the in-path P_j, with its
// splice points: x_j is the first and y_j the last vertex of P_j inside
// the out-tree (the terminal root hit does not count for y_j; both fall
// back to the root when no such vertex exists).
struct SplicedCycle {
  Vertex terminal;             // v_j in X_out
  std::vector<Vertex> cycle;   // root, v_j, ..., root
  Vertex x;
  Vertex y;
};

struct Stage2Result {
  TreeSkeleton t_out;
  TreeSkeleton t_in;
  MixedGraph g2;
  std::vector<SplicedCycle> cycles;
  MixedGraph g3;
  OrientationPlan plan;  // cumulative through stage 2
};

struct OrientResult {
  MixedGraph h;                  // oriented subgraph, original vertex indexing
  std::vector<Vertex> vertices;  // V(H), ascending
  OrientationPlan plan;          // all directions committed by the run
  Vertex root = 0;
  int r = 0;
};

// Stage 0: pair up parallel edges at the root into directed 2-cycles
// where possible, collapse same-direction parallel arcs everywhere, and
// set up X, its partition, l and s. The returned state holds G_0.
StageState stage0_normalize(const MixedGraph& g, Vertex root,
                            std::optional<int> r = std::nullopt, bool validate = true);

// Stage 1: process X_un in ascending order; commit an orientation of the
// unique undirected root edge whenever it keeps s unchanged (toward the
// root first), otherwise mark the vertex conflicted.
StageState stage1_orient(StageState st);

// Per conflicted vertex: does some w in X_in certify the vertex in the
// original sense (every shortest root->w path starts with the undirected
// edge)? Operationally d(G1 - uv, u, w) > d(G1, u, w).
std::map<Vertex, bool> check_original_observation(const StageState& st);

// Corrected version: the X_in certificate above, or some z in X_out with
// every shortest z->root path ending with the undirected edge.
std::map<Vertex, bool> check_corrected_observation(const StageState& st);

Stage2Result stage2_build(const StageState& st);

OrientResult stage3_extract(const StageState& st, const Stage2Result& s2);

struct OrientTrace {
  StageState state0;
  StageState state1;
  std::map<Vertex, bool> original_obs;
  std::map<Vertex, bool> corrected_obs;
  Stage2Result stage2;
  OrientResult result;
};

// Full pipeline. r defaults to the eccentricity of the root; supplying a
// smaller r is rejected. The output contract is verified before
// returning: every v in V(H) has d_H(root,v) <= 2r and d_H(v,root) <=
// 4r-1, N[root] is contained in V(H), and H never flips a pre-existing
// arc of g.
OrientResult orientout(const MixedGraph& g, Vertex root, std::optional<int> r = std::nullopt);
OrientTrace orientout_traced(const MixedGraph& g, Vertex root,
                             std::optional<int> r = std::nullopt);

}  // namespace morient
