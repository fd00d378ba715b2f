#pragma once

#include <utility>
#include <vector>

#include "morient/graph.hpp"

namespace morient {

// BFS over the mixed adjacency: arcs are traversable tail->head only,
// undirected edges both ways. All edges have length 1. `skip_edge`
// removes one instance from consideration (parallel partners remain).
// Returned vector holds -1 for unreachable vertices.
std::vector<int> bfs_distances(const MixedGraph& g, Vertex src, bool backward = false,
                               int skip_edge = -1);

Reach distance(const MixedGraph& g, Vertex from, Vertex to, int skip_edge = -1);

// (e_out, e_in): max distance from v / to v over all vertices.
std::pair<Reach, Reach> eccentricities(const MixedGraph& g, Vertex v);

Reach eccentricity(const MixedGraph& g, Vertex v);

struct RadiusCenter {
  Reach radius;
  std::vector<Vertex> centers;  // ascending
};

RadiusCenter radius_center(const MixedGraph& g);

bool strongly_connected(const MixedGraph& g);

// Bridges of the underlying undirected multigraph (arcs count as
// undirected here), filtered to undirected edge instances. Parallel
// instances are never bridges. Requires a connected underlying graph.
std::vector<int> undirected_bridges(const MixedGraph& g);

bool underlying_connected(const MixedGraph& g);

// Strongly connected as a mixed graph and free of undirected bridges:
// the precondition of the orientation algorithms.
bool is_valid_input(const MixedGraph& g);

}  // namespace morient
