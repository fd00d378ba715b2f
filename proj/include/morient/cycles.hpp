#pragma once

#include <map>
#include <span>

#include "morient/graph.hpp"

namespace morient {

// Traversal sense of an edge instance: forward follows the stored (a,b)
// order, backward runs b->a and is only valid for undirected instances.
enum class Sense { forward, backward };

// Length of the shortest cycle through instance `edge_id` traversed in
// the given sense, i.e. 1 + shortest path from the head back to the tail
// with the instance itself removed. Shortest paths are vertex-simple, so
// this is exactly the shortest closed path through the edge. Parallel
// partners of the instance stay available.
Reach shortest_cycle_through(const MixedGraph& g, int edge_id, Sense sense);

// Shortest cycle containing any edge instance between u and v, over all
// instances and (for undirected ones) both senses.
Reach l_value(const MixedGraph& g, Vertex u, Vertex v);

// l-values for every vertex of `xs`; each must be joined to u by an edge.
std::map<Vertex, Reach> l_values(const MixedGraph& g, Vertex u, std::span<const Vertex> xs);

// Sum of l_value(g, u, v) over xs; unreachable absorbs.
Reach s_value(const MixedGraph& g, Vertex u, std::span<const Vertex> xs);

// Smallest bound such that every edge instance lies on a cycle of at
// most that length; unreachable iff some edge lies on no cycle.
Reach eta(const MixedGraph& g);

}  // namespace morient
