#include "morient/cycles.hpp"

#include <algorithm>

#include "morient/metrics.hpp"

namespace morient {

Reach shortest_cycle_through(const MixedGraph& g, int edge_id, Sense sense) {
  const Edge& e = g.edge(edge_id);
  if (e.kind == EdgeKind::arc && sense == Sense::backward) {
    throw std::invalid_argument("backward sense is invalid for arc " + std::to_string(edge_id));
  }
  Vertex tail = sense == Sense::forward ? e.a : e.b;
  Vertex head = sense == Sense::forward ? e.b : e.a;
  Reach back = distance(g, head, tail, edge_id);
  return back.is_finite() ? Reach::finite(back.value() + 1) : Reach::unreachable();
}

Reach l_value(const MixedGraph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  Reach best = Reach::unreachable();
  bool found = false;
  for (int id : g.incident(u)) {
    const Edge& e = g.edge(id);
    if (!e.touches(v)) continue;
    found = true;
    best = std::min(best, shortest_cycle_through(g, id, Sense::forward));
    if (e.kind == EdgeKind::undirected) {
      best = std::min(best, shortest_cycle_through(g, id, Sense::backward));
    }
  }
  if (!found) {
    throw std::invalid_argument("no edge between " + std::to_string(u) + " and " +
                                std::to_string(v));
  }
  return best;
}

std::map<Vertex, Reach> l_values(const MixedGraph& g, Vertex u, std::span<const Vertex> xs) {
  std::map<Vertex, Reach> out;
  for (Vertex v : xs) out[v] = l_value(g, u, v);
  return out;
}

Reach s_value(const MixedGraph& g, Vertex u, std::span<const Vertex> xs) {
  Reach sum = Reach::finite(0);
  for (Vertex v : xs) sum = sum + l_value(g, u, v);
  return sum;
}

Reach eta(const MixedGraph& g) {
  Reach worst = Reach::finite(0);
  for (const Edge& e : g.edges()) {
    Reach best = shortest_cycle_through(g, e.id, Sense::forward);
    if (e.kind == EdgeKind::undirected) {
      best = std::min(best, shortest_cycle_through(g, e.id, Sense::backward));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace morient
