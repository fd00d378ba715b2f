#include "morient/metrics.hpp"

#include <algorithm>

namespace morient {

std::vector<int> bfs_distances(const MixedGraph& g, Vertex src, bool backward, int skip_edge) {
  g.check_vertex(src);
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[src] = 0;
  queue.push_back(src);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    auto step = backward ? g.in(v) : g.out(v);
    for (const Adjacent& adj : step) {
      if (adj.edge == skip_edge) continue;
      if (dist[adj.to] == -1) {
        dist[adj.to] = dist[v] + 1;
        queue.push_back(adj.to);
      }
    }
  }
  return dist;
}

Reach distance(const MixedGraph& g, Vertex from, Vertex to, int skip_edge) {
  g.check_vertex(to);
  std::vector<int> dist = bfs_distances(g, from, false, skip_edge);
  return dist[to] < 0 ? Reach::unreachable() : Reach::finite(dist[to]);
}

std::pair<Reach, Reach> eccentricities(const MixedGraph& g, Vertex v) {
  auto fold = [](const std::vector<int>& dist) {
    Reach worst = Reach::finite(0);
    for (int d : dist) worst = std::max(worst, d < 0 ? Reach::unreachable() : Reach::finite(d));
    return worst;
  };
  return {fold(bfs_distances(g, v, false)), fold(bfs_distances(g, v, true))};
}

Reach eccentricity(const MixedGraph& g, Vertex v) {
  auto [e_out, e_in] = eccentricities(g, v);
  return std::max(e_out, e_in);
}

RadiusCenter radius_center(const MixedGraph& g) {
  RadiusCenter rc{Reach::unreachable(), {}};
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Reach e = eccentricity(g, v);
    if (e < rc.radius) {
      rc.radius = e;
      rc.centers.clear();
    }
    if (e == rc.radius) rc.centers.push_back(v);
  }
  return rc;
}

bool strongly_connected(const MixedGraph& g) {
  if (g.vertex_count() == 0) return true;
  for (bool backward : {false, true}) {
    std::vector<int> dist = bfs_distances(g, 0, backward);
    if (std::count(dist.begin(), dist.end(), -1) > 0) return false;
  }
  return true;
}

bool underlying_connected(const MixedGraph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (int id : g.incident(v)) {
      Vertex w = g.edge(id).other(v);
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == g.vertex_count();
}

std::vector<int> undirected_bridges(const MixedGraph& g) {
  if (!underlying_connected(g)) {
    throw std::invalid_argument("undirected_bridges: underlying multigraph is disconnected");
  }
  int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> bridges;
  int timer = 0;

  // Iterative lowpoint DFS over the underlying multigraph. The entering
  // edge instance is skipped by id, so a parallel partner acts as a back
  // edge and parallel instances are never reported.
  struct Frame {
    Vertex v;
    int via_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (disc[start] != -1) continue;
    disc[start] = low[start] = timer++;
    stack.push_back({start, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        int id = inc[f.next++];
        if (id == f.via_edge) continue;
        Vertex w = g.edge(id).other(f.v);
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, id, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[parent.v] = std::min(low[parent.v], low[done.v]);
          if (low[done.v] > disc[parent.v]) bridges.push_back(done.via_edge);
        }
      }
    }
  }
  std::vector<int> out;
  for (int id : bridges) {
    if (g.edge(id).kind == EdgeKind::undirected) out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_valid_input(const MixedGraph& g) {
  if (!strongly_connected(g)) return false;
  return undirected_bridges(g).empty();
}

}  // namespace morient
