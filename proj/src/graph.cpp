#include "morient/graph.hpp"

#include <algorithm>

namespace morient {

MixedGraph::MixedGraph(int n) : n_(n), out_(n), in_(n), inc_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
}

void MixedGraph::throw_bad_vertex(Vertex v) const {
  throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," +
                              std::to_string(n_) + ")");
}

void MixedGraph::throw_no_edge(int id) const {
  throw std::invalid_argument("no edge with id " + std::to_string(id));
}

int MixedGraph::add_undirected(Vertex a, Vertex b) {
  return add_edge_as(next_id_, a, b, EdgeKind::undirected);
}

int MixedGraph::add_arc(Vertex tail, Vertex head) {
  return add_edge_as(next_id_, tail, head, EdgeKind::arc);
}

int MixedGraph::add_edge_as(int id, Vertex a, Vertex b, EdgeKind kind) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw std::invalid_argument("self-loop " + std::to_string(a));
  if (id < 0) throw std::invalid_argument("negative edge id");
  if (has_edge(id)) throw std::invalid_argument("duplicate edge id " + std::to_string(id));
  if (id >= static_cast<int>(index_by_id_.size())) index_by_id_.resize(id + 1, -1);
  index_by_id_[id] = static_cast<int>(edges_.size());
  Edge e{id, a, b, kind};
  edges_.push_back(e);
  register_adjacency(e);
  next_id_ = std::max(next_id_, id + 1);
  if (kind == EdgeKind::undirected) ++und_count_;
  return id;
}

void MixedGraph::register_adjacency(const Edge& e) {
  if (e.kind == EdgeKind::arc) {
    out_[e.a].push_back({e.b, e.id});
    in_[e.b].push_back({e.a, e.id});
    inc_[e.a].push_back(e.id);
    inc_[e.b].push_back(e.id);
  } else {
    out_[e.a].push_back({e.b, e.id});
    out_[e.b].push_back({e.a, e.id});
    in_[e.a].push_back({e.b, e.id});
    in_[e.b].push_back({e.a, e.id});
    inc_[e.a].push_back(e.id);
    inc_[e.b].push_back(e.id);
  }
}

void MixedGraph::remove_last_edge() {
  if (edges_.empty()) throw std::logic_error("remove_last_edge on empty graph");
  Edge e = edges_.back();
  edges_.pop_back();
  index_by_id_[e.id] = -1;
  if (e.id == next_id_ - 1) --next_id_;
  if (e.kind == EdgeKind::undirected) --und_count_;
  if (e.kind == EdgeKind::arc) {
    out_[e.a].pop_back();
    in_[e.b].pop_back();
  } else {
    out_[e.a].pop_back();
    out_[e.b].pop_back();
    in_[e.a].pop_back();
    in_[e.b].pop_back();
  }
  inc_[e.a].pop_back();
  inc_[e.b].pop_back();
}

namespace {

void erase_adjacent(std::vector<Adjacent>& list, int edge_id, Vertex to) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].edge == edge_id && list[i].to == to) {
      list.erase(list.begin() + i);
      return;
    }
  }
  throw std::logic_error("adjacency entry missing for edge " + std::to_string(edge_id));
}

}  // namespace

void MixedGraph::orient_undirected(int id, Vertex tail, Vertex head) {
  Edge& e = edges_[index_by_id_[edge(id).id]];
  if (e.kind != EdgeKind::undirected) {
    throw std::invalid_argument("edge " + std::to_string(id) + " is not undirected");
  }
  if (!((tail == e.a && head == e.b) || (tail == e.b && head == e.a))) {
    throw std::invalid_argument("direction does not match the endpoints of edge " +
                                std::to_string(id));
  }
  erase_adjacent(out_[head], id, tail);
  erase_adjacent(in_[tail], id, head);
  e.a = tail;
  e.b = head;
  e.kind = EdgeKind::arc;
  --und_count_;
}

void MixedGraph::restore_undirected(int id, Vertex a, Vertex b) {
  Edge& e = edges_[index_by_id_[edge(id).id]];
  if (e.kind != EdgeKind::arc || !((a == e.a && b == e.b) || (a == e.b && b == e.a))) {
    throw std::invalid_argument("edge " + std::to_string(id) +
                                " is not an arc on those endpoints");
  }
  out_[e.b].push_back({e.a, id});
  in_[e.a].push_back({e.b, id});
  e.a = a;
  e.b = b;
  e.kind = EdgeKind::undirected;
  ++und_count_;
}

std::vector<Vertex> MixedGraph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (int id : inc_[v]) out.push_back(edge(id).other(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> MixedGraph::undirected_ids() const {
  std::vector<int> ids;
  for (const Edge& e : edges_) {
    if (e.kind == EdgeKind::undirected) ids.push_back(e.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

void OrientationPlan::assign(int edge_id, Vertex tail, Vertex head) {
  auto it = assignments.find(edge_id);
  if (it != assignments.end()) {
    if (it->second != std::make_pair(tail, head)) {
      throw std::logic_error("conflicting assignment for edge " + std::to_string(edge_id));
    }
    return;
  }
  assignments[edge_id] = {tail, head};
}

void OrientationPlan::merge(const OrientationPlan& other) {
  for (const auto& [id, dir] : other.assignments) assign(id, dir.first, dir.second);
}

MixedGraph apply_plan(const MixedGraph& g, const OrientationPlan& plan) {
  for (const auto& [id, dir] : plan.assignments) {
    if (!g.has_edge(id)) throw std::invalid_argument("plan refers to unknown edge " + std::to_string(id));
    const Edge& e = g.edge(id);
    if (e.kind != EdgeKind::undirected) {
      throw std::invalid_argument("plan refers to arc " + std::to_string(id));
    }
    auto [t, h] = dir;
    if (!((t == e.a && h == e.b) || (t == e.b && h == e.a))) {
      throw std::invalid_argument("plan direction for edge " + std::to_string(id) +
                                  " does not match its endpoints");
    }
  }
  MixedGraph out(g.vertex_count());
  for (const Edge& e : g.edges()) {
    auto it = plan.assignments.find(e.id);
    if (e.kind == EdgeKind::undirected && it != plan.assignments.end()) {
      out.add_edge_as(e.id, it->second.first, it->second.second, EdgeKind::arc);
    } else {
      out.add_edge_as(e.id, e.a, e.b, e.kind);
    }
  }
  return out;
}

MixedGraph reverse(const MixedGraph& g) {
  MixedGraph out(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (e.kind == EdgeKind::arc) {
      out.add_edge_as(e.id, e.b, e.a, EdgeKind::arc);
    } else {
      out.add_edge_as(e.id, e.a, e.b, e.kind);
    }
  }
  return out;
}

}  // namespace morient
