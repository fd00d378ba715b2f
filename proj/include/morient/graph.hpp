#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace morient {

using Vertex = int;

// A distance-like quantity: a finite edge count or "unreachable".
// Unreachable compares greater than every finite value, so min/max and
// comparisons are total. Addition saturates at unreachable.
class Reach {
 public:
  constexpr Reach() : v_(kInf) {}

  static constexpr Reach finite(long long k) { return Reach(k); }
  static constexpr Reach unreachable() { return Reach(); }

  constexpr bool is_finite() const { return v_ != kInf; }

  long long value() const {
    if (!is_finite()) throw std::logic_error("Reach::value on unreachable");
    return v_;
  }

  friend constexpr bool operator==(Reach, Reach) = default;
  friend constexpr auto operator<=>(Reach, Reach) = default;

  friend Reach operator+(Reach a, Reach b) {
    if (!a.is_finite() || !b.is_finite()) return unreachable();
    return finite(a.v_ + b.v_);
  }

  std::string str() const { return is_finite() ? std::to_string(v_) : "inf"; }

 private:
  explicit constexpr Reach(long long v) : v_(v) {}
  static constexpr long long kInf = std::numeric_limits<long long>::max();
  long long v_;
};

enum class EdgeKind { undirected, arc };

// One edge instance. For an arc, a is the tail and b the head; an
// undirected edge keeps its endpoints in listing order. Parallel
// instances are permitted; self-loops are not.
struct Edge {
  int id = -1;
  Vertex a = -1;
  Vertex b = -1;
  EdgeKind kind = EdgeKind::undirected;

  bool is_arc() const { return kind == EdgeKind::arc; }
  bool touches(Vertex v) const { return a == v || b == v; }
  Vertex other(Vertex v) const { return v == a ? b : a; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Adjacent {
  Vertex to;
  int edge;
};

// Mixed multigraph on vertices 0..n-1. Edges carry stable ids; graphs
// derived from another graph (orientation, quotient, induced subgraph)
// keep the original ids, so ids need not be dense.
class MixedGraph {
 public:
  MixedGraph() = default;
  explicit MixedGraph(int n);

  int add_undirected(Vertex a, Vertex b);
  int add_arc(Vertex tail, Vertex head);
  // Insert with a caller-chosen id (must be unused). Used when deriving
  // graphs that preserve the ids of an originating graph.
  int add_edge_as(int id, Vertex a, Vertex b, EdgeKind kind);
  // Pops the most recently added edge. Supports backtracking enumerators.
  void remove_last_edge();
  // In-place direction change of an undirected instance, and its inverse
  // restoring the stored endpoint order. Candidate evaluation uses these
  // to avoid rebuilding the graph; results never depend on adjacency
  // order, so the surgical edits are observationally equivalent to a
  // rebuild.
  void orient_undirected(int id, Vertex tail, Vertex head);
  void restore_undirected(int id, Vertex a, Vertex b);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int undirected_count() const { return und_count_; }

  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int id) const {
    return id >= 0 && id < static_cast<int>(index_by_id_.size()) && index_by_id_[id] >= 0;
  }
  const Edge& edge(int id) const {
    if (!has_edge(id)) throw_no_edge(id);
    return edges_[index_by_id_[id]];
  }

  // Traversal adjacency: out(v) lists every step v can take (arcs out of
  // v plus undirected edges at v); in(v) lists every step into v.
  std::span<const Adjacent> out(Vertex v) const { return out_[v]; }
  std::span<const Adjacent> in(Vertex v) const { return in_[v]; }
  // Edge ids incident to v, regardless of direction.
  std::span<const int> incident(Vertex v) const { return inc_[v]; }

  std::vector<Vertex> neighbors(Vertex v) const;  // sorted, unique
  std::vector<int> undirected_ids() const;        // ascending

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw_bad_vertex(v);
  }

  friend bool operator==(const MixedGraph& x, const MixedGraph& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> index_by_id_;  // id -> index into edges_, -1 if absent
  std::vector<std::vector<Adjacent>> out_, in_;
  std::vector<std::vector<int>> inc_;
  int next_id_ = 0;
  int und_count_ = 0;

  void register_adjacency(const Edge& e);
  [[noreturn]] void throw_no_edge(int id) const;
  [[noreturn]] void throw_bad_vertex(Vertex v) const;
};

// Partial assignment of directions to undirected edge instances, keyed
// by edge id. Composable and order-independent.
struct OrientationPlan {
  std::map<int, std::pair<Vertex, Vertex>> assignments;  // id -> (tail, head)

  void assign(int edge_id, Vertex tail, Vertex head);
  void merge(const OrientationPlan& other);
  bool contains(int edge_id) const { return assignments.count(edge_id) != 0; }
  std::size_t size() const { return assignments.size(); }
  bool empty() const { return assignments.empty(); }

  friend bool operator==(const OrientationPlan&, const OrientationPlan&) = default;
};

// Replaces each assigned undirected edge by an arc with the chosen
// direction; everything else (ids included) is untouched.
MixedGraph apply_plan(const MixedGraph& g, const OrientationPlan& plan);

// Flips every arc; undirected edges and all ids are unchanged.
MixedGraph reverse(const MixedGraph& g);

}  // namespace morient
