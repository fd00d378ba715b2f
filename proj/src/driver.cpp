#include "morient/driver.hpp"

#include <algorithm>
#include <numeric>

#include "morient/cycles.hpp"
#include "morient/io.hpp"
#include "morient/metrics.hpp"

namespace morient {

namespace {

[[noreturn]] void driver_violation(const std::string& what, const MixedGraph& g) {
  throw ContractViolation(what, what + "\ngraph:\n" + serialize_graph(g));
}

std::vector<char> arc_reachable(const MixedGraph& g, Vertex src, bool backward) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{src};
  seen[src] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const Adjacent& adj : backward ? g.in(v) : g.out(v)) {
      if (g.edge(adj.edge).kind != EdgeKind::arc) continue;
      if (!seen[adj.to]) {
        seen[adj.to] = 1;
        stack.push_back(adj.to);
      }
    }
  }
  return seen;
}

// Working graph on contracted supervertices. Edges keep original ids and
// report their endpoints as block ids; edges internal to a block must
// already be arcs (undirected ones are oriented before every merge).
MixedGraph quotient(const MixedGraph& cur, const std::vector<int>& block, int nblocks) {
  MixedGraph q(nblocks);
  for (const Edge& e : cur.edges()) {
    int ba = block[e.a], bb = block[e.b];
    if (ba == bb) {
      if (e.kind == EdgeKind::undirected) {
        throw std::logic_error("undirected edge internal to a contracted block");
      }
      continue;
    }
    q.add_edge_as(e.id, ba, bb, e.kind);
  }
  return q;
}

// Translate a plan stated on quotient endpoints back to original
// endpoints.
OrientationPlan lift_plan(const OrientationPlan& quotient_plan, const MixedGraph& original,
                          const std::vector<int>& block) {
  OrientationPlan out;
  for (const auto& [id, dir] : quotient_plan.assignments) {
    const Edge& e = original.edge(id);
    if (block[e.a] == dir.first && block[e.b] == dir.second) {
      out.assign(id, e.a, e.b);
    } else if (block[e.b] == dir.first && block[e.a] == dir.second) {
      out.assign(id, e.b, e.a);
    } else {
      throw std::logic_error("quotient assignment does not match edge blocks");
    }
  }
  return out;
}

}  // namespace

OrientResult orientin(const MixedGraph& g, Vertex root, std::optional<int> r) {
  OrientResult mirrored = orientout(reverse(g), root, r);
  OrientResult out;
  out.root = root;
  out.r = mirrored.r;
  out.vertices = mirrored.vertices;
  out.h = reverse(mirrored.h);
  for (const auto& [id, dir] : mirrored.plan.assignments) {
    out.plan.assign(id, dir.second, dir.first);
  }
  std::vector<int> from_u = bfs_distances(out.h, root);
  std::vector<int> to_u = bfs_distances(out.h, root, true);
  for (Vertex v : out.vertices) {
    bool ok = to_u[v] >= 0 && to_u[v] <= 2 * out.r && from_u[v] >= 0 &&
              from_u[v] <= std::max(0, 4 * out.r - 1);
    if (!ok) {
      throw ContractViolation("orientin contract violated at vertex " + std::to_string(v),
                              serialize_graph(g) + "\nroot " + std::to_string(root));
    }
  }
  return out;
}

std::pair<OrientationPlan, DriverReport> orient_full(const MixedGraph& g) {
  if (!is_valid_input(g)) {
    throw std::invalid_argument("orient_full requires a strongly connected bridgeless graph");
  }

  DriverReport rep;
  rep.input_radius = radius_center(g).radius;
  rep.eta_value = eta(g);

  int n = g.vertex_count();
  std::vector<int> block(n);
  std::iota(block.begin(), block.end(), 0);
  int nblocks = n;
  OrientationPlan plan;

  while (true) {
    MixedGraph cur = apply_plan(g, plan);
    MixedGraph w = quotient(cur, block, nblocks);
    if (w.undirected_count() == 0) break;

    RadiusCenter rc = radius_center(w);
    Vertex u = rc.centers.front();
    Vertex center_orig = -1;
    for (Vertex v = 0; v < n && center_orig == -1; ++v) {
      if (block[v] == u) center_orig = v;
    }
    std::size_t planned_before = plan.size();

    OrientResult out = orientout(w, u, static_cast<int>(rc.radius.value()));
    plan.merge(lift_plan(out.plan, g, block));
    MixedGraph w2 = apply_plan(w, out.plan);
    if (!strongly_connected(w2)) {
      driver_violation("working graph lost strong connectivity after orientout", w2);
    }

    OrientResult in =
        orientin(w2, u, static_cast<int>(eccentricity(w2, u).value()));
    plan.merge(lift_plan(in.plan, g, block));
    MixedGraph w3 = apply_plan(w2, in.plan);
    if (!strongly_connected(w3)) {
      driver_violation("working graph lost strong connectivity after orientin", w3);
    }

    // Kernel: everything the center reaches both ways through committed
    // arcs. Undirected edges buried inside it can take any direction, so
    // settle them before the kernel collapses to a supervertex.
    std::vector<char> fwd = arc_reachable(w3, u, false);
    std::vector<char> bwd = arc_reachable(w3, u, true);
    std::vector<char> in_kernel(w3.vertex_count(), 0);
    int kernel_size = 0;
    for (Vertex v = 0; v < w3.vertex_count(); ++v) {
      in_kernel[v] = fwd[v] && bwd[v];
      kernel_size += in_kernel[v];
    }
    for (const Edge& e : w3.edges()) {
      if (e.kind == EdgeKind::undirected && in_kernel[e.a] && in_kernel[e.b]) {
        const Edge& orig = g.edge(e.id);
        plan.assign(e.id, std::min(orig.a, orig.b), std::max(orig.a, orig.b));
      }
    }

    bool contracted = kernel_size >= 2;
    if (contracted) {
      std::vector<int> renumber(nblocks, -1);
      int next = 0;
      int kernel_block = -1;
      for (Vertex v = 0; v < n; ++v) {
        int old = block[v];
        if (in_kernel[old]) {
          if (kernel_block == -1) kernel_block = next++;
          block[v] = kernel_block;
        } else {
          if (renumber[old] == -1) renumber[old] = next++;
          block[v] = renumber[old];
        }
      }
      nblocks = next;
    }
    if (!contracted && plan.size() == planned_before) {
      driver_violation("driver made no progress", w3);
    }
    rep.log.push_back({center_orig, static_cast<int>(out.vertices.size())});
  }

  for (int id : g.undirected_ids()) {
    if (!plan.contains(id)) {
      driver_violation("driver finished with an unassigned undirected edge", g);
    }
  }

  MixedGraph oriented = apply_plan(g, plan);
  rep.strongly_connected = strongly_connected(oriented);
  if (!rep.strongly_connected) {
    driver_violation("final orientation is not strongly connected", oriented);
  }
  rep.oriented_radius = radius_center(oriented).radius;
  rep.iterations = static_cast<int>(rep.log.size());
  long long r = rep.input_radius.value();
  long long eta_v = rep.eta_value.value();
  rep.bound_f = 1.5 * r * r + r + 1;
  rep.bound_eta = 1.5 * r * eta_v;
  rep.within_f = rep.oriented_radius.is_finite() && rep.oriented_radius.value() <= rep.bound_f;
  rep.within_eta =
      rep.oriented_radius.is_finite() && rep.oriented_radius.value() <= rep.bound_eta;
  return {plan, rep};
}

DriverReport verify_orientation(const MixedGraph& g, const OrientationPlan& plan) {
  for (int id : g.undirected_ids()) {
    if (!plan.contains(id)) {
      throw std::invalid_argument("plan is partial: undirected edge " + std::to_string(id) +
                                  " has no direction");
    }
  }
  DriverReport rep;
  rep.input_radius = radius_center(g).radius;
  rep.eta_value = eta(g);
  MixedGraph oriented = apply_plan(g, plan);
  rep.strongly_connected = strongly_connected(oriented);
  rep.oriented_radius = radius_center(oriented).radius;
  if (rep.input_radius.is_finite()) {
    long long r = rep.input_radius.value();
    rep.bound_f = 1.5 * r * r + r + 1;
    if (rep.eta_value.is_finite()) rep.bound_eta = 1.5 * r * rep.eta_value.value();
  }
  rep.within_f = rep.bound_f >= 0 && rep.oriented_radius.is_finite() &&
                 rep.oriented_radius.value() <= rep.bound_f;
  rep.within_eta = rep.bound_eta >= 0 && rep.oriented_radius.is_finite() &&
                   rep.oriented_radius.value() <= rep.bound_eta;
  return rep;
}

}  // namespace morient
