#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "morient/orientout.hpp"

namespace morient {

// Mirror of orientout: run it on the reversed graph and flip the result,
// so every v in V(H) gets d_H(v,root) <= 2r and d_H(root,v) <= 4r-1.
OrientResult orientin(const MixedGraph& g, Vertex root, std::optional<int> r = std::nullopt);

struct IterationLog {
  Vertex root;  // lowest original vertex of the contracted center
  int h_size;   // |V(H)| of the orientout call
};

struct DriverReport {
  Reach input_radius;
  Reach eta_value;
  Reach oriented_radius;
  double bound_f = -1;    // 1.5 r^2 + r + 1
  double bound_eta = -1;  // 1.5 r eta
  bool strongly_connected = false;
  bool within_f = false;
  bool within_eta = false;
  int iterations = 0;
  std::vector<IterationLog> log;
};

// Orients every undirected edge of a strongly connected bridgeless mixed
// multigraph so the result is strongly connected. Repeatedly picks a
// center of the contracted working graph, runs orientout then orientin
// there, orients the leftovers inside the arc-strong kernel of the
// center, and contracts the kernel to a supervertex.
std::pair<OrientationPlan, DriverReport> orient_full(const MixedGraph& g);

// Applies a total plan and reports strong connectivity, the oriented
// radius and the comparison against both radius bounds.
DriverReport verify_orientation(const MixedGraph& g, const OrientationPlan& plan);

}  // namespace morient
