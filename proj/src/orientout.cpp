#include "morient/orientout.hpp"

#include <algorithm>
#include <sstream>

#include "morient/io.hpp"
#include "morient/metrics.hpp"

namespace morient {

namespace {

std::string dump_state(const StageState& st, const std::string& label) {
  std::ostringstream out;
  out << "== " << label << " ==\n";
  out << "root " << st.root << "\nr " << st.r << "\ns " << st.s.str() << "\n";
  auto list = [&out](const char* name, const std::vector<Vertex>& vs) {
    out << name << " {";
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
    out << "}\n";
  };
  list("x", st.x);
  list("x_in", st.x_in);
  list("x_out", st.x_out);
  list("x_un", st.x_un);
  list("x_conf", st.x_conf);
  out << "graph:\n" << serialize_graph(st.graph);
  return out.str();
}

[[noreturn]] void violation(const std::string& what, const StageState& st,
                            const std::string& extra = {}) {
  throw ContractViolation(what, dump_state(st, what) + extra);
}

// d(G - e, ...) strictly exceeds d(G, ...), with -1 meaning unreachable.
bool strictly_farther(int with_skip, int base) {
  return base >= 0 && (with_skip < 0 || with_skip > base);
}

// The unique undirected edge joining root and v; conflicted vertices
// have exactly one.
int undirected_edge_between(const MixedGraph& g, Vertex root, Vertex v) {
  int found = -1;
  for (int id : g.incident(root)) {
    const Edge& e = g.edge(id);
    if (e.kind == EdgeKind::undirected && e.touches(v)) {
      if (found != -1) throw std::logic_error("expected a unique undirected edge");
      found = id;
    }
  }
  if (found == -1) throw std::logic_error("no undirected edge between root and vertex");
  return found;
}

}  // namespace

StageState stage0_normalize(const MixedGraph& g, Vertex root, std::optional<int> r,
                            bool validate) {
  g.check_vertex(root);
  if (validate && !is_valid_input(g)) {
    throw std::invalid_argument("input graph is not strongly connected and bridgeless");
  }
  Reach ecc = eccentricity(g, root);
  int r_eff;
  if (ecc.is_finite()) {
    r_eff = r.value_or(static_cast<int>(ecc.value()));
    if (r_eff < ecc.value()) {
      throw std::invalid_argument("supplied r " + std::to_string(r_eff) +
                                  " is below the root eccentricity " +
                                  std::to_string(ecc.value()));
    }
  } else if (!validate && r.has_value()) {
    r_eff = *r;  // caller owns the preconditions
  } else {
    throw std::invalid_argument("root eccentricity is not finite");
  }

  StageState st;
  st.root = root;
  st.r = r_eff;

  // Pair the root's parallel edges into directed 2-cycles. For each
  // multi-edge neighbor, spend undirected instances to guarantee one arc
  // each way when missing, then alternate the rest; an odd leftover goes
  // root -> v (both directions are already covered by then, so any
  // orientation preserves distances).
  OrientationPlan pairing;
  for (Vertex v : g.neighbors(root)) {
    int arcs_out = 0, arcs_in = 0;
    std::vector<int> unds;
    for (int id : g.incident(root)) {
      const Edge& e = g.edge(id);
      if (!e.touches(v)) continue;
      if (e.kind == EdgeKind::arc) {
        (e.a == root ? arcs_out : arcs_in)++;
      } else {
        unds.push_back(id);
      }
    }
    if (arcs_out + arcs_in + static_cast<int>(unds.size()) < 2) continue;
    std::sort(unds.begin(), unds.end());
    std::size_t i = 0;
    if (arcs_out == 0 && i < unds.size()) pairing.assign(unds[i++], root, v), ++arcs_out;
    if (arcs_in == 0 && i < unds.size()) pairing.assign(unds[i++], v, root), ++arcs_in;
    for (std::size_t k = 0; i < unds.size(); ++i, ++k) {
      if (k % 2 == 0) {
        pairing.assign(unds[i], root, v);
      } else {
        pairing.assign(unds[i], v, root);
      }
    }
  }
  st.plan = pairing;
  MixedGraph paired = pairing.empty() ? g : apply_plan(g, pairing);

  // Collapse parallel same-direction arcs between every vertex pair,
  // keeping the lowest id.
  std::set<std::pair<Vertex, Vertex>> seen_arc;
  bool any_dup = false;
  for (const Edge& e : paired.edges()) {
    if (e.kind == EdgeKind::arc && !seen_arc.insert({e.a, e.b}).second) any_dup = true;
  }
  if (any_dup) {
    seen_arc.clear();
    MixedGraph g0(g.vertex_count());
    for (const Edge& e : paired.edges()) {
      if (e.kind == EdgeKind::arc && !seen_arc.insert({e.a, e.b}).second) continue;
      g0.add_edge_as(e.id, e.a, e.b, e.kind);
    }
    st.graph = std::move(g0);
  } else {
    st.graph = std::move(paired);
  }

  st.x = st.graph.neighbors(root);
  for (Vertex v : st.x) {
    bool arc_in = false, arc_out = false;
    int und_count = 0;
    for (int id : st.graph.incident(root)) {
      const Edge& e = st.graph.edge(id);
      if (!e.touches(v)) continue;
      if (e.kind == EdgeKind::arc) {
        (e.a == root ? arc_out : arc_in) = true;
      } else {
        ++und_count;
      }
    }
    if (arc_in) {
      st.x_in.push_back(v);
    } else if (arc_out) {
      st.x_out.push_back(v);
    } else {
      st.x_un.push_back(v);
      if (und_count != 1) {
        violation("stage 0: X_un vertex " + std::to_string(v) +
                      " does not have exactly one undirected root edge",
                  st);
      }
    }
  }

  st.l = l_values(st.graph, root, st.x);
  st.s = Reach::finite(0);
  for (const auto& [v, lv] : st.l) {
    st.s = st.s + lv;
    // l(v) <= 2r+1 on valid inputs with e(root) <= r; the hypothesis is
    // only known to hold when this call did the validation.
    if (validate && Reach::finite(2LL * st.r + 1) < lv) {
      violation("stage 0: l(" + std::to_string(v) + ") = " + lv.str() + " exceeds 2r+1", st);
    }
  }
  return st;
}

StageState stage1_orient(StageState st) {
  std::vector<Vertex> pending = st.x_un;
  for (Vertex v : pending) {
    int e = undirected_edge_between(st.graph, st.root, v);
    const Vertex end_a = st.graph.edge(e).a;
    const Vertex end_b = st.graph.edge(e).b;
    bool committed = false;
    for (auto [tail, head] : {std::pair{v, st.root}, std::pair{st.root, v}}) {
      st.graph.orient_undirected(e, tail, head);
      // Orienting an edge never shortens any cycle, so s is unchanged
      // exactly when every single l is; bail out at the first change.
      bool s_preserved = true;
      for (Vertex w : st.x) {
        Reach lw = l_value(st.graph, st.root, w);
        if (lw != st.l.at(w)) {
          if (lw < st.l.at(w)) {
            violation("stage 1: l(" + std::to_string(w) + ") decreased under orientation", st);
          }
          s_preserved = false;
          break;
        }
      }
      if (!s_preserved) {
        st.graph.restore_undirected(e, end_a, end_b);
        continue;
      }
      st.plan.assign(e, tail, head);
      (tail == v ? st.x_in : st.x_out).push_back(v);
      committed = true;
      break;
    }
    if (!committed) st.x_conf.push_back(v);
  }
  st.x_un.clear();
  std::sort(st.x_in.begin(), st.x_in.end());
  std::sort(st.x_out.begin(), st.x_out.end());
  return st;
}

std::map<Vertex, bool> check_original_observation(const StageState& st) {
  std::map<Vertex, bool> out;
  std::vector<int> base = bfs_distances(st.graph, st.root);
  for (Vertex v : st.x_conf) {
    int e = undirected_edge_between(st.graph, st.root, v);
    std::vector<int> skipped = bfs_distances(st.graph, st.root, false, e);
    bool witness = false;
    for (Vertex w : st.x_in) {
      if (strictly_farther(skipped[w], base[w])) {
        witness = true;
        break;
      }
    }
    out[v] = witness;
  }
  return out;
}

std::map<Vertex, bool> check_corrected_observation(const StageState& st) {
  std::map<Vertex, bool> out = check_original_observation(st);
  std::vector<int> base = bfs_distances(st.graph, st.root, true);
  for (auto& [v, ok] : out) {
    if (ok) continue;
    int e = undirected_edge_between(st.graph, st.root, v);
    std::vector<int> skipped = bfs_distances(st.graph, st.root, true, e);
    for (Vertex z : st.x_out) {
      if (strictly_farther(skipped[z], base[z])) {
        ok = true;
        break;
      }
    }
  }
  return out;
}

TreeSkeleton build_bfs_tree(const MixedGraph& g, Vertex root, std::span<const Vertex> terminals,
                            bool toward_root) {
  TreeSkeleton t;
  t.root = root;
  t.toward_root = toward_root;
  t.terminals.assign(terminals.begin(), terminals.end());
  std::sort(t.terminals.begin(), t.terminals.end());
  t.vertices.insert(root);

  std::vector<int> dist = bfs_distances(g, root, toward_root);

  // Deterministic parent rule: the minimum-id vertex one level closer to
  // the root, through the minimum-id usable edge.
  std::map<Vertex, std::pair<Vertex, int>> parent;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == root || dist[v] <= 0) continue;
    std::pair<Vertex, int> best{-1, -1};
    // For an out-tree the hop enters v, for an in-tree it leaves v.
    for (const Adjacent& adj : toward_root ? g.out(v) : g.in(v)) {
      if (dist[adj.to] != dist[v] - 1) continue;
      std::pair<Vertex, int> cand{adj.to, adj.edge};
      if (best.first == -1 || cand < best) best = cand;
    }
    if (best.first != -1) parent[v] = best;
  }

  for (Vertex term : t.terminals) {
    if (term == root) {
      t.paths[term] = {root};
      continue;
    }
    if (dist[term] < 0) {
      throw std::logic_error("tree terminal " + std::to_string(term) + " unreachable");
    }
    std::vector<Vertex> walk{term};
    Vertex v = term;
    while (v != root) {
      auto [p, e] = parent.at(v);
      t.vertices.insert(v);
      t.edge_ids.insert(e);
      t.parent[v] = {p, e};
      walk.push_back(p);
      v = p;
    }
    if (!toward_root) std::reverse(walk.begin(), walk.end());
    t.paths[term] = std::move(walk);
  }
  return t;
}

Stage2Result stage2_build(const StageState& st) {
  if (!st.x_conf.empty()) {
    for (const auto& [v, ok] : check_corrected_observation(st)) {
      if (!ok) {
        violation("corrected observation fails at conflicted vertex " + std::to_string(v), st);
      }
    }
  }

  Stage2Result res;
  res.t_out = build_bfs_tree(st.graph, st.root, st.x_in, false);
  res.t_in = build_bfs_tree(st.graph, st.root, st.x_out, true);

  for (Vertex v : st.x_conf) {
    if (!res.t_out.vertices.count(v) && !res.t_in.vertices.count(v)) {
      violation("conflicted vertex " + std::to_string(v) + " lies outside both trees", st);
    }
  }

  // Orient T_out away from the root.
  OrientationPlan delta2;
  for (const auto& [child, link] : res.t_out.parent) {
    const Edge& e = st.graph.edge(link.second);
    if (e.kind == EdgeKind::undirected) {
      delta2.assign(e.id, link.first, child);
    } else if (!(e.a == link.first && e.b == child)) {
      violation("out-tree arc points against the tree", st);
    }
  }
  res.g2 = apply_plan(st.graph, delta2);
  res.plan = st.plan;
  res.plan.merge(delta2);

  {
    std::vector<int> from_u = bfs_distances(res.g2, st.root);
    std::vector<int> to_u = bfs_distances(res.g2, st.root, true);
    for (Vertex v : res.t_out.vertices) {
      if (v == st.root) continue;
      bool ok = from_u[v] >= 0 && from_u[v] <= 2 * st.r && to_u[v] >= 0 && to_u[v] <= 2 * st.r;
      if (!ok) {
        violation("out-tree vertex " + std::to_string(v) + " misses the 2r bounds in G_2", st);
      }
    }
  }

  // Splice each X_out cycle: walk P_j from v_j, direct it up to the first
  // out-tree vertex and from the last proper out-tree vertex down to the
  // root. The middle piece stays as it is.
  OrientationPlan delta3;
  std::vector<Vertex> segment_vertices;
  for (Vertex vj : st.x_out) {
    const std::vector<Vertex>& path = res.t_in.paths.at(vj);
    std::size_t last = path.size() - 1;
    std::size_t first_hit = last;
    for (std::size_t k = 0; k <= last; ++k) {
      if (res.t_out.vertices.count(path[k])) {
        first_hit = k;
        break;
      }
    }
    std::size_t proper_last = last;  // last out-tree vertex before the final root
    bool has_proper = false;
    for (std::size_t k = 0; k < last; ++k) {
      if (res.t_out.vertices.count(path[k])) {
        proper_last = k;
        has_proper = true;
      }
    }

    SplicedCycle cyc;
    cyc.terminal = vj;
    cyc.cycle.push_back(st.root);
    cyc.cycle.insert(cyc.cycle.end(), path.begin(), path.end());
    cyc.x = path[first_hit];
    cyc.y = has_proper ? path[proper_last] : st.root;
    res.cycles.push_back(cyc);

    auto orient_along = [&](std::size_t from, std::size_t to) {
      for (std::size_t k = from; k < to; ++k) {
        segment_vertices.push_back(path[k]);
        int id = res.t_in.parent.at(path[k]).second;
        const Edge& e = res.g2.edge(id);
        if (e.kind == EdgeKind::undirected) {
          delta3.assign(id, path[k], path[k + 1]);
        } else if (!(e.a == path[k] && e.b == path[k + 1])) {
          // The only arc that may point against an in-path segment is an
          // out-tree edge into the root, oriented away from the root when
          // T_out was directed; both of its endpoints already carry the
          // out-tree bounds, so it needs no splice.
          if (!(res.t_out.edge_ids.count(id) && path[k + 1] == st.root)) {
            violation("cycle segment arc points against the path", st);
          }
        }
      }
      segment_vertices.push_back(path[to]);
    };
    orient_along(0, first_hit);
    if (has_proper) orient_along(proper_last, last);
  }
  res.g3 = apply_plan(res.g2, delta3);
  res.plan.merge(delta3);

  {
    std::vector<int> from_u = bfs_distances(res.g3, st.root);
    std::vector<int> to_u = bfs_distances(res.g3, st.root, true);
    for (Vertex v : segment_vertices) {
      bool ok = from_u[v] >= 0 && from_u[v] <= 2 * st.r && to_u[v] >= 0 &&
                to_u[v] <= std::max(0, 4 * st.r - 1);
      if (!ok) {
        violation("spliced vertex " + std::to_string(v) + " misses the distance bounds in G_3",
                  st);
      }
    }
  }
  return res;
}

OrientResult stage3_extract(const StageState& st, const Stage2Result& s2) {
  std::set<Vertex> keep(s2.t_out.vertices.begin(), s2.t_out.vertices.end());
  for (const SplicedCycle& cyc : s2.cycles) {
    std::size_t last = cyc.cycle.size() - 1;
    // Prefix root..x along the cycle; x == root means the whole cycle.
    std::size_t pos_x = last;
    for (std::size_t k = 1; k <= last; ++k) {
      if (cyc.cycle[k] == cyc.x) {
        pos_x = k;
        break;
      }
    }
    for (std::size_t k = 0; k <= pos_x; ++k) keep.insert(cyc.cycle[k]);
    // Suffix y..root; y == root contributes the root alone.
    std::size_t pos_y = last;
    for (std::size_t k = 1; k < last; ++k) {
      if (cyc.cycle[k] == cyc.y) pos_y = k;
    }
    for (std::size_t k = pos_y; k <= last; ++k) keep.insert(cyc.cycle[k]);
  }

  OrientResult out;
  out.root = st.root;
  out.r = st.r;
  out.plan = s2.plan;
  out.vertices.assign(keep.begin(), keep.end());
  out.h = MixedGraph(s2.g3.vertex_count());
  for (const Edge& e : s2.g3.edges()) {
    if (!keep.count(e.a) || !keep.count(e.b)) continue;
    if (e.kind == EdgeKind::arc) {
      out.h.add_edge_as(e.id, e.a, e.b, EdgeKind::arc);
    } else {
      Vertex lo = std::min(e.a, e.b), hi = std::max(e.a, e.b);
      out.h.add_edge_as(e.id, lo, hi, EdgeKind::arc);
      out.plan.assign(e.id, lo, hi);
    }
  }

  for (Vertex v : st.x) {
    if (!keep.count(v)) {
      violation("root neighbor " + std::to_string(v) + " missing from H", st);
    }
  }
  return out;
}

OrientTrace orientout_traced(const MixedGraph& g, Vertex root, std::optional<int> r) {
  OrientTrace tr;
  tr.state0 = stage0_normalize(g, root, r);
  tr.state1 = stage1_orient(tr.state0);
  tr.original_obs = check_original_observation(tr.state1);
  tr.corrected_obs = check_corrected_observation(tr.state1);
  for (const auto& [v, ok] : tr.corrected_obs) {
    if (!ok) {
      violation("corrected observation fails at conflicted vertex " + std::to_string(v),
                tr.state1);
    }
  }
  tr.stage2 = stage2_build(tr.state1);
  tr.result = stage3_extract(tr.state1, tr.stage2);

  const OrientResult& res = tr.result;
  std::vector<int> from_u = bfs_distances(res.h, root);
  std::vector<int> to_u = bfs_distances(res.h, root, true);
  for (Vertex v : res.vertices) {
    bool ok = from_u[v] >= 0 && from_u[v] <= 2 * res.r && to_u[v] >= 0 &&
              to_u[v] <= std::max(0, 4 * res.r - 1);
    if (!ok) {
      violation("output contract: vertex " + std::to_string(v) + " has d(u,v)=" +
                    std::to_string(from_u[v]) + " d(v,u)=" + std::to_string(to_u[v]) +
                    " for r=" + std::to_string(res.r),
                tr.state1, "\nH:\n" + serialize_graph(res.h));
    }
  }
  for (const Edge& e : res.h.edges()) {
    if (!g.has_edge(e.id)) continue;
    const Edge& orig = g.edge(e.id);
    if (orig.kind == EdgeKind::arc && !(orig.a == e.a && orig.b == e.b)) {
      violation("output contract: pre-existing arc " + std::to_string(e.id) + " was flipped",
                tr.state1);
    }
  }
  for (const auto& [id, dir] : res.plan.assignments) {
    if (!g.has_edge(id) || g.edge(id).kind != EdgeKind::undirected) {
      violation("plan assigns a non-undirected edge " + std::to_string(id), tr.state1);
    }
  }
  return tr;
}

OrientResult orientout(const MixedGraph& g, Vertex root, std::optional<int> r) {
  return orientout_traced(g, root, r).result;
}

}  // namespace morient
