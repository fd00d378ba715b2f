#include "morient/oracle.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <tuple>

#include "morient/io.hpp"
#include "morient/metrics.hpp"

namespace morient {

BruteResult brute_oriented_radius(const MixedGraph& g, int cap) {
  std::vector<int> und = g.undirected_ids();
  int m = static_cast<int>(und.size());
  if (m > cap) {
    throw std::invalid_argument("graph has " + std::to_string(m) +
                                " undirected edges, above the cap of " + std::to_string(cap) +
                                "; raise --cap to enumerate anyway");
  }
  auto plan_for = [&](std::uint64_t counter) {
    OrientationPlan plan;
    for (int k = 0; k < m; ++k) {
      const Edge& e = g.edge(und[k]);
      Vertex lo = std::min(e.a, e.b), hi = std::max(e.a, e.b);
      if (counter >> k & 1) {
        plan.assign(und[k], hi, lo);
      } else {
        plan.assign(und[k], lo, hi);
      }
    }
    return plan;
  };

  BruteResult best{Reach::unreachable(), plan_for(0)};
  MixedGraph work = g;
  for (std::uint64_t counter = 0; counter < (1ULL << m); ++counter) {
    for (int k = 0; k < m; ++k) {
      const Edge& e = g.edge(und[k]);
      Vertex lo = std::min(e.a, e.b), hi = std::max(e.a, e.b);
      if (counter >> k & 1) {
        work.orient_undirected(und[k], hi, lo);
      } else {
        work.orient_undirected(und[k], lo, hi);
      }
    }
    Reach radius = radius_center(work).radius;
    if (radius < best.radius) best = {radius, plan_for(counter)};
    for (int k = 0; k < m; ++k) {
      const Edge& e = g.edge(und[k]);
      work.restore_undirected(und[k], e.a, e.b);
    }
  }
  return best;
}

namespace {

// Portable draws on top of mt19937_64: modulo mapping for integers and a
// 53-bit mantissa for reals, so corpora replay bit-identically across
// standard libraries.
std::uint64_t draw_index(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

double draw_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

}  // namespace

MixedGraph gen_valid(int n, int extra_edges, double directed_fraction, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("gen_valid requires n >= 3");
  std::mt19937_64 rng(seed);

  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[i], order[draw_index(rng, i + 1)]);
  }

  MixedGraph g(n);
  for (int i = 0; i < n; ++i) g.add_undirected(order[i], order[(i + 1) % n]);
  for (int k = 0; k < extra_edges; ++k) {
    Vertex a = static_cast<Vertex>(draw_index(rng, n));
    Vertex b = static_cast<Vertex>((a + 1 + draw_index(rng, n - 1)) % n);
    g.add_undirected(a, b);
  }

  // Every edge lies on or chords the spanning cycle, so the underlying
  // multigraph is bridgeless; orientation steps keep it that way and are
  // individually vetoed if they break strong connectivity.
  OrientationPlan plan;
  for (const Edge& e : g.edges()) {
    if (draw_unit(rng) >= directed_fraction) continue;
    bool flip = rng() & 1;
    Vertex tail = flip ? e.b : e.a;
    Vertex head = flip ? e.a : e.b;
    OrientationPlan trial = plan;
    trial.assign(e.id, tail, head);
    if (strongly_connected(apply_plan(g, trial))) plan = std::move(trial);
  }
  return apply_plan(g, plan);
}

namespace {

// Per-pair shape for the hunt enumeration. Instances: und/arc 1, both 2.
enum class PairShape : std::uint8_t { none, und, arc_fwd, arc_rev, two_cycle };

constexpr PairShape kShapes[] = {PairShape::none, PairShape::und, PairShape::arc_fwd,
                                 PairShape::arc_rev, PairShape::two_cycle};

int shape_instances(PairShape s) {
  switch (s) {
    case PairShape::none: return 0;
    case PairShape::two_cycle: return 2;
    default: return 1;
  }
}

void push_shape(MixedGraph& g, Vertex a, Vertex b, PairShape s) {
  switch (s) {
    case PairShape::none: break;
    case PairShape::und: g.add_undirected(a, b); break;
    case PairShape::arc_fwd: g.add_arc(a, b); break;
    case PairShape::arc_rev: g.add_arc(b, a); break;
    case PairShape::two_cycle:
      g.add_arc(a, b);
      g.add_arc(b, a);
      break;
  }
}

void pop_shape(MixedGraph& g, PairShape s) {
  for (int k = 0; k < shape_instances(s); ++k) g.remove_last_edge();
}

// Signature used to deduplicate witnesses: sorted per-vertex
// (undirected, out, in) degree triples.
using DegreeKey = std::tuple<int, int, std::vector<std::array<int, 3>>>;

DegreeKey degree_key(const MixedGraph& g) {
  std::vector<std::array<int, 3>> triples(g.vertex_count(), {0, 0, 0});
  for (const Edge& e : g.edges()) {
    if (e.kind == EdgeKind::undirected) {
      triples[e.a][0]++;
      triples[e.b][0]++;
    } else {
      triples[e.a][1]++;
      triples[e.b][2]++;
    }
  }
  std::sort(triples.begin(), triples.end());
  return {g.vertex_count(), g.edge_count(), std::move(triples)};
}

struct HuntScan {
  const HuntOptions& opts;
  std::vector<HuntResult> results{};
  std::set<DegreeKey> seen{};
  long long leaves = 0;
  std::vector<int> degree{};  // underlying degree, maintained by the DFS

  bool budget_exhausted(int n) const {
    return n > opts.exhaustive_max_n && leaves >= opts.layer_budget;
  }

  void inspect(const MixedGraph& g) {
    ++leaves;
    if (!strongly_connected(g)) return;
    if (!undirected_bridges(g).empty()) return;

    for (Vertex root = 0; root < g.vertex_count(); ++root) {
      bool has_und = false;
      for (int id : g.incident(root)) {
        has_und |= g.edge(id).kind == EdgeKind::undirected;
      }
      if (!has_und) continue;  // no X_un, hence no conflicts
      StageState st = stage1_orient(stage0_normalize(g, root, std::nullopt, false));
      if (st.x_conf.empty()) continue;
      std::map<Vertex, bool> corrected = check_corrected_observation(st);
      for (const auto& [v, ok] : corrected) {
        if (!ok) {
          throw ContractViolation(
              "hunt found a corrected-observation counterexample at vertex " + std::to_string(v),
              "root " + std::to_string(root) + "\n" + serialize_graph(g));
        }
      }
      std::map<Vertex, bool> original = check_original_observation(st);
      bool orig_all = std::all_of(original.begin(), original.end(),
                                  [](const auto& kv) { return kv.second; });
      if (orig_all) continue;
      if (!seen.insert(degree_key(g)).second) continue;
      results.push_back({g, root, st.x_in, st.x_out, st.x_conf, false, true});
    }
  }

  void descend(MixedGraph& g, const std::vector<std::pair<Vertex, Vertex>>& pairs,
               std::size_t next_pair, int instances) {
    if (budget_exhausted(g.vertex_count())) return;
    if (next_pair == pairs.size()) {
      inspect(g);
      return;
    }
    auto [a, b] = pairs[next_pair];
    // Pairs are enumerated in lexicographic order, so after the last pair
    // touching vertex a its underlying degree is final; 2-edge
    // connectivity needs degree 2, which prunes the whole subtree.
    bool closes_a = b == g.vertex_count() - 1;
    for (PairShape s : kShapes) {
      int cost = shape_instances(s);
      if (instances + cost > opts.max_edges) continue;
      int span = s == PairShape::none ? 0 : cost;
      if (closes_a && degree[a] + span < 2) continue;
      push_shape(g, a, b, s);
      degree[a] += span;
      degree[b] += span;
      descend(g, pairs, next_pair + 1, instances + cost);
      degree[a] -= span;
      degree[b] -= span;
      pop_shape(g, s);
      if (budget_exhausted(g.vertex_count())) return;
    }
  }
};

}  // namespace

std::vector<HuntResult> hunt_counterexample(const HuntOptions& opts) {
  if (opts.max_n > 8) throw std::invalid_argument("hunt is tractable only up to max_n = 8");
  HuntScan scan{opts};
  for (int n = 3; n <= opts.max_n; ++n) {
    scan.leaves = 0;
    scan.degree.assign(n, 0);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    }
    MixedGraph g(n);
    scan.descend(g, pairs, 0, 0);
  }
  std::stable_sort(scan.results.begin(), scan.results.end(),
                   [](const HuntResult& a, const HuntResult& b) {
                     return std::tuple(a.graph.vertex_count(), a.graph.edge_count(), a.root) <
                            std::tuple(b.graph.vertex_count(), b.graph.edge_count(), b.root);
                   });
  return scan.results;
}

std::vector<HuntResult> hunt_counterexample(int max_n, int max_edges) {
  HuntOptions opts;
  opts.max_n = max_n;
  opts.max_edges = max_edges;
  return hunt_counterexample(opts);
}

}  // namespace morient
