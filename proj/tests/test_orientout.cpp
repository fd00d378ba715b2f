#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "morient/metrics.hpp"
#include "morient/oracle.hpp"
#include "morient/orientout.hpp"

using namespace morient;

TEST_CASE("stage 0 pairs parallel root edges into directed 2-cycles") {
  StageState st = stage0_normalize(gr("n 2\ne 0 1\ne 0 1\n"), 0);
  REQUIRE(st.graph.edge_count() == 2);
  CHECK(st.graph.edge(0) == Edge{0, 0, 1, EdgeKind::arc});
  CHECK(st.graph.edge(1) == Edge{1, 1, 0, EdgeKind::arc});
  CHECK(st.x_in == std::vector<Vertex>{1});
  CHECK(st.x_un.empty());
}

TEST_CASE("stage 0 collapses same-direction parallel arcs") {
  // Literal collapse shape; the graph is not a valid algorithm input, so
  // validation is bypassed and r supplied by hand.
  StageState st = stage0_normalize(gr("n 2\na 0 1\na 0 1\na 0 1\n"), 0, 1, false);
  REQUIRE(st.graph.edge_count() == 1);
  CHECK(st.graph.edge(0) == Edge{0, 0, 1, EdgeKind::arc});
  CHECK(st.x_out == std::vector<Vertex>{1});

  // Same rule on a valid input, including a pair away from the root.
  StageState st2 = stage0_normalize(gr("n 3\na 0 1\na 0 1\na 1 2\na 1 2\na 2 0\ne 0 2\n"), 0);
  CHECK(st2.graph.edge_count() == 4);
  CHECK(st2.graph.has_edge(0));
  CHECK_FALSE(st2.graph.has_edge(1));
  CHECK(st2.graph.has_edge(2));
  CHECK_FALSE(st2.graph.has_edge(3));
}

TEST_CASE("stage 0 on the triangle only sets up the state") {
  StageState st = stage0_normalize(gr(kTriangle), 0);
  CHECK(st.graph == gr(kTriangle));
  CHECK(st.r == 1);
  CHECK(st.x == std::vector<Vertex>{1, 2});
  CHECK(st.x_un == std::vector<Vertex>{1, 2});
  CHECK(st.x_in.empty());
  CHECK(st.x_out.empty());
  CHECK(st.s == Reach::finite(6));
  CHECK(st.l.at(1) == Reach::finite(3));
  CHECK(st.l.at(2) == Reach::finite(3));
}

TEST_CASE("stage 0 rejects bad inputs") {
  CHECK_THROWS_AS(stage0_normalize(gr(kPath3), 0), std::invalid_argument);
  CHECK_THROWS_AS(stage0_normalize(gr(kTriangle), 0, 0), std::invalid_argument);
}

TEST_CASE("stage 1 walks the triangle exactly as traced") {
  StageState st = stage1_orient(stage0_normalize(gr(kTriangle), 0));
  CHECK(st.x_in == std::vector<Vertex>{1});
  CHECK(st.x_out == std::vector<Vertex>{2});
  CHECK(st.x_conf.empty());
  CHECK(st.x_un.empty());
  CHECK(st.s == Reach::finite(6));
  CHECK(st.graph.edge(0) == Edge{0, 1, 0, EdgeKind::arc});
  CHECK(st.graph.edge(1) == Edge{1, 1, 2, EdgeKind::undirected});
  CHECK(st.graph.edge(2) == Edge{2, 0, 2, EdgeKind::arc});
}

TEST_CASE("stage 1 is a no-op without undirected root edges") {
  StageState st0 = stage0_normalize(gr(kTwoCycleArcs), 0);
  StageState st1 = stage1_orient(st0);
  CHECK(st1.graph == st0.graph);
  CHECK(st1.x_in == st0.x_in);
  CHECK(st1.x_conf.empty());
}

TEST_CASE("stage 1 leaves the witness edge conflicted") {
  StageState st = stage1_orient(stage0_normalize(gr(kConflictWitness), 0));
  CHECK(st.x_in == std::vector<Vertex>{2});
  CHECK(st.x_out == std::vector<Vertex>{3});
  CHECK(st.x_conf == std::vector<Vertex>{1});
  CHECK(st.graph.edge(0).kind == EdgeKind::undirected);
}

TEST_CASE("observation checkers on the witness graph") {
  StageState st = stage1_orient(stage0_normalize(gr(kConflictWitness), 0));
  std::map<Vertex, bool> original = check_original_observation(st);
  REQUIRE(original.size() == 1);
  CHECK_FALSE(original.at(1));
  std::map<Vertex, bool> corrected = check_corrected_observation(st);
  REQUIRE(corrected.size() == 1);
  CHECK(corrected.at(1));
}

TEST_CASE("observation checkers are vacuous without conflicts") {
  StageState st = stage1_orient(stage0_normalize(gr(kTriangle), 0));
  CHECK(check_original_observation(st).empty());
  CHECK(check_corrected_observation(st).empty());
}

TEST_CASE("stage 2 builds the triangle trees and cycle") {
  StageState st = stage1_orient(stage0_normalize(gr(kTriangle), 0));
  Stage2Result s2 = stage2_build(st);

  CHECK(s2.t_out.paths.at(1) == std::vector<Vertex>{0, 2, 1});
  CHECK(s2.t_out.vertices == std::set<Vertex>{0, 1, 2});
  CHECK(s2.g2.edge(1) == Edge{1, 2, 1, EdgeKind::arc});

  REQUIRE(s2.cycles.size() == 1);
  CHECK(s2.cycles[0].terminal == 2);
  CHECK(s2.cycles[0].x == 2);
  CHECK(s2.cycles[0].y == 1);
  CHECK(s2.cycles[0].cycle == std::vector<Vertex>{0, 2, 1, 0});
  CHECK(s2.g3 == s2.g2);
}

TEST_CASE("stage 2 with an empty X_out produces no cycles") {
  StageState st = stage1_orient(stage0_normalize(gr("n 3\na 0 1\na 1 0\na 0 2\na 2 0\ne 1 2\n"), 0));
  CHECK(st.x_in == std::vector<Vertex>{1, 2});
  CHECK(st.x_out.empty());
  Stage2Result s2 = stage2_build(st);
  CHECK(s2.cycles.empty());
  CHECK(s2.g3 == s2.g2);
}

TEST_CASE("stage 2 with an empty X_in degenerates to the root tree") {
  StageState st;
  st.graph = gr(kDirectedTriangle);
  st.root = 0;
  st.r = 2;
  st.x = {1, 2};
  st.x_out = {1};
  st.l = l_values(st.graph, 0, st.x);
  st.s = s_value(st.graph, 0, st.x);
  Stage2Result s2 = stage2_build(st);
  CHECK(s2.t_out.vertices == std::set<Vertex>{0});
  REQUIRE(s2.cycles.size() == 1);
  CHECK(s2.cycles[0].x == 0);
  CHECK(s2.cycles[0].y == 0);
  CHECK(s2.g3 == st.graph);
}

TEST_CASE("stage 3 on the triangle keeps all three vertices") {
  StageState st = stage1_orient(stage0_normalize(gr(kTriangle), 0));
  Stage2Result s2 = stage2_build(st);
  OrientResult res = stage3_extract(st, s2);
  CHECK(res.vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(res.h == gr("n 3\na 1 0\na 2 1\na 0 2\n"));
}

TEST_CASE("orientout on a single vertex is the trivial subgraph") {
  OrientResult res = orientout(gr("n 1\n"), 0);
  CHECK(res.r == 0);
  CHECK(res.vertices == std::vector<Vertex>{0});
  CHECK(res.h.edge_count() == 0);
  CHECK(res.plan.empty());
}

TEST_CASE("orientout meets its contract on the small cases") {
  OrientResult tri = orientout(gr(kTriangle), 0, 1);
  std::vector<int> from = bfs_distances(tri.h, 0);
  std::vector<int> to = bfs_distances(tri.h, 0, true);
  CHECK(*std::max_element(from.begin(), from.end()) == 2);
  CHECK(*std::max_element(to.begin(), to.end()) == 2);

  OrientResult two = orientout(gr(kTwoCycleArcs), 0, 1);
  CHECK(two.h == gr(kTwoCycleArcs));
  CHECK(two.plan.empty());
}

TEST_CASE("orientout resolves the witness graph") {
  OrientResult res = orientout(gr(kConflictWitness), 0);
  CHECK(res.r == 3);
  CHECK(res.vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
  // The conflicted edge ends up directed toward the root by the in-path
  // splice.
  CHECK(res.h.edge(0) == Edge{0, 1, 0, EdgeKind::arc});
  OrientationPlan expected;
  expected.assign(0, 1, 0);
  CHECK(res.plan == expected);
}

TEST_CASE("the in-path tail splice carries an out-witnessed conflicted vertex into H") {
  // Vertex 4 is conflicted with no X_in certificate; its only route into
  // H is the tail of the in-path of terminal 5, behind the last out-tree
  // crossing. Dropping the tail splice would leave it outside H.
  MixedGraph g = gr(
      "n 8\ne 0 1\ne 0 4\na 0 5\na 5 6\na 6 7\na 7 1\na 0 2\na 2 3\na 4 3\na 3 0\na 6 4\n");
  REQUIRE(is_valid_input(g));
  StageState st = stage1_orient(stage0_normalize(g, 0));
  CHECK(st.x_in == std::vector<Vertex>{1, 3});
  CHECK(st.x_out == std::vector<Vertex>{2, 5});
  CHECK(st.x_conf == std::vector<Vertex>{4});
  CHECK_FALSE(check_original_observation(st).at(4));
  CHECK(check_corrected_observation(st).at(4));

  Stage2Result s2 = stage2_build(st);
  CHECK_FALSE(s2.t_out.vertices.count(4));
  REQUIRE(s2.cycles.size() == 2);
  CHECK(s2.cycles[1].terminal == 5);
  CHECK(s2.cycles[1].x == 5);
  CHECK(s2.cycles[1].y == 6);
  CHECK(s2.cycles[1].cycle == std::vector<Vertex>{0, 5, 6, 4, 0});

  OrientResult res = orientout(g, 0);
  CHECK(res.vertices == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("orientout output is deterministic") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    MixedGraph g = gen_valid(7, 3, 0.25, seed);
    OrientResult a = orientout(g, 0);
    OrientResult b = orientout(g, 0);
    CHECK(a.plan == b.plan);
    CHECK(a.h == b.h);
    CHECK(a.vertices == b.vertices);
  }
}

TEST_CASE("orientout contract holds across roots on generated graphs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    MixedGraph g = gen_valid(4 + seed % 6, seed % 4, 0.25 * (seed % 4), seed);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      OrientResult res = orientout(g, u);
      std::vector<int> from = bfs_distances(res.h, u);
      std::vector<int> to = bfs_distances(res.h, u, true);
      for (Vertex v : res.vertices) {
        REQUIRE(from[v] >= 0);
        REQUIRE(to[v] >= 0);
        CHECK(from[v] <= 2 * res.r);
        CHECK(to[v] <= 4 * res.r - 1);
      }
      std::vector<Vertex> hood = g.neighbors(u);
      CHECK(std::includes(res.vertices.begin(), res.vertices.end(), hood.begin(), hood.end()));
    }
  }
}

TEST_CASE("stage 0 preserves pairwise distances on generated graphs") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    MixedGraph g = gen_valid(4 + seed % 5, seed % 4, 0.25 * (seed % 4), seed);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      StageState st = stage0_normalize(g, u);
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        CHECK(bfs_distances(g, v) == bfs_distances(st.graph, v));
      }
    }
  }
}
