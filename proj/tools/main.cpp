#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "morient/corpus.hpp"
#include "morient/cycles.hpp"
#include "morient/driver.hpp"
#include "morient/io.hpp"
#include "morient/metrics.hpp"
#include "morient/oracle.hpp"
#include "morient/orientout.hpp"

namespace fs = std::filesystem;
using namespace morient;

namespace {

std::string join_vertices(const std::vector<Vertex>& vs) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
  out << "}";
  return out.str();
}

void cmd_radius(const std::string& path) {
  MixedGraph g = load_graph(path);
  RadiusCenter rc = radius_center(g);
  std::cout << "radius " << rc.radius.str() << ", centers " << join_vertices(rc.centers)
            << "\n";
  std::cout << "eta " << eta(g).str() << "\n";
}

void dump_stages(const OrientTrace& tr, const std::string& dir, bool mirrored) {
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const MixedGraph& g, const std::string& label) {
    std::vector<std::string> header{label};
    save_text((fs::path(dir) / name).string(),
              serialize_graph(mirrored ? reverse(g) : g, header));
  };
  std::string suffix = mirrored ? " (orientin mirror, shown in input orientation)" : "";
  write("stage0.g", tr.state0.graph, "stage 0" + suffix);
  write("stage1.g", tr.state1.graph, "stage 1" + suffix);
  write("stage2.g", tr.stage2.g2, "stage 2" + suffix);
  write("stage3.g", tr.stage2.g3, "stage 3" + suffix);
  write("h.g", tr.result.h, "stage H" + suffix);
}

void print_orient_summary(const char* name, bool out_tree, const MixedGraph& g,
                          const OrientResult& res, Vertex root) {
  std::vector<int> from = bfs_distances(res.h, root);
  std::vector<int> to = bfs_distances(res.h, root, true);
  int max_from = 0, max_to = 0;
  for (Vertex v : res.vertices) {
    max_from = std::max(max_from, from[v]);
    max_to = std::max(max_to, to[v]);
  }
  int tight = 2 * res.r, loose = std::max(0, 4 * res.r - 1);
  std::cout << name << ": root " << root << ", r " << res.r << ", |V(H)| "
            << res.vertices.size() << "/" << g.vertex_count() << ", oriented edges "
            << res.plan.size() << "\n";
  std::cout << "max d(u,.) " << max_from << " (bound " << (out_tree ? tight : loose)
            << "), max d(.,u) " << max_to << " (bound " << (out_tree ? loose : tight)
            << ")\n";
}

void cmd_orient_one(bool out_tree, const std::string& path, Vertex root, int r_flag,
                    const std::string& out_path, const std::string& stages_dir) {
  MixedGraph g = load_graph(path);
  std::optional<int> r;
  if (r_flag >= 0) r = r_flag;
  OrientTrace tr = orientout_traced(out_tree ? g : reverse(g), root, r);
  OrientResult res = tr.result;
  if (!out_tree) {
    OrientResult flipped;
    flipped.root = root;
    flipped.r = res.r;
    flipped.vertices = res.vertices;
    flipped.h = reverse(res.h);
    for (const auto& [id, dir] : res.plan.assignments) {
      flipped.plan.assign(id, dir.second, dir.first);
    }
    res = flipped;
  }
  print_orient_summary(out_tree ? "orientout" : "orientin", out_tree, g, res, root);
  if (!stages_dir.empty()) dump_stages(tr, stages_dir, !out_tree);
  std::string plan_text = serialize_plan(res.plan);
  if (out_path.empty()) {
    std::cout << plan_text;
  } else {
    save_text(out_path, plan_text);
    std::cout << "plan written to " << out_path << "\n";
  }
}

void cmd_orient(const std::string& path, const std::string& out_path,
                const std::string& report_path) {
  MixedGraph g = load_graph(path);
  auto t0 = std::chrono::steady_clock::now();
  auto [plan, rep] = orient_full(g);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "oriented " << plan.size() << " edges in " << rep.iterations
            << " iterations; radius " << rep.oriented_radius.str() << " (bounds f "
            << rep.bound_f << ", eta " << rep.bound_eta << ")\n";
  for (const IterationLog& it : rep.log) {
    std::cout << "  root " << it.root << " |V(H)| " << it.h_size << "\n";
  }
  std::string plan_text = serialize_plan(plan);
  if (out_path.empty()) {
    std::cout << plan_text;
  } else {
    save_text(out_path, plan_text);
    std::cout << "plan written to " << out_path << "\n";
  }
  if (!report_path.empty()) {
    save_text(report_path, report_csv_header() + "\n" +
                               format_report_row(g.vertex_count(), g.undirected_count(),
                                                 g.edge_count() - g.undirected_count(), rep,
                                                 secs) +
                               "\n");
    std::cout << "report written to " << report_path << "\n";
  }
}

void cmd_verify(const std::string& graph_path, const std::string& plan_path) {
  MixedGraph g = load_graph(graph_path);
  OrientationPlan plan = load_plan(plan_path);
  DriverReport rep = verify_orientation(g, plan);
  std::cout << "strongly_connected " << (rep.strongly_connected ? 1 : 0) << "\n";
  std::cout << "oriented radius " << rep.oriented_radius.str() << "\n";
  std::cout << "r " << rep.input_radius.str() << ", eta " << rep.eta_value.str() << "\n";
  std::cout << "within_f " << (rep.within_f ? 1 : 0) << " (bound " << rep.bound_f << ")\n";
  std::cout << "within_eta " << (rep.within_eta ? 1 : 0) << " (bound " << rep.bound_eta
            << ")\n";
}

void cmd_brute(const std::string& path, int cap) {
  MixedGraph g = load_graph(path);
  BruteResult res = brute_oriented_radius(g, cap);
  std::cout << "oriented radius " << res.radius.str() << "\n";
  if (res.radius.is_finite()) std::cout << serialize_plan(res.plan);
}

void cmd_gen(int n, int extra, double frac, std::uint64_t seed, const std::string& out_path) {
  MixedGraph g = gen_valid(n, extra, frac, seed);
  std::ostringstream label;
  label << "gen n=" << n << " extra=" << extra << " dir-frac=" << frac << " seed=" << seed;
  std::vector<std::string> header{label.str()};
  std::string text = serialize_graph(g, header);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    save_text(out_path, text);
    std::cout << "graph written to " << out_path << "\n";
  }
}

void cmd_hunt(const HuntOptions& opts, const std::string& out_dir) {
  std::vector<HuntResult> results = hunt_counterexample(opts);
  std::cout << "hunt found " << results.size() << " witnesses up to n=" << opts.max_n << "\n";
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    std::ostringstream index;
    index << "n,edges,root,original_obs,corrected_obs,file\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const HuntResult& hr = results[i];
      char name[32];
      std::snprintf(name, sizeof name, "hunt_%04zu.g", i);
      std::ostringstream label;
      label << "root " << hr.root << " x_in " << join_vertices(hr.x_in) << " x_out "
            << join_vertices(hr.x_out) << " x_conf " << join_vertices(hr.x_conf);
      std::vector<std::string> header{label.str()};
      save_text((fs::path(out_dir) / name).string(), serialize_graph(hr.graph, header));
      index << hr.graph.vertex_count() << "," << hr.graph.edge_count() << "," << hr.root << ","
            << (hr.original_obs_holds ? 1 : 0) << "," << (hr.corrected_obs_holds ? 1 : 0)
            << "," << name << "\n";
    }
    save_text((fs::path(out_dir) / "index.csv").string(), index.str());
    std::cout << "witnesses written to " << out_dir << "\n";
  }
}

void cmd_report(int seeds, const std::string& out_path, const std::string& violations_dir,
                bool timing) {
  ReportResult res = run_report(seeds, timing, violations_dir);
  save_text(out_path, res.csv);
  std::cout << "report for " << seeds << " instances written to " << out_path << "\n";
  std::cout << "within_f " << res.fraction_within_f * 100 << "%, within_eta "
            << res.fraction_within_eta * 100 << "%, bound violations " << res.bound_violations
            << "\n";
  if (res.bound_violations > 0 && !violations_dir.empty()) {
    std::cout << "reproducers in " << violations_dir << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orientation toolkit for strongly connected bridgeless mixed multigraphs"};
  app.require_subcommand(1);

  std::string graph_path, plan_path, out_path, report_path, stages_dir, violations_dir;
  Vertex root = 0;
  int r_flag = -1, cap = 20, gen_n = 5, gen_extra = 0, seeds = 1000;
  double gen_frac = 0.0;
  std::uint64_t gen_seed = 1;
  bool timing = false;
  HuntOptions hunt_opts;
  std::string hunt_dir;

  CLI::App* radius = app.add_subcommand("radius", "radius, centers and eta of a graph");
  radius->add_option("graph", graph_path)->required();

  CLI::App* oout = app.add_subcommand("orientout", "orient a subgraph around a root");
  oout->add_option("graph", graph_path)->required();
  oout->add_option("--root", root, "root vertex")->required();
  oout->add_option("--r", r_flag, "eccentricity bound (default: computed)");
  oout->add_option("--out", out_path, "plan output file");
  oout->add_option("--dump-stages", stages_dir, "directory for per-stage graph dumps");

  CLI::App* oin = app.add_subcommand("orientin", "mirrored orientation around a root");
  oin->add_option("graph", graph_path)->required();
  oin->add_option("--root", root)->required();
  oin->add_option("--r", r_flag);
  oin->add_option("--out", out_path);
  oin->add_option("--dump-stages", stages_dir);

  CLI::App* orient = app.add_subcommand("orient", "orient every undirected edge");
  orient->add_option("graph", graph_path)->required();
  orient->add_option("--out", out_path, "plan output file");
  orient->add_option("--report", report_path, "single-row report CSV");

  CLI::App* verify = app.add_subcommand("verify", "apply a plan and report the result");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("plan", plan_path)->required();

  CLI::App* brute = app.add_subcommand("brute", "exhaustive optimal oriented radius");
  brute->add_option("graph", graph_path)->required();
  brute->add_option("--cap", cap, "max undirected edges to enumerate");

  CLI::App* gen = app.add_subcommand("gen", "generate a valid input graph");
  gen->add_option("--n", gen_n)->required();
  gen->add_option("--extra", gen_extra);
  gen->add_option("--dir-frac", gen_frac);
  gen->add_option("--seed", gen_seed);
  gen->add_option("--out", out_path);

  CLI::App* hunt = app.add_subcommand("hunt", "search small graphs for conflict witnesses");
  hunt->add_option("--max-n", hunt_opts.max_n);
  hunt->add_option("--max-edges", hunt_opts.max_edges);
  hunt->add_option("--layer-budget", hunt_opts.layer_budget,
                   "assignment cap per layer above the exhaustive limit");
  hunt->add_option("--exhaustive-n", hunt_opts.exhaustive_max_n);
  hunt->add_option("--out", hunt_dir, "directory for witness files and index.csv");

  std::string report_out = "report.csv";
  CLI::App* report = app.add_subcommand("report", "run the evaluation corpus");
  report->add_option("--seeds", seeds);
  report->add_option("--out", report_out);
  report->add_option("--violations", violations_dir, "reproducer directory");
  report->add_flag("--timing", timing, "real per-instance seconds (breaks reproducibility)");

  try {
    app.parse(argc, argv);
    if (radius->parsed()) cmd_radius(graph_path);
    if (oout->parsed()) cmd_orient_one(true, graph_path, root, r_flag, out_path, stages_dir);
    if (oin->parsed()) cmd_orient_one(false, graph_path, root, r_flag, out_path, stages_dir);
    if (orient->parsed()) cmd_orient(graph_path, out_path, report_path);
    if (verify->parsed()) cmd_verify(graph_path, plan_path);
    if (brute->parsed()) cmd_brute(graph_path, cap);
    if (gen->parsed()) cmd_gen(gen_n, gen_extra, gen_frac, gen_seed, out_path);
    if (hunt->parsed()) cmd_hunt(hunt_opts, hunt_dir);
    if (report->parsed()) cmd_report(seeds, report_out, violations_dir, timing);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ContractViolation& e) {
    std::string dump_path = "morient_violation_dump.txt";
    try {
      save_text(dump_path, e.dump());
      std::cerr << "contract violation: " << e.what() << "\ndiagnostic dump: " << dump_path
                << "\n";
    } catch (...) {
      std::cerr << "contract violation: " << e.what() << "\n" << e.dump() << "\n";
    }
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
