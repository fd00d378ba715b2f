#include "morient/corpus.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "morient/io.hpp"
#include "morient/oracle.hpp"

namespace morient {

MixedGraph corpus_graph(int seed) {
  int n = 3 + seed % 10;
  int extra = (seed / 10) % 5;
  double frac = 0.25 * ((seed / 50) % 4);
  return gen_valid(n, extra, frac, static_cast<std::uint64_t>(seed));
}

std::string report_csv_header() {
  return "n,m_undirected,m_arcs,r,eta,oriented_radius,bound_f,bound_eta,"
         "within_f,within_eta,iterations,seconds";
}

namespace {

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

std::string format_bound(double b) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", b);
  return buf;
}

}  // namespace

std::string format_report_row(int n, int m_undirected, int m_arcs, const DriverReport& rep,
                              double seconds) {
  std::ostringstream row;
  row << n << "," << m_undirected << "," << m_arcs << "," << rep.input_radius.str() << ","
      << rep.eta_value.str() << "," << rep.oriented_radius.str() << ","
      << format_bound(rep.bound_f) << "," << format_bound(rep.bound_eta) << ","
      << (rep.within_f ? 1 : 0) << "," << (rep.within_eta ? 1 : 0) << "," << rep.iterations
      << "," << format_seconds(seconds);
  return row.str();
}

ReportResult run_report(int num_seeds, bool timing, const std::string& violations_dir) {
  ReportResult out;
  std::ostringstream csv;
  csv << report_csv_header() << "\n";
  int within_f = 0, within_eta = 0;
  if (!violations_dir.empty()) std::filesystem::create_directories(violations_dir);

  for (int seed = 1; seed <= num_seeds; ++seed) {
    MixedGraph g = corpus_graph(seed);
    auto t0 = std::chrono::steady_clock::now();
    auto [plan, rep] = orient_full(g);
    double secs = timing ? std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                               .count()
                         : 0.0;
    ReportRow row{seed,
                  g.vertex_count(),
                  g.undirected_count(),
                  g.edge_count() - g.undirected_count(),
                  rep,
                  plan,
                  secs};
    csv << format_report_row(row.n, row.m_undirected, row.m_arcs, rep, secs) << "\n";
    within_f += rep.within_f;
    within_eta += rep.within_eta;
    if (!rep.within_f || !rep.within_eta) {
      ++out.bound_violations;
      if (!violations_dir.empty()) {
        std::string stem = violations_dir + "/seed_" + std::to_string(seed);
        std::vector<std::string> header{"bound violation reproducer, seed " +
                                        std::to_string(seed)};
        save_text(stem + ".g", serialize_graph(g, header));
        save_text(stem + ".plan", serialize_plan(plan));
      }
    }
    out.rows.push_back(std::move(row));
  }
  out.csv = csv.str();
  out.fraction_within_f = num_seeds ? static_cast<double>(within_f) / num_seeds : 0;
  out.fraction_within_eta = num_seeds ? static_cast<double>(within_eta) / num_seeds : 0;
  return out;
}

}  // namespace morient
