#pragma once

#include <string>
#include <vector>

#include "morient/driver.hpp"
#include "morient/graph.hpp"

namespace morient {

// The reproducible evaluation corpus: seed s yields gen_valid with
//   n = 3 + (s mod 10), extra = (s / 10) mod 5, frac = 0.25 * ((s / 50) mod 4).
MixedGraph corpus_graph(int seed);

struct ReportRow {
  int seed;
  int n;
  int m_undirected;
  int m_arcs;
  DriverReport report;
  OrientationPlan plan;
  double seconds;
};

struct ReportResult {
  std::vector<ReportRow> rows;
  std::string csv;  // header + one row per seed, schema fixed
  int bound_violations = 0;
  double fraction_within_f = 0;
  double fraction_within_eta = 0;
};

// Runs orient_full over seeds 1..num_seeds and assembles the report CSV.
// Timing is off by default so identical seeds give byte-identical CSVs;
// with it on the seconds column carries wall-clock times. When
// `violations_dir` is non-empty, every bound violation ships a reproducer
// (graph plus plan file) there.
ReportResult run_report(int num_seeds, bool timing = false,
                        const std::string& violations_dir = {});

std::string report_csv_header();
std::string format_report_row(int n, int m_undirected, int m_arcs, const DriverReport& rep,
                              double seconds);

}  // namespace morient
