#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "morient/graph.hpp"

namespace morient {

// Graph file format, line oriented:
//   # comment            ignored, as are blank lines
//   n <count>            first payload line, vertices 0..count-1
//   e <u> <v>            undirected edge
//   a <t> <h>            arc t -> h
// Repeated lines add parallel instances. Edge ids equal the 0-based
// position among edge lines. Errors name the offending line.
MixedGraph parse_graph(std::istream& is);
MixedGraph parse_graph_text(const std::string& text);
MixedGraph load_graph(const std::string& path);

std::string serialize_graph(const MixedGraph& g,
                            std::span<const std::string> header_comments = {});

// Orientation plan file: lines `o <edge-line-index> <tail> <head>`.
// The index refers to the graph file the plan was produced for.
OrientationPlan parse_plan(std::istream& is);
OrientationPlan parse_plan_text(const std::string& text);
OrientationPlan load_plan(const std::string& path);

std::string serialize_plan(const OrientationPlan& plan);

void save_text(const std::string& path, const std::string& content);

}  // namespace morient
