#pragma once

#include <string>

#include "morient/io.hpp"

inline morient::MixedGraph gr(const std::string& text) {
  return morient::parse_graph_text(text);
}

inline const char* kTriangle = "n 3\ne 0 1\ne 1 2\ne 2 0\n";
inline const char* kTwoCycleArcs = "n 2\na 0 1\na 1 0\n";
inline const char* kPath3 = "n 3\ne 0 1\ne 1 2\n";
inline const char* kSquare = "n 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n";
inline const char* kDirectedTriangle = "n 3\na 0 1\na 1 2\na 2 0\n";

// Five-vertex witness of the stage-1 conflict phenomenon, hand-traced:
// at root 0 the partition comes out X_in={2}, X_out={3}, X_conf={1}, the
// original observation fails (vertex 2 has a direct access arc) and the
// corrected one holds through witness 3.
inline const char* kConflictWitness =
    "n 5\n"
    "e 0 1\n"
    "a 1 2\n"
    "a 2 0\n"
    "a 0 2\n"
    "a 0 3\n"
    "a 3 4\n"
    "a 4 1\n";
