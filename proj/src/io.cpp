#include "morient/io.hpp"

#include <fstream>
#include <sstream>

namespace morient {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

bool payload_line(const std::string& line) {
  for (char c : line) {
    if (c == '#') return false;
    if (!std::isspace(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

}  // namespace

MixedGraph parse_graph(std::istream& is) {
  MixedGraph g;
  bool have_header = false;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!payload_line(line)) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (!have_header) {
      long long n = -1;
      if (tag != "n" || !(ls >> n)) parse_fail(line_no, "expected header `n <count>`");
      if (n <= 0) parse_fail(line_no, "vertex count must be positive");
      std::string rest;
      if (ls >> rest) parse_fail(line_no, "trailing tokens after header");
      g = MixedGraph(static_cast<int>(n));
      have_header = true;
      continue;
    }
    if (tag != "e" && tag != "a") parse_fail(line_no, "unknown line tag `" + tag + "`");
    long long u = -1, v = -1;
    if (!(ls >> u >> v)) parse_fail(line_no, "expected two vertex indices");
    std::string rest;
    if (ls >> rest) parse_fail(line_no, "trailing tokens after edge");
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count()) {
      parse_fail(line_no, "vertex index out of range");
    }
    if (u == v) parse_fail(line_no, "self-loop " + std::to_string(u));
    if (tag == "e") {
      g.add_undirected(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } else {
      g.add_arc(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  if (!have_header) throw std::runtime_error("line 1: missing `n <count>` header");
  return g;
}

MixedGraph parse_graph_text(const std::string& text) {
  std::istringstream is(text);
  return parse_graph(is);
}

MixedGraph load_graph(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open graph file " + path);
  try {
    return parse_graph(is);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string serialize_graph(const MixedGraph& g, std::span<const std::string> header_comments) {
  std::ostringstream out;
  for (const std::string& c : header_comments) out << "# " << c << "\n";
  out << "n " << g.vertex_count() << "\n";
  for (const Edge& e : g.edges()) {
    out << (e.kind == EdgeKind::undirected ? "e " : "a ") << e.a << " " << e.b << "\n";
  }
  return out.str();
}

OrientationPlan parse_plan(std::istream& is) {
  OrientationPlan plan;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!payload_line(line)) continue;
    std::istringstream ls(line);
    std::string tag;
    long long id = -1, t = -1, h = -1;
    ls >> tag;
    if (tag != "o" || !(ls >> id >> t >> h)) {
      parse_fail(line_no, "expected `o <edge-line-index> <tail> <head>`");
    }
    if (id < 0) parse_fail(line_no, "negative edge index");
    plan.assign(static_cast<int>(id), static_cast<Vertex>(t), static_cast<Vertex>(h));
  }
  return plan;
}

OrientationPlan parse_plan_text(const std::string& text) {
  std::istringstream is(text);
  return parse_plan(is);
}

OrientationPlan load_plan(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open plan file " + path);
  try {
    return parse_plan(is);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string serialize_plan(const OrientationPlan& plan) {
  std::ostringstream out;
  for (const auto& [id, dir] : plan.assignments) {
    out << "o " << id << " " << dir.first << " " << dir.second << "\n";
  }
  return out.str();
}

void save_text(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write file " + path);
  os << content;
}

}  // namespace morient
