#include "chibound/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "chibound/errors.hpp"

namespace chibound::io {
namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

Graph assemble(int n, const std::vector<Edge>& edges, const std::vector<int>& lines) {
  // Endpoint errors are reported as parse errors with the offending line.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(lines[i], "endpoint outside [0," + std::to_string(n) + ")");
    if (u == v) fail(lines[i], "self-loop at vertex " + std::to_string(u));
  }
  return Graph::from_edge_list(n, edges);
}

} // namespace

Graph read_dimacs(std::istream& in) {
  int n = -1;
  std::vector<Edge> edges;
  std::vector<int> lines;
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (blank(line)) continue;
    std::istringstream iss(line);
    std::string tag;
    iss >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) fail(ln, "duplicate problem line");
      std::string kind;
      long long nv = -1;
      long long ne = -1;
      iss >> kind >> nv >> ne;
      if (!iss || (kind != "edge" && kind != "edges" && kind != "col"))
        fail(ln, "expected `p edge <n> <m>`");
      if (nv < 0 || ne < 0) fail(ln, "negative size in problem line");
      n = static_cast<int>(nv);
    } else if (tag == "e") {
      if (n < 0) fail(ln, "edge before problem line");
      long long u = 0;
      long long v = 0;
      iss >> u >> v;
      if (!iss) fail(ln, "expected `e <u> <v>`");
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      lines.push_back(ln);
    } else {
      fail(ln, "unknown line type `" + tag + "`");
    }
  }
  if (n < 0) fail(ln, "missing problem line");
  return assemble(n, edges, lines);
}

void write_dimacs(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << "p edge " << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph read_edgelist(std::istream& in) {
  int n = -1;
  std::vector<Edge> edges;
  std::vector<int> lines;
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (blank(line)) continue;
    std::istringstream iss(line);
    if (n < 0) {
      long long nv = -1;
      iss >> nv;
      if (!iss || nv < 0) fail(ln, "expected vertex count");
      std::string rest;
      if (iss >> rest) fail(ln, "trailing tokens after vertex count");
      n = static_cast<int>(nv);
      continue;
    }
    long long u = 0;
    long long v = 0;
    iss >> u >> v;
    if (!iss) fail(ln, "expected `<u> <v>`");
    std::string rest;
    if (iss >> rest) fail(ln, "trailing tokens after edge");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    lines.push_back(ln);
  }
  if (n < 0) fail(ln, "missing vertex count");
  return assemble(n, edges, lines);
}

void write_edgelist(std::ostream& out, const Graph& g) {
  out << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Format detect_format(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  return (ext == ".col" || ext == ".dimacs") ? Format::dimacs : Format::edgelist;
}

Format parse_format(const std::string& name) {
  if (name == "dimacs") return Format::dimacs;
  if (name == "edgelist") return Format::edgelist;
  throw ParseError("unknown format `" + name + "` (expected dimacs or edgelist)");
}

Graph read_graph(const std::filesystem::path& path, Format format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return format == Format::dimacs ? read_dimacs(in) : read_edgelist(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Graph read_graph(const std::filesystem::path& path) { return read_graph(path, detect_format(path)); }

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  write_dimacs(out, g);
  return out.str();
}

} // namespace chibound::io
