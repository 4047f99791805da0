#include "hullmorse/io.hpp"

#include <sstream>

#include "hullmorse/error.hpp"

namespace hullmorse {

GraphFormat parse_graph_format(const std::string& name) {
  if (name == "edgelist") return GraphFormat::kEdgeList;
  if (name == "g6" || name == "graph6") return GraphFormat::kGraph6;
  fail(ErrorKind::kInvalidInput, "unknown graph format '" + name + "' (expected edgelist or g6)");
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n = -1, m = -1;
  require(static_cast<bool>(in >> n >> m), ErrorKind::kInvalidInput, "edge list: expected header 'n m'");
  require(n >= 0 && n <= kMaxVertices, ErrorKind::kInvalidInput,
          "edge list: vertex count must be between 0 and " + std::to_string(kMaxVertices));
  require(m >= 0 && m <= n * (n - 1) / 2, ErrorKind::kInvalidInput, "edge list: impossible edge count");
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    require(static_cast<bool>(in >> u >> v), ErrorKind::kInvalidInput,
            "edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    require(0 <= u && u < v && v < n, ErrorKind::kInvalidInput,
            "edge list: edge " + std::to_string(u) + " " + std::to_string(v) + " must satisfy 0 <= u < v < n");
    require(!g.adjacent(static_cast<int>(u), static_cast<int>(v)), ErrorKind::kInvalidInput,
            "edge list: repeated edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  require(!(in >> rest), ErrorKind::kInvalidInput, "edge list: trailing data '" + rest + "'");
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  const auto edges = g.edges();
  os << g.universe() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph parse_graph6(const std::string& raw) {
  std::string line = raw;
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' ')) line.pop_back();
  if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
  require(!line.empty(), ErrorKind::kInvalidInput, "graph6: empty string");
  for (char c : line)
    require(c >= 63 && c <= 126, ErrorKind::kInvalidInput, "graph6: character out of range");
  std::size_t at = 0;
  long long n = line[at++] - 63;
  if (n == 63) {
    require(line.size() >= 4 && line[1] != 126, ErrorKind::kInvalidInput, "graph6: unsupported large header");
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | (line[at++] - 63);
  }
  require(n <= kMaxVertices, ErrorKind::kInvalidInput, "graph6: too many vertices");
  const long long bits = n * (n - 1) / 2;
  require(static_cast<long long>(line.size() - at) == (bits + 5) / 6, ErrorKind::kInvalidInput,
          "graph6: length does not match vertex count");
  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k) {
      const int word = line[at + k / 6] - 63;
      if ((word >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.universe();
  require(g.vertex_count() == n, ErrorKind::kInvalidInput, "graph6: vertex set must be 0..n-1");
  std::string out(1, static_cast<char>(63 + n));
  int word = 0, filled = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      word = (word << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + word));
        word = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (word << (6 - filled))));
  return out;
}

std::vector<Graph> read_graphs(std::istream& in, GraphFormat format) {
  std::vector<Graph> out;
  if (format == GraphFormat::kEdgeList) {
    std::ostringstream all;
    all << in.rdbuf();
    out.push_back(parse_edge_list(all.str()));
    return out;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace hullmorse
