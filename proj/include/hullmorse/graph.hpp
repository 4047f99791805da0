#pragma once

// Simple graphs on labeled vertices plus the neighborhood constructions used
// to describe facets of edge polytopes.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hullmorse {

using Vertex = int;
using VertexSet = std::uint32_t;
inline constexpr int kMaxVertices = 32;

inline VertexSet singleton(Vertex v) { return VertexSet{1} << v; }
inline bool contains(VertexSet s, Vertex v) { return ((s >> v) & 1u) != 0; }
inline bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }
inline int set_size(VertexSet s) { return std::popcount(s); }
inline Vertex lowest(VertexSet s) { return std::countr_zero(s); }

std::vector<Vertex> members(VertexSet s);
VertexSet make_set(std::initializer_list<Vertex> vs);
std::string set_to_string(VertexSet s);

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  VertexSet ends() const { return singleton(u) | singleton(v); }
  bool has(Vertex x) const { return x == u || x == v; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A finite simple graph whose vertices are a subset of 0..universe-1.
/// Labels survive induced subgraphs, so subgraphs of one ambient graph can be
/// compared and intersected directly.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int universe);
  Graph(int universe, VertexSet vertices);
  Graph(int universe, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  static Graph from_edges(int universe, std::span<const Edge> edges);
  static Graph from_edges(int universe, VertexSet vertices, std::span<const Edge> edges);

  int universe() const { return n_; }
  VertexSet vertex_set() const { return verts_; }
  int vertex_count() const { return set_size(verts_); }
  std::vector<Vertex> vertices() const { return members(verts_); }
  bool has_vertex(Vertex v) const { return v >= 0 && v < n_ && contains(verts_, v); }

  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return set_size(adj_[v]); }
  bool adjacent(Vertex a, Vertex b) const { return contains(adj_[a], b); }
  bool has_edge(Edge e) const { return has_vertex(e.u) && adjacent(e.u, e.v); }

  std::vector<Edge> edges() const;
  int edge_count() const;

  void add_edge(Vertex a, Vertex b);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  VertexSet verts_ = 0;
  std::vector<VertexSet> adj_;
};

Graph complement(const Graph& g);
Graph induced(const Graph& g, VertexSet u);
Graph remove_vertex(const Graph& g, Vertex v);
Graph intersection(const Graph& a, const Graph& b);
Graph graph_union(const Graph& a, const Graph& b);
/// Disjoint union; b's vertices are shifted past a's universe.
Graph disjoint_union(const Graph& a, const Graph& b);

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_independent(const Graph& g, VertexSet u);
VertexSet isolated_vertices(const Graph& g);

struct GraphPredicates {
  bool connected = false;
  bool bipartite = false;
  bool triangle_free = false;
  std::vector<VertexSet> components;
  std::map<int, VertexSet> degree_classes;  // degree -> V_i
};

GraphPredicates predicates(const Graph& g);

// Common families, all on vertices 0..n-1.
Graph path_graph(int vertices);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // center 0
Graph petersen_graph();

/// N_G(x), C_G(x) and NC_G(x) = N_G(x) ∪ C_G(x).
struct NeighborhoodTriple {
  Graph n_part;
  Graph c_part;
  Graph nc;
};

NeighborhoodTriple neighborhood_of_vertex(const Graph& g, Vertex v);
/// Union of the stars of the members; u must be a nonempty independent set.
NeighborhoodTriple neighborhood_of_set(const Graph& g, VertexSet u);
/// e must be an edge of the complement of g.
NeighborhoodTriple neighborhood_of_complement_edge(const Graph& g, Edge e);

struct FundamentalData {
  VertexSet ordinary = 0;
  VertexSet regular = 0;
  std::vector<VertexSet> acceptable_sets;
  std::vector<VertexSet> fundamental_sets;
  VertexSet fundamental_vertices = 0;
  std::vector<Edge> fundamental_edges;  // edges of the complement
};

/// Exhaustive classification over all nonempty independent sets.
FundamentalData classify_sets(const Graph& g);

/// Degree and common-neighbor criteria; requires a triangle-free complement.
/// Fills fundamental_vertices, fundamental_edges and fundamental_sets only.
FundamentalData fundamentality_fast(const Graph& g);

std::optional<VertexSet> two_disjoint_induced_cycles(const Graph& gbar);

}  // namespace hullmorse
