#pragma once

// The graph F(gbar, S): subdivide every edge of S, then contract each vertex of
// degree one or two into an incident subdivided edge.

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hullmorse/graph.hpp"

namespace hullmorse {

/// A node of F: either a surviving vertex of gbar or a subdivided edge of S.
struct FNode {
  enum class Kind : std::uint8_t { kVertex = 0, kEdge = 1 };

  Kind kind = Kind::kVertex;
  Edge edge;  // for kVertex both endpoints hold the vertex

  static FNode vertex(Vertex v) {
    FNode n;
    n.kind = Kind::kVertex;
    n.edge.u = n.edge.v = v;
    return n;
  }
  static FNode subdivided(Edge e) { return FNode{Kind::kEdge, e}; }

  bool is_vertex() const { return kind == Kind::kVertex; }
  Vertex as_vertex() const { return edge.u; }
  std::string to_string() const;

  friend auto operator<=>(const FNode&, const FNode&) = default;
};

/// Undirected multigraph with loops; kept canonical (sorted nodes, sorted edge
/// multiset) so that structural equality is operator==.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::vector<FNode> nodes, std::vector<std::pair<FNode, FNode>> edges);

  const std::vector<FNode>& nodes() const { return nodes_; }
  /// Node index pairs (a <= b); a == b is a loop.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int find(const FNode& n) const;  // -1 when absent
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int euler_characteristic() const { return node_count() - edge_count(); }
  int component_count() const;
  /// Node indices per component, components ordered by smallest node.
  std::vector<std::vector<int>> component_nodes() const;
  bool is_simple() const;
  /// Loops count twice.
  int degree(int node) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::vector<FNode> nodes_;
  std::vector<std::pair<int, int>> edges_;
};

/// For each vertex of degree one or two, the S-edge it contracts into.
using ContractionChoice = std::function<Edge(Vertex v, std::span<const Edge> candidates)>;

/// Subdivide-and-contract construction; each low-degree vertex contracts into
/// its lowest incident S-edge.
Multigraph f_graph(const Graph& gbar, std::span<const Edge> s);
Multigraph f_graph(const Graph& gbar, std::span<const Edge> s, const ContractionChoice& choice);

/// The explicit four-clause adjacency description of F (always simple).
Multigraph f_graph_described(const Graph& gbar, std::span<const Edge> s);

}  // namespace hullmorse
