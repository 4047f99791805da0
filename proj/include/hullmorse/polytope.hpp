#pragma once

// Edge polytopes: rule-based facets, the face lattice built by meet-closure,
// an exact geometric cross-check, and incidence signs.

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hullmorse/graph.hpp"

namespace hullmorse {

/// Faces are sets of generator edges, as bitmasks over a sorted edge list.
using EdgeSet = std::uint64_t;
inline constexpr int kMaxEdges = 64;

inline int edge_set_size(EdgeSet s) { return std::popcount(s); }
inline bool edges_subset(EdgeSet a, EdgeSet b) { return (a & ~b) == 0; }

/// The sorted edge list of a graph, fixing the bit assigned to each generator.
class EdgeIndex {
 public:
  EdgeIndex() = default;
  explicit EdgeIndex(const Graph& g);
  explicit EdgeIndex(std::vector<Edge> sorted_edges);

  std::span<const Edge> edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  int index_of(Edge e) const;  // -1 when absent
  EdgeSet all() const;
  EdgeSet mask_of(std::span<const Edge> edges) const;
  EdgeSet mask_of(const Graph& sub) const;
  std::vector<Edge> edges_of(EdgeSet s) const;
  /// Union of endpoints, i.e. the squarefree lcm of the generators.
  VertexSet support(EdgeSet s) const;

 private:
  std::vector<Edge> edges_;
};

struct LatticePoint {
  std::vector<int> coords;  // e_i + e_j
  Edge edge() const;
};

std::vector<LatticePoint> polytope_vertices(const Graph& g);

/// Dimension of the affine hull; -1 for no points.
int affine_dim(std::span<const LatticePoint> points);
/// Same, for the generator points of an edge set.
int affine_dim_of_edges(std::span<const Edge> edges, int universe);

struct Face {
  EdgeSet gens = 0;
  int dim = -1;
};

struct Cover {
  int upper = 0;
  int lower = 0;
  int sign = 0;  // +1/-1 once incidence signs are assigned
};

/// Face poset of an edge polytope including the empty face.
struct FaceLattice {
  int universe = 0;
  EdgeIndex index;
  std::vector<Face> faces;    // sorted by (dim, gens)
  std::vector<Cover> covers;  // sorted by (upper, lower)
  std::vector<std::vector<int>> down;  // face -> cover ids with that face as upper
  std::vector<std::vector<int>> up;    // face -> cover ids with that face as lower
  std::unordered_map<EdgeSet, int> lookup;

  int size() const { return static_cast<int>(faces.size()); }
  int find(EdgeSet gens) const;  // -1 when absent
  int top() const { return size() - 1; }
  int dim() const { return faces.empty() ? -1 : faces.back().dim; }
  bool is_signed() const;
  std::size_t count_of_dim(int d) const;
};

/// Build a lattice from a closed family of generator sets (which must include
/// the empty set and the full set); dimensions come from exact ranks.
FaceLattice make_lattice(int universe, EdgeIndex index, std::vector<EdgeSet> family);

/// Facets of P_G for connected g with an edge, from ordinary/regular vertices
/// and acceptable/fundamental sets. Generator sets are relative to EdgeIndex(g).
std::vector<Face> facets_connected(const Graph& g);

/// Full face lattice (unsigned). Disconnected graphs are handled as joins of
/// the component lattices; edgeless graphs give the lattice {empty face}.
FaceLattice face_lattice(const Graph& g);

/// Exact test that the generator points of s are exactly the polytope
/// vertices on some face of P_G, via an exact supporting-hyperplane LP.
bool geometric_face_oracle(const Graph& g, EdgeSet s);

/// Facets found by brute force over affinely independent point subsets and
/// the hyperplanes they span; independent of the facet rules.
std::vector<EdgeSet> geometric_facets(const Graph& g);

/// Assign signs to covering pairs so that the boundary squares to zero.
FaceLattice incidence_signs(FaceLattice lat);

/// Whether the signed boundary composes to zero on every (d+2, d) pair.
bool boundary_squares_to_zero(const FaceLattice& lat);

std::string lattice_to_json(const FaceLattice& lat);
std::string lattice_to_dot(const FaceLattice& lat);

}  // namespace hullmorse
