#pragma once

// The labeled hull complex of an edge ideal, its label classes, and the
// combinatorial description of M_G through the graph F.

#include <map>
#include <string>
#include <vector>

#include "hullmorse/fgraph.hpp"
#include "hullmorse/graph.hpp"
#include "hullmorse/polytope.hpp"

namespace hullmorse {

/// Signed face lattice of P_G with labels l(face) = union of generator ends.
struct LabeledComplex {
  Graph graph;
  FaceLattice lattice;
  std::vector<VertexSet> labels;                  // per face
  std::map<VertexSet, std::vector<int>> by_label;  // label -> faces, ascending
  bool degenerate = false;                         // edgeless input: only the empty face

  int size() const { return lattice.size(); }
  int dim(int face) const { return lattice.faces[face].dim; }
  EdgeSet gens(int face) const { return lattice.faces[face].gens; }
};

/// Throws degenerate-input on an edgeless graph unless allow_degenerate is
/// set, in which case the conventional complex {empty face} comes back.
LabeledComplex hull_complex(const Graph& g, bool allow_degenerate = false);

struct ClassFactor {
  VertexSet vertices = 0;  // one component of G[u]
  std::vector<int> cells;  // ambient faces labeled exactly `vertices`
};

/// Faces with one fixed label, with their product decomposition over the
/// components of G[support]. Cells are ambient face indices.
struct LabelClass {
  VertexSet support = 0;
  std::vector<int> cells;                  // ascending (dim, gens)
  std::vector<std::pair<int, int>> covers;  // (upper, lower) inside the class
  std::vector<ClassFactor> factors;

  bool empty() const { return cells.empty(); }
  int size() const { return static_cast<int>(cells.size()); }
};

LabelClass label_class(const LabeledComplex& hc, VertexSet u);
/// The full-support class M_G; {empty face} for an edgeless graph, empty
/// when some vertex is isolated.
LabelClass mg(const LabeledComplex& hc);

struct PairType {
  int tag = 0;  // 1..11
  VertexSet first = 0;
  VertexSet second = 0;
  bool in_mg = false;
};

/// Membership of P_NC(a) ∩ P_NC(b) in M_G according to the pair-type table.
bool pair_table_in_mg(int tag);

/// Requires a connected, non-bipartite g with triangle-free complement; a and
/// b distinct fundamental sets. Membership is computed from the table and
/// from the intersection graph, and the two must agree.
PairType classify_pair(const Graph& g, VertexSet a, VertexSet b);

/// M_G rebuilt from F(complement(g), S_G) and checked against the polytope.
struct MFromF {
  Multigraph f;
  std::vector<EdgeSet> node_cells;  // facet generators per F node
  std::vector<EdgeSet> edge_cells;  // codim-2 generators per F edge
  EdgeSet top = 0;
  int cells = 0;  // 1 + nodes + edges
  int max_codim_in_mg = 0;
};

/// Generators are relative to EdgeIndex(g). Throws invalid-input when the
/// preconditions fail and internal-consistency when the two posets differ.
MFromF m_from_f(const Graph& g);
/// Same check, reusing an already built complex of g.
MFromF m_from_f(const LabeledComplex& hc);

std::string class_to_json(const LabeledComplex& hc, const LabelClass& cls);
std::string class_to_dot(const LabeledComplex& hc, const LabelClass& cls,
                         const std::vector<std::pair<int, int>>& matched = {});

}  // namespace hullmorse
