#pragma once

// Chain complexes over Q or F2, reduced homology, the two Betti oracles for
// edge ideals, and the strand (acyclicity) test for labeled complexes.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hullmorse/graph.hpp"
#include "hullmorse/hull.hpp"
#include "hullmorse/linalg.hpp"

namespace hullmorse {

/// A based, labeled chain complex. Degree -1 holds the augmentation cell.
struct ChainComplex {
  std::vector<int> degree;
  std::vector<VertexSet> label;
  std::vector<std::vector<std::pair<int, Rational>>> boundary;  // cell -> (cell one degree lower, coefficient)

  int size() const { return static_cast<int>(degree.size()); }
};

/// The hull complex as a chain complex (cell i = face i, degree = dim).
ChainComplex chain_complex(const LabeledComplex& hc);

/// Reduced homology ranks; ranks[k] is the rank in degree k - 1.
struct HomologyRanks {
  std::vector<int> ranks;

  int at(int degree) const;
  int total() const;
  bool zero() const { return total() == 0; }
};

/// Homology of the subcomplex spanned by the cells with keep[i] set (all cells
/// when keep is empty). The kept set must be closed under the boundary.
HomologyRanks homology(const ChainComplex& cx, Field field, const std::vector<char>& keep = {});

/// Abstract simplicial complex given by its facets; a complex with no facets
/// is void, and {empty set} is the complex whose only face is the empty face.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(std::vector<VertexSet> facets);
  /// From a downward-closed face list (used where enumeration is direct).
  static SimplicialComplex from_faces(std::vector<VertexSet> faces);

  const std::vector<VertexSet>& faces() const { return faces_; }  // sorted by size then value
  bool is_void() const { return faces_.empty(); }
  bool contains(VertexSet s) const;

 private:
  std::vector<VertexSet> faces_;
};

HomologyRanks reduced_homology_ranks(const SimplicialComplex& k, Field field);
HomologyRanks reduced_homology_ranks(const LabeledComplex& hc, Field field);

/// Graded Betti numbers of I_G: (homological degree, multidegree) -> rank.
struct BettiTable {
  Field field = Field::kRationals;
  std::map<std::pair<int, VertexSet>, int> entries;  // nonzero entries only

  int at(int i, VertexSet m) const;
  /// Totals per homological degree, 0..max.
  std::vector<int> totals() const;
  /// Entries of one multidegree, keyed by homological degree.
  std::map<int, int> slice(VertexSet m) const;
  int slice_total(VertexSet m) const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.field == b.field && a.entries == b.entries;
  }
};

/// Hochster: beta_{i,s} = rank of reduced H_{|s|-i-2} of the independence complex of G[s].
BettiTable hochster_betti(const Graph& g, Field field);
/// Upper Koszul complexes: beta_{i,s} = rank of reduced H_{i-1} of {t ⊆ s : s \ t contains an edge}.
BettiTable koszul_betti(const Graph& g, Field field);

std::string betti_to_json(const BettiTable& b);

struct StrandVerdict {
  bool acyclic = true;
  int checked = 0;
  std::vector<VertexSet> failing;
};

/// For every union of labels m, the cells with label ⊆ m (with the augmentation
/// cell) must have vanishing homology.
StrandVerdict strand_check(const ChainComplex& cx, Field field);

/// Copy of cx without one cell (boundaries into it dropped).
ChainComplex without_cell(const ChainComplex& cx, int cell);

}  // namespace hullmorse
