#pragma once

// Homogeneous acyclic matchings on hull complexes, Morse complexes, the
// constructive matching along F, product matchings, minimality tests and an
// exhaustive per-class search.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hullmorse/homology.hpp"
#include "hullmorse/hull.hpp"

namespace hullmorse {

/// Covering pairs (upper, lower) as ambient face indices, kept sorted.
struct Matching {
  std::vector<std::pair<int, int>> pairs;

  void add(int upper, int lower);
  void normalize();
  std::size_t size() const { return pairs.size(); }
  /// partner[c] = matched cell or -1.
  std::vector<int> partners(int cells) const;
};

struct MatchingFlags {
  bool disjoint = true;
  bool homogeneous = true;
  bool acyclic = true;
  bool empty_unmatched = true;

  bool valid() const { return disjoint && homogeneous && acyclic && empty_unmatched; }
};

/// Throws invalid-input if a pair is not a covering relation.
MatchingFlags validate_matching(const LabeledComplex& hc, const Matching& m);
/// Acyclicity decided on the whole Hasse diagram (no class decomposition).
bool acyclic_globally(const LabeledComplex& hc, const Matching& m);

struct MorseComplex {
  Field field = Field::kRationals;
  std::vector<int> critical;  // ambient face indices, ascending
  ChainComplex chain;         // cell k is critical[k]
};

/// Critical cells and the gradient-path differential. Throws
/// precondition-violation if the matching is not homogeneous and acyclic.
MorseComplex critical_and_differential(const LabeledComplex& hc, const Matching& m, Field field);

/// A matching on one factor poset, with cells given by generator sets.
struct FactorMatching {
  std::vector<EdgeSet> cells;
  std::vector<int> partner;  // index into cells, -1 when critical
};

/// Sequential product rule: a product cell is matched through the first
/// factor whose coordinate is not critical. Returns (upper, lower) pairs of
/// product cells, as unions of generator sets.
std::vector<std::pair<EdgeSet, EdgeSet>> product_matching(const std::vector<FactorMatching>& factors);

/// The matching of one connected factor: the bipartite table or a spanning
/// forest of F. `vertices` must induce a connected subgraph of hc.graph with
/// no isolated vertex.
FactorMatching factor_matching(const LabeledComplex& hc, VertexSet vertices);

/// The constructive matching on the whole hull complex, class by class.
/// Requires a triangle-free complement.
Matching constructive_matching(const LabeledComplex& hc);
Matching constructive_matching(const Graph& g);

struct MinimalityReport {
  bool counts_minimal = false;
  bool unit_minimal = false;
  bool path_minimal = false;
  int excess_cells = 0;  // critical nonempty cells beyond the Betti total
  int excess_pairs = 0;  // excess_cells / 2
  std::vector<VertexSet> non_minimal_labels;
  std::vector<VertexSet> path_labels;  // labels with a same-label gradient path
  std::vector<std::string> inconsistencies;
};

/// Throws precondition-violation if the Morse complex is not a resolution.
MinimalityReport minimality_checks(const LabeledComplex& hc, const Matching& m, const MorseComplex& mc,
                                   const BettiTable& betti);

struct SearchResult {
  VertexSet support = 0;
  std::map<int, int> min_critical;  // degree -> count for the best matching
  int min_total = 0;
  int betti_total = 0;
  bool achievable_minimal = false;
  Matching certificate;  // pairs inside the class only
  long long nodes = 0;
};

inline constexpr int kMaxSearchCells = 40;

/// Exhaustive branch-and-bound over homogeneous acyclic matchings of one
/// class. Throws resource-limit above kMaxSearchCells cells.
SearchResult optimal_search(const LabeledComplex& hc, const LabelClass& cls, const std::map<int, int>& betti_slice);

/// Replace the pairs of one class in `base` by `local`.
Matching splice_class(const LabeledComplex& hc, const Matching& base, VertexSet support, const Matching& local);

std::string matching_to_json(const LabeledComplex& hc, const Matching& m);
std::string morse_to_json(const LabeledComplex& hc, const MorseComplex& mc);
/// Parse pairs written by matching_to_json (generator lists) against hc.
Matching matching_from_json(const LabeledComplex& hc, const std::string& text);

/// FNV-1a of the canonical lattice serialization.
std::string complex_digest(const LabeledComplex& hc);

}  // namespace hullmorse
