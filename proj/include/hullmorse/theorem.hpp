#pragma once

// Isomorphism-class enumeration and the end-to-end check of the
// minimizability criterion for triangle-free complements.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hullmorse/graph.hpp"
#include "hullmorse/homology.hpp"
#include "hullmorse/morse.hpp"

namespace hullmorse {

/// Upper-triangle adjacency bits, (0,1),(0,2),...,(n-2,n-1), first pair in the
/// most significant position. Requires vertices 0..n-1 and n <= 11.
std::uint64_t adjacency_code(const Graph& g, const std::vector<Vertex>& order);
Graph graph_from_code(int n, std::uint64_t code);

/// Lexicographically least code over the orderings that sort vertices by an
/// isomorphism-invariant colour (degree, then neighbour degrees).
std::uint64_t canonical_code(const Graph& g);

inline constexpr int kMaxEnumerateAll = 8;
inline constexpr int kMaxEnumerateTriangleFree = 9;

/// One representative per isomorphism class, ascending canonical code.
std::vector<Graph> enumerate_graphs(int n);
std::vector<Graph> enumerate_triangle_free(int n);

struct ClassSearch {
  VertexSet support = 0;
  SearchResult result;
  bool replayed = false;  // certificate re-validated inside the full complex
  std::string certificate_json;  // whole-complex matching with the class optimum spliced in
};

struct FieldVerdict {
  Field field = Field::kRationals;
  BettiTable betti;
  bool oracles_agree = true;
  int critical_cells = 0;  // nonempty critical cells of the constructive matching
  MinimalityReport constructive;
  std::vector<ClassSearch> searches;
  std::vector<VertexSet> unresolved;  // classes too large to search
  bool admt_minimizable = false;
};

struct GraphVerdict {
  Graph gbar;
  std::optional<VertexSet> witness;  // two disjoint induced cycles
  bool degenerate = false;           // complement has no edges
  int cells = 0;
  int matched_pairs = 0;
  std::string digest;
  std::vector<FieldVerdict> fields;
  bool admt_minimizable = false;  // over every requested field
  bool agreement = false;         // admt_minimizable == !witness
  std::vector<std::string> consistency_failures;
  double seconds = 0;
};

/// Throws invalid-input when gbar has a triangle.
GraphVerdict verify_theorem(const Graph& gbar, const std::vector<Field>& fields);

struct CorpusOptions {
  int n_min = 1;
  int n_max = 5;
  std::vector<Field> fields{Field::kRationals};
  bool all = false;  // default: only gbar whose complement is connected with an edge
  int workers = 0;   // 0: hardware concurrency
  bool timings = false;
};

struct RunReport {
  CorpusOptions options;
  std::vector<GraphVerdict> verdicts;
  std::vector<std::string> errors;  // per-graph failures, in corpus order
  int internal_failures = 0;
  int resource_failures = 0;
};

std::vector<Graph> corpus_graphs(const CorpusOptions& opt);
RunReport run_corpus(const CorpusOptions& opt);
RunReport run_graphs(const std::vector<Graph>& graphs, const CorpusOptions& opt);

std::string verdict_to_json(const GraphVerdict& v, bool timings);
std::string report_to_json(const RunReport& r);
/// 0 clean, 2 internal-consistency failure, 3 resource limit.
int report_exit_code(const RunReport& r);

}  // namespace hullmorse
