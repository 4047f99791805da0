#include <doctest.h>

#include "corpus.hpp"
#include "hullmorse/error.hpp"
#include "hullmorse/morse.hpp"

using namespace hullmorse;

namespace {

constexpr Field kFields[] = {Field::kRationals, Field::kTwo};

Graph two_squares() { return disjoint_union(cycle_graph(4), cycle_graph(4)); }

std::map<int, int> critical_by_dim(const LabeledComplex& hc, const MorseComplex& mc, VertexSet label) {
  std::map<int, int> out;
  for (int c : mc.critical)
    if (hc.labels[c] == label) ++out[hc.dim(c)];
  return out;
}

// Codim-2 cells of one F-cycle each matched to the next facet around it.
Matching around_one_cycle(const LabeledComplex& hc) {
  const MFromF r = m_from_f(hc);
  const std::vector<int> comp = r.f.component_nodes().front();
  Matching m;
  int cur = comp.front(), prev = -1;
  for (std::size_t step = 0; step < comp.size(); ++step) {
    for (int e = 0; e < r.f.edge_count(); ++e) {
      const auto [i, j] = r.f.edges()[e];
      if (e == prev || (i != cur && j != cur)) continue;
      const int next = i == cur ? j : i;
      m.add(hc.lattice.find(r.node_cells[next]), hc.lattice.find(r.edge_cells[e]));
      prev = e;
      cur = next;
      break;
    }
  }
  m.normalize();
  return m;
}

}  // namespace

TEST_SUITE("morse") {
  TEST_CASE("the 3-edge path") {
    const LabeledComplex hc = hull_complex(path_graph(4));
    const LabelClass m = mg(hc);
    Matching pair;
    pair.add(m.covers.front().first, m.covers.front().second);
    const MatchingFlags flags = validate_matching(hc, pair);
    CHECK(flags.valid());
    for (Field f : kFields) {
      const MorseComplex mc = critical_and_differential(hc, pair, f);
      CHECK(critical_by_dim(hc, mc, hc.graph.vertex_set()).empty());
      CHECK(static_cast<int>(mc.critical.size()) == hc.size() - 2);
      CHECK(strand_check(mc.chain, f).acyclic);
    }
    const SearchResult r = optimal_search(hc, m, {});
    CHECK(r.min_total == 0);
    CHECK(r.achievable_minimal);

    // Without any matching the same-label cover is a unit.
    const MorseComplex plain = critical_and_differential(hc, Matching{}, Field::kRationals);
    const MinimalityReport rep = minimality_checks(hc, Matching{}, plain, hochster_betti(hc.graph, Field::kRationals));
    CHECK_FALSE(rep.counts_minimal);
    CHECK_FALSE(rep.unit_minimal);
    CHECK(rep.inconsistencies.empty());
  }

  TEST_CASE("invalid matchings") {
    const LabeledComplex hc = hull_complex(path_graph(4));
    int small = -1;
    for (int id : hc.lattice.down[hc.lattice.top()]) {
      const int lower = hc.lattice.covers[id].lower;
      if (hc.labels[lower] != hc.graph.vertex_set()) small = lower;
    }
    REQUIRE(small >= 0);
    Matching bad;
    bad.add(hc.lattice.top(), small);
    const MatchingFlags flags = validate_matching(hc, bad);
    CHECK_FALSE(flags.homogeneous);
    CHECK_FALSE(flags.valid());
    CHECK_THROWS_AS(critical_and_differential(hc, bad, Field::kRationals), Error);

    Matching not_cover;
    not_cover.add(hc.lattice.top(), 0);
    CHECK_THROWS_AS(validate_matching(hc, not_cover), Error);
  }

  TEST_CASE("a homogeneous matching with a directed cycle") {
    const LabeledComplex hc = hull_complex(complement(two_squares()));
    const Matching m = around_one_cycle(hc);
    CHECK(m.size() == 4);
    const MatchingFlags flags = validate_matching(hc, m);
    CHECK(flags.homogeneous);
    CHECK(flags.disjoint);
    CHECK_FALSE(flags.acyclic);
    CHECK_FALSE(acyclic_globally(hc, m));
    CHECK_THROWS_AS(critical_and_differential(hc, m, Field::kRationals), Error);
  }

  TEST_CASE("complement of C5") {
    const LabeledComplex hc = hull_complex(complement(cycle_graph(5)));
    const Matching m = constructive_matching(hc);
    CHECK(validate_matching(hc, m).valid());
    for (Field f : kFields) {
      const MorseComplex mc = critical_and_differential(hc, m, f);
      const std::map<int, int> full = critical_by_dim(hc, mc, hc.graph.vertex_set());
      CHECK(full == std::map<int, int>{{hc.lattice.dim() - 2, 1}});
      std::vector<int> totals;
      for (int c : mc.critical)
        if (hc.dim(c) >= 0) {
          if (static_cast<int>(totals.size()) <= hc.dim(c)) totals.resize(hc.dim(c) + 1);
          ++totals[hc.dim(c)];
        }
      CHECK(totals == std::vector<int>{5, 5, 1});
      CHECK(strand_check(mc.chain, f).acyclic);
      const MinimalityReport rep = minimality_checks(hc, m, mc, hochster_betti(hc.graph, f));
      CHECK(rep.counts_minimal);
      CHECK(rep.unit_minimal);
      CHECK(rep.path_minimal);
      CHECK(rep.excess_cells == 0);
    }
    const SearchResult r = optimal_search(hc, mg(hc), hochster_betti(hc.graph, Field::kRationals).slice(hc.graph.vertex_set()));
    CHECK(r.min_total == 1);
    CHECK(r.achievable_minimal);
  }

  TEST_CASE("complement of C6") {
    const LabeledComplex hc = hull_complex(complement(cycle_graph(6)));
    const MorseComplex mc = critical_and_differential(hc, constructive_matching(hc), Field::kRationals);
    CHECK(critical_by_dim(hc, mc, hc.graph.vertex_set()) == std::map<int, int>{{hc.lattice.dim() - 2, 1}});
  }

  TEST_CASE("two disjoint squares") {
    const LabeledComplex hc = hull_complex(complement(two_squares()));
    const VertexSet full = hc.graph.vertex_set();
    const Matching m = constructive_matching(hc);
    CHECK(validate_matching(hc, m).valid());
    for (Field f : kFields) {
      const BettiTable betti = hochster_betti(hc.graph, f);
      const MorseComplex mc = critical_and_differential(hc, m, f);
      const MinimalityReport rep = minimality_checks(hc, m, mc, betti);
      CHECK_FALSE(rep.path_minimal);
      CHECK(std::find(rep.path_labels.begin(), rep.path_labels.end(), full) != rep.path_labels.end());
      CHECK(rep.inconsistencies.empty());
      CHECK(rep.counts_minimal == rep.unit_minimal);

      const SearchResult r = optimal_search(hc, mg(hc), betti.slice(full));
      CHECK(r.min_total == 3);
      CHECK(r.betti_total == 3);
      CHECK(r.min_critical == std::map<int, int>{{5, 2}, {6, 1}});
      // The certificate replays inside the whole complex.
      const Matching spliced = splice_class(hc, m, full, r.certificate);
      CHECK(validate_matching(hc, spliced).valid());
      const MorseComplex smc = critical_and_differential(hc, spliced, f);
      CHECK(strand_check(smc.chain, f).acyclic);
      const MinimalityReport srep = minimality_checks(hc, spliced, smc, betti);
      CHECK(srep.inconsistencies.empty());
      CHECK(std::find(srep.non_minimal_labels.begin(), srep.non_minimal_labels.end(), full) ==
            srep.non_minimal_labels.end());
      CHECK(r.achievable_minimal);
    }
  }

  TEST_CASE("product rule") {
    // Factor cells are generator sets on disjoint bits.
    const FactorMatching a{{0b01, 0b11}, {1, 0}};
    const FactorMatching b{{0b0100, 0b1100}, {1, 0}};
    const FactorMatching lone{{0b10000}, {-1}};
    CHECK(product_matching({a, b}).size() == 2);
    CHECK(product_matching({lone, b}).size() == 1);
    CHECK(product_matching({lone, lone}).empty());
    const auto ab = product_matching({a, b});
    std::set<EdgeSet> used;
    for (auto [u, l] : ab) {
      CHECK(edges_subset(l, u));
      CHECK(used.insert(u).second);
      CHECK(used.insert(l).second);
    }
    CHECK(used.size() == 4);
  }

  TEST_CASE("bipartite factors follow the table") {
    const LabeledComplex hc = hull_complex(path_graph(4));
    const FactorMatching f = factor_matching(hc, hc.graph.vertex_set());
    CHECK(f.cells.size() == 2);
    CHECK(f.partner[0] == 1);
    CHECK(factor_matching(hull_complex(cycle_graph(4)), make_set({0, 1, 2, 3})).cells.size() == 1);
    CHECK_THROWS_AS(factor_matching(hull_complex(path_graph(5)), make_set({0, 1, 2, 3, 4})), Error);
  }

  TEST_CASE("cycle complements leave components minus one per class") {
    for (int n : {4, 5, 6}) {
      const Graph gbar = cycle_graph(n);
      const LabeledComplex hc = hull_complex(complement(gbar));
      const Matching m = constructive_matching(hc);
      const MorseComplex mc = critical_and_differential(hc, m, Field::kRationals);
      for (VertexSet u = 1; u < hc.graph.vertex_set(); ++u) {
        int critical = 0;
        for (int c : mc.critical)
          if (hc.labels[c] == u) ++critical;
        const LabelClass cls = label_class(hc, u);
        if (cls.empty()) {
          CHECK(critical == 0);
          continue;
        }
        CHECK(critical == static_cast<int>(components(induced(gbar, u)).size()) - 1);
      }
    }
  }

  TEST_CASE("corpus invariants") {
    for (const Graph& gbar : testing::triangle_free(6)) {
      const Graph g = complement(gbar);
      if (g.edge_count() == 0) continue;
      const LabeledComplex hc = hull_complex(g);
      const Matching m = constructive_matching(hc);
      const MatchingFlags flags = validate_matching(hc, m);
      CHECK(flags.valid());
      CHECK(acyclic_globally(hc, m) == flags.acyclic);
      for (Field f : kFields) {
        const MorseComplex mc = critical_and_differential(hc, m, f);
        CHECK(static_cast<int>(mc.critical.size()) == hc.size() - 2 * static_cast<int>(m.size()));
        const StrandVerdict sv = strand_check(mc.chain, f);
        REQUIRE(sv.acyclic);
        const MinimalityReport rep = minimality_checks(hc, m, mc, hochster_betti(g, f));
        CHECK(rep.inconsistencies.empty());
        CHECK(rep.counts_minimal == rep.unit_minimal);
        if (rep.path_minimal) CHECK(rep.unit_minimal);
        // Small graphs have no two disjoint cycles; the construction is minimal.
        CHECK(rep.counts_minimal);
      }
    }
  }

  TEST_CASE("json round trip") {
    const LabeledComplex hc = hull_complex(complement(cycle_graph(5)));
    const Matching m = constructive_matching(hc);
    const std::string text = matching_to_json(hc, m);
    CHECK(matching_from_json(hc, text).pairs == m.pairs);
    CHECK(text.find(complex_digest(hc)) != std::string::npos);
    const LabeledComplex other = hull_complex(complement(cycle_graph(6)));
    CHECK_THROWS_AS(matching_from_json(other, text), Error);
    CHECK_THROWS_AS(matching_from_json(hc, "{"), Error);
    const MorseComplex mc = critical_and_differential(hc, m, Field::kRationals);
    CHECK(morse_to_json(hc, mc).find("\"differential\"") != std::string::npos);
  }

  TEST_CASE("search size limit") {
    const LabeledComplex hc = hull_complex(complete_graph(6));
    LabelClass too_big;
    too_big.support = hc.graph.vertex_set();
    for (int c = 0; c <= kMaxSearchCells; ++c) too_big.cells.push_back(c);
    try {
      optimal_search(hc, too_big, {{0, 1}});
      FAIL("expected a resource limit");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kResourceLimit);
      CHECK(e.exit_code() == 3);
    }
    CHECK(complex_digest(hc).size() == 16);
  }
}
