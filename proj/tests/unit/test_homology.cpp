#include <doctest.h>

#include "corpus.hpp"
#include "hullmorse/error.hpp"
#include "hullmorse/homology.hpp"

using namespace hullmorse;

namespace {

constexpr Field kFields[] = {Field::kRationals, Field::kTwo};

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("simplicial examples") {
    std::vector<VertexSet> cycles;
    for (int c = 0; c < 2; ++c)
      for (int i = 0; i < 4; ++i) cycles.push_back(singleton(4 * c + i) | singleton(4 * c + (i + 1) % 4));
    for (Field f : kFields) {
      const HomologyRanks two = reduced_homology_ranks(SimplicialComplex(cycles), f);
      CHECK(two.at(0) == 1);
      CHECK(two.at(1) == 2);
      CHECK(two.total() == 3);
      CHECK(reduced_homology_ranks(SimplicialComplex({singleton(0)}), f).zero());
      const HomologyRanks empty = reduced_homology_ranks(SimplicialComplex({VertexSet{0}}), f);
      CHECK(empty.at(-1) == 1);
      CHECK(empty.total() == 1);
      CHECK(reduced_homology_ranks(SimplicialComplex(), f).zero());
    }
  }

  TEST_CASE("closure and membership") {
    const SimplicialComplex k({make_set({0, 1, 2}), make_set({2, 3})});
    CHECK(k.contains(make_set({0, 2})));
    CHECK(k.contains(0));
    CHECK_FALSE(k.contains(make_set({1, 3})));
    CHECK(k.faces().size() == 1 + 4 + 4 + 1);
    CHECK(SimplicialComplex::from_faces({0, 1, 2, 3}).faces().size() == 4);
  }

  TEST_CASE("projective plane separates the fields") {
    // Six-vertex triangulation of RP^2.
    const std::vector<std::vector<int>> tri{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                            {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
    std::vector<VertexSet> facets;
    for (const auto& t : tri) facets.push_back(singleton(t[0]) | singleton(t[1]) | singleton(t[2]));
    const SimplicialComplex rp2(facets);
    CHECK(reduced_homology_ranks(rp2, Field::kRationals).zero());
    const HomologyRanks f2 = reduced_homology_ranks(rp2, Field::kTwo);
    CHECK(f2.at(1) == 1);
    CHECK(f2.at(2) == 1);
  }

  TEST_CASE("betti examples") {
    for (Field f : kFields) {
      const BettiTable p = hochster_betti(path_graph(3), f);
      const std::map<std::pair<int, VertexSet>, int> expected{
          {{0, make_set({0, 1})}, 1}, {{0, make_set({1, 2})}, 1}, {{1, make_set({0, 1, 2})}, 1}};
      CHECK(p.entries == expected);
      CHECK(koszul_betti(path_graph(3), f) == p);

      const BettiTable k = hochster_betti(disjoint_union(path_graph(2), path_graph(2)), f);
      CHECK(k.totals() == std::vector<int>{2, 1});
      CHECK(k.at(1, make_set({0, 1, 2, 3})) == 1);

      CHECK(koszul_betti(path_graph(2), f).at(0, make_set({0, 1})) == 1);

      const BettiTable c5 = hochster_betti(cycle_graph(5), f);
      CHECK(c5.totals() == std::vector<int>{5, 5, 1});
      CHECK(koszul_betti(cycle_graph(5), f) == c5);
      CHECK(c5.slice(make_set({0, 1, 2, 3, 4})) == std::map<int, int>{{2, 1}});
      CHECK(c5.slice_total(make_set({0, 1, 2})) == 1);
    }
  }

  TEST_CASE("oracle agreement on small graphs") {
    for (const Graph& g : testing::connected_graphs(6))
      for (Field f : kFields) {
        const BettiTable h = hochster_betti(g, f);
        CHECK(h == koszul_betti(g, f));
        for (const auto& [key, value] : h.entries) {
          CHECK(value > 0);
          CHECK(isolated_vertices(induced(g, key.second)) == 0);
        }
        int generators = 0;
        for (const auto& [key, value] : h.entries)
          if (key.first == 0) {
            CHECK(set_size(key.second) == 2);
            CHECK(g.adjacent(lowest(key.second), 31 - std::countl_zero(key.second)));
            generators += value;
          }
        CHECK(generators == g.edge_count());
      }
  }

  TEST_CASE("hull complexes are acyclic strands") {
    for (const Graph& g : testing::connected_graphs(6)) {
      const LabeledComplex hc = hull_complex(g);
      const ChainComplex cx = chain_complex(hc);
      for (Field f : kFields) {
        const StrandVerdict v = strand_check(cx, f);
        CHECK(v.acyclic);
        CHECK(v.failing.empty());
        CHECK(reduced_homology_ranks(hc, f).zero());
      }
    }
  }

  TEST_CASE("hull ranks bound the betti numbers") {
    for (const Graph& g : testing::connected_graphs(5)) {
      const LabeledComplex hc = hull_complex(g);
      const BettiTable b = hochster_betti(g, Field::kRationals);
      std::map<std::pair<int, VertexSet>, int> cells;
      for (int c = 1; c < hc.size(); ++c) ++cells[{hc.dim(c), hc.labels[c]}];
      for (const auto& [key, value] : b.entries) CHECK(cells[key] >= value);
    }
  }

  TEST_CASE("removing a facet breaks the resolution") {
    const LabeledComplex hc = hull_complex(path_graph(4));
    const ChainComplex cx = chain_complex(hc);
    CHECK(strand_check(cx, Field::kRationals).acyclic);
    // A facet of the triangle: the edge cell {01, 23} carrying the full label.
    int facet = -1;
    for (int c = 0; c < hc.size(); ++c)
      if (hc.dim(c) == 1 && hc.labels[c] == hc.graph.vertex_set()) facet = c;
    REQUIRE(facet >= 0);
    const ChainComplex cut = without_cell(cx, facet);
    CHECK(cut.size() == cx.size() - 1);
    const StrandVerdict v = strand_check(cut, Field::kRationals);
    CHECK_FALSE(v.acyclic);
    CHECK(std::find(v.failing.begin(), v.failing.end(), hc.graph.vertex_set()) != v.failing.end());
  }

  TEST_CASE("chain complex of the hull") {
    const LabeledComplex hc = hull_complex(cycle_graph(4));
    const ChainComplex cx = chain_complex(hc);
    CHECK(cx.size() == 10);
    CHECK(cx.degree[0] == -1);
    CHECK(homology(cx, Field::kRationals).zero());
  }

  TEST_CASE("json") {
    const std::string j = betti_to_json(hochster_betti(path_graph(3), Field::kTwo));
    CHECK(j.find("\"f2\"") != std::string::npos);
  }
}
