#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "hullmorse/error.hpp"
#include "hullmorse/hull.hpp"

using namespace hullmorse;

namespace {

Graph cube() {
  Graph g(8);
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
  return g;
}

Graph double_star() { return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}); }

EdgeSet mask(const Graph& g, std::initializer_list<std::pair<int, int>> list) {
  std::vector<Edge> es;
  for (auto [u, v] : list) es.emplace_back(u, v);
  return EdgeIndex(g).mask_of(es);
}

}  // namespace

TEST_SUITE("hull") {
  TEST_CASE("labels on the 3-edge path") {
    const LabeledComplex hc = hull_complex(path_graph(4));
    CHECK(hc.labels[hc.lattice.find(mask(hc.graph, {{0, 1}, {2, 3}}))] == make_set({0, 1, 2, 3}));
    CHECK(hc.labels[hc.lattice.find(mask(hc.graph, {{0, 1}, {1, 2}}))] == make_set({0, 1, 2}));
    CHECK(hc.labels[0] == 0);
    CHECK(hc.gens(0) == 0);
  }

  TEST_CASE("isolated vertices never appear in labels") {
    const LabeledComplex hc = hull_complex(Graph(4, {{0, 1}, {1, 2}}));
    for (VertexSet l : hc.labels) CHECK_FALSE(contains(l, 3));
    CHECK(mg(hc).empty());
    CHECK(hc.labels[hc.lattice.top()] == make_set({0, 1, 2}));
  }

  TEST_CASE("degenerate input") {
    CHECK_THROWS_AS(hull_complex(Graph(3)), Error);
    const LabeledComplex hc = hull_complex(Graph(3), true);
    CHECK(hc.degenerate);
    CHECK(hc.size() == 1);
    CHECK(mg(hull_complex(Graph(0), true)).size() == 1);
  }

  TEST_CASE("mg examples") {
    const LabelClass p = mg(hull_complex(path_graph(4)));
    CHECK(p.size() == 2);
    CHECK(p.covers.size() == 1);
    CHECK(mg(hull_complex(cycle_graph(4))).size() == 1);
    const LabeledComplex hc = hull_complex(complement(cycle_graph(5)));
    const LabelClass m = mg(hc);
    CHECK(m.size() == 11);
    std::map<int, int> by_dim;
    for (int c : m.cells) ++by_dim[hc.dim(c)];
    CHECK(by_dim == std::map<int, int>{{2, 5}, {3, 5}, {4, 1}});
  }

  TEST_CASE("the small bipartite cases") {
    // K2, path on two edges, path on three edges, 2K2, C4
    CHECK(mg(hull_complex(path_graph(2))).size() == 1);
    CHECK(mg(hull_complex(path_graph(3))).size() == 1);
    CHECK(mg(hull_complex(path_graph(4))).size() == 2);
    CHECK(mg(hull_complex(disjoint_union(path_graph(2), path_graph(2)))).size() == 1);
    CHECK(mg(hull_complex(cycle_graph(4))).size() == 1);
  }

  TEST_CASE("bipartite lemma-scope complements are subgraphs of C4") {
    for (const Graph& gbar : testing::triangle_free(8)) {
      const Graph g = complement(gbar);
      if (g.edge_count() == 0 || !is_connected(g) || !is_bipartite(g)) continue;
      CHECK(g.vertex_count() <= 4);
      CHECK(mg(hull_complex(g)).size() <= 2);
    }
  }

  TEST_CASE("label classes") {
    const LabeledComplex hc = hull_complex(complement(cycle_graph(5)));
    const LabelClass path = label_class(hc, make_set({0, 2, 4}));
    CHECK(path.size() == 1);
    CHECK(path.factors.size() == 1);
    CHECK(label_class(hc, make_set({0, 1, 2})).empty());
    const LabelClass two = label_class(hc, make_set({0, 1, 3, 4}));  // edges 03, 13, 14: a path
    CHECK(two.size() == 2);

    const LabeledComplex big = hull_complex(complement(disjoint_union(cycle_graph(4), cycle_graph(4))));
    const LabelClass full = mg(big);
    CHECK(full.size() == 17);
    REQUIRE(full.factors.size() == 1);
    CHECK(full.factors[0].cells.size() == 17);
  }

  TEST_CASE("class sizes are products over components") {
    for (const Graph& g : testing::connected_graphs(6)) {
      const LabeledComplex hc = hull_complex(g);
      for (VertexSet u = 1; u < (VertexSet{1} << g.universe()); ++u) {
        const LabelClass cls = label_class(hc, u);
        const Graph sub = induced(g, u);
        if (isolated_vertices(sub) != 0) {
          CHECK(cls.empty());
          continue;
        }
        long long product = 1;
        for (VertexSet comp : components(sub)) product *= mg(hull_complex(induced(g, comp))).size();
        CHECK(cls.size() == product);
        CHECK(cls.factors.size() == components(sub).size());
      }
    }
  }

  TEST_CASE("label monotonicity") {
    for (const Graph& g : testing::connected_graphs(6)) {
      const LabeledComplex hc = hull_complex(g);
      for (const Cover& c : hc.lattice.covers) CHECK(is_subset(hc.labels[c.lower], hc.labels[c.upper]));
    }
  }

  TEST_CASE("pair examples") {
    const Graph q3 = complement(cube());
    PairType p = classify_pair(q3, singleton(0), singleton(1));
    CHECK(p.tag == 1);
    CHECK_FALSE(p.in_mg);

    p = classify_pair(complement(double_star()), singleton(0), singleton(1));
    CHECK(p.tag == 2);
    CHECK(p.in_mg);

    const Graph c5k2 = complement(disjoint_union(cycle_graph(5), Graph(2)));
    p = classify_pair(c5k2, singleton(5), singleton(6));
    CHECK(p.tag == 3);
    CHECK_FALSE(p.in_mg);

    const Graph c5 = complement(cycle_graph(5));
    p = classify_pair(c5, make_set({0, 1}), make_set({1, 2}));
    CHECK(p.tag == 6);
    CHECK(p.in_mg);
    // No singleton is fundamental in the complement of C5.
    CHECK_THROWS_AS(classify_pair(c5, singleton(0), singleton(1)), Error);
    CHECK_THROWS_AS(classify_pair(c5, make_set({0, 1}), make_set({0, 1})), Error);
  }

  TEST_CASE("membership table") {
    for (int tag = 1; tag <= 11; ++tag)
      CHECK(pair_table_in_mg(tag) == (tag == 2 || tag == 6 || tag == 7 || tag == 11));
  }

  TEST_CASE("pair table agrees with the intersection test") {
    std::set<int> seen;
    for (const Graph& g : testing::lemma_graphs(8)) {
      const FundamentalData fd = fundamentality_fast(g);
      const LabeledComplex hc = hull_complex(g);
      const EdgeIndex& index = hc.lattice.index;
      const auto& sets = fd.fundamental_sets;
      for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
          const PairType p = classify_pair(g, sets[i], sets[j]);
          seen.insert(p.tag);
          // Facet intersection, looked up in the lattice.
          const EdgeSet meet = index.mask_of(neighborhood_of_set(g, sets[i]).nc) &
                               index.mask_of(neighborhood_of_set(g, sets[j]).nc);
          const int f = hc.lattice.find(meet);
          REQUIRE(f >= 0);
          CHECK(p.in_mg == (hc.labels[f] == g.vertex_set()));
        }
      for (VertexSet u : sets) {
        const int f = hc.lattice.find(index.mask_of(neighborhood_of_set(g, u).nc));
        REQUIRE(f >= 0);
        CHECK(hc.labels[f] == g.vertex_set());
        CHECK(hc.dim(f) == hc.lattice.dim() - 1);
      }
    }
    CHECK(seen.size() == 11);
  }

  TEST_CASE("M_G from F") {
    CHECK(m_from_f(complement(cycle_graph(5))).cells == 11);
    CHECK(m_from_f(complement(disjoint_union(cycle_graph(4), cycle_graph(4)))).cells == 17);
    CHECK(m_from_f(complement(cycle_graph(6))).cells == 13);
    CHECK_THROWS_AS(m_from_f(complement(cycle_graph(4))), Error);  // 2K2 is bipartite
  }

  TEST_CASE("M_G from F on the lemma corpus") {
    int n = 0;
    for (const Graph& g : testing::lemma_graphs(8)) {
      const MFromF r = m_from_f(g);
      CHECK(r.max_codim_in_mg <= 2);
      CHECK(r.cells == mg(hull_complex(g)).size());
      ++n;
    }
    CHECK(n == 561);
  }

  TEST_CASE("emitters") {
    const LabeledComplex hc = hull_complex(path_graph(4));
    const LabelClass m = mg(hc);
    CHECK(class_to_json(hc, m).find("\"support\"") != std::string::npos);
    const std::string dot = class_to_dot(hc, m, {m.covers.front()});
    CHECK(dot.find("red") != std::string::npos);
  }
}
