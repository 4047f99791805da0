#include <doctest.h>

#include <sstream>

#include "corpus.hpp"
#include "hullmorse/error.hpp"
#include "hullmorse/io.hpp"

using namespace hullmorse;

TEST_SUITE("io") {
  TEST_CASE("edge list round trip") {
    const Graph c5 = cycle_graph(5);
    CHECK(to_edge_list(c5) == "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    CHECK(parse_edge_list(to_edge_list(c5)) == c5);
    CHECK(parse_edge_list("3 0\n") == Graph(3));
    CHECK(parse_edge_list("  2 1  0 1 \n\n") == path_graph(2));
  }

  TEST_CASE("edge list errors") {
    for (const char* bad : {"", "3", "x 1", "3 1\n1 0\n", "3 1\n0 3\n", "3 2\n0 1\n0 1\n", "3 2\n0 1\n",
                            "3 1\n0 1\n2\n", "3 4\n", "-1 0\n", "40 0\n", "2 1\n0 0\n"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_edge_list(bad), Error);
    }
  }

  TEST_CASE("graph6 known strings") {
    CHECK(to_graph6(cycle_graph(5)) == "Dhc");
    CHECK(parse_graph6("Dhc") == cycle_graph(5));
    CHECK(to_graph6(petersen_graph()).size() == 9);
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(parse_graph6("?") == Graph(0));
    const Graph two = parse_graph6("G?KuE?");
    CHECK(two.vertex_count() == 8);
    CHECK(two.edge_count() == 8);
    CHECK(two_disjoint_induced_cycles(two).has_value());
    CHECK(parse_graph6(">>graph6<<Dhc\r\n") == cycle_graph(5));
  }

  TEST_CASE("graph6 round trip over the corpus") {
    for (int n = 1; n <= 6; ++n)
      for (const Graph& g : enumerate_graphs(n)) CHECK(parse_graph6(to_graph6(g)) == g);
    CHECK(parse_graph6(to_graph6(petersen_graph())) == petersen_graph());
  }

  TEST_CASE("graph6 errors") {
    for (const char* bad : {"", "D", "Dhcc", "D h", "~~~~", "a"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_graph6(bad), Error);
    }
    CHECK_THROWS_AS(to_graph6(induced(cycle_graph(5), make_set({1, 2}))), Error);
  }

  TEST_CASE("streams") {
    std::istringstream g6("Dhc\n\nC~\n");
    const auto graphs = read_graphs(g6, GraphFormat::kGraph6);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[1] == complete_graph(4));
    std::istringstream el("4 2\n0 1\n2 3\n");
    CHECK(read_graphs(el, GraphFormat::kEdgeList).front().edge_count() == 2);
    CHECK(parse_graph_format("g6") == GraphFormat::kGraph6);
    CHECK(parse_graph_format("edgelist") == GraphFormat::kEdgeList);
    CHECK_THROWS_AS(parse_graph_format("dimacs"), Error);
  }
}
