#include <doctest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "hullmorse/error.hpp"
#include "hullmorse/polytope.hpp"

using namespace hullmorse;

namespace {

std::set<EdgeSet> facet_sets(const std::vector<Face>& faces) {
  std::set<EdgeSet> out;
  for (const Face& f : faces) out.insert(f.gens);
  return out;
}

EdgeSet mask(const Graph& g, std::initializer_list<std::pair<int, int>> list) {
  const EdgeIndex index(g);
  std::vector<Edge> es;
  for (auto [u, v] : list) es.emplace_back(u, v);
  return index.mask_of(es);
}

}  // namespace

TEST_SUITE("polytope") {
  TEST_CASE("vertices") {
    const auto k2 = polytope_vertices(path_graph(2));
    REQUIRE(k2.size() == 1);
    CHECK(k2[0].coords == std::vector<int>{1, 1});
    const auto p3 = polytope_vertices(path_graph(3));
    REQUIRE(p3.size() == 2);
    CHECK(p3[0].coords == std::vector<int>{1, 1, 0});
    CHECK(p3[1].coords == std::vector<int>{0, 1, 1});
    CHECK(p3[1].edge() == Edge(1, 2));
    CHECK(polytope_vertices(Graph(3)).empty());
    CHECK(affine_dim(polytope_vertices(cycle_graph(5))) == 4);
  }

  TEST_CASE("affine dimension") {
    CHECK(affine_dim(polytope_vertices(cycle_graph(4))) == 2);
    CHECK(affine_dim(polytope_vertices(path_graph(2))) == 0);
    CHECK(affine_dim(std::vector<LatticePoint>{}) == -1);
  }

  TEST_CASE("facet examples") {
    CHECK(facets_connected(path_graph(4)).size() == 3);
    CHECK(facets_connected(cycle_graph(4)).size() == 4);
    const Graph c5 = cycle_graph(5);
    const auto facets = facets_connected(c5);
    CHECK(facets.size() == 5);
    std::set<EdgeSet> nc;
    const EdgeIndex index(c5);
    for (VertexSet u : classify_sets(c5).fundamental_sets) nc.insert(index.mask_of(neighborhood_of_set(c5, u).nc));
    CHECK(facet_sets(facets) == nc);
    for (Vertex v : c5.vertices()) CHECK(nc.count(index.mask_of(remove_vertex(c5, v))) == 0);
    for (const Face& f : facets) CHECK(f.dim == 3);
  }

  TEST_CASE("facet preconditions") {
    CHECK_THROWS_AS(facets_connected(disjoint_union(path_graph(2), path_graph(2))), Error);
    CHECK_THROWS_AS(facets_connected(Graph(3)), Error);
  }

  TEST_CASE("lattice sizes") {
    const FaceLattice seg = face_lattice(disjoint_union(path_graph(2), path_graph(2)));
    CHECK(seg.size() == 4);
    CHECK(seg.dim() == 1);
    CHECK(face_lattice(complete_graph(3)).size() == 8);
    CHECK(face_lattice(cycle_graph(4)).size() == 10);
    const FaceLattice none = face_lattice(Graph(3));
    CHECK(none.size() == 1);
    CHECK(none.faces[0].dim == -1);
  }

  TEST_CASE("joins multiply lattice sizes") {
    const Graph a = cycle_graph(4), b = complete_graph(3);
    const FaceLattice j = face_lattice(disjoint_union(a, b));
    CHECK(j.size() == face_lattice(a).size() * face_lattice(b).size());
    CHECK(j.dim() == (2 + 1) + (2 + 1) - 1);
  }

  TEST_CASE("geometric oracle on the square") {
    const Graph c4 = cycle_graph(4);
    CHECK(geometric_face_oracle(c4, mask(c4, {{0, 1}, {1, 2}})));
    CHECK_FALSE(geometric_face_oracle(c4, mask(c4, {{0, 1}, {2, 3}})));
    CHECK(geometric_face_oracle(c4, EdgeIndex(c4).all()));
    CHECK_THROWS_AS(geometric_face_oracle(c4, 0), Error);
  }

  TEST_CASE("geometric oracle decides every edge subset on small graphs") {
    for (const Graph& g : testing::connected_graphs(5)) {
      const FaceLattice lat = face_lattice(g);
      const EdgeIndex index(g);
      for (EdgeSet s = 1; s <= index.all(); ++s) CHECK(geometric_face_oracle(g, s) == (lat.find(s) >= 0));
    }
  }

  TEST_CASE("every lattice face is geometric") {
    for (const Graph& g : testing::connected_graphs(6)) {
      const FaceLattice lat = face_lattice(g);
      for (const Face& f : lat.faces)
        if (f.gens != 0) CHECK(geometric_face_oracle(g, f.gens));
    }
  }

  TEST_CASE("dimension formulas and facet agreement") {
    for (const Graph& g : testing::connected_graphs(6)) {
      const int n = g.vertex_count();
      const FaceLattice lat = face_lattice(g);
      CHECK(lat.dim() == (is_bipartite(g) ? n - 2 : n - 1));
      std::vector<EdgeSet> rules;
      for (const Face& f : facets_connected(g)) rules.push_back(f.gens);
      std::sort(rules.begin(), rules.end());
      std::vector<EdgeSet> geo = geometric_facets(g);
      std::sort(geo.begin(), geo.end());
      CHECK(rules == geo);
    }
  }

  TEST_CASE("faces are intersections of facets") {
    for (const Graph& g : testing::connected_graphs(6)) {
      const FaceLattice lat = face_lattice(g);
      const auto facets = facets_connected(g);
      for (const Face& f : lat.faces) {
        if (f.gens == lat.faces.back().gens) continue;
        EdgeSet meet = ~EdgeSet{0};
        for (const Face& h : facets)
          if (edges_subset(f.gens, h.gens)) meet &= h.gens;
        CHECK(meet == f.gens);
      }
    }
  }

  TEST_CASE("incidence signs") {
    const FaceLattice seg = incidence_signs(face_lattice(disjoint_union(path_graph(2), path_graph(2))));
    const int top = seg.top();
    REQUIRE(seg.down[top].size() == 2);
    CHECK(seg.covers[seg.down[top][0]].sign == -seg.covers[seg.down[top][1]].sign);
    CHECK(seg.is_signed());
    CHECK_FALSE(face_lattice(cycle_graph(4)).is_signed());
    for (const Graph& g : testing::connected_graphs(6)) CHECK(boundary_squares_to_zero(incidence_signs(face_lattice(g))));
  }

  TEST_CASE("graded covers") {
    const FaceLattice lat = face_lattice(cycle_graph(5));
    for (const Cover& c : lat.covers) {
      CHECK(lat.faces[c.upper].dim == lat.faces[c.lower].dim + 1);
      CHECK(edges_subset(lat.faces[c.lower].gens, lat.faces[c.upper].gens));
    }
    CHECK(lat.count_of_dim(0) == 5);
    CHECK(lat.count_of_dim(3) == 5);
  }

  TEST_CASE("serialization") {
    const FaceLattice lat = incidence_signs(face_lattice(cycle_graph(4)));
    const std::string json = lattice_to_json(lat);
    CHECK(json == lattice_to_json(incidence_signs(face_lattice(cycle_graph(4)))));
    CHECK(json.find("\"faces\"") != std::string::npos);
    CHECK(lattice_to_dot(lat).rfind("digraph", 0) == 0);
  }

  TEST_CASE("too many edges") { CHECK_THROWS_AS(EdgeIndex(complete_graph(12)), Error); }
}
