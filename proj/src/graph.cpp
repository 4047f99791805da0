#include "hullmorse/graph.hpp"

#include <sstream>

#include "hullmorse/error.hpp"

namespace hullmorse {

std::vector<Vertex> members(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(set_size(s));
  for (; s != 0; s &= s - 1) out.push_back(lowest(s));
  return out;
}

VertexSet make_set(std::initializer_list<Vertex> vs) {
  VertexSet s = 0;
  for (Vertex v : vs) s |= singleton(v);
  return s;
}

std::string set_to_string(VertexSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Vertex v : members(s)) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

Graph::Graph(int universe)
    : Graph(universe, universe <= 0 ? 0 : universe >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << universe) - 1) {}

Graph::Graph(int universe, VertexSet vertices) : n_(universe), verts_(vertices), adj_(universe, 0) {
  require(universe >= 0 && universe <= kMaxVertices, ErrorKind::kInvalidInput,
          "graph universe must lie in [0, 32], got " + std::to_string(universe));
  if (universe < kMaxVertices)
    require(is_subset(vertices, (VertexSet{1} << universe) - 1), ErrorKind::kInvalidInput,
            "vertex set exceeds the universe");
}

Graph::Graph(int universe, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(universe) {
  for (auto [a, b] : edges) add_edge(a, b);
}

Graph Graph::from_edges(int universe, std::span<const Edge> edges) {
  Graph g(universe);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph Graph::from_edges(int universe, VertexSet vertices, std::span<const Edge> edges) {
  Graph g(universe, vertices);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u : members(verts_))
    for (Vertex v : members(adj_[u] & ~((singleton(u) << 1) - 1))) out.emplace_back(u, v);
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (Vertex u : members(verts_)) twice += set_size(adj_[u]);
  return twice / 2;
}

void Graph::add_edge(Vertex a, Vertex b) {
  require(has_vertex(a) && has_vertex(b), ErrorKind::kInvalidInput,
          "edge endpoint out of range: " + std::to_string(a) + "-" + std::to_string(b));
  require(a != b, ErrorKind::kInvalidInput, "loops are not allowed in a simple graph");
  adj_[a] |= singleton(b);
  adj_[b] |= singleton(a);
}

Graph complement(const Graph& g) {
  Graph out(g.universe(), g.vertex_set());
  for (Vertex u : g.vertices())
    for (Vertex v : members(g.vertex_set() & ~g.neighbors(u)))
      if (u < v) out.add_edge(u, v);
  return out;
}

Graph induced(const Graph& g, VertexSet u) {
  require(is_subset(u, g.vertex_set()), ErrorKind::kInvalidInput,
          "induced: " + set_to_string(u) + " is not a subset of the vertex set");
  Graph out(g.universe(), u);
  for (Vertex a : members(u))
    for (Vertex b : members(g.neighbors(a) & u))
      if (a < b) out.add_edge(a, b);
  return out;
}

Graph remove_vertex(const Graph& g, Vertex v) { return induced(g, g.vertex_set() & ~singleton(v)); }

Graph intersection(const Graph& a, const Graph& b) {
  require(a.universe() == b.universe(), ErrorKind::kInvalidInput, "intersection: universes differ");
  Graph out(a.universe(), a.vertex_set() & b.vertex_set());
  for (const Edge& e : a.edges())
    if (b.has_edge(e)) out.add_edge(e.u, e.v);
  return out;
}

Graph graph_union(const Graph& a, const Graph& b) {
  require(a.universe() == b.universe(), ErrorKind::kInvalidInput, "union: universes differ");
  Graph out(a.universe(), a.vertex_set() | b.vertex_set());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(e.u, e.v);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int shift = a.universe();
  Graph out(a.universe() + b.universe(), a.vertex_set() | (b.vertex_set() << shift));
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(e.u + shift, e.v + shift);
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertex_set();
  while (left != 0) {
    VertexSet comp = singleton(lowest(left));
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for (Vertex v : members(frontier)) next |= g.neighbors(v);
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

bool is_bipartite(const Graph& g) {
  VertexSet seen = 0;
  VertexSet side = 0;
  for (Vertex root : g.vertices()) {
    if (contains(seen, root)) continue;
    std::vector<Vertex> stack{root};
    seen |= singleton(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : members(g.neighbors(v))) {
        if (!contains(seen, w)) {
          seen |= singleton(w);
          if (!contains(side, v)) side |= singleton(w);
          stack.push_back(w);
        } else if (contains(side, v) == contains(side, w)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_triangle_free(const Graph& g) {
  for (const Edge& e : g.edges())
    if ((g.neighbors(e.u) & g.neighbors(e.v)) != 0) return false;
  return true;
}

bool is_independent(const Graph& g, VertexSet u) {
  for (Vertex v : members(u))
    if ((g.neighbors(v) & u) != 0) return false;
  return true;
}

VertexSet isolated_vertices(const Graph& g) {
  VertexSet out = 0;
  for (Vertex v : g.vertices())
    if (g.neighbors(v) == 0) out |= singleton(v);
  return out;
}

GraphPredicates predicates(const Graph& g) {
  GraphPredicates p;
  p.components = components(g);
  p.connected = p.components.size() == 1;
  p.bipartite = is_bipartite(g);
  p.triangle_free = is_triangle_free(g);
  for (Vertex v : g.vertices()) p.degree_classes[g.degree(v)] |= singleton(v);
  return p;
}

Graph path_graph(int vertices) {
  Graph g(vertices);
  for (int i = 0; i + 1 < vertices; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

namespace {

Graph star_of(const Graph& g, Vertex v) {
  Graph star(g.universe(), singleton(v) | g.neighbors(v));
  for (Vertex w : members(g.neighbors(v))) star.add_edge(v, w);
  return star;
}

NeighborhoodTriple finish_triple(const Graph& g, Graph n_part) {
  Graph c_part = induced(g, g.vertex_set() & ~n_part.vertex_set());
  Graph nc = graph_union(n_part, c_part);
  return {std::move(n_part), std::move(c_part), std::move(nc)};
}

}  // namespace

NeighborhoodTriple neighborhood_of_vertex(const Graph& g, Vertex v) {
  require(g.has_vertex(v), ErrorKind::kInvalidInput, "neighborhood: vertex " + std::to_string(v) + " not in graph");
  return finish_triple(g, star_of(g, v));
}

NeighborhoodTriple neighborhood_of_set(const Graph& g, VertexSet u) {
  require(u != 0, ErrorKind::kInvalidInput, "neighborhood: empty set");
  require(is_subset(u, g.vertex_set()), ErrorKind::kInvalidInput, "neighborhood: set outside the vertex set");
  require(is_independent(g, u), ErrorKind::kInvalidInput,
          "neighborhood: " + set_to_string(u) + " is not independent");
  Graph n_part(g.universe(), 0);
  for (Vertex v : members(u)) n_part = graph_union(n_part, star_of(g, v));
  return finish_triple(g, std::move(n_part));
}

NeighborhoodTriple neighborhood_of_complement_edge(const Graph& g, Edge e) {
  require(g.has_vertex(e.u) && g.has_vertex(e.v) && e.u != e.v && !g.adjacent(e.u, e.v), ErrorKind::kInvalidInput,
          "neighborhood: " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not a complement edge");
  return neighborhood_of_set(g, e.ends());
}

namespace {

bool no_bipartite_component(const Graph& g) {
  for (VertexSet c : components(g))
    if (is_bipartite(induced(g, c))) return false;
  return true;
}

void sort_sets(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    if (set_size(a) != set_size(b)) return set_size(a) < set_size(b);
    return members(a) < members(b);
  });
}

}  // namespace

FundamentalData classify_sets(const Graph& g) {
  FundamentalData out;
  for (Vertex v : g.vertices()) {
    Graph rest = remove_vertex(g, v);
    if (is_connected(rest)) out.ordinary |= singleton(v);
    if (no_bipartite_component(rest)) out.regular |= singleton(v);
  }

  // Backtracking over independent sets: extend only with higher vertices that
  // are not adjacent to anything chosen so far.
  const std::vector<Vertex> order = g.vertices();
  std::vector<std::pair<VertexSet, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [chosen, next] = stack.back();
    stack.pop_back();
    if (chosen != 0) {
      NeighborhoodTriple t = neighborhood_of_set(g, chosen);
      bool n_connected = is_connected(t.n_part);
      if (n_connected && is_connected(t.c_part) && t.c_part.edge_count() > 0) out.acceptable_sets.push_back(chosen);
      if (n_connected && no_bipartite_component(t.c_part)) out.fundamental_sets.push_back(chosen);
    }
    VertexSet blocked = 0;
    for (Vertex v : members(chosen)) blocked |= g.neighbors(v);
    for (std::size_t i = next; i < order.size(); ++i)
      if (!contains(blocked, order[i])) stack.emplace_back(chosen | singleton(order[i]), i + 1);
  }
  sort_sets(out.acceptable_sets);
  sort_sets(out.fundamental_sets);
  for (VertexSet s : out.fundamental_sets) {
    if (set_size(s) == 1) out.fundamental_vertices |= s;
    if (set_size(s) == 2) out.fundamental_edges.emplace_back(lowest(s), lowest(s & (s - 1)));
  }
  std::sort(out.fundamental_edges.begin(), out.fundamental_edges.end());
  return out;
}

FundamentalData fundamentality_fast(const Graph& g) {
  const Graph gbar = complement(g);
  require(is_triangle_free(gbar), ErrorKind::kPreconditionViolation,
          "fundamentality_fast: the complement is not triangle-free");
  FundamentalData out;
  for (Vertex v : gbar.vertices()) {
    const int d = gbar.degree(v);
    if (d != 1 && d != 2) out.fundamental_vertices |= singleton(v);
  }
  for (const Edge& e : gbar.edges())
    if ((g.neighbors(e.u) & g.neighbors(e.v)) != 0) out.fundamental_edges.push_back(e);
  for (Vertex v : members(out.fundamental_vertices)) out.fundamental_sets.push_back(singleton(v));
  for (const Edge& e : out.fundamental_edges) out.fundamental_sets.push_back(e.ends());
  sort_sets(out.fundamental_sets);
  return out;
}

std::optional<VertexSet> two_disjoint_induced_cycles(const Graph& gbar) {
  const std::vector<Vertex> vs = gbar.vertices();
  const int n = static_cast<int>(vs.size());
  // Each cycle has at least three vertices.
  for (int k = 6; k <= n; ++k) {
    // Gosper's hack over k-subsets of positions in vs.
    std::uint64_t pick = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (pick < limit) {
      VertexSet u = 0;
      for (std::uint64_t p = pick; p != 0; p &= p - 1) u |= singleton(vs[std::countr_zero(p)]);
      bool two_regular = true;
      for (Vertex v : members(u)) {
        if (set_size(gbar.neighbors(v) & u) != 2) {
          two_regular = false;
          break;
        }
      }
      if (two_regular && components(induced(gbar, u)).size() == 2) return u;
      const std::uint64_t c = pick & (~pick + 1);
      const std::uint64_t r = pick + c;
      pick = (((r ^ pick) >> 2) / c) | r;
    }
  }
  return std::nullopt;
}

}  // namespace hullmorse
