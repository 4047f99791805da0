#include "hullmorse/fgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hullmorse/error.hpp"

namespace hullmorse {

std::string FNode::to_string() const {
  if (is_vertex()) return std::to_string(edge.u);
  return std::to_string(edge.u) + "-" + std::to_string(edge.v);
}

Multigraph::Multigraph(std::vector<FNode> nodes, std::vector<std::pair<FNode, FNode>> edges) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    int i = find(a);
    int j = find(b);
    require(i >= 0 && j >= 0, ErrorKind::kInternalConsistency, "multigraph edge references an unknown node");
    edges_.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(edges_.begin(), edges_.end());
}

int Multigraph::find(const FNode& n) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), n);
  if (it == nodes_.end() || *it != n) return -1;
  return static_cast<int>(it - nodes_.begin());
}

std::vector<std::vector<int>> Multigraph::component_nodes() const {
  std::vector<int> parent(nodes_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges_) parent[root(a)] = root(b);
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < node_count(); ++i) by_root[root(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [r, list] : by_root) out.push_back(std::move(list));
  std::sort(out.begin(), out.end());
  return out;
}

int Multigraph::component_count() const { return static_cast<int>(component_nodes().size()); }

bool Multigraph::is_simple() const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].first == edges_[i].second) return false;
    if (i > 0 && edges_[i] == edges_[i - 1]) return false;
  }
  return true;
}

int Multigraph::degree(int node) const {
  int d = 0;
  for (auto [a, b] : edges_) d += (a == node) + (b == node);
  return d;
}

namespace {

struct FPrep {
  VertexSet low = 0;  // V_1 ∪ V_2 of gbar
  std::vector<Edge> s;
  std::vector<FNode> nodes;
};

FPrep prepare(const Graph& gbar, std::span<const Edge> s) {
  FPrep p;
  p.s.assign(s.begin(), s.end());
  std::sort(p.s.begin(), p.s.end());
  require(std::adjacent_find(p.s.begin(), p.s.end()) == p.s.end(), ErrorKind::kInvalidInput,
          "f_graph: repeated edge in S");
  for (const Edge& e : p.s)
    require(gbar.has_edge(e), ErrorKind::kInvalidInput,
            "f_graph: " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not an edge of the graph");
  VertexSet covered = 0;
  for (const Edge& e : p.s) covered |= e.ends();
  for (Vertex v : gbar.vertices()) {
    const int d = gbar.degree(v);
    if (d == 1 || d == 2) {
      p.low |= singleton(v);
      require(contains(covered, v), ErrorKind::kInvalidInput,
              "f_graph: vertex " + std::to_string(v) + " has degree " + std::to_string(d) + " but lies on no edge of S");
    } else {
      p.nodes.push_back(FNode::vertex(v));
    }
  }
  for (const Edge& e : p.s) p.nodes.push_back(FNode::subdivided(e));
  return p;
}

bool in_s(const FPrep& p, Edge e) { return std::binary_search(p.s.begin(), p.s.end(), e); }

}  // namespace

Multigraph f_graph(const Graph& gbar, std::span<const Edge> s) {
  return f_graph(gbar, s, [](Vertex, std::span<const Edge> candidates) { return candidates.front(); });
}

Multigraph f_graph(const Graph& gbar, std::span<const Edge> s, const ContractionChoice& choice) {
  FPrep p = prepare(gbar, s);

  std::vector<FNode> image(gbar.universe());
  std::vector<Edge> contracted(gbar.universe());
  for (Vertex v : gbar.vertices()) {
    if (!contains(p.low, v)) {
      image[v] = FNode::vertex(v);
      continue;
    }
    std::vector<Edge> candidates;
    for (const Edge& e : p.s)
      if (e.has(v)) candidates.push_back(e);
    Edge pick = choice(v, candidates);
    require(std::find(candidates.begin(), candidates.end(), pick) != candidates.end(), ErrorKind::kInvalidInput,
            "f_graph: contraction choice for vertex " + std::to_string(v) + " is not an incident edge of S");
    contracted[v] = pick;
    image[v] = FNode::subdivided(pick);
  }

  // Edges of the subdivision, minus one contracted edge per low-degree vertex.
  std::vector<std::pair<FNode, FNode>> edges;
  for (const Edge& e : gbar.edges()) {
    if (!in_s(p, e)) {
      edges.emplace_back(image[e.u], image[e.v]);
      continue;
    }
    for (Vertex end : {e.u, e.v}) {
      if (contains(p.low, end) && contracted[end] == e) continue;
      edges.emplace_back(image[end], FNode::subdivided(e));
    }
  }
  return Multigraph(std::move(p.nodes), std::move(edges));
}

Multigraph f_graph_described(const Graph& gbar, std::span<const Edge> s) {
  FPrep p = prepare(gbar, s);
  std::vector<std::pair<FNode, FNode>> edges;
  const VertexSet high = gbar.vertex_set() & ~p.low;

  for (std::size_t i = 0; i < p.s.size(); ++i)
    for (std::size_t j = i + 1; j < p.s.size(); ++j)
      if ((p.s[i].ends() & p.s[j].ends() & p.low) != 0)
        edges.emplace_back(FNode::subdivided(p.s[i]), FNode::subdivided(p.s[j]));

  for (const Edge& e : gbar.edges())
    if (contains(high, e.u) && contains(high, e.v) && !in_s(p, e))
      edges.emplace_back(FNode::vertex(e.u), FNode::vertex(e.v));

  for (const Edge& e : p.s)
    for (Vertex v : {e.u, e.v})
      if (contains(high, v)) edges.emplace_back(FNode::vertex(v), FNode::subdivided(e));

  for (Vertex u : members(high)) {
    for (const Edge& e : p.s) {
      if (e.has(u)) continue;
      for (Vertex v : {e.u, e.v})
        if (contains(p.low, v) && gbar.adjacent(u, v) && !in_s(p, Edge(u, v))) {
          edges.emplace_back(FNode::vertex(u), FNode::subdivided(e));
          break;
        }
    }
  }
  return Multigraph(std::move(p.nodes), std::move(edges));
}

}  // namespace hullmorse
