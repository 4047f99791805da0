#include "hullmorse/hull.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hullmorse/error.hpp"

namespace hullmorse {

LabeledComplex hull_complex(const Graph& g, bool allow_degenerate) {
  LabeledComplex hc;
  hc.graph = g;
  if (g.edge_count() == 0) {
    require(allow_degenerate, ErrorKind::kDegenerateInput, "hull_complex: graph has no edges, P_G is empty");
    hc.degenerate = true;
  }
  hc.lattice = incidence_signs(face_lattice(g));
  hc.labels.reserve(hc.lattice.size());
  for (int f = 0; f < hc.lattice.size(); ++f) {
    hc.labels.push_back(hc.lattice.index.support(hc.lattice.faces[f].gens));
    hc.by_label[hc.labels.back()].push_back(f);
  }
  for (const Cover& c : hc.lattice.covers)
    require(is_subset(hc.labels[c.lower], hc.labels[c.upper]), ErrorKind::kInternalConsistency,
            "hull_complex: labels are not monotone along a cover");
  return hc;
}

namespace {

const std::vector<int>& faces_with_label(const LabeledComplex& hc, VertexSet u) {
  static const std::vector<int> kNone;
  auto it = hc.by_label.find(u);
  return it == hc.by_label.end() ? kNone : it->second;
}

}  // namespace

LabelClass label_class(const LabeledComplex& hc, VertexSet u) {
  require(u != 0, ErrorKind::kInvalidInput, "label_class: empty support");
  require(is_subset(u, hc.graph.vertex_set()), ErrorKind::kInvalidInput, "label_class: support outside V(G)");
  LabelClass cls;
  cls.support = u;
  cls.cells = faces_with_label(hc, u);
  for (int f : cls.cells)
    for (int c : hc.lattice.down[f]) {
      const int lower = hc.lattice.covers[c].lower;
      if (hc.labels[lower] == u) cls.covers.emplace_back(f, lower);
    }

  const Graph sub = induced(hc.graph, u);
  const bool has_isolated = isolated_vertices(sub) != 0;
  require(has_isolated == cls.cells.empty(), ErrorKind::kInternalConsistency,
          "label_class: class of " + set_to_string(u) + " is " + (cls.cells.empty() ? "empty" : "nonempty") +
              " although G[u] " + (has_isolated ? "has" : "has no") + " isolated vertex");
  if (has_isolated) return cls;

  std::size_t product = 1;
  std::vector<EdgeSet> comp_edges;
  for (VertexSet c : components(sub)) {
    cls.factors.push_back({c, faces_with_label(hc, c)});
    product *= cls.factors.back().cells.size();
    comp_edges.push_back(hc.lattice.index.mask_of(induced(hc.graph, c)));
  }
  require(product == cls.cells.size(), ErrorKind::kInternalConsistency,
          "label_class: class of " + set_to_string(u) + " is not the product of its component classes");
  for (int f : cls.cells)
    for (std::size_t i = 0; i < cls.factors.size(); ++i) {
      const int part = hc.lattice.find(hc.gens(f) & comp_edges[i]);
      require(part >= 0 && hc.labels[part] == cls.factors[i].vertices, ErrorKind::kInternalConsistency,
              "label_class: a cell does not split into component cells");
    }
  return cls;
}

LabelClass mg(const LabeledComplex& hc) {
  if (hc.graph.edge_count() == 0 || isolated_vertices(hc.graph) != 0) {
    LabelClass out;
    out.support = hc.graph.vertex_set();
    if (hc.graph.edge_count() == 0) out.cells = {0};  // convention M_G = {empty face}
    return out;
  }
  return label_class(hc, hc.graph.vertex_set());
}

bool pair_table_in_mg(int tag) { return tag == 2 || tag == 6 || tag == 7 || tag == 11; }

namespace {

void require_lemma_scope(const Graph& g, const char* who) {
  require(g.edge_count() > 0 && is_connected(g), ErrorKind::kInvalidInput, std::string(who) + ": graph must be connected");
  require(!is_bipartite(g), ErrorKind::kInvalidInput, std::string(who) + ": graph must not be bipartite");
  require(is_triangle_free(complement(g)), ErrorKind::kInvalidInput,
          std::string(who) + ": complement must be triangle-free");
}

}  // namespace

PairType classify_pair(const Graph& g, VertexSet a, VertexSet b) {
  require_lemma_scope(g, "classify_pair");
  require(a != b, ErrorKind::kInvalidInput, "classify_pair: the two sets coincide");
  const FundamentalData fd = fundamentality_fast(g);
  auto is_fundamental = [&](VertexSet s) {
    return std::find(fd.fundamental_sets.begin(), fd.fundamental_sets.end(), s) != fd.fundamental_sets.end();
  };
  require(is_fundamental(a) && is_fundamental(b), ErrorKind::kInvalidInput,
          "classify_pair: " + set_to_string(is_fundamental(a) ? b : a) + " is not a fundamental set");
  auto edge_fundamental = [&](Vertex x, Vertex y) {
    return std::find(fd.fundamental_edges.begin(), fd.fundamental_edges.end(), Edge(x, y)) != fd.fundamental_edges.end();
  };
  auto vertex_fundamental = [&](Vertex x) { return contains(fd.fundamental_vertices, x); };
  const Graph gbar = complement(g);

  PairType p;
  p.first = a;
  p.second = b;
  if (set_size(a) == 1 && set_size(b) == 1) {
    const Vertex u = lowest(a), v = lowest(b);
    if (gbar.adjacent(u, v))
      p.tag = edge_fundamental(u, v) ? 1 : 2;
    else
      p.tag = 3;
  } else if (set_size(a) == 2 && set_size(b) == 2) {
    const VertexSet shared = a & b;
    if (shared == 0)
      p.tag = 4;
    else
      p.tag = vertex_fundamental(lowest(shared)) ? 5 : 6;
  } else {
    const VertexSet pair = set_size(a) == 2 ? a : b;
    const Vertex w = lowest(set_size(a) == 2 ? b : a);
    if (contains(pair, w)) {
      p.tag = 7;
    } else {
      const VertexSet near = gbar.neighbors(w) & pair;
      require(set_size(near) < 2, ErrorKind::kInternalConsistency, "classify_pair: triangle in the complement");
      if (near == 0) {
        p.tag = 8;
      } else {
        const Vertex u = lowest(near);
        if (edge_fundamental(u, w))
          p.tag = 9;
        else
          p.tag = vertex_fundamental(u) ? 10 : 11;
      }
    }
  }

  const EdgeIndex index(g);
  const EdgeSet meet = index.mask_of(neighborhood_of_set(g, a).nc) & index.mask_of(neighborhood_of_set(g, b).nc);
  const bool direct = index.support(meet) == g.vertex_set();
  p.in_mg = pair_table_in_mg(p.tag);
  require(p.in_mg == direct, ErrorKind::kInternalConsistency,
          "classify_pair: table says type " + std::to_string(p.tag) + (p.in_mg ? " is" : " is not") +
              " in M_G but the intersection of " + set_to_string(a) + " and " + set_to_string(b) + " disagrees");
  return p;
}

MFromF m_from_f(const Graph& g) { return m_from_f(hull_complex(g)); }

MFromF m_from_f(const LabeledComplex& hc) {
  const Graph& g = hc.graph;
  require_lemma_scope(g, "m_from_f");
  const FundamentalData fd = fundamentality_fast(g);
  const EdgeIndex& index = hc.lattice.index;

  MFromF out;
  out.f = f_graph(complement(g), fd.fundamental_edges);
  out.top = index.all();
  for (const FNode& node : out.f.nodes()) {
    const VertexSet u = node.is_vertex() ? singleton(node.as_vertex()) : node.edge.ends();
    out.node_cells.push_back(index.mask_of(neighborhood_of_set(g, u).nc));
  }
  for (auto [i, j] : out.f.edges()) out.edge_cells.push_back(out.node_cells[i] & out.node_cells[j]);
  out.cells = 1 + out.f.node_count() + out.f.edge_count();

  const LabelClass m = mg(hc);
  const int top_dim = hc.lattice.dim();
  for (int c : m.cells) out.max_codim_in_mg = std::max(out.max_codim_in_mg, top_dim - hc.dim(c));
  require(out.max_codim_in_mg <= 2, ErrorKind::kInternalConsistency, "m_from_f: M_G has a cell of codimension 3 or more");

  auto locate = [&](EdgeSet gens, int codim, const std::string& what) {
    const int f = hc.lattice.find(gens);
    require(f >= 0, ErrorKind::kInternalConsistency, "m_from_f: " + what + " is not a face of P_G");
    require(hc.dim(f) == top_dim - codim, ErrorKind::kInternalConsistency,
            "m_from_f: " + what + " has codimension " + std::to_string(top_dim - hc.dim(f)) + ", expected " +
                std::to_string(codim));
    require(hc.labels[f] == g.vertex_set(), ErrorKind::kInternalConsistency, "m_from_f: " + what + " is not in M_G");
    return f;
  };
  std::vector<int> image{locate(out.top, 0, "top")};
  std::vector<int> node_face, edge_face;
  for (int i = 0; i < out.f.node_count(); ++i)
    node_face.push_back(locate(out.node_cells[i], 1, "facet of node " + out.f.nodes()[i].to_string()));
  for (int e = 0; e < out.f.edge_count(); ++e) {
    const auto [i, j] = out.f.edges()[e];
    edge_face.push_back(locate(out.edge_cells[e], 2,
                               "cell of edge " + out.f.nodes()[i].to_string() + " " + out.f.nodes()[j].to_string()));
  }
  image.insert(image.end(), node_face.begin(), node_face.end());
  image.insert(image.end(), edge_face.begin(), edge_face.end());
  std::sort(image.begin(), image.end());
  require(std::adjacent_find(image.begin(), image.end()) == image.end(), ErrorKind::kInternalConsistency,
          "m_from_f: two elements of F map to the same cell");
  require(image == m.cells, ErrorKind::kInternalConsistency,
          "m_from_f: F accounts for " + std::to_string(image.size()) + " cells but M_G has " +
              std::to_string(m.cells.size()));

  std::set<std::pair<int, int>> expected;
  for (int f : node_face) expected.emplace(hc.lattice.top(), f);
  for (int e = 0; e < out.f.edge_count(); ++e) {
    expected.emplace(node_face[out.f.edges()[e].first], edge_face[e]);
    expected.emplace(node_face[out.f.edges()[e].second], edge_face[e]);
  }
  const std::set<std::pair<int, int>> actual(m.covers.begin(), m.covers.end());
  require(expected == actual, ErrorKind::kInternalConsistency,
          "m_from_f: cover relations of M_G differ from the reversed face order of F");
  return out;
}

namespace {

nlohmann::json vertex_list(VertexSet s) { return members(s); }

nlohmann::json gens_json(const EdgeIndex& index, EdgeSet s) {
  nlohmann::json out = nlohmann::json::array();
  for (const Edge& e : index.edges_of(s)) out.push_back({e.u, e.v});
  return out;
}

}  // namespace

std::string class_to_json(const LabeledComplex& hc, const LabelClass& cls) {
  nlohmann::json j;
  j["support"] = vertex_list(cls.support);
  j["cells"] = nlohmann::json::array();
  std::map<int, int> position;
  for (int f : cls.cells) {
    position[f] = static_cast<int>(position.size());
    j["cells"].push_back({{"gens", gens_json(hc.lattice.index, hc.gens(f))},
                          {"dim", hc.dim(f)},
                          {"label", vertex_list(hc.labels[f])}});
  }
  j["covers"] = nlohmann::json::array();
  for (auto [u, l] : cls.covers) j["covers"].push_back({position[u], position[l]});
  j["factors"] = nlohmann::json::array();
  for (const ClassFactor& fac : cls.factors)
    j["factors"].push_back({{"vertices", vertex_list(fac.vertices)}, {"size", fac.cells.size()}});
  return j.dump();
}

std::string class_to_dot(const LabeledComplex& hc, const LabelClass& cls, const std::vector<std::pair<int, int>>& matched) {
  const std::set<std::pair<int, int>> m(matched.begin(), matched.end());
  std::ostringstream os;
  os << "digraph labelclass {\n  rankdir=BT;\n";
  for (int f : cls.cells) {
    os << "  f" << f << " [label=\"";
    bool first = true;
    for (const Edge& e : hc.lattice.index.edges_of(hc.gens(f))) {
      os << (first ? "" : " ") << e.u << '-' << e.v;
      first = false;
    }
    os << "\\ndim " << hc.dim(f) << " label " << set_to_string(hc.labels[f]) << "\"];\n";
  }
  for (auto [u, l] : cls.covers) {
    if (m.count({u, l}))
      os << "  f" << u << " -> f" << l << " [color=red, penwidth=2];\n";
    else
      os << "  f" << l << " -> f" << u << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace hullmorse
