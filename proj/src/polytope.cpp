#include "hullmorse/polytope.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "hullmorse/error.hpp"
#include "hullmorse/linalg.hpp"

namespace hullmorse {

EdgeIndex::EdgeIndex(const Graph& g) : EdgeIndex(g.edges()) {}

EdgeIndex::EdgeIndex(std::vector<Edge> sorted_edges) : edges_(std::move(sorted_edges)) {
  require(static_cast<int>(edges_.size()) <= kMaxEdges, ErrorKind::kResourceLimit,
          "graphs with more than 64 edges are not supported (got " + std::to_string(edges_.size()) + ")");
  require(std::is_sorted(edges_.begin(), edges_.end()), ErrorKind::kInternalConsistency, "edge index must be sorted");
}

int EdgeIndex::index_of(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  return (it != edges_.end() && *it == e) ? static_cast<int>(it - edges_.begin()) : -1;
}

EdgeSet EdgeIndex::all() const { return size() == 64 ? ~EdgeSet{0} : (EdgeSet{1} << size()) - 1; }

EdgeSet EdgeIndex::mask_of(std::span<const Edge> edges) const {
  EdgeSet s = 0;
  for (const Edge& e : edges) {
    const int i = index_of(e);
    require(i >= 0, ErrorKind::kInvalidInput,
            "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not a generator");
    s |= EdgeSet{1} << i;
  }
  return s;
}

EdgeSet EdgeIndex::mask_of(const Graph& sub) const { return mask_of(sub.edges()); }

std::vector<Edge> EdgeIndex::edges_of(EdgeSet s) const {
  std::vector<Edge> out;
  for (; s != 0; s &= s - 1) out.push_back(edges_[std::countr_zero(s)]);
  return out;
}

VertexSet EdgeIndex::support(EdgeSet s) const {
  VertexSet out = 0;
  for (; s != 0; s &= s - 1) out |= edges_[std::countr_zero(s)].ends();
  return out;
}

Edge LatticePoint::edge() const {
  std::vector<int> at;
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (int k = 0; k < coords[i]; ++k) at.push_back(static_cast<int>(i));
  require(at.size() == 2 && at[0] != at[1], ErrorKind::kInvalidInput, "lattice point is not e_i + e_j");
  return Edge(at[0], at[1]);
}

std::vector<LatticePoint> polytope_vertices(const Graph& g) {
  std::vector<LatticePoint> out;
  for (const Edge& e : g.edges()) {
    LatticePoint p;
    p.coords.assign(g.universe(), 0);
    p.coords[e.u] = p.coords[e.v] = 1;
    out.push_back(std::move(p));
  }
  return out;
}

int affine_dim(std::span<const LatticePoint> points) {
  if (points.empty()) return -1;
  std::vector<std::vector<std::int64_t>> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<std::int64_t> row(points[i].coords.size());
    for (std::size_t c = 0; c < row.size(); ++c) row[c] = points[i].coords[c] - points[0].coords[c];
    diffs.push_back(std::move(row));
  }
  return integer_rank(std::move(diffs));
}

int affine_dim_of_edges(std::span<const Edge> edges, int universe) {
  if (edges.empty()) return -1;
  std::vector<std::vector<std::int64_t>> diffs;
  for (std::size_t i = 1; i < edges.size(); ++i) {
    std::vector<std::int64_t> row(universe, 0);
    row[edges[i].u] += 1;
    row[edges[i].v] += 1;
    row[edges[0].u] -= 1;
    row[edges[0].v] -= 1;
    diffs.push_back(std::move(row));
  }
  return integer_rank(std::move(diffs));
}

int FaceLattice::find(EdgeSet gens) const {
  auto it = lookup.find(gens);
  return it == lookup.end() ? -1 : it->second;
}

bool FaceLattice::is_signed() const {
  return std::all_of(covers.begin(), covers.end(), [](const Cover& c) { return c.sign != 0; });
}

std::size_t FaceLattice::count_of_dim(int d) const {
  return static_cast<std::size_t>(
      std::count_if(faces.begin(), faces.end(), [d](const Face& f) { return f.dim == d; }));
}

FaceLattice make_lattice(int universe, EdgeIndex index, std::vector<EdgeSet> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());

  FaceLattice lat;
  lat.universe = universe;
  lat.index = std::move(index);
  lat.faces.reserve(family.size());
  for (EdgeSet s : family)
    lat.faces.push_back({s, affine_dim_of_edges(lat.index.edges_of(s), universe)});
  std::sort(lat.faces.begin(), lat.faces.end(), [](const Face& a, const Face& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.gens < b.gens;
  });
  for (int i = 0; i < lat.size(); ++i) lat.lookup.emplace(lat.faces[i].gens, i);

  std::map<int, std::vector<int>> by_dim;
  for (int i = 0; i < lat.size(); ++i) by_dim[lat.faces[i].dim].push_back(i);
  for (int t = 0; t < lat.size(); ++t) {
    auto it = by_dim.find(lat.faces[t].dim - 1);
    if (it == by_dim.end()) continue;
    for (int s : it->second)
      if (edges_subset(lat.faces[s].gens, lat.faces[t].gens)) lat.covers.push_back({t, s, 0});
  }
  lat.down.assign(lat.size(), {});
  lat.up.assign(lat.size(), {});
  for (int c = 0; c < static_cast<int>(lat.covers.size()); ++c) {
    lat.down[lat.covers[c].upper].push_back(c);
    lat.up[lat.covers[c].lower].push_back(c);
  }
  return lat;
}

std::vector<Face> facets_connected(const Graph& g) {
  require(g.edge_count() > 0, ErrorKind::kPreconditionViolation, "facets_connected: graph has no edges");
  require(is_connected(g), ErrorKind::kPreconditionViolation, "facets_connected: graph is disconnected");
  const EdgeIndex index(g);
  const FundamentalData data = classify_sets(g);
  const bool bipartite = is_bipartite(g);

  std::vector<EdgeSet> gens;
  for (Vertex v : members(bipartite ? data.ordinary : data.regular)) gens.push_back(index.mask_of(remove_vertex(g, v)));
  for (VertexSet u : bipartite ? data.acceptable_sets : data.fundamental_sets)
    gens.push_back(index.mask_of(neighborhood_of_set(g, u).nc));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<Face> out;
  for (EdgeSet s : gens) out.push_back({s, affine_dim_of_edges(index.edges_of(s), g.universe())});
  return out;
}

namespace {

// Faces of P_H for connected h, as generator sets relative to `ambient`.
std::vector<EdgeSet> connected_faces(const Graph& h, const EdgeIndex& ambient) {
  const EdgeIndex local(h);
  std::vector<EdgeSet> facets;
  for (const Face& f : facets_connected(h)) facets.push_back(ambient.mask_of(local.edges_of(f.gens)));
  std::unordered_set<EdgeSet> seen(facets.begin(), facets.end());
  std::deque<EdgeSet> work(facets.begin(), facets.end());
  while (!work.empty()) {
    const EdgeSet f = work.front();
    work.pop_front();
    for (EdgeSet facet : facets) {
      const EdgeSet meet = f & facet;
      if (seen.insert(meet).second) work.push_back(meet);
    }
  }
  seen.insert(0);
  seen.insert(ambient.mask_of(h));
  return {seen.begin(), seen.end()};
}

}  // namespace

FaceLattice face_lattice(const Graph& g) {
  EdgeIndex index(g);
  std::vector<EdgeSet> family{0};
  for (VertexSet c : components(g)) {
    const Graph h = induced(g, c);
    if (h.edge_count() == 0) continue;
    // Join: every face is a union of one (possibly empty) face per component.
    const std::vector<EdgeSet> local = connected_faces(h, index);
    std::vector<EdgeSet> next;
    next.reserve(family.size() * local.size());
    for (EdgeSet a : family)
      for (EdgeSet b : local) next.push_back(a | b);
    family = std::move(next);
  }
  return make_lattice(g.universe(), std::move(index), std::move(family));
}

namespace {

std::vector<std::int64_t> point_of(const Edge& e, int universe) {
  std::vector<std::int64_t> p(universe, 0);
  p[e.u] = p[e.v] = 1;
  return p;
}

std::vector<std::int64_t> diff(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

std::int64_t dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Integer null-space basis of a small integer matrix (fraction-free RREF).
std::vector<std::vector<std::int64_t>> integer_null_space(std::vector<std::vector<std::int64_t>> m, int cols) {
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const std::int64_t a = m[row][c];
      const std::int64_t b = m[r][c];
      std::int64_t g = 0;
      for (int k = 0; k < cols; ++k) {
        m[r][k] = a * m[r][k] - b * m[row][k];
        g = std::gcd(g, m[r][k]);
      }
      if (g > 1)
        for (int k = 0; k < cols; ++k) m[r][k] /= g;
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<std::vector<std::int64_t>> basis;
  for (int f = 0; f < cols; ++f) {
    if (std::find(pivot_col.begin(), pivot_col.end(), f) != pivot_col.end()) continue;
    std::int64_t l = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) l = std::lcm(l, std::abs(m[r][pivot_col[r]]));
    std::vector<std::int64_t> v(cols, 0);
    v[f] = l;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -(l / m[r][pivot_col[r]]) * m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

bool geometric_face_oracle(const Graph& g, EdgeSet s) {
  const EdgeIndex index(g);
  require(s != 0, ErrorKind::kInvalidInput, "geometric_face_oracle: empty generator set");
  require(edges_subset(s, index.all()), ErrorKind::kInvalidInput, "geometric_face_oracle: set is not within E(g)");
  const int n = g.universe();
  const std::vector<Edge> on = index.edges_of(s);
  const std::vector<Edge> off = index.edges_of(index.all() & ~s);
  const auto p0 = point_of(on.front(), n);

  std::vector<std::vector<std::int64_t>> span_rows;
  for (std::size_t i = 1; i < on.size(); ++i) span_rows.push_back(diff(point_of(on[i], n), p0));
  const int span_rank = integer_rank(span_rows);
  for (const Edge& e : off) {
    auto rows = span_rows;
    rows.push_back(diff(point_of(e, n), p0));
    if (integer_rank(std::move(rows)) == span_rank) return false;  // inside the affine span
  }
  if (off.empty()) return true;

  // c = N t is constant on s; ask for c.(q - p0) <= -1 on every other vertex q.
  std::vector<std::vector<Rational>> eq;
  for (const auto& r : span_rows) eq.emplace_back(r.begin(), r.end());
  const auto basis = null_space(eq, n);
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (const Edge& e : off) {
    const auto d = diff(point_of(e, n), p0);
    std::vector<Rational> row;
    for (const auto& v : basis) {
      Rational x = 0;
      for (int k = 0; k < n; ++k) x += v[k] * d[k];
      row.push_back(x);
    }
    a.push_back(std::move(row));
    b.emplace_back(-1);
  }
  if (basis.empty()) return false;
  return feasible(a, b);
}

std::vector<EdgeSet> geometric_facets(const Graph& g) {
  const EdgeIndex index(g);
  const int n = g.universe();
  const int m = index.size();
  const int dim = affine_dim_of_edges(index.edges(), n);
  if (dim < 0) return {};
  if (dim == 0) return {EdgeSet{0}};

  std::vector<std::vector<std::int64_t>> pts;
  for (const Edge& e : index.edges()) pts.push_back(point_of(e, n));

  std::unordered_set<EdgeSet> found;
  std::vector<int> chosen;
  // Depth-first over affinely independent subsets of `dim` points.
  auto recurse = [&](auto&& self, int start, std::vector<std::vector<std::int64_t>>& diffs) -> void {
    if (static_cast<int>(chosen.size()) == dim) {
      for (const auto& c : integer_null_space(diffs, n)) {
        std::vector<std::int64_t> side(m);
        bool spans = false;
        for (int q = 0; q < m; ++q) {
          side[q] = dot(c, diff(pts[q], pts[chosen.front()]));
          spans |= side[q] != 0;
        }
        if (!spans) continue;
        bool pos = false, neg = false;
        EdgeSet on = 0;
        for (int q = 0; q < m; ++q) {
          if (side[q] == 0) on |= EdgeSet{1} << q;
          pos |= side[q] > 0;
          neg |= side[q] < 0;
        }
        if (!(pos && neg)) found.insert(on);
        break;
      }
      return;
    }
    for (int j = start; j < m; ++j) {
      if (chosen.empty()) {
        chosen.push_back(j);
        self(self, j + 1, diffs);
        chosen.pop_back();
        continue;
      }
      diffs.push_back(diff(pts[j], pts[chosen.front()]));
      if (integer_rank(diffs) == static_cast<int>(diffs.size())) {
        chosen.push_back(j);
        self(self, j + 1, diffs);
        chosen.pop_back();
      }
      diffs.pop_back();
    }
  };
  std::vector<std::vector<std::int64_t>> diffs;
  recurse(recurse, 0, diffs);
  std::vector<EdgeSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

FaceLattice incidence_signs(FaceLattice lat) {
  for (Cover& c : lat.covers) c.sign = 0;
  for (int f = 0; f < lat.size(); ++f) {
    const int d = lat.faces[f].dim;
    if (d < 0) continue;
    if (d == 0) {
      for (int c : lat.down[f]) lat.covers[c].sign = 1;
      continue;
    }
    // Each codimension-two face of f lies in exactly two facets of f; the
    // signs on that diamond must cancel.
    const std::vector<int>& sides = lat.down[f];
    std::map<int, std::vector<std::pair<int, int>>> diamonds;  // rho -> (side position, sign(tau, rho))
    for (std::size_t k = 0; k < sides.size(); ++k) {
      const int tau = lat.covers[sides[k]].lower;
      for (int c : lat.down[tau]) diamonds[lat.covers[c].lower].emplace_back(static_cast<int>(k), lat.covers[c].sign);
    }
    std::vector<std::vector<std::pair<int, int>>> constraint(sides.size());  // (other side, relation)
    for (const auto& [rho, pair] : diamonds) {
      require(pair.size() == 2, ErrorKind::kInternalConsistency,
              "incidence_signs: diamond property fails (a codimension-two face lies in " +
                  std::to_string(pair.size()) + " facets)");
      const int rel = -pair[0].second * pair[1].second;
      constraint[pair[0].first].emplace_back(pair[1].first, rel);
      constraint[pair[1].first].emplace_back(pair[0].first, rel);
    }
    std::vector<int> sign(sides.size(), 0);
    for (std::size_t start = 0; start < sides.size(); ++start) {
      if (sign[start] != 0) continue;
      sign[start] = 1;
      std::deque<int> queue{static_cast<int>(start)};
      while (!queue.empty()) {
        const int k = queue.front();
        queue.pop_front();
        for (auto [other, rel] : constraint[k]) {
          const int want = sign[k] * rel;
          if (sign[other] == 0) {
            sign[other] = want;
            queue.push_back(other);
          } else {
            require(sign[other] == want, ErrorKind::kInternalConsistency,
                    "incidence_signs: contradictory sign constraints");
          }
        }
      }
    }
    for (std::size_t k = 0; k < sides.size(); ++k) lat.covers[sides[k]].sign = sign[k];
  }
  require(boundary_squares_to_zero(lat), ErrorKind::kInternalConsistency, "incidence_signs: boundary does not square to zero");
  return lat;
}

bool boundary_squares_to_zero(const FaceLattice& lat) {
  for (int f = 0; f < lat.size(); ++f) {
    std::map<int, int> acc;
    for (int c : lat.down[f]) {
      const Cover& outer = lat.covers[c];
      for (int c2 : lat.down[outer.lower]) acc[lat.covers[c2].lower] += outer.sign * lat.covers[c2].sign;
    }
    for (const auto& [rho, v] : acc)
      if (v != 0) return false;
  }
  return true;
}

namespace {

nlohmann::json edges_json(const EdgeIndex& index, EdgeSet s) {
  nlohmann::json out = nlohmann::json::array();
  for (const Edge& e : index.edges_of(s)) out.push_back({e.u, e.v});
  return out;
}

}  // namespace

std::string lattice_to_json(const FaceLattice& lat) {
  nlohmann::json j;
  j["universe"] = lat.universe;
  j["generators"] = edges_json(lat.index, lat.index.all());
  j["faces"] = nlohmann::json::array();
  for (const Face& f : lat.faces) j["faces"].push_back({{"gens", edges_json(lat.index, f.gens)}, {"dim", f.dim}});
  j["covers"] = nlohmann::json::array();
  j["signs"] = nlohmann::json::array();
  for (const Cover& c : lat.covers) {
    j["covers"].push_back({c.upper, c.lower});
    j["signs"].push_back(c.sign);
  }
  return j.dump();
}

std::string lattice_to_dot(const FaceLattice& lat) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (int i = 0; i < lat.size(); ++i) {
    os << "  f" << i << " [label=\"";
    bool first = true;
    for (const Edge& e : lat.index.edges_of(lat.faces[i].gens)) {
      os << (first ? "" : " ") << e.u << '-' << e.v;
      first = false;
    }
    if (first) os << "empty";
    os << "\\n" << "dim " << lat.faces[i].dim << "\"];\n";
  }
  for (const Cover& c : lat.covers) {
    os << "  f" << c.lower << " -> f" << c.upper;
    if (c.sign != 0) os << " [label=\"" << (c.sign > 0 ? '+' : '-') << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace hullmorse
