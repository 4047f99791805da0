#include "hullmorse/morse.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <functional>
#include <optional>
#include <set>

#include <json.hpp>

#include "hullmorse/error.hpp"
#include "hullmorse/fgraph.hpp"

namespace hullmorse {

void Matching::add(int upper, int lower) { pairs.emplace_back(upper, lower); }

void Matching::normalize() {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

std::vector<int> Matching::partners(int cells) const {
  std::vector<int> p(cells, -1);
  for (auto [u, l] : pairs) {
    p[u] = l;
    p[l] = u;
  }
  return p;
}

namespace {

int cover_sign(const LabeledComplex& hc, int upper, int lower) {
  for (int c : hc.lattice.down[upper])
    if (hc.lattice.covers[c].lower == lower) return hc.lattice.covers[c].sign;
  return 0;
}

bool is_cover(const LabeledComplex& hc, int upper, int lower) {
  if (upper < 0 || upper >= hc.size() || lower < 0 || lower >= hc.size()) return false;
  for (int c : hc.lattice.down[upper])
    if (hc.lattice.covers[c].lower == lower) return true;
  return false;
}

// Cycle test on the Hasse diagram restricted to `cells`, matched edges reversed.
bool acyclic_on(const LabeledComplex& hc, const std::vector<int>& cells, const std::vector<int>& partner) {
  std::vector<char> inside(hc.size(), 0);
  for (int c : cells) inside[c] = 1;
  auto successors = [&](int x, std::vector<int>& out) {
    out.clear();
    for (int c : hc.lattice.down[x]) {
      const int l = hc.lattice.covers[c].lower;
      if (inside[l] && partner[x] != l) out.push_back(l);
    }
    if (partner[x] >= 0 && inside[partner[x]] && hc.dim(partner[x]) > hc.dim(x)) out.push_back(partner[x]);
  };
  std::vector<char> color(hc.size(), 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> buf;
  for (int start : cells) {
    if (color[start] != 0) continue;
    std::vector<std::pair<int, std::vector<int>>> stack;
    successors(start, buf);
    stack.emplace_back(start, buf);
    color[start] = 1;
    while (!stack.empty()) {
      auto& [x, next] = stack.back();
      if (next.empty()) {
        color[x] = 2;
        stack.pop_back();
        continue;
      }
      const int y = next.back();
      next.pop_back();
      if (color[y] == 1) return false;
      if (color[y] == 0) {
        color[y] = 1;
        successors(y, buf);
        stack.emplace_back(y, buf);
      }
    }
  }
  return true;
}

}  // namespace

MatchingFlags validate_matching(const LabeledComplex& hc, const Matching& m) {
  MatchingFlags flags;
  std::vector<int> partner(hc.size(), -1);
  for (auto [u, l] : m.pairs) {
    require(is_cover(hc, u, l), ErrorKind::kInvalidInput,
            "validate_matching: (" + std::to_string(u) + ", " + std::to_string(l) + ") is not a covering pair");
    if (partner[u] >= 0 || partner[l] >= 0) flags.disjoint = false;
    partner[u] = l;
    partner[l] = u;
    if (hc.labels[u] != hc.labels[l]) flags.homogeneous = false;
    if (hc.dim(l) < 0) flags.empty_unmatched = false;
  }
  if (!flags.disjoint) {
    flags.acyclic = false;
    return flags;
  }
  if (flags.homogeneous) {
    for (const auto& [label, cells] : hc.by_label)
      if (!acyclic_on(hc, cells, partner)) flags.acyclic = false;
  } else {
    flags.acyclic = acyclic_globally(hc, m);
  }
  return flags;
}

bool acyclic_globally(const LabeledComplex& hc, const Matching& m) {
  std::vector<int> all(hc.size());
  for (int i = 0; i < hc.size(); ++i) all[i] = i;
  return acyclic_on(hc, all, m.partners(hc.size()));
}

MorseComplex critical_and_differential(const LabeledComplex& hc, const Matching& m, Field field) {
  const MatchingFlags flags = validate_matching(hc, m);
  require(flags.valid(), ErrorKind::kPreconditionViolation,
          "critical_and_differential: matching is not a homogeneous acyclic matching");
  const std::vector<int> partner = m.partners(hc.size());

  MorseComplex mc;
  mc.field = field;
  std::vector<int> pos(hc.size(), -1);
  for (int c = 0; c < hc.size(); ++c)
    if (partner[c] < 0) {
      pos[c] = static_cast<int>(mc.critical.size());
      mc.critical.push_back(c);
    }

  // flow[c]: image of cell c under the gradient flow, as a combination of critical cells.
  using Combination = std::map<int, Rational>;
  std::vector<std::optional<Combination>> flow(hc.size());
  std::function<const Combination&(int)> phi = [&](int c) -> const Combination& {
    if (flow[c]) return *flow[c];
    Combination out;
    if (partner[c] < 0) {
      out[pos[c]] = 1;
    } else if (hc.dim(partner[c]) > hc.dim(c)) {
      const int tau = partner[c];
      const Rational scale = Rational(-1) / Rational(cover_sign(hc, tau, c));
      for (int cv : hc.lattice.down[tau]) {
        const Cover& k = hc.lattice.covers[cv];
        if (k.lower == c) continue;
        for (const auto& [crit, coef] : phi(k.lower)) out[crit] += scale * k.sign * coef;
      }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    flow[c] = std::move(out);
    return *flow[c];
  };

  mc.chain.degree.resize(mc.critical.size());
  mc.chain.label.resize(mc.critical.size());
  mc.chain.boundary.resize(mc.critical.size());
  for (std::size_t k = 0; k < mc.critical.size(); ++k) {
    const int s = mc.critical[k];
    mc.chain.degree[k] = hc.dim(s);
    mc.chain.label[k] = hc.labels[s];
    Combination d;
    for (int cv : hc.lattice.down[s]) {
      const Cover& c = hc.lattice.covers[cv];
      for (const auto& [crit, coef] : phi(c.lower)) d[crit] += c.sign * coef;
    }
    for (const auto& [crit, coef] : d) {
      const Rational x = in_field(coef, field);
      if (x != 0) mc.chain.boundary[k].emplace_back(crit, x);
    }
  }

  for (std::size_t k = 0; k < mc.critical.size(); ++k) {
    Combination dd;
    for (const auto& [a, x] : mc.chain.boundary[k])
      for (const auto& [b, y] : mc.chain.boundary[a]) dd[b] += x * y;
    for (const auto& [b, v] : dd)
      require(in_field(v, field) == 0, ErrorKind::kInternalConsistency,
              "critical_and_differential: Morse differential does not square to zero");
  }
  return mc;
}

std::vector<std::pair<EdgeSet, EdgeSet>> product_matching(const std::vector<FactorMatching>& factors) {
  std::vector<std::pair<EdgeSet, EdgeSet>> out;
  if (factors.empty()) return out;
  for (const FactorMatching& f : factors)
    if (f.cells.empty()) return out;
  std::vector<std::size_t> at(factors.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const int p = factors[i].partner[at[i]];
      if (p < 0) continue;
      const EdgeSet mine = factors[i].cells[at[i]];
      const EdgeSet theirs = factors[i].cells[p];
      if (edges_subset(theirs, mine)) {
        EdgeSet rest = 0;
        for (std::size_t j = 0; j < factors.size(); ++j)
          if (j != i) rest |= factors[j].cells[at[j]];
        out.emplace_back(rest | mine, rest | theirs);
      }
      break;
    }
    std::size_t k = 0;
    while (k < factors.size() && ++at[k] == factors[k].cells.size()) at[k++] = 0;
    if (k == factors.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

const std::vector<int>& cells_labeled(const LabeledComplex& hc, VertexSet u) {
  static const std::vector<int> kNone;
  auto it = hc.by_label.find(u);
  return it == hc.by_label.end() ? kNone : it->second;
}

FactorMatching bipartite_table(const LabeledComplex& hc, const Graph& h, const std::vector<int>& cells) {
  FactorMatching fm;
  for (int c : cells) fm.cells.push_back(hc.gens(c));
  fm.partner.assign(cells.size(), -1);
  int max_degree = 0;
  for (Vertex v : h.vertices()) max_degree = std::max(max_degree, h.degree(v));
  std::size_t expected = 0;
  bool match_pair = false;
  if (h.vertex_count() == 2 && h.edge_count() == 1) {
    expected = 1;  // K2: a single vertex of P_G
  } else if (h.vertex_count() == 3 && h.edge_count() == 2) {
    expected = 1;  // path on two edges: only the segment
  } else if (h.vertex_count() == 4 && h.edge_count() == 3 && max_degree == 2) {
    expected = 2;  // path on three edges: the triangle and one of its edges
    match_pair = true;
  } else if (h.vertex_count() == 4 && h.edge_count() == 4 && max_degree == 2) {
    expected = 1;  // C4: only the square
  } else {
    fail(ErrorKind::kInvalidInput, "constructive_matching: bipartite component " + set_to_string(h.vertex_set()) +
                                       " is not a subgraph of C4 (is the complement triangle-free?)");
  }
  require(cells.size() == expected, ErrorKind::kInternalConsistency,
          "constructive_matching: bipartite component " + set_to_string(h.vertex_set()) + " has " +
              std::to_string(cells.size()) + " cells with full label, expected " + std::to_string(expected));
  if (match_pair) {
    fm.partner[0] = 1;
    fm.partner[1] = 0;
  }
  return fm;
}

}  // namespace

FactorMatching factor_matching(const LabeledComplex& hc, VertexSet vertices) {
  const Graph h = induced(hc.graph, vertices);
  require(h.edge_count() > 0 && is_connected(h), ErrorKind::kInvalidInput,
          "factor_matching: " + set_to_string(vertices) + " does not induce a connected graph with edges");
  const std::vector<int>& cells = cells_labeled(hc, vertices);
  if (is_bipartite(h)) return bipartite_table(hc, h, cells);

  const EdgeIndex& index = hc.lattice.index;
  const FundamentalData fd = fundamentality_fast(h);
  const Multigraph f = f_graph(complement(h), fd.fundamental_edges);
  std::vector<EdgeSet> node_cell, edge_cell;
  for (const FNode& node : f.nodes()) {
    const VertexSet u = node.is_vertex() ? singleton(node.as_vertex()) : node.edge.ends();
    node_cell.push_back(index.mask_of(neighborhood_of_set(h, u).nc));
  }
  for (auto [i, j] : f.edges()) edge_cell.push_back(node_cell[i] & node_cell[j]);
  const EdgeSet top = index.mask_of(h);

  FactorMatching fm;
  for (int c : cells) fm.cells.push_back(hc.gens(c));
  fm.partner.assign(cells.size(), -1);
  require(cells.size() == static_cast<std::size_t>(1 + f.node_count() + f.edge_count()), ErrorKind::kInternalConsistency,
          "constructive_matching: M of " + set_to_string(vertices) + " does not have the size predicted by F");
  auto local = [&](EdgeSet gens) {
    auto it = std::find(fm.cells.begin(), fm.cells.end(), gens);
    require(it != fm.cells.end(), ErrorKind::kInternalConsistency,
            "constructive_matching: a cell predicted by F is missing from M of " + set_to_string(vertices));
    return static_cast<int>(it - fm.cells.begin());
  };
  auto pair_up = [&](EdgeSet upper, EdgeSet lower) {
    const int a = local(upper), b = local(lower);
    require(fm.partner[a] < 0 && fm.partner[b] < 0, ErrorKind::kInternalConsistency,
            "constructive_matching: a cell is matched twice");
    fm.partner[a] = b;
    fm.partner[b] = a;
  };

  std::vector<std::vector<std::pair<int, int>>> adj(f.node_count());  // (neighbor, edge id)
  for (int e = 0; e < f.edge_count(); ++e) {
    const auto [i, j] = f.edges()[e];
    adj[i].emplace_back(j, e);
    adj[j].emplace_back(i, e);
  }
  const auto comps = f.component_nodes();
  int top_partner = -1;
  for (const auto& comp : comps) {
    const int root = comp.front();
    std::vector<char> seen(f.node_count(), 0);
    seen[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (auto [y, e] : adj[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        pair_up(node_cell[y], edge_cell[e]);
        queue.push_back(y);
      }
    }
    int comp_edges = 0;
    for (int x : comp) comp_edges += static_cast<int>(adj[x].size());
    const bool has_cycle = comp_edges / 2 >= static_cast<int>(comp.size());
    if (top_partner < 0 && has_cycle) top_partner = root;
  }
  if (top_partner < 0) top_partner = comps.front().front();
  pair_up(top, node_cell[top_partner]);
  return fm;
}

Matching constructive_matching(const Graph& g) { return constructive_matching(hull_complex(g)); }

Matching constructive_matching(const LabeledComplex& hc) {
  require(is_triangle_free(complement(hc.graph)), ErrorKind::kInvalidInput,
          "constructive_matching: complement is not triangle-free");
  Matching m;
  std::map<VertexSet, FactorMatching> cache;
  for (const auto& [u, cells] : hc.by_label) {
    if (u == 0) continue;
    std::vector<FactorMatching> factors;
    for (VertexSet c : components(induced(hc.graph, u))) {
      auto it = cache.find(c);
      if (it == cache.end()) it = cache.emplace(c, factor_matching(hc, c)).first;
      factors.push_back(it->second);
    }
    for (auto [upper, lower] : product_matching(factors)) {
      const int a = hc.lattice.find(upper), b = hc.lattice.find(lower);
      require(a >= 0 && b >= 0, ErrorKind::kInternalConsistency, "constructive_matching: product cell is not a face");
      m.add(a, b);
    }
  }
  m.normalize();
  return m;
}

MinimalityReport minimality_checks(const LabeledComplex& hc, const Matching& m, const MorseComplex& mc,
                                   const BettiTable& betti) {
  const StrandVerdict strands = strand_check(mc.chain, mc.field);
  require(strands.acyclic, ErrorKind::kPreconditionViolation,
          "minimality_checks: the Morse complex does not support a resolution");
  MinimalityReport r;

  std::map<std::pair<int, VertexSet>, int> counts;
  for (std::size_t k = 0; k < mc.critical.size(); ++k)
    if (mc.chain.degree[k] >= 0) ++counts[{mc.chain.degree[k], mc.chain.label[k]}];
  std::set<VertexSet> off;
  int total_cells = 0, total_betti = 0;
  for (const auto& [key, n] : counts) {
    total_cells += n;
    if (betti.at(key.first, key.second) != n) off.insert(key.second);
    if (betti.at(key.first, key.second) > n)
      r.inconsistencies.push_back("fewer critical cells than the Betti number at degree " + std::to_string(key.first) +
                                  " label " + set_to_string(key.second));
  }
  for (const auto& [key, b] : betti.entries) {
    total_betti += b;
    if (!counts.count(key)) {
      off.insert(key.second);
      r.inconsistencies.push_back("Betti number without critical cells at degree " + std::to_string(key.first) +
                                  " label " + set_to_string(key.second));
    }
  }
  r.counts_minimal = off.empty();
  r.non_minimal_labels.assign(off.begin(), off.end());
  r.excess_cells = total_cells - total_betti;
  r.excess_pairs = r.excess_cells / 2;

  r.unit_minimal = true;
  for (std::size_t k = 0; k < mc.critical.size(); ++k)
    for (const auto& [lower, coef] : mc.chain.boundary[k])
      if (coef != 0 && mc.chain.label[lower] == mc.chain.label[k]) r.unit_minimal = false;

  // Gradient paths between critical cells of one label.
  const std::vector<int> partner = m.partners(hc.size());
  std::set<VertexSet> path_labels;
  for (int s : mc.critical) {
    if (hc.dim(s) < 1) continue;
    const VertexSet lab = hc.labels[s];
    std::vector<char> seen(hc.size(), 0);
    std::deque<int> queue{s};
    seen[s] = 1;
    bool found = false;
    while (!queue.empty() && !found) {
      const int x = queue.front();
      queue.pop_front();
      for (int cv : hc.lattice.down[x]) {
        const int c = hc.lattice.covers[cv].lower;
        if (hc.labels[c] != lab || c == partner[x]) continue;
        if (partner[c] < 0) {
          found = true;
          break;
        }
        const int up = partner[c];
        if (hc.dim(up) > hc.dim(c) && !seen[up]) {
          seen[up] = 1;
          queue.push_back(up);
        }
      }
    }
    if (found) path_labels.insert(lab);
  }
  r.path_minimal = path_labels.empty();
  r.path_labels.assign(path_labels.begin(), path_labels.end());

  if (r.counts_minimal != r.unit_minimal)
    r.inconsistencies.push_back(std::string("counts_minimal and unit_minimal disagree over ") + field_name(mc.field));
  if (r.path_minimal && !r.unit_minimal)
    r.inconsistencies.push_back(std::string("path_minimal holds but unit_minimal fails over ") + field_name(mc.field));
  return r;
}

SearchResult optimal_search(const LabeledComplex& hc, const LabelClass& cls, const std::map<int, int>& betti_slice) {
  SearchResult res;
  res.support = cls.support;
  for (const auto& [i, b] : betti_slice) res.betti_total += b;
  const int n = cls.size();
  require(n <= kMaxSearchCells, ErrorKind::kResourceLimit,
          "optimal_search: class " + set_to_string(cls.support) + " has " + std::to_string(n) +
              " cells (limit " + std::to_string(kMaxSearchCells) + "); lower bound on critical cells is " +
              std::to_string(res.betti_total));

  // Local cells in descending dimension.
  std::vector<int> order = cls.cells;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return hc.dim(a) > hc.dim(b); });
  std::map<int, int> local;
  for (int i = 0; i < n; ++i) local[order[i]] = i;
  std::vector<std::vector<int>> lower(n);
  for (auto [u, l] : cls.covers) lower[local[u]].push_back(local[l]);

  std::vector<int> partner(n, -1);
  // Path from `from` to `to` with matched pairs reversed.
  auto reaches = [&](int from, int to) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (x == to) return true;
      auto visit = [&](int y) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      };
      for (int l : lower[x])
        if (partner[x] != l) visit(l);
      if (partner[x] >= 0 && hc.dim(order[partner[x]]) > hc.dim(order[x])) visit(partner[x]);
    }
    return false;
  };

  int best = n + 1;
  std::vector<int> best_partner;
  bool done = false;
  std::function<void(int, int)> dfs = [&](int k, int critical) {
    if (done || critical >= best) return;
    ++res.nodes;
    if (k == n) {
      best = critical;
      best_partner = partner;
      if (best <= res.betti_total) done = true;
      return;
    }
    if (partner[k] >= 0) {
      dfs(k + 1, critical);
      return;
    }
    for (int l : lower[k]) {
      if (partner[l] >= 0) continue;
      partner[k] = l;
      partner[l] = k;
      if (!reaches(k, l)) dfs(k + 1, critical);
      partner[k] = partner[l] = -1;
      if (done) return;
    }
    dfs(k + 1, critical + 1);
  };
  dfs(0, 0);

  require(!best_partner.empty() || n == 0, ErrorKind::kInternalConsistency, "optimal_search: no matching found");
  res.min_total = n == 0 ? 0 : best;
  for (int i = 0; i < n; ++i) {
    if (best_partner[i] < 0)
      ++res.min_critical[hc.dim(order[i])];
    else if (best_partner[i] < i)
      continue;
    else if (hc.dim(order[i]) > hc.dim(order[best_partner[i]]))
      res.certificate.add(order[i], order[best_partner[i]]);
  }
  res.certificate.normalize();
  res.achievable_minimal = res.min_total == res.betti_total;
  return res;
}

Matching splice_class(const LabeledComplex& hc, const Matching& base, VertexSet support, const Matching& local) {
  Matching out;
  for (auto [u, l] : base.pairs)
    if (hc.labels[u] != support) out.add(u, l);
  for (auto [u, l] : local.pairs) {
    require(hc.labels[u] == support && hc.labels[l] == support, ErrorKind::kInvalidInput,
            "splice_class: pair outside the class");
    out.add(u, l);
  }
  out.normalize();
  return out;
}

namespace {

nlohmann::json gens_json(const LabeledComplex& hc, int face) {
  nlohmann::json out = nlohmann::json::array();
  for (const Edge& e : hc.lattice.index.edges_of(hc.gens(face))) out.push_back({e.u, e.v});
  return out;
}

int face_from_json(const LabeledComplex& hc, const nlohmann::json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j) {
    require(e.is_array() && e.size() == 2, ErrorKind::kInvalidInput, "matching: generator must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  const int f = hc.lattice.find(hc.lattice.index.mask_of(edges));
  require(f >= 0, ErrorKind::kInvalidInput, "matching: generator set is not a face of P_G");
  return f;
}

}  // namespace

std::string matching_to_json(const LabeledComplex& hc, const Matching& m) {
  nlohmann::json j;
  j["digest"] = complex_digest(hc);
  j["pairs"] = nlohmann::json::array();
  for (auto [u, l] : m.pairs) j["pairs"].push_back({{"upper", gens_json(hc, u)}, {"lower", gens_json(hc, l)}});
  return j.dump();
}

Matching matching_from_json(const LabeledComplex& hc, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::kInvalidInput, std::string("matching: ") + e.what());
  }
  if (j.contains("digest"))
    require(j["digest"] == complex_digest(hc), ErrorKind::kInvalidInput,
            "matching: certificate refers to a different complex");
  require(j.contains("pairs") && j["pairs"].is_array(), ErrorKind::kInvalidInput, "matching: missing pairs");
  Matching m;
  for (const auto& p : j["pairs"]) m.add(face_from_json(hc, p.at("upper")), face_from_json(hc, p.at("lower")));
  m.normalize();
  return m;
}

std::string morse_to_json(const LabeledComplex& hc, const MorseComplex& mc) {
  nlohmann::json j;
  j["field"] = field_name(mc.field);
  j["critical"] = nlohmann::json::array();
  for (int c : mc.critical)
    j["critical"].push_back({{"gens", gens_json(hc, c)}, {"dim", hc.dim(c)}, {"label", members(hc.labels[c])}});
  j["differential"] = nlohmann::json::array();
  for (int k = 0; k < mc.chain.size(); ++k)
    for (const auto& [l, coef] : mc.chain.boundary[k])
      j["differential"].push_back({k, l, numerator(coef).str(), denominator(coef).str()});
  return j.dump();
}

std::string complex_digest(const LabeledComplex& hc) {
  const std::string text = lattice_to_json(hc.lattice);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hullmorse
