#include "hullmorse/homology.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "hullmorse/error.hpp"

namespace hullmorse {

ChainComplex chain_complex(const LabeledComplex& hc) {
  ChainComplex cx;
  const int n = hc.size();
  cx.degree.resize(n);
  cx.label = hc.labels;
  cx.boundary.resize(n);
  for (int f = 0; f < n; ++f) {
    cx.degree[f] = hc.dim(f);
    for (int c : hc.lattice.down[f]) {
      const Cover& cov = hc.lattice.covers[c];
      require(cov.sign != 0, ErrorKind::kInvalidInput, "chain_complex: incidence signs are missing");
      cx.boundary[f].emplace_back(cov.lower, Rational(cov.sign));
    }
  }
  return cx;
}

int HomologyRanks::at(int degree) const {
  const int k = degree + 1;
  return (k >= 0 && k < static_cast<int>(ranks.size())) ? ranks[k] : 0;
}

int HomologyRanks::total() const { return std::accumulate(ranks.begin(), ranks.end(), 0); }

HomologyRanks homology(const ChainComplex& cx, Field field, const std::vector<char>& keep) {
  auto kept = [&](int c) { return keep.empty() || keep[c]; };
  int top = -1;
  for (int c = 0; c < cx.size(); ++c)
    if (kept(c)) {
      require(cx.degree[c] >= -1, ErrorKind::kInvalidInput, "homology: degrees start at -1");
      top = std::max(top, cx.degree[c]);
    }
  HomologyRanks out;
  if (top < -1) return out;

  // Position of each kept cell inside its degree.
  std::vector<int> pos(cx.size(), -1);
  std::vector<int> count(top + 2, 0);
  for (int c = 0; c < cx.size(); ++c)
    if (kept(c)) pos[c] = count[cx.degree[c] + 1]++;

  // rank_of[k] = rank of the boundary leaving degree k - 1.
  std::vector<int> rank_of(top + 3, 0);
  for (int d = 0; d <= top; ++d) {
    if (count[d + 1] == 0 || count[d] == 0) continue;
    ExactMatrix m(count[d + 1], count[d], field);
    for (int c = 0; c < cx.size(); ++c) {
      if (!kept(c) || cx.degree[c] != d) continue;
      for (const auto& [lower, coef] : cx.boundary[c]) {
        require(kept(lower), ErrorKind::kInvalidInput, "homology: subcomplex is not closed under the boundary");
        m.add(pos[c], pos[lower], coef);
      }
    }
    rank_of[d + 1] = rank(m);
  }
  out.ranks.resize(top + 2);
  for (int k = 0; k < top + 2; ++k) out.ranks[k] = count[k] - rank_of[k] - rank_of[k + 1];
  return out;
}

namespace {

bool by_size(VertexSet a, VertexSet b) {
  return set_size(a) != set_size(b) ? set_size(a) < set_size(b) : a < b;
}

// Enumerate submasks of s, including 0 and s.
template <class F>
void for_each_submask(VertexSet s, F&& f) {
  VertexSet t = s;
  while (true) {
    f(t);
    if (t == 0) break;
    t = (t - 1) & s;
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<VertexSet> facets) {
  std::set<VertexSet> all;
  for (VertexSet f : facets) for_each_submask(f, [&](VertexSet t) { all.insert(t); });
  faces_.assign(all.begin(), all.end());
  std::sort(faces_.begin(), faces_.end(), by_size);
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<VertexSet> faces) {
  SimplicialComplex k;
  std::sort(faces.begin(), faces.end(), by_size);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  k.faces_ = std::move(faces);
  return k;
}

bool SimplicialComplex::contains(VertexSet s) const {
  return std::binary_search(faces_.begin(), faces_.end(), s, by_size);
}

HomologyRanks reduced_homology_ranks(const SimplicialComplex& k, Field field) {
  ChainComplex cx;
  std::unordered_map<VertexSet, int> index;
  for (VertexSet f : k.faces()) {
    index.emplace(f, cx.size());
    cx.degree.push_back(set_size(f) - 1);
    cx.label.push_back(f);
    cx.boundary.emplace_back();
  }
  for (int c = 0; c < cx.size(); ++c) {
    int sign = 1;
    for (Vertex v : members(cx.label[c])) {
      auto it = index.find(cx.label[c] & ~singleton(v));
      require(it != index.end(), ErrorKind::kInvalidInput, "simplicial complex is not closed under subsets");
      cx.boundary[c].emplace_back(it->second, Rational(sign));
      sign = -sign;
    }
  }
  return homology(cx, field);
}

HomologyRanks reduced_homology_ranks(const LabeledComplex& hc, Field field) {
  return homology(chain_complex(hc), field);
}

int BettiTable::at(int i, VertexSet m) const {
  auto it = entries.find({i, m});
  return it == entries.end() ? 0 : it->second;
}

std::vector<int> BettiTable::totals() const {
  std::vector<int> out;
  for (const auto& [key, r] : entries) {
    if (key.first >= static_cast<int>(out.size())) out.resize(key.first + 1, 0);
    out[key.first] += r;
  }
  return out;
}

std::map<int, int> BettiTable::slice(VertexSet m) const {
  std::map<int, int> out;
  for (const auto& [key, r] : entries)
    if (key.second == m) out[key.first] = r;
  return out;
}

int BettiTable::slice_total(VertexSet m) const {
  int t = 0;
  for (const auto& [i, r] : slice(m)) t += r;
  return t;
}

namespace {

bool has_edge_inside(const Graph& g, VertexSet s) {
  for (Vertex v : members(s))
    if ((g.neighbors(v) & s) != 0) return true;
  return false;
}

}  // namespace

BettiTable hochster_betti(const Graph& g, Field field) {
  require(g.edge_count() > 0, ErrorKind::kInvalidInput, "hochster_betti: graph has no edges");
  BettiTable table;
  table.field = field;
  for_each_submask(g.vertex_set(), [&](VertexSet s) {
    if (s == 0) return;
    std::vector<VertexSet> faces;
    for_each_submask(s, [&](VertexSet t) {
      if (!has_edge_inside(g, t)) faces.push_back(t);
    });
    const HomologyRanks h = reduced_homology_ranks(SimplicialComplex::from_faces(std::move(faces)), field);
    for (int k = 0; k < static_cast<int>(h.ranks.size()); ++k) {
      if (h.ranks[k] == 0) continue;
      const int i = set_size(s) - (k - 1) - 2;
      require(i >= 0, ErrorKind::kInternalConsistency, "hochster_betti: homology in an impossible degree");
      table.entries[{i, s}] = h.ranks[k];
    }
  });
  return table;
}

BettiTable koszul_betti(const Graph& g, Field field) {
  require(g.edge_count() > 0, ErrorKind::kInvalidInput, "koszul_betti: graph has no edges");
  BettiTable table;
  table.field = field;
  for_each_submask(g.vertex_set(), [&](VertexSet s) {
    if (s == 0) return;
    std::vector<VertexSet> faces;
    for_each_submask(s, [&](VertexSet t) {
      if (has_edge_inside(g, s & ~t)) faces.push_back(t);
    });
    if (faces.empty()) return;
    const HomologyRanks h = reduced_homology_ranks(SimplicialComplex::from_faces(std::move(faces)), field);
    for (int k = 0; k < static_cast<int>(h.ranks.size()); ++k)
      if (h.ranks[k] != 0) table.entries[{k, s}] = h.ranks[k];  // degree k - 1 gives beta_k
  });
  return table;
}

std::string betti_to_json(const BettiTable& b) {
  nlohmann::json j;
  j["field"] = field_name(b.field);
  j["totals"] = b.totals();
  j["entries"] = nlohmann::json::array();
  for (const auto& [key, r] : b.entries)
    j["entries"].push_back({{"i", key.first}, {"support", members(key.second)}, {"rank", r}});
  return j.dump();
}

StrandVerdict strand_check(const ChainComplex& cx, Field field) {
  std::set<VertexSet> degrees;
  for (int c = 0; c < cx.size(); ++c)
    if (cx.degree[c] >= 0) degrees.insert(cx.label[c]);
  // Close under unions.
  std::vector<VertexSet> work(degrees.begin(), degrees.end());
  const std::vector<VertexSet> base = work;
  while (!work.empty()) {
    const VertexSet m = work.back();
    work.pop_back();
    for (VertexSet b : base)
      if (degrees.insert(m | b).second) work.push_back(m | b);
  }

  StrandVerdict v;
  std::vector<char> keep(cx.size());
  for (VertexSet m : degrees) {
    for (int c = 0; c < cx.size(); ++c) keep[c] = is_subset(cx.label[c], m);
    ++v.checked;
    if (!homology(cx, field, keep).zero()) {
      v.acyclic = false;
      v.failing.push_back(m);
    }
  }
  return v;
}

ChainComplex without_cell(const ChainComplex& cx, int cell) {
  ChainComplex out;
  auto shift = [cell](int c) { return c > cell ? c - 1 : c; };
  for (int c = 0; c < cx.size(); ++c) {
    if (c == cell) continue;
    out.degree.push_back(cx.degree[c]);
    out.label.push_back(cx.label[c]);
    out.boundary.emplace_back();
    for (const auto& [lower, coef] : cx.boundary[c])
      if (lower != cell) out.boundary.back().emplace_back(shift(lower), coef);
  }
  return out;
}

}  // namespace hullmorse
