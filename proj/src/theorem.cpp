#include "hullmorse/theorem.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <thread>

#include <json.hpp>

#include "hullmorse/error.hpp"
#include "hullmorse/io.hpp"

namespace hullmorse {

std::uint64_t adjacency_code(const Graph& g, const std::vector<Vertex>& order) {
  const int n = static_cast<int>(order.size());
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1u : 0u);
  return code;
}

Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  int bit = n * (n - 1) / 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((code >> --bit) & 1u) g.add_edge(i, j);
  return g;
}

namespace {

// Colour refinement to a stable partition; colours are ranks of signatures.
std::vector<int> stable_colours(const Graph& g) {
  const int n = g.universe();
  std::vector<int> colour(n, 0);
  for (int round = 0; round <= n; ++round) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (Vertex w : members(g.neighbors(v))) sig[v].second.push_back(colour[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    if (next == colour) break;
    colour = std::move(next);
  }
  return colour;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.universe();
  require(n <= 11, ErrorKind::kResourceLimit, "canonical_code: at most 11 vertices");
  require(g.vertex_count() == n, ErrorKind::kInvalidInput, "canonical_code: vertex set must be 0..n-1");
  const std::vector<int> colour = stable_colours(g);
  std::vector<Vertex> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return colour[a] != colour[b] ? colour[a] < colour[b] : a < b;
  });
  std::vector<std::pair<int, int>> cells;  // [begin, end) of each colour class
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = adjacency_code(g, order);
  // Odometer over the permutations of every colour class.
  while (true) {
    std::size_t k = 0;
    for (; k < cells.size(); ++k)
      if (std::next_permutation(order.begin() + cells[k].first, order.begin() + cells[k].second)) break;
    if (k == cells.size()) break;
    best = std::min(best, adjacency_code(g, order));
  }
  return best;
}

namespace {

std::vector<Graph> enumerate(int n, bool triangle_free) {
  if (n <= 0) return {Graph(0)};
  std::vector<std::uint64_t> level{0};
  for (int k = 2; k <= n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const Graph base = graph_from_code(k - 1, code);
      for (VertexSet s = 0; s < (VertexSet{1} << (k - 1)); ++s) {
        if (triangle_free && !is_independent(base, s)) continue;
        Graph g(k);
        for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
        for (Vertex v : members(s)) g.add_edge(v, k - 1);
        next.insert(canonical_code(g));
      }
    }
    level.assign(next.begin(), next.end());
  }
  std::vector<Graph> out;
  for (std::uint64_t code : level) out.push_back(graph_from_code(n, code));
  return out;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n) {
  require(n <= kMaxEnumerateAll, ErrorKind::kResourceLimit,
          "enumerate_graphs: at most " + std::to_string(kMaxEnumerateAll) + " vertices");
  return enumerate(n, false);
}

std::vector<Graph> enumerate_triangle_free(int n) {
  require(n <= kMaxEnumerateTriangleFree, ErrorKind::kResourceLimit,
          "enumerate_triangle_free: at most " + std::to_string(kMaxEnumerateTriangleFree) + " vertices");
  return enumerate(n, true);
}

GraphVerdict verify_theorem(const Graph& gbar, const std::vector<Field>& fields) {
  const auto start = std::chrono::steady_clock::now();
  require(is_triangle_free(gbar), ErrorKind::kInvalidInput, "verify_theorem: graph has a triangle");
  GraphVerdict v;
  v.gbar = gbar;
  v.witness = two_disjoint_induced_cycles(gbar);
  const Graph g = complement(gbar);

  if (g.edge_count() == 0) {
    v.degenerate = true;
    for (Field f : fields) {
      FieldVerdict fv;
      fv.field = f;
      fv.betti.field = f;
      fv.constructive.counts_minimal = fv.constructive.unit_minimal = fv.constructive.path_minimal = true;
      fv.admt_minimizable = true;
      v.fields.push_back(std::move(fv));
    }
  } else {
    const LabeledComplex hc = hull_complex(g);
    v.cells = hc.size();
    v.digest = complex_digest(hc);
    const Matching pm = constructive_matching(hc);
    v.matched_pairs = static_cast<int>(pm.size());

    for (Field f : fields) {
      FieldVerdict fv;
      fv.field = f;
      fv.betti = hochster_betti(g, f);
      fv.oracles_agree = fv.betti == koszul_betti(g, f);
      if (!fv.oracles_agree)
        v.consistency_failures.push_back(std::string("Betti oracles disagree over ") + field_name(f));

      const MorseComplex mc = critical_and_differential(hc, pm, f);
      for (int d : mc.chain.degree) fv.critical_cells += d >= 0;
      fv.constructive = minimality_checks(hc, pm, mc, fv.betti);
      for (const std::string& s : fv.constructive.inconsistencies) v.consistency_failures.push_back(s);

      std::set<VertexSet> targets(fv.constructive.non_minimal_labels.begin(), fv.constructive.non_minimal_labels.end());
      const std::set<VertexSet> constructive_off = targets;
      targets.insert(fv.constructive.path_labels.begin(), fv.constructive.path_labels.end());
      fv.admt_minimizable = true;
      for (VertexSet u : targets) {
        const LabelClass cls = label_class(hc, u);
        if (cls.size() > kMaxSearchCells) {
          fv.unresolved.push_back(u);
          if (constructive_off.count(u)) fv.admt_minimizable = false;
          continue;
        }
        ClassSearch cs;
        cs.support = u;
        cs.result = optimal_search(hc, cls, fv.betti.slice(u));
        const Matching glued = splice_class(hc, pm, u, cs.result.certificate);
        const MorseComplex replay = critical_and_differential(hc, glued, f);
        const MinimalityReport rep = minimality_checks(hc, glued, replay, fv.betti);
        const bool minimal_here =
            std::find(rep.non_minimal_labels.begin(), rep.non_minimal_labels.end(), u) == rep.non_minimal_labels.end();
        cs.certificate_json = matching_to_json(hc, glued);
        cs.replayed = minimal_here == cs.result.achievable_minimal;
        if (!cs.replayed)
          v.consistency_failures.push_back("search certificate for " + set_to_string(u) + " does not replay");
        for (const std::string& s : rep.inconsistencies) v.consistency_failures.push_back(s);
        if (constructive_off.count(u) && !cs.result.achievable_minimal) fv.admt_minimizable = false;
        if (!constructive_off.count(u) && !cs.result.achievable_minimal)
          v.consistency_failures.push_back("search misses the constructive optimum at " + set_to_string(u));
        fv.searches.push_back(std::move(cs));
      }
      v.fields.push_back(std::move(fv));
    }
  }
  v.admt_minimizable = std::all_of(v.fields.begin(), v.fields.end(), [](const FieldVerdict& f) { return f.admt_minimizable; });
  v.agreement = v.admt_minimizable == !v.witness.has_value();
  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return v;
}

std::vector<Graph> corpus_graphs(const CorpusOptions& opt) {
  std::vector<Graph> out;
  for (int n = std::max(opt.n_min, 1); n <= opt.n_max; ++n)
    for (Graph& gbar : enumerate_triangle_free(n)) {
      const Graph g = complement(gbar);
      if (opt.all || (g.edge_count() > 0 && is_connected(g))) out.push_back(std::move(gbar));
    }
  return out;
}

RunReport run_corpus(const CorpusOptions& opt) { return run_graphs(corpus_graphs(opt), opt); }

RunReport run_graphs(const std::vector<Graph>& graphs, const CorpusOptions& opt) {
  RunReport r;
  r.options = opt;
  r.verdicts.resize(graphs.size());
  std::vector<std::string> errors(graphs.size());
  std::vector<int> kinds(graphs.size(), -1);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      try {
        r.verdicts[i] = verify_theorem(graphs[i], opt.fields);
      } catch (const Error& e) {
        r.verdicts[i].gbar = graphs[i];
        errors[i] = e.what();
        kinds[i] = static_cast<int>(e.kind());
      }
    }
  };
  unsigned workers = opt.workers > 0 ? static_cast<unsigned>(opt.workers) : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(graphs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (kinds[i] >= 0) {
      r.errors.push_back(to_graph6(graphs[i]) + ": " + errors[i]);
      if (kinds[i] == static_cast<int>(ErrorKind::kResourceLimit))
        ++r.resource_failures;
      else
        ++r.internal_failures;
    } else if (!r.verdicts[i].consistency_failures.empty()) {
      ++r.internal_failures;
    }
  }
  return r;
}

namespace {

nlohmann::json set_json(VertexSet s) { return members(s); }

nlohmann::json sets_json(const std::vector<VertexSet>& sets) {
  nlohmann::json out = nlohmann::json::array();
  for (VertexSet s : sets) out.push_back(set_json(s));
  return out;
}

nlohmann::json verdict_json(const GraphVerdict& v, bool timings) {
  nlohmann::json j;
  j["gbar"] = to_graph6(v.gbar);
  j["n"] = v.gbar.universe();
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : v.gbar.edges()) j["edges"].push_back({e.u, e.v});
  j["two_disjoint_induced_cycles"] = v.witness.has_value();
  j["witness"] = v.witness ? set_json(*v.witness) : nlohmann::json(nullptr);
  j["degenerate"] = v.degenerate;
  j["cells"] = v.cells;
  j["matched_pairs"] = v.matched_pairs;
  j["digest"] = v.digest;
  j["fields"] = nlohmann::json::array();
  for (const FieldVerdict& f : v.fields) {
    nlohmann::json fj;
    fj["field"] = field_name(f.field);
    fj["betti_totals"] = f.betti.totals();
    fj["oracles_agree"] = f.oracles_agree;
    fj["critical_cells"] = f.critical_cells;
    fj["constructive_matching"] = {{"counts_minimal", f.constructive.counts_minimal},
                            {"unit_minimal", f.constructive.unit_minimal},
                            {"path_minimal", f.constructive.path_minimal},
                            {"excess_cells", f.constructive.excess_cells},
                            {"excess_pairs", f.constructive.excess_pairs},
                            {"non_minimal_labels", sets_json(f.constructive.non_minimal_labels)},
                            {"path_labels", sets_json(f.constructive.path_labels)}};
    fj["searches"] = nlohmann::json::array();
    for (const ClassSearch& cs : f.searches) {
      nlohmann::json crit = nlohmann::json::object();
      for (const auto& [d, c] : cs.result.min_critical) crit[std::to_string(d)] = c;
      fj["searches"].push_back({{"support", set_json(cs.support)},
                                {"min_total", cs.result.min_total},
                                {"betti_total", cs.result.betti_total},
                                {"min_critical", crit},
                                {"achievable_minimal", cs.result.achievable_minimal},
                                {"replayed", cs.replayed},
                                {"search_nodes", cs.result.nodes},
                                {"certificate", nlohmann::json::parse(cs.certificate_json)}});
    }
    fj["unresolved"] = sets_json(f.unresolved);
    fj["admt_minimizable"] = f.admt_minimizable;
    j["fields"].push_back(std::move(fj));
  }
  j["admt_minimizable"] = v.admt_minimizable;
  j["agreement_with_theorem"] = v.agreement;
  j["consistency_failures"] = v.consistency_failures;
  if (timings) j["seconds"] = v.seconds;
  return j;
}

}  // namespace

std::string verdict_to_json(const GraphVerdict& v, bool timings) { return verdict_json(v, timings).dump(2); }

std::string report_to_json(const RunReport& r) {
  nlohmann::json j;
  j["format"] = 1;
  nlohmann::json fields = nlohmann::json::array();
  for (Field f : r.options.fields) fields.push_back(field_name(f));
  j["corpus"] = {{"n_min", r.options.n_min},
                 {"n_max", r.options.n_max},
                 {"fields", fields},
                 {"filter", r.options.all ? "all-triangle-free" : "connected-complement"},
                 {"graphs", r.verdicts.size()}};
  int agreeing = 0, witnesses = 0;
  bool oracles = true;
  nlohmann::json findings = nlohmann::json::array();
  nlohmann::json verdicts = nlohmann::json::array();
  for (const GraphVerdict& v : r.verdicts) {
    verdicts.push_back(verdict_json(v, r.options.timings));
    if (v.fields.empty()) continue;  // errored
    agreeing += v.agreement;
    witnesses += v.witness.has_value();
    for (const FieldVerdict& f : v.fields) oracles = oracles && f.oracles_agree;
    if (!v.agreement) {
      nlohmann::json per_field = nlohmann::json::object();
      for (const FieldVerdict& f : v.fields) per_field[field_name(f.field)] = f.admt_minimizable;
      findings.push_back({{"gbar", to_graph6(v.gbar)},
                          {"two_disjoint_induced_cycles", v.witness.has_value()},
                          {"admt_minimizable", per_field},
                          {"statement", v.witness ? "complement contains two disjoint induced cycles, yet a homogeneous "
                                                    "acyclic matching with a minimal Morse complex exists"
                                                  : "no two disjoint induced cycles, yet no minimal Morse matching "
                                                    "was found"}});
    }
  }
  j["summary"] = {{"graphs", r.verdicts.size()},
                  {"agreeing", agreeing},
                  {"with_two_disjoint_induced_cycles", witnesses},
                  {"oracle_agreement", oracles},
                  {"internal_failures", r.internal_failures},
                  {"resource_failures", r.resource_failures},
                  {"counterexamples", findings.size()}};
  j["findings"] = findings;
  j["errors"] = r.errors;
  j["verdicts"] = verdicts;
  return j.dump(2) + "\n";
}

int report_exit_code(const RunReport& r) {
  if (r.internal_failures > 0) return 2;
  if (r.resource_failures > 0) return 3;
  return 0;
}

}  // namespace hullmorse
