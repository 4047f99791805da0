#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "corpus.hpp"
#include "hullmorse/error.hpp"
#include "hullmorse/theorem.hpp"

using namespace hullmorse;

namespace {

// Canonical code by brute force over all n! orderings.
std::uint64_t brute_canonical(const Graph& g) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do best = std::min(best, adjacency_code(g, order));
  while (std::next_permutation(order.begin(), order.end()));
  return best;
}

const std::vector<Field> kBoth{Field::kRationals, Field::kTwo};

}  // namespace

TEST_SUITE("theorem") {
  TEST_CASE("enumeration counts") {
    const std::vector<std::size_t> tf{1, 2, 3, 7, 14, 38, 107, 410};
    for (int n = 1; n <= 8; ++n) CHECK(enumerate_triangle_free(n).size() == tf[n - 1]);
    const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) CHECK(enumerate_graphs(n).size() == all[n - 1]);
    CHECK_THROWS_AS(enumerate_graphs(kMaxEnumerateAll + 1), Error);
    CHECK_THROWS_AS(enumerate_triangle_free(kMaxEnumerateTriangleFree + 1), Error);
  }

  TEST_CASE("enumeration against brute force") {
    for (int n = 1; n <= 6; ++n) {
      const int pairs = n * (n - 1) / 2;
      std::set<std::uint64_t> classes, tf_classes;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        const Graph g = graph_from_code(n, code);
        const std::uint64_t c = brute_canonical(g);
        classes.insert(c);
        if (is_triangle_free(g)) tf_classes.insert(c);
        CHECK(canonical_code(g) == canonical_code(graph_from_code(n, c)));
      }
      CHECK(enumerate_graphs(n).size() == classes.size());
      CHECK(enumerate_triangle_free(n).size() == tf_classes.size());
      std::set<std::uint64_t> seen;
      for (const Graph& g : enumerate_graphs(n)) seen.insert(brute_canonical(g));
      CHECK(seen == classes);
    }
  }

  TEST_CASE("code round trip") {
    const Graph p = petersen_graph();
    std::vector<Vertex> order(10);
    std::iota(order.begin(), order.end(), 0);
    CHECK(graph_from_code(10, adjacency_code(p, order)) == p);
    CHECK(adjacency_code(path_graph(2), {0, 1}) == 1);
  }

  TEST_CASE("verify the 5-cycle") {
    const GraphVerdict v = verify_theorem(cycle_graph(5), kBoth);
    CHECK_FALSE(v.witness.has_value());
    CHECK(v.admt_minimizable);
    CHECK(v.agreement);
    CHECK(v.consistency_failures.empty());
    REQUIRE(v.fields.size() == 2);
    for (const FieldVerdict& f : v.fields) {
      CHECK(f.oracles_agree);
      CHECK(f.constructive.counts_minimal);
      CHECK(f.constructive.path_minimal);
      CHECK(f.critical_cells == 11);
      CHECK(f.betti.totals() == std::vector<int>{5, 5, 1});
    }
  }

  TEST_CASE("verify the 4-cycle") {
    const GraphVerdict v = verify_theorem(cycle_graph(4), {Field::kRationals});
    CHECK(v.cells == 4);
    CHECK(v.matched_pairs == 0);
    CHECK(v.agreement);
    CHECK(v.admt_minimizable);
  }

  TEST_CASE("verify rejects triangles") { CHECK_THROWS_AS(verify_theorem(complete_graph(3), kBoth), Error); }

  TEST_CASE("verify an edgeless complement") {
    const GraphVerdict v = verify_theorem(path_graph(2), kBoth);
    CHECK(v.degenerate);
    CHECK(v.agreement);
    const GraphVerdict k3 = verify_theorem(Graph(3), kBoth);
    CHECK_FALSE(k3.degenerate);
    CHECK(k3.agreement);
  }

  TEST_CASE("verify two disjoint squares") {
    const GraphVerdict v = verify_theorem(disjoint_union(cycle_graph(4), cycle_graph(4)), kBoth);
    REQUIRE(v.witness.has_value());
    CHECK(v.consistency_failures.empty());
    for (const FieldVerdict& f : v.fields) {
      CHECK(f.oracles_agree);
      CHECK_FALSE(f.constructive.path_minimal);
      CHECK(f.unresolved.empty());
      for (const ClassSearch& s : f.searches) {
        CHECK(s.replayed);
        CHECK_FALSE(s.certificate_json.empty());
      }
    }
    // Recorded outcome: the searches certify minimizability, which disagrees
    // with the claimed obstruction. Agreement is defined from the two facts.
    CHECK(v.agreement == (v.admt_minimizable == !v.witness.has_value()));
  }

  TEST_CASE("reports are deterministic") {
    CorpusOptions opt;
    opt.n_max = 5;
    opt.fields = kBoth;
    const std::string a = report_to_json(run_corpus(opt));
    opt.workers = 1;
    const std::string b = report_to_json(run_corpus(opt));
    CHECK(a == b);
    CHECK(a.find("\"format\": 1") != std::string::npos);
    CHECK(a.find("seconds") == std::string::npos);
  }

  TEST_CASE("corpus filters") {
    CorpusOptions opt;
    opt.n_max = 6;
    const auto lemma = corpus_graphs(opt);
    for (const Graph& gbar : lemma) {
      const Graph g = complement(gbar);
      CHECK(is_connected(g));
      CHECK(g.edge_count() > 0);
    }
    opt.all = true;
    CHECK(corpus_graphs(opt).size() == 1 + 2 + 3 + 7 + 14 + 38);
    CHECK(lemma.size() < corpus_graphs(opt).size());
  }

  TEST_CASE("small corpus agrees") {
    CorpusOptions opt;
    opt.n_max = 6;
    opt.all = true;
    const RunReport r = run_corpus(opt);
    CHECK(r.errors.empty());
    CHECK(report_exit_code(r) == 0);
    for (const GraphVerdict& v : r.verdicts) CHECK(v.agreement);
  }
}
