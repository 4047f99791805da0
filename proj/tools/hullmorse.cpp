// Command-line front end: one subcommand per pipeline stage.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "hullmorse/error.hpp"
#include "hullmorse/fgraph.hpp"
#include "hullmorse/hull.hpp"
#include "hullmorse/io.hpp"
#include "hullmorse/morse.hpp"
#include "hullmorse/theorem.hpp"

using namespace hullmorse;
using nlohmann::json;

namespace {

struct Common {
  std::string input_path = "-";
  std::string input_format = "edgelist";
  std::string field = "q";
  std::string format = "json";
  bool complement_input = false;
};

std::vector<Field> fields_of(const std::string& name) {
  if (name == "both") return {Field::kRationals, Field::kTwo};
  return {parse_field(name)};
}

std::string read_text(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    require(in.good(), ErrorKind::kInvalidInput, "cannot open " + path);
    os << in.rdbuf();
  }
  return os.str();
}

Graph read_graph(const Common& c) {
  std::istringstream in(read_text(c.input_path));
  std::vector<Graph> gs = read_graphs(in, parse_graph_format(c.input_format));
  require(gs.size() == 1, ErrorKind::kInvalidInput, "expected exactly one graph, got " + std::to_string(gs.size()));
  return c.complement_input ? complement(gs.front()) : gs.front();
}

void add_common(CLI::App* app, Common& c, bool with_complement = true) {
  app->add_option("file", c.input_path, "graph file, '-' for stdin")->capture_default_str();
  app->add_option("--input", c.input_format, "input format")->check(CLI::IsMember({"edgelist", "g6"}))->capture_default_str();
  app->add_option("--field", c.field, "coefficient field")->check(CLI::IsMember({"q", "f2", "both"}))->capture_default_str();
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "dot", "text"}))->capture_default_str();
  if (with_complement) app->add_flag("--complement", c.complement_input, "use the complement of the input graph");
}

json gens_json(const EdgeIndex& index, EdgeSet s) {
  json out = json::array();
  for (const Edge& e : index.edges_of(s)) out.push_back({e.u, e.v});
  return out;
}

std::string gens_text(const EdgeIndex& index, EdgeSet s) {
  std::string out;
  for (const Edge& e : index.edges_of(s)) out += (out.empty() ? "" : " ") + std::to_string(e.u) + "-" + std::to_string(e.v);
  return out.empty() ? "(empty)" : out;
}

int cmd_facets(const Common& c, bool check) {
  const Graph g = read_graph(c);
  const EdgeIndex index(g);
  const std::vector<Face> facets = facets_connected(g);
  std::vector<EdgeSet> geometric;
  if (check) geometric = geometric_facets(g);
  std::vector<EdgeSet> rules;
  for (const Face& f : facets) rules.push_back(f.gens);
  const bool agree = !check || rules == geometric;
  if (c.format == "text") {
    std::cout << "dim " << affine_dim_of_edges(index.edges(), g.universe()) << ", " << facets.size() << " facets\n";
    for (const Face& f : facets) std::cout << gens_text(index, f.gens) << '\n';
    if (check) std::cout << "geometric check: " << (agree ? "agrees" : "DISAGREES") << '\n';
  } else {
    json j;
    j["dim"] = affine_dim_of_edges(index.edges(), g.universe());
    j["facets"] = json::array();
    for (const Face& f : facets) j["facets"].push_back(gens_json(index, f.gens));
    if (check) j["geometric_agrees"] = agree;
    std::cout << j.dump(2) << '\n';
  }
  return agree ? 0 : 2;
}

int cmd_lattice(const Common& c) {
  const LabeledComplex hc = hull_complex(read_graph(c), true);
  if (c.format == "dot") {
    std::cout << lattice_to_dot(hc.lattice);
  } else if (c.format == "text") {
    std::cout << hc.size() << " faces, dim " << hc.lattice.dim() << '\n';
    for (int d = -1; d <= hc.lattice.dim(); ++d) std::cout << "  dim " << d << ": " << hc.lattice.count_of_dim(d) << '\n';
  } else {
    json j = json::parse(lattice_to_json(hc.lattice));
    j["labels"] = json::array();
    for (VertexSet l : hc.labels) j["labels"].push_back(members(l));
    j["digest"] = complex_digest(hc);
    std::cout << j.dump() << '\n';
  }
  return 0;
}

VertexSet parse_support(const std::string& text) {
  VertexSet s = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int v = -1;
    try {
      v = std::stoi(item);
    } catch (const std::exception&) {
      fail(ErrorKind::kInvalidInput, "bad vertex '" + item + "'");
    }
    require(v >= 0 && v < kMaxVertices, ErrorKind::kInvalidInput, "vertex out of range: " + item);
    s |= singleton(v);
  }
  return s;
}

int cmd_mg(const Common& c, const std::string& support, bool from_f) {
  const LabeledComplex hc = hull_complex(read_graph(c));
  const LabelClass cls = support.empty() ? mg(hc) : label_class(hc, parse_support(support));
  if (c.format == "dot") {
    std::cout << class_to_dot(hc, cls, constructive_matching(hc).pairs);
    return 0;
  }
  json j = json::parse(class_to_json(hc, cls));
  if (from_f) {
    const MFromF mf = m_from_f(hc);
    j["from_f"] = {{"nodes", mf.f.node_count()},
                   {"edges", mf.f.edge_count()},
                   {"cells", mf.cells},
                   {"max_codim", mf.max_codim_in_mg},
                   {"isomorphic", true}};
  }
  if (c.format == "text") {
    std::cout << "class " << set_to_string(cls.support) << ": " << cls.size() << " cells, " << cls.factors.size()
              << " factors\n";
    for (int f : cls.cells) std::cout << "  dim " << hc.dim(f) << "  " << gens_text(hc.lattice.index, hc.gens(f)) << '\n';
    if (from_f) std::cout << "matches F: " << j["from_f"]["nodes"] << " nodes, " << j["from_f"]["edges"] << " edges\n";
  } else {
    std::cout << j.dump(2) << '\n';
  }
  return 0;
}

std::vector<Edge> parse_edges(const std::string& text) {
  std::vector<Edge> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    require(dash != std::string::npos, ErrorKind::kInvalidInput, "edge must look like u-v: " + item);
    try {
      out.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    } catch (const std::exception&) {
      fail(ErrorKind::kInvalidInput, "bad edge '" + item + "'");
    }
  }
  return out;
}

int cmd_fgraph(const Common& c, const std::string& s_text) {
  const Graph gbar = read_graph(c);
  std::vector<Edge> s;
  if (s_text.empty())
    s = fundamentality_fast(complement(gbar)).fundamental_edges;
  else
    s = parse_edges(s_text);
  const Multigraph f = f_graph(gbar, s);
  if (c.format == "dot") {
    std::cout << "graph F {\n";
    for (int i = 0; i < f.node_count(); ++i) std::cout << "  n" << i << " [label=\"" << f.nodes()[i].to_string() << "\"];\n";
    for (auto [a, b] : f.edges()) std::cout << "  n" << a << " -- n" << b << ";\n";
    std::cout << "}\n";
  } else if (c.format == "text") {
    std::cout << f.node_count() << " nodes, " << f.edge_count() << " edges, " << f.component_count() << " components\n";
    for (auto [a, b] : f.edges()) std::cout << "  " << f.nodes()[a].to_string() << " -- " << f.nodes()[b].to_string() << '\n';
  } else {
    json j;
    j["nodes"] = json::array();
    for (const FNode& n : f.nodes()) j["nodes"].push_back(n.to_string());
    j["edges"] = json::array();
    for (auto [a, b] : f.edges()) j["edges"].push_back({a, b});
    j["components"] = f.component_count();
    j["euler_characteristic"] = f.euler_characteristic();
    std::cout << j.dump(2) << '\n';
  }
  return 0;
}

int cmd_betti(const Common& c) {
  const Graph g = read_graph(c);
  json out = json::array();
  bool agree = true;
  for (Field f : fields_of(c.field)) {
    const BettiTable h = hochster_betti(g, f);
    const bool same = h == koszul_betti(g, f);
    agree = agree && same;
    json j = json::parse(betti_to_json(h));
    j["oracles_agree"] = same;
    out.push_back(j);
  }
  if (c.format == "text") {
    for (const auto& j : out) {
      std::cout << j["field"].get<std::string>() << ":";
      for (int t : j["totals"]) std::cout << ' ' << t;
      std::cout << (j["oracles_agree"].get<bool>() ? "" : "  (ORACLES DISAGREE)") << '\n';
    }
  } else {
    std::cout << out.dump(2) << '\n';
  }
  return agree ? 0 : 2;
}

int cmd_morse(const Common& c, const std::string& matching_path) {
  const LabeledComplex hc = hull_complex(read_graph(c));
  const Matching m = matching_path.empty() ? constructive_matching(hc) : matching_from_json(hc, read_text(matching_path));
  const MatchingFlags flags = validate_matching(hc, m);
  if (c.format == "dot") {
    std::cout << class_to_dot(hc, mg(hc), m.pairs);
    return 0;
  }
  json out;
  out["digest"] = complex_digest(hc);
  out["matching"] = {{"pairs", m.size()},
                     {"homogeneous", flags.homogeneous},
                     {"acyclic", flags.acyclic},
                     {"disjoint", flags.disjoint}};
  require(flags.valid(), ErrorKind::kPreconditionViolation, "matching is not homogeneous and acyclic");
  out["fields"] = json::array();
  bool consistent = true;
  for (Field f : fields_of(c.field)) {
    const MorseComplex mc = critical_and_differential(hc, m, f);
    const BettiTable betti = hochster_betti(hc.graph, f);
    const StrandVerdict sv = strand_check(mc.chain, f);
    json fj;
    fj["field"] = field_name(f);
    fj["resolution"] = sv.acyclic;
    if (sv.acyclic) {
      const MinimalityReport r = minimality_checks(hc, m, mc, betti);
      fj["counts_minimal"] = r.counts_minimal;
      fj["unit_minimal"] = r.unit_minimal;
      fj["path_minimal"] = r.path_minimal;
      fj["excess_cells"] = r.excess_cells;
      fj["excess_pairs"] = r.excess_pairs;
      fj["inconsistencies"] = r.inconsistencies;
      consistent = consistent && r.inconsistencies.empty();
    }
    fj["morse_complex"] = json::parse(morse_to_json(hc, mc));
    out["fields"].push_back(fj);
  }
  if (c.format == "text") {
    std::cout << m.size() << " pairs\n";
    for (const auto& fj : out["fields"]) {
      std::cout << fj["field"].get<std::string>() << ": " << fj["morse_complex"]["critical"].size() << " critical cells";
      if (fj["resolution"].get<bool>())
        std::cout << ", counts_minimal " << fj["counts_minimal"] << ", unit_minimal " << fj["unit_minimal"]
                  << ", path_minimal " << fj["path_minimal"];
      else
        std::cout << ", NOT a resolution";
      std::cout << '\n';
    }
  } else {
    std::cout << out.dump(2) << '\n';
  }
  return consistent ? 0 : 2;
}

int cmd_verify(const Common& c, bool timings) {
  const GraphVerdict v = verify_theorem(read_graph(c), fields_of(c.field));
  if (c.format == "text") {
    std::cout << "two disjoint induced cycles: " << (v.witness ? "yes " + set_to_string(*v.witness) : "no") << '\n';
    for (const FieldVerdict& f : v.fields)
      std::cout << field_name(f.field) << ": constructive matching counts_minimal " << f.constructive.counts_minimal
                << ", unit_minimal " << f.constructive.unit_minimal << ", path_minimal " << f.constructive.path_minimal
                << "; minimizable " << f.admt_minimizable << '\n';
    std::cout << "agreement with the criterion: " << (v.agreement ? "yes" : "NO") << '\n';
  } else {
    std::cout << verdict_to_json(v, timings) << '\n';
  }
  return v.consistency_failures.empty() ? 0 : 2;
}

int cmd_corpus(const Common& c, CorpusOptions opt, const std::string& output) {
  opt.fields = fields_of(c.field);
  const RunReport r = run_corpus(opt);
  const std::string text = report_to_json(r);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output);
    require(out.good(), ErrorKind::kInvalidInput, "cannot write " + output);
    out << text;
  }
  for (const std::string& e : r.errors) std::cerr << "error: " << e << '\n';
  return report_exit_code(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hull resolutions of edge ideals and discrete Morse matchings"};
  app.require_subcommand(1);
  Common c;

  bool check = false;
  auto* facets = app.add_subcommand("facets", "facets of P_G from the combinatorial rules");
  add_common(facets, c);
  facets->add_flag("--check", check, "compare with brute-force geometric facets");

  auto* lattice = app.add_subcommand("lattice", "signed, labeled face lattice of P_G");
  add_common(lattice, c);

  std::string support;
  bool from_f = false;
  auto* mgc = app.add_subcommand("mg", "the class M_G, or another label class");
  add_common(mgc, c);
  mgc->add_option("--support", support, "comma-separated vertices of the label");
  mgc->add_flag("--from-f", from_f, "rebuild M_G from F and check the isomorphism");

  std::string s_text;
  auto* fg = app.add_subcommand("fgraph", "F(gbar, S) for an input graph gbar");
  add_common(fg, c, false);
  fg->add_option("--s", s_text, "comma-separated edges u-v (default: fundamental edges)");

  auto* betti = app.add_subcommand("betti", "graded Betti numbers from both oracles");
  add_common(betti, c);

  std::string matching_path;
  auto* morse = app.add_subcommand("morse", "Morse complex of the constructive or a given matching");
  add_common(morse, c);
  morse->add_option("--matching", matching_path, "matching or certificate JSON to replay");

  bool timings = false;
  auto* verify = app.add_subcommand("verify", "check the minimizability criterion for one triangle-free gbar");
  add_common(verify, c, false);
  verify->add_flag("--timings", timings, "include wall-clock timings");

  CorpusOptions opt;
  std::string output;
  auto* corpus = app.add_subcommand("corpus", "verify every triangle-free graph up to n vertices");
  corpus->add_option("--n", opt.n_max, "largest vertex count")->capture_default_str();
  corpus->add_option("--n-min", opt.n_min, "smallest vertex count")->capture_default_str();
  corpus->add_option("--field", c.field, "coefficient field")->check(CLI::IsMember({"q", "f2", "both"}))->capture_default_str();
  corpus->add_flag("--all", opt.all, "include graphs whose complement is disconnected or edgeless");
  corpus->add_option("--workers", opt.workers, "worker threads (0: all cores)");
  corpus->add_flag("--timings", opt.timings, "include wall-clock timings (breaks byte-identical output)");
  corpus->add_option("--output,-o", output, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*facets) return cmd_facets(c, check);
    if (*lattice) return cmd_lattice(c);
    if (*mgc) return cmd_mg(c, support, from_f);
    if (*fg) return cmd_fgraph(c, s_text);
    if (*betti) return cmd_betti(c);
    if (*morse) return cmd_morse(c, matching_path);
    if (*verify) return cmd_verify(c, timings);
    if (*corpus) return cmd_corpus(c, opt, output);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
