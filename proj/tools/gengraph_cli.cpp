#include <gengraph/gengraph.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace gengraph;

constexpr int exit_error = 2;

struct Options {
  std::size_t max_order = 15;
  std::uint64_t seed = 1;
  bool quiet = false;

  std::string spec;
  bool dot = false;
  bool edges = false;
  bool pruned = false;
  bool json = false;

  std::string corpus = "default";
  std::string json_out;
  std::size_t random_graphs = 200;
};

SimpleGraph graph_for(const FiniteGroup& g, bool pruned) {
  auto gamma = generating_graph(g);
  return pruned ? pruned_graph(gamma).graph : gamma;
}

int run_graph(const Options& o) {
  const auto g = build_group(o.spec);
  const auto graph = graph_for(g, o.pruned);
  if (o.dot) {
    std::cout << to_dot(graph, g.name());
  } else if (o.edges) {
    std::cout << to_edge_list(graph);
  } else {
    std::cout << g.name() << ": " << graph.vertex_count() << " vertices, " << graph.edge_count() << " edges\n";
    if (!o.quiet)
      for (auto [u, v] : graph.edges()) std::cout << "  " << graph.label(u) << " -- " << graph.label(v) << '\n';
  }
  return 0;
}

int run_planar(const Options& o) {
  const auto g = build_group(o.spec);
  const auto graph = graph_for(g, o.pruned);
  const auto verdict = is_planar(graph);
  if (o.json) {
    auto j = to_json(verdict);
    j["group"] = g.name();
    j["vertex_labels"] = graph.labels();
    std::cout << j.dump(2) << '\n';
    return verdict.planar ? 0 : 1;
  }
  std::cout << g.name() << ": " << (verdict.planar ? "planar" : "non-planar") << " (" << graph.vertex_count()
            << " vertices, " << graph.edge_count() << " edges)\n";
  if (o.quiet) return verdict.planar ? 0 : 1;
  if (verdict.embedding) {
    std::cout << "rotation system:\n";
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
      std::cout << "  " << graph.label(v) << ':';
      for (auto w : verdict.embedding->rotation[v]) std::cout << ' ' << graph.label(w);
      std::cout << '\n';
    }
  }
  if (verdict.witness) {
    std::cout << "witness: " << to_string(verdict.witness->kind) << " subdivision\n  branch vertices:";
    for (auto v : verdict.witness->branch_vertices) std::cout << ' ' << graph.label(v);
    std::cout << "\n  edges:\n";
    for (auto [u, v] : verdict.witness->edges) std::cout << "    " << graph.label(u) << " -- " << graph.label(v) << '\n';
  }
  return verdict.planar ? 0 : 1;
}

int run_alpha(const Options& o) {
  const auto g = build_group(o.spec);
  const auto records = alpha_profile(g);
  std::cout << g.name() << " (order " << g.order() << ")\n";
  std::cout << std::left << std::setw(7) << "level" << std::setw(8) << "|N|" << std::setw(8) << "fiber" << std::setw(10)
            << "alpha" << std::setw(9) << "abelian" << std::setw(7) << "p^a" << std::setw(7) << "c"
            << "case\n";
  for (const auto& r : records) {
    std::string pa = "-", c = "-";
    if (r.p) pa = std::to_string(*r.p) + "^" + std::to_string(*r.a);
    if (r.complement_count) c = std::to_string(*r.complement_count);
    std::cout << std::setw(7) << r.level << std::setw(8) << r.factor_order << std::setw(8) << r.fiber_count
              << std::setw(10) << to_string(r.alpha) << std::setw(9) << (r.is_abelian_factor ? "yes" : "no")
              << std::setw(7) << pa << std::setw(7) << c << to_string(r.lemma3_case) << '\n';
  }
  const ExactRatio p2 = generation_probability(g);
  std::cout << "product of alphas: " << to_string(alpha_product(records)) << '\n'
            << "P_G(2): " << to_string(p2) << '\n'
            << "|G| P_G(2): " << to_string(static_cast<std::int64_t>(g.order()) * p2) << '\n';
  return 0;
}

int run_verify(const Options& o) {
  std::vector<FiniteGroup> groups;
  Expectation expectation = Expectation::all_eleven;
  if (o.corpus == "default") {
    groups = extended_corpus(o.max_order);
  } else if (o.corpus.rfind("dir:", 0) == 0) {
    groups = read_corpus_directory(o.corpus.substr(4));
    expectation = Expectation::present_in_corpus;
  } else {
    throw Error(ErrorCode::BadParameter, "--corpus must be 'default' or 'dir:<path>'");
  }
  const auto report = verify_theorem(groups, expectation);
  if (!o.json_out.empty()) {
    const auto text = to_json(report, std::string(version), o.corpus).dump(2) + "\n";
    if (o.json_out == "-") {
      std::cout << text;
    } else {
      std::ofstream out(o.json_out);
      if (!out) throw Error(ErrorCode::Io, "cannot write " + o.json_out);
      out << text;
    }
  }
  if (!o.quiet && o.json_out != "-") {
    for (const auto& r : report.records) {
      std::cout << std::left << std::setw(14) << r.name << std::setw(5) << r.order;
      if (r.status == RecordStatus::in_scope) {
        std::cout << (r.planar() ? "planar     " : "non-planar ") << "|G|P=" << std::setw(8) << to_string(*r.order_times_p2)
                  << "Delta=(" << r.delta_vertices << "," << r.delta_edges << ")";
        if (r.verdict && r.verdict->witness) std::cout << " " << to_string(r.verdict->witness->kind);
        if (r.target_label && r.planar()) std::cout << " = " << *r.target_label;
      } else {
        std::cout << to_string(r.status);
        if (!r.error.empty()) std::cout << ": " << r.error;
      }
      std::cout << '\n';
    }
  }
  if (o.json_out != "-") {
    std::cout << "found:";
    for (const auto& f : report.summary.found) std::cout << ' ' << f;
    std::cout << "\nexpected:";
    for (const auto& e : report.summary.expected) std::cout << ' ' << e;
    std::cout << "\nmatch: " << (report.summary.match ? "yes" : "no") << '\n';
  }
  return report.summary.match ? 0 : 1;
}

int run_props(const Options& o) {
  const auto groups = extended_corpus(o.max_order);
  const PropertyResult results[] = {
      check_fiber_independence(groups),      check_multiplicativity(groups),
      check_abelian_factor_formula(groups),  check_edge_pair_relation(groups),
      check_density_inequality(groups),      check_planarity_certificates(o.random_graphs, o.seed),
  };
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed();
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checked)\n";
    if (!o.quiet)
      for (const auto& f : r.failures) std::cout << "  " << f << '\n';
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Generating graphs of finite groups: construction, planarity and generation statistics"};
  app.set_version_flag("--version", std::string(gengraph::version));
  app.require_subcommand(1);
  app.add_option("--max-order", o.max_order, "largest group order in the built-in corpus")->capture_default_str();
  app.add_option("--seed", o.seed, "seed for random-graph checks")->capture_default_str();
  app.add_flag("-q,--quiet", o.quiet, "print less");

  auto* graph = app.add_subcommand("graph", "emit the generating graph of a group");
  graph->add_option("spec", o.spec, "group spec, e.g. 'D:4' or 'C:4 x C:2'")->required();
  auto* dot = graph->add_flag("--dot", o.dot, "Graphviz output");
  graph->add_flag("--edges", o.edges, "edge-list output")->excludes(dot);
  graph->add_flag("--pruned", o.pruned, "drop isolated vertices");

  auto* planar = app.add_subcommand("planar", "planarity verdict with embedding or Kuratowski witness");
  planar->add_option("spec", o.spec, "group spec")->required();
  planar->add_flag("--pruned", o.pruned, "drop isolated vertices first");
  planar->add_flag("--json", o.json, "JSON output");

  auto* alpha_cmd = app.add_subcommand("alpha", "alpha values along a chief series");
  alpha_cmd->add_option("spec", o.spec, "group spec")->required();

  auto* verify = app.add_subcommand("verify", "sweep a corpus and compare the planar groups with the expected list");
  verify->add_option("--corpus", o.corpus, "'default' or 'dir:<path>' of Cayley table files")->capture_default_str();
  verify->add_option("--json", o.json_out, "write the JSON report to a file ('-' for stdout)");

  auto* props = app.add_subcommand("props", "run the corpus-wide property checks");
  props->add_option("--random-graphs", o.random_graphs, "number of random graphs for certificate checks")
      ->capture_default_str();

  for (auto* sub : {graph, planar, alpha_cmd, verify, props}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_error;
  }

  try {
    if (*graph) return run_graph(o);
    if (*planar) return run_planar(o);
    if (*alpha_cmd) return run_alpha(o);
    if (*verify) return run_verify(o);
    if (*props) return run_props(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}
