// kft: command-line front end. Reports are JSON on stdout; exit 0 = holds/completed,
// 1 = fails/counterexample, 2 = usage, input or budget error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "kft/kft.hpp"

using json = nlohmann::ordered_json;
using namespace kft;

namespace {

constexpr int exit_holds = 0;
constexpr int exit_fails = 1;
constexpr int exit_error = 2;

struct InputOptions {
  std::string path = "-";
  std::string format = "auto";
};

Graph load_graph(const InputOptions& in) {
  std::optional<GraphFormat> format;
  if (in.format == "edge-list") format = GraphFormat::edge_list;
  else if (in.format == "graph6") format = GraphFormat::graph6;
  if (in.path == "-") return read_graph(std::cin, format);
  std::ifstream file(in.path);
  if (!file) throw Error("cannot open " + in.path);
  return read_graph(file, format);
}

json params_json(const FTParams& p) { return {{"k", p.k}, {"p", p.p}, {"c", p.c}}; }

json optional_json(const std::optional<std::vector<Vertex>>& v) { return v ? json(*v) : json(nullptr); }

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json audit_json(const AuditReport& report) {
  json records = json::array();
  for (const auto& r : report.records)
    records.push_back({{"check", r.check},
                       {"property", r.property},
                       {"passed", r.passed},
                       {"instances", r.instances},
                       {"witness", r.passed ? json(nullptr) : json(r.witness)},
                       {"observed", optional_json(r.observed)},
                       {"detail", r.detail}});
  return records;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::size_t default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

void add_params(CLI::App* cmd, FTParams& p, bool with_k = true) {
  if (with_k) cmd->add_option("--k", p.k, "fault budget k")->required();
  cmd->add_option("--p", p.p, "number of disjoint cliques p")->required();
  cmd->add_option("--c", p.c, "clique order c")->required();
}

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input,-i", in.path, "graph file, - for stdin")->capture_default_str();
  cmd->add_option("--format", in.format, "input format")
      ->check(CLI::IsMember({"auto", "edge-list", "graph6"}))
      ->capture_default_str();
}

json search_json(const std::string& command, const SearchReport& r) {
  json exemplars = json::array();
  for (const auto& g : r.exemplars) exemplars.push_back(emit_graph6(g));
  return {{"command", command},
          {"params", params_json(r.params)},
          {"n", r.n},
          {"target_bound", r.target_bound},
          {"lower_bound", r.lower_bound},
          {"edges_from", r.edges_from},
          {"edges_to", optional_json(r.edges_to)},
          {"minimum_found", optional_json(r.minimum_found)},
          {"exemplars", exemplars},
          {"labeled_solutions", r.labeled_solutions},
          {"graphs_examined", r.graphs_examined},
          {"exhaustive", r.exhaustive},
          {"budget_exhausted", r.budget_exhausted},
          {"elapsed_seconds", r.elapsed_seconds}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fault-tolerant clique packing toolkit"};
  app.require_subcommand(1);
  std::size_t jobs = default_jobs();
  app.add_option("--jobs,-j", jobs, "worker threads (output does not depend on it)")->check(CLI::PositiveNumber);

  InputOptions input;
  FTParams params;

  // verify
  std::size_t witnesses = 0;
  auto* verify = app.add_subcommand("verify", "decide k-FT(pK_c)");
  add_params(verify, params);
  add_input(verify, input);
  verify->add_option("--witnesses", witnesses, "retain packings for the first N removal sets");

  // pack
  auto* pack = app.add_subcommand("pack", "find p disjoint c-cliques");
  add_params(pack, params, false);
  add_input(pack, input);

  // construct
  std::string out_format = "edge-list";
  auto* construct = app.add_subcommand("construct", "build a graph family");
  construct->require_subcommand(1);
  construct->add_option("--output-format", out_format)->check(CLI::IsMember({"edge-list", "graph6"}));
  auto* c_star = construct->add_subcommand("star", "hub K_k joined to p disjoint K_c");
  add_params(c_star, params);
  std::string template_path;
  auto* c_tree = construct->add_subcommand("tree", "chordal tree of (k+c)-cliques from a template file");
  c_tree->add_option("template", template_path, "template file: \"p k c\" then p-1 lines \"parent child a_1..a_k\"")
      ->required();
  std::size_t cycle_p = 1;
  auto* c_cycle = construct->add_subcommand("cycle", "odd cycle C_{2p+1}");
  c_cycle->add_option("--p", cycle_p)->required();
  std::size_t harary_m = 2, harary_n = 3;
  auto* c_harary = construct->add_subcommand("harary", "Harary graph H_{m,n}");
  c_harary->add_option("--m", harary_m)->required();
  c_harary->add_option("--n", harary_n)->required();
  std::size_t c2_k = 2, c2_p = 1;
  auto* c_c2 = construct->add_subcommand("c2", "H_{k+1,2p+k} for even k");
  c_c2->add_option("--k", c2_k)->required();
  c_c2->add_option("--p", c2_p)->required();
  for (auto* leaf : {c_star, c_tree, c_cycle, c_harary, c_c2}) leaf->fallthrough();

  // recognize
  auto* recognize = app.add_subcommand("recognize", "recognize minimum 1-FT(pK_c) graphs");
  add_params(recognize, params, false);
  add_input(recognize, input);

  // audit
  std::vector<Vertex> separator;
  auto* audit = app.add_subcommand("audit", "check structural consequences of fault tolerance");
  add_params(audit, params);
  add_input(audit, input);
  audit->add_option("--separator", separator, "audit one separator, e.g. 0,1")->delimiter(',');

  // search-min and probe
  SearchOptions search;
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget-seconds", search.budget_seconds, "wall-clock budget, 0 = none");
    cmd->add_option("--budget-graphs", search.budget_graphs, "labeled graphs examined, 0 = none");
    cmd->add_option("--start-edges", search.start_edges, "resume from this edge count");
    cmd->add_flag("--allow-large", search.allow_large, "permit orders above the exhaustive limit");
  };
  auto* search_min = app.add_subcommand("search-min", "least edge count of a k-FT(pK_c) graph on pc+k vertices");
  add_params(search_min, params);
  std::optional<std::size_t> max_edges;
  search_min->add_option("--max-edges", max_edges, "largest edge count tried (default: star bound)");
  add_budget(search_min);
  auto* probe = app.add_subcommand("probe", "search below the star bound for k >= 2");
  add_params(probe, params);
  add_budget(probe);

  // props
  auto* props = app.add_subcommand("props", "degrees, connectivity, blocks and chordality");
  add_input(props, input);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_error;
  }

  try {
    VerifyOptions vopts{jobs, 0};
    search.jobs = jobs;

    if (*verify) {
      Graph g = load_graph(input);
      vopts.retain_witnesses = witnesses;
      auto v = verify_ft(g, params, vopts);
      json samples = json::array();
      for (const auto& [s, packing] : v.sample_witnesses) samples.push_back({{"removed", s}, {"cliques", packing.cliques}});
      emit({{"command", "verify"},
            {"params", params_json(params)},
            {"n", g.order()},
            {"m", g.size()},
            {"holds", v.holds},
            {"counterexample", optional_json(v.counterexample)},
            {"witness_count", v.witness_count},
            {"reason", v.reason},
            {"sample_witnesses", samples}});
      return v.holds ? exit_holds : exit_fails;
    }
    if (*pack) {
      Graph g = load_graph(input);
      auto packing = find_disjoint_cliques(g, params.p, params.c);
      emit({{"command", "pack"},
            {"p", params.p},
            {"c", params.c},
            {"found", packing.has_value()},
            {"cliques", packing ? json(packing->cliques) : json(nullptr)}});
      return packing ? exit_holds : exit_fails;
    }
    if (*construct) {
      Graph g;
      if (*c_star) g = star_construction(params.k, params.p, params.c);
      else if (*c_cycle) g = odd_cycle(cycle_p);
      else if (*c_harary) g = harary(harary_m, harary_n);
      else if (*c_c2) g = c2_even_k_construction(c2_k, c2_p);
      else {
        std::ifstream file(template_path);
        if (!file) throw Error("cannot open " + template_path);
        auto doc = parse_tree_template(file);
        g = tree_of_cliques(doc.k, doc.c, doc.tree);
      }
      std::cout << emit_graph(g, out_format == "graph6" ? GraphFormat::graph6 : GraphFormat::edge_list);
      return exit_holds;
    }
    if (*recognize) {
      Graph g = load_graph(input);
      auto r = recognize_min_1ft(g, params.p, params.c);
      emit({{"command", "recognize"},
            {"p", params.p},
            {"c", params.c},
            {"n", g.order()},
            {"m", g.size()},
            {"minimum", r.minimum},
            {"explanation", r.explanation}});
      return r.minimum ? exit_holds : exit_fails;
    }
    if (*audit) {
      Graph g = load_graph(input);
      AuditReport report;
      std::vector<std::vector<Vertex>> audited;
      if (!separator.empty()) {
        report = audit_separator(g, params, separator, vopts);
        audited.push_back(separator);
      } else {
        report.append(audit_basic(g, params));
        report.append(audit_low_degree_cliques(g, params));
        if (params.k < params.c) {
          auto all = audit_all_separators(g, params, vopts);
          report.append(all.report);
          audited = all.separators;
        }
      }
      emit({{"command", "audit"},
            {"params", params_json(params)},
            {"passed", report.passed()},
            {"separators", audited},
            {"records", audit_json(report)}});
      return report.passed() ? exit_holds : exit_fails;
    }
    if (*search_min) {
      search.max_edges = max_edges.value_or(params.star_edge_count());
      auto r = search_minimum(params, search);
      json j = search_json("search-min", r);
      emit(j);
      return r.exhaustive ? exit_holds : exit_error;
    }
    if (*probe) {
      auto p = probe_conjecture(params, search);
      json j = search_json("probe", p.report);
      j["outcome"] = p.outcome;
      j["counterexample"] = p.counterexample ? json(emit_graph6(*p.counterexample)) : json(nullptr);
      j["counterexample_reverified"] = p.counterexample_reverified;
      emit(j);
      if (p.outcome == "supports") return exit_holds;
      return p.outcome == "refuted" ? exit_fails : exit_error;
    }
    if (*props) {
      Graph g = load_graph(input);
      std::vector<std::size_t> degrees;
      for (Vertex v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
      auto conn = connectivity(g);
      auto bd = blocks(g);
      auto ch = chordality(g);
      json tree = nullptr;
      if (ch.tree) {
        json edges = json::array();
        for (const auto& e : ch.tree->tree_edges) edges.push_back({{"a", e.a}, {"b", e.b}, {"adhesion", e.adhesion}});
        tree = {{"parts", ch.tree->parts}, {"tree_edges", edges}};
      }
      emit({{"command", "props"},
            {"n", g.order()},
            {"m", g.size()},
            {"degrees", degrees},
            {"min_degree", g.order() ? g.min_degree() : 0},
            {"max_degree", g.order() ? g.max_degree() : 0},
            {"components", conn.components},
            {"vertex_connectivity", conn.vertex_connectivity},
            {"edge_connectivity", conn.edge_connectivity},
            {"block_count", bd.blocks.size()},
            {"blocks", bd.blocks},
            {"cutvertices", bd.cutvertices},
            {"chordal", ch.chordal},
            {"clique_tree", tree},
            {"chordless_cycle", ch.chordal ? json(nullptr) : json(ch.chordless_cycle)},
            {"graph6", emit_graph6(g)}});
      return exit_holds;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}
