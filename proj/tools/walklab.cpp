// walklab: command-line front end for the walklab library.
//
// Every command prints one JSON document (or a flattened pretty/CSV view of
// it) on stdout. Exit status: 0 when all checks pass or are vacuous, 2 when
// any check fails, 3 when a sampled verdict is inconclusive, 1 on errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "walklab/check.hpp"
#include "walklab/electric.hpp"
#include "walklab/error.hpp"
#include "walklab/experiments.hpp"
#include "walklab/generators.hpp"
#include "walklab/graph_io.hpp"
#include "walklab/perron_lab.hpp"
#include "walklab/spectral.hpp"
#include "walklab/walks.hpp"

namespace {

using nlohmann::json;
using namespace walklab;

struct Globals {
  std::uint64_t seed = 0;
  std::string output = "json";
  std::string config;
  std::size_t workers = 1;
  double tol = -1.0;
};

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const auto value = std::stoull(item, &used);
    if (used != item.size()) throw PreconditionError("bad list entry '" + item + "'");
    out.push_back(value);
  }
  return out;
}

VertexSet parse_set(const Multigraph& g, const std::string& text) {
  std::vector<Vertex> members;
  for (auto v : parse_list(text)) members.push_back(static_cast<Vertex>(v));
  return VertexSet(g.size(), std::move(members));
}

struct LoadedGraph {
  Multigraph graph;
  std::string description;
};

LoadedGraph load_input(const std::string& input, std::uint64_t seed) {
  if (input.starts_with("gen:")) {
    auto spec = parse_generator_spec(input);
    if (input.find("seed=") == std::string::npos) spec.seed = seed;
    return {generate(spec), to_string(spec)};
  }
  return {load_graph_file(input), input};
}

void collect_checks(const json& j, std::vector<std::string>& verdicts) {
  if (j.is_object()) {
    if (j.contains("verdict") && j.contains("slack") && j["verdict"].is_string())
      verdicts.push_back(j["verdict"].get<std::string>());
    for (const auto& [key, value] : j.items()) collect_checks(value, verdicts);
  } else if (j.is_array()) {
    for (const auto& value : j) collect_checks(value, verdicts);
  }
}

std::string scalar_text(const json& value) { return value.is_string() ? value.get<std::string>() : value.dump(); }

void emit(const json& doc, const std::string& format) {
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  const json flat = doc.flatten();
  if (format == "pretty") {
    for (const auto& [key, value] : flat.items()) std::cout << key << " = " << scalar_text(value) << "\n";
    return;
  }
  std::cout << "key,value\n";
  for (const auto& [key, value] : flat.items()) {
    std::string text = scalar_text(value);
    if (text.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char ch : text) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      text = quoted + "\"";
    }
    std::cout << key << "," << text << "\n";
  }
}

/// Appends "--key=value" for each entry of a JSON object file, so config
/// values win over earlier command-line flags.
std::vector<std::string> config_args(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open config file " + path);
  const json cfg = json::parse(in);
  if (!cfg.is_object()) throw PreconditionError("config file must hold a JSON object");
  std::vector<std::string> out;
  for (const auto& [key, value] : cfg.items()) {
    if (key == "config") continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) out.push_back("--" + key);
      continue;
    }
    out.push_back("--" + key + "=" + scalar_text(value));
  }
  return out;
}

double tol_or(const Globals& g, double fallback) { return g.tol >= 0.0 ? g.tol : fallback; }

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].starts_with("--config=")) path = args[i].substr(9);
    if (path.empty()) continue;
    try {
      const auto extra = config_args(path);
      args.insert(args.end(), extra.begin(), extra.end());
    } catch (const std::exception& e) {
      std::cerr << "walklab: " << e.what() << "\n";
      return 1;
    }
    break;
  }

  CLI::App app{"walklab: spectral and random-walk laboratory"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.fallthrough();
  Globals glob;
  app.add_option("--seed", glob.seed, "Seed for random steps (env WALKLAB_SEED)")->envname("WALKLAB_SEED");
  app.add_option("--output", glob.output, "Output format")->check(CLI::IsMember({"json", "pretty", "csv"}));
  app.add_option("--config", glob.config, "JSON file of option overrides");
  app.add_option("--workers", glob.workers, "Sampling worker streams")->check(CLI::PositiveNumber);
  app.add_option("--tol", glob.tol, "Tolerance override");

  json result;
  std::string command;
  std::function<json()> action;
  std::string input;

  auto graph_cmd = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* sub = parent->add_subcommand(name, help);
    sub->add_option("input", input, "Graph file or generator spec such as gen:cycle,n=8")->required();
    return sub;
  };
  auto bind = [&](CLI::App* sub, const std::string& name, std::function<json()> fn) {
    sub->callback([&, name, fn] {
      command = name;
      action = fn;
    });
  };
  auto load = [&] { return load_input(input, glob.seed); };

  // gen
  bool raw = false;
  auto* gen = app.add_subcommand("gen", "Build a graph from a generator spec");
  gen->add_option("spec", input, "Generator spec")->required();
  gen->add_flag("--raw", raw, "Print the graph file instead of JSON");
  bind(gen, "gen", [&] {
    const auto lg = load();
    return json{{"generator", lg.description}, {"n", lg.graph.size()}, {"graph", serialize_graph(lg.graph)}};
  });

  auto* stats = graph_cmd(&app, "stats", "Connectivity, diameter and degrees");
  bind(stats, "stats", [&] {
    const auto lg = load();
    const auto st = graph_stats(lg.graph);
    json hist = json::object();
    for (const auto& [deg, count] : st.degree_histogram) hist[std::to_string(deg)] = count;
    return json{{"n", lg.graph.size()},
                {"connected", st.connected},
                {"diameter", st.diameter ? json(*st.diameter) : json("infinite")},
                {"max_degree", st.max_degree},
                {"degree_histogram", hist},
                {"bipartite", is_bipartite(lg.graph)}};
  });

  std::string kind_text = "N";
  std::string set_text;
  bool vectors = false;
  auto* spec_cmd = graph_cmd(&app, "spectrum", "Eigenvalues of A, N (normalized) or P");
  spec_cmd->add_option("--kind", kind_text, "A, N or P");
  spec_cmd->add_option("--set", set_text, "Principal submatrix vertices, comma separated");
  spec_cmd->add_flag("--vectors", vectors, "Include eigenvectors");
  bind(spec_cmd, "spectrum", [&] {
    const auto lg = load();
    std::optional<VertexSet> subset;
    if (!set_text.empty()) subset = parse_set(lg.graph, set_text);
    auto kind = parse_matrix_kind(kind_text);
    if (kind == MatrixKind::transition) kind = MatrixKind::normalized_adjacency;
    const auto r = spectrum(lg.graph, kind, subset);
    json out = to_json(r, vectors);
    out["kind"] = to_string(parse_matrix_kind(kind_text));
    return out;
  });

  double lo = 0.0, hi = 0.0;
  auto* mult = graph_cmd(&app, "multiplicity", "Count eigenvalues in [lo, hi]");
  mult->add_option("--lo", lo)->required();
  mult->add_option("--hi", hi)->required();
  mult->add_option("--kind", kind_text, "A, N or P");
  bind(mult, "multiplicity", [&] {
    const auto lg = load();
    auto kind = parse_matrix_kind(kind_text);
    if (kind == MatrixKind::transition) kind = MatrixKind::normalized_adjacency;
    const auto eigs = spectrum(lg.graph, kind).eigenvalues;
    const double tol = tol_or(glob, default_multiplicity_tol(eigs));
    return json{{"count", multiplicity(eigs, Interval(lo, hi), tol)}, {"lo", lo}, {"hi", hi}, {"tol", tol}};
  });

  auto* perron_cmd = graph_cmd(&app, "perron", "Perron pair of a principal submatrix");
  perron_cmd->add_option("--set", set_text, "Vertex set (default: all)");
  perron_cmd->add_option("--kind", kind_text, "A, N or P");
  bind(perron_cmd, "perron", [&] {
    const auto lg = load();
    const auto s = set_text.empty() ? VertexSet::all(lg.graph.size()) : parse_set(lg.graph, set_text);
    const auto p = perron(lg.graph, s, parse_matrix_kind(kind_text));
    return json{{"lambda1", p.lambda1},
                {"vector", std::vector<double>(p.vector.data(), p.vector.data() + p.vector.size())},
                {"members", p.members},
                {"residual", p.residual},
                {"gap", std::isinf(p.gap) ? json(nullptr) : json(p.gap)}};
  });

  std::uint64_t a = 0, b = 0;
  auto* res = graph_cmd(&app, "resistance", "Effective resistance between two vertices");
  res->add_option("--a", a)->required();
  res->add_option("--b", b)->required();
  bind(res, "resistance", [&] {
    const auto lg = load();
    const auto sol = solve_voltages(lg.graph, static_cast<Vertex>(a), static_cast<Vertex>(b));
    return json{{"a", a}, {"b", b}, {"reff", 1.0 / sol.flow_out}, {"residual", sol.residual}};
  });

  std::uint64_t x = 0;
  std::string target_text, taboo_text;
  auto* hit = graph_cmd(&app, "hitprob", "P_x(hit target before taboo)");
  hit->add_option("--x", x)->required();
  hit->add_option("--target", target_text)->required();
  hit->add_option("--taboo", taboo_text);
  bind(hit, "hitprob", [&] {
    const auto lg = load();
    std::optional<VertexSet> taboo;
    if (!taboo_text.empty()) taboo = parse_set(lg.graph, taboo_text);
    const double p = hitting_prob(lg.graph, static_cast<Vertex>(x), parse_set(lg.graph, target_text), taboo);
    return json{{"x", x}, {"probability", p}};
  });

  std::size_t k = 1;
  std::string weight_text = "probability";
  auto* wexact = graph_cmd(&app, "walk-exact", "Exact support profile of closed walks of length 2k");
  wexact->add_option("--x", x)->required();
  wexact->add_option("--k", k, "Half the walk length")->required();
  wexact->add_option("--weight", weight_text)->check(CLI::IsMember({"probability", "count"}));
  bind(wexact, "walk-exact", [&] {
    const auto lg = load();
    const auto w = weight_text == "count" ? WalkWeight::count : WalkWeight::probability;
    return to_json(support_profile_exact(lg.graph, static_cast<Vertex>(x), 2 * k, w));
  });

  std::size_t samples = 10000;
  auto* wsample = graph_cmd(&app, "walk-sample", "Sampled support profile of closed walks of length 2k");
  wsample->add_option("--x", x)->required();
  wsample->add_option("--k", k, "Half the walk length")->required();
  wsample->add_option("--n", samples, "Number of samples")->required();
  bind(wsample, "walk-sample", [&] {
    const auto lg = load();
    return to_json(support_profile_mc(lg.graph, static_cast<Vertex>(x), 2 * k, samples, glob.seed, glob.workers));
  });

  // check ...
  auto* check = app.add_subcommand("check", "Certified inequality checks");
  check->require_subcommand(1);
  check->fallthrough();

  std::uint64_t u = 0, v = 0, z = 0;
  auto* lemma = graph_cmd(check, "lemma-test", "One-vertex perturbation of lambda1");
  lemma->add_option("--set", set_text)->required();
  lemma->add_option("--u", u)->required();
  lemma->add_option("--v", v)->required();
  lemma->add_option("--kind", kind_text, "A or N");
  bind(lemma, "check lemma-test", [&] {
    const auto lg = load();
    const auto c = perturbation_bound(lg.graph, parse_set(lg.graph, set_text), static_cast<Vertex>(u),
                                      static_cast<Vertex>(v), parse_matrix_kind(kind_text));
    return json{{"checks", json::array({to_json(c)})}};
  });

  std::string strategy_text = "electric";
  auto* extend = graph_cmd(check, "extend", "Support extension from S to 2|S| vertices");
  extend->add_option("--set", set_text)->required();
  extend->add_option("--strategy", strategy_text)->check(CLI::IsMember({"electric", "argmax"}));
  bind(extend, "check extend", [&] {
    const auto lg = load();
    const auto strategy = strategy_text == "argmax" ? ExtensionStrategy::argmax : ExtensionStrategy::electric;
    return to_json(extend_support(lg.graph, parse_set(lg.graph, set_text), strategy));
  });

  auto* ethm = graph_cmd(check, "electric-thm", "Large boundary Perron entry");
  ethm->add_option("--set", set_text)->required();
  bind(ethm, "check electric-thm", [&] {
    const auto lg = load();
    return to_json(electric_theorem_check(lg.graph, parse_set(lg.graph, set_text)), "check");
  });

  auto* cor = graph_cmd(check, "corollary", "Perron entry at a vertex of non-maximal degree");
  bind(cor, "check corollary", [&] {
    const auto lg = load();
    return json{{"checks", json::array({to_json(irregular_corollary_check(lg.graph))})}};
  });

  std::size_t s = 1;
  std::string variant_text = "normalized";
  auto* cyc = graph_cmd(check, "cyclesup", "Closed-walk support decay");
  cyc->add_option("--x", x)->required();
  cyc->add_option("--k", k, "Half the walk length")->required();
  cyc->add_option("--s", s)->required();
  cyc->add_option("--variant", variant_text)->check(CLI::IsMember({"normalized", "highdeg"}));
  cyc->add_option("--n", samples, "Samples when the exact profile is too large");
  bind(cyc, "check cyclesup", [&] {
    const auto lg = load();
    const auto variant = variant_text == "highdeg" ? CyclesupVariant::highdeg : CyclesupVariant::normalized;
    const auto c = cyclesup_check(lg.graph, static_cast<Vertex>(x), k, s, variant, glob.seed, samples);
    return json{{"checks", json::array({to_json(c)})}};
  });

  auto* gam = graph_cmd(check, "gamma", "Connected s-sets containing x");
  gam->add_option("--x", x)->required();
  gam->add_option("--s", s)->required();
  bind(gam, "check gamma", [&] {
    const auto lg = load();
    return json{{"checks", json::array({to_json(gamma_enumeration_check(lg.graph, static_cast<Vertex>(x), s))})}};
  });

  auto* transfer = graph_cmd(check, "transfer", "Closed-walk transfer inside T");
  transfer->add_option("--set", set_text, "T")->required();
  transfer->add_option("--x", x)->required();
  transfer->add_option("--z", z)->required();
  transfer->add_option("--k", k)->required();
  transfer->add_option("--s", s)->required();
  bind(transfer, "check transfer", [&] {
    const auto lg = load();
    const auto checks = walk_transfer_check(lg.graph, parse_set(lg.graph, set_text), static_cast<Vertex>(x),
                                            static_cast<Vertex>(z), k, s);
    return json{{"checks", to_json(checks)}};
  });

  // experiment ...
  auto* exp = app.add_subcommand("experiment", "End-to-end experiment reports");
  exp->require_subcommand(1);
  exp->fallthrough();

  std::size_t retries = 1;
  std::size_t s_override = 0;
  auto* del = graph_cmd(exp, "deletion", "Random deletion and trace chain");
  del->add_option("--variant", variant_text)->check(CLI::IsMember({"normalized", "highdeg"}));
  del->add_option("--retries", retries)->check(CLI::PositiveNumber);
  del->add_option("--s", s_override, "Override s");
  bind(del, "experiment deletion", [&] {
    const auto lg = load();
    DeletionOptions opt;
    opt.variant = variant_text == "highdeg" ? DeletionVariant::highdeg : DeletionVariant::normalized;
    opt.seed = glob.seed;
    opt.retries = retries;
    if (s_override > 0) opt.s_override = s_override;
    return to_json(deletion_pipeline(lg.graph, opt));
  });

  std::size_t d = 4;
  std::string n_text = "8";
  std::string ell_text = "2,3,4";
  auto* lol = exp->add_subcommand("lollipop", "Lollipop attach entry and depth fractions");
  lol->add_option("--d", d)->required();
  lol->add_option("--n", n_text, "Path length")->required();
  lol->add_option("--k", k, "Half the walk length")->required();
  lol->add_option("--ell", ell_text, "Depths, comma separated");
  bind(lol, "experiment lollipop", [&] {
    std::vector<std::size_t> ells;
    for (auto e : parse_list(ell_text)) ells.push_back(static_cast<std::size_t>(e));
    return to_json(lollipop_report(d, static_cast<std::size_t>(std::stoull(n_text)), k, ells));
  });

  auto* man = exp->add_subcommand("mangrove", "Mangrove quotient checks and leaf slope");
  man->add_option("--d", d)->required();
  man->add_option("--n", n_text, "Path lengths, comma separated")->required();
  bind(man, "experiment mangrove", [&] {
    std::vector<std::size_t> ns;
    for (auto e : parse_list(n_text)) ns.push_back(static_cast<std::size_t>(e));
    return to_json(mangrove_report(d, ns));
  });

  double bval = 0.0;
  auto* ram = graph_cmd(exp, "ramanujan", "Trace-based multiplicity bound");
  ram->add_option("--k", k)->required();
  ram->add_option("--b", bval)->required();
  bind(ram, "experiment ramanujan", [&] {
    const auto lg = load();
    return to_json(ramanujan_trace_bound(lg.graph, k, bval));
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    result = action();
  } catch (const std::exception& e) {
    std::cerr << "walklab: " << e.what() << "\n";
    return 1;
  }

  if (command == "gen" && raw) {
    std::cout << result["graph"].get<std::string>();
    return 0;
  }
  json doc{{"command", command}, {"seed", glob.seed}};
  if (!input.empty()) doc["input"] = input;
  doc["result"] = result;
  std::vector<std::string> verdicts;
  collect_checks(result, verdicts);
  int code = 0;
  for (const auto& verdict : verdicts) {
    if (verdict == "fail") code = 2;
    if (verdict == "inconclusive" && code == 0) code = 3;
  }
  doc["status"] = code == 0 ? "ok" : code == 2 ? "fail" : "inconclusive";
  emit(doc, glob.output);
  return code;
}
