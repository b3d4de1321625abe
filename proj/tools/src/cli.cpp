#include "cli.hpp"

#include <cstdlib>
#include <fstream>

#include <CLI11.hpp>

#include "formats.hpp"
#include "mlrelax/error.hpp"
#include "mlrelax/sampling.hpp"

namespace mlrelax::cli {

namespace {

struct Options {
  std::string instance;
  std::string point;
  std::vector<std::string> lins;
  std::string relaxation = "standard";
  int max_neighbors = 0;
  int max_iters = 1000;
  std::string check;
  std::vector<std::string> inputs;
  std::string edge;
  std::optional<std::uint64_t> seed;
  int samples = 10;
  int extras = 20;
  std::string center;
  std::vector<std::string> neighbors;
  std::string dot;
  bool count_only = false;
};

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

std::uint64_t seed_of(const Options& opt) {
  if (opt.seed) return *opt.seed;
  if (const char* env = std::getenv("MLRELAX_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, std::string("MLRELAX_SEED is not an integer: ") + env);
    }
  }
  return 1;
}

int cmd_bound(const Options& opt, std::ostream& out) {
  const MultilinearInstance inst = instance_from_json(read_json(opt.instance));
  BoundReport report;
  if (!opt.lins.empty()) {
    LinearizationRelaxation choice;
    for (const auto& path : opt.lins)
      choice.linearizations.push_back(linearization_from_json(read_json(path), inst.hypergraph).digraph);
    report = bound_static(inst, choice);
  } else if (opt.relaxation == "standard") {
    report = bound_static(inst, StandardRelaxation{});
  } else if (opt.relaxation == "flower") {
    report = bound_static(inst, FlowerRelaxation{opt.max_neighbors});
  } else if (opt.relaxation == "cutting-plane") {
    report = bound_cutting_plane(inst, opt.max_neighbors, opt.max_iters);
  } else {
    report = bound_dynamic_linearization(inst, opt.max_neighbors, opt.max_iters);
  }
  emit(out, report_to_json(report));
  return kOk;
}

int finish_check(const Options& opt, std::ostream& out, const std::vector<CheckReport>& reports, bool sampled) {
  bool holds = true;
  Json list = Json::array();
  for (const auto& r : reports) {
    holds = holds && r.holds;
    list.push_back(report_to_json(r));
  }
  Json doc;
  doc["format"] = kFormatVersion;
  doc["check"] = opt.check;
  doc["holds"] = holds;
  if (sampled) {
    doc["seed"] = seed_of(opt);
    doc["samples"] = opt.samples;
  }
  doc["reports"] = list;
  emit(out, doc);
  return holds ? kOk : kViolation;
}

Hypergraph sampled_hypergraph(Sampler& sampler) { return sampler.hypergraph(2, 5, 4); }

int cmd_check(const Options& opt, std::ostream& out) {
  std::vector<CheckReport> reports;
  const bool sampled = opt.inputs.empty();
  Sampler sampler(seed_of(opt));

  if (opt.check == "fig3") {
    reports.push_back(check_fig3_propositions());
    return finish_check(opt, out, reports, false);
  }

  if (opt.check == "lemma-path") {
    if (sampled) {
      for (int s = 0; s < opt.samples; ++s) reports.push_back(check_path_lemma(sampler.linearization(sampler.uniform(2, 6), 12)));
    } else {
      for (const auto& path : opt.inputs) {
        const Json doc = read_json(path);
        const auto raw = linearization_from_json(doc, Hypergraph{});
        reports.push_back(check_path_lemma(raw.digraph));
      }
    }
    return finish_check(opt, out, reports, sampled);
  }

  std::vector<Hypergraph> graphs;
  if (sampled) {
    for (int s = 0; s < opt.samples; ++s) graphs.push_back(sampled_hypergraph(sampler));
  } else {
    graphs.push_back(instance_from_json(read_json(opt.inputs.front())).hypergraph);
  }

  if (opt.check == "lemma-projection") {
    for (const auto& g : graphs) {
      if (!opt.edge.empty()) {
        reports.push_back(check_projection_lemma(g, parse_var_list(opt.edge)));
        continue;
      }
      for (const auto& e : g.edges) reports.push_back(check_projection_lemma(g, e));
    }
    return finish_check(opt, out, reports, sampled);
  }

  // theorem
  for (const auto& g : graphs) {
    std::vector<Linearization> extra;
    if (sampled) {
      const int budget = g.num_vars + static_cast<int>(g.edges.size()) + 4;
      for (int i = 0; i < opt.extras; ++i) extra.push_back(sampler.linearization_of(g, budget));
    } else {
      for (std::size_t i = 1; i < opt.inputs.size(); ++i)
        extra.push_back(linearization_from_json(read_json(opt.inputs[i]), g).digraph);
    }
    reports.push_back(check_theorem(g, extra));
  }
  return finish_check(opt, out, reports, sampled);
}

ExtendedFlower flower_of(const Options& opt) {
  std::vector<VarKey> neighbors;
  for (const auto& n : opt.neighbors) neighbors.push_back(VarKey::of(parse_var_list(n)));
  return ExtendedFlower(parse_var_list(opt.center), neighbors);
}

int cmd_construct(const Options& opt, std::ostream& out, std::ostream& err) {
  const MultilinearInstance inst = instance_from_json(read_json(opt.instance));
  const ExtendedFlower f = flower_of(opt);
  validate_flower(inst.hypergraph, f);
  Linearization d;
  try {
    d = mccormick_from_flower(inst.hypergraph, f);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::RedundantFlower) throw;
    err << e.what() << '\n';
    return kViolation;
  }
  emit(out, linearization_to_json(d));
  if (!opt.dot.empty()) {
    std::ofstream dot(opt.dot);
    if (!dot) throw Error(ErrorCode::ParseError, "cannot write " + opt.dot);
    dot << to_dot(d);
  }
  return kOk;
}

int cmd_flowers(const Options& opt, std::ostream& out) {
  const MultilinearInstance inst = instance_from_json(read_json(opt.instance));
  const auto flowers = enumerate_flowers(inst.hypergraph, opt.max_neighbors);
  long with_edge = 0;
  long all_singleton = 0;
  long proper = 0;
  Json list = Json::array();
  for (const auto& ef : flowers) {
    const bool edge = ef.flower.has_edge_neighbor();
    with_edge += edge;
    all_singleton += !edge;
    proper += ef.kind == FlowerKind::Flower;
    if (opt.count_only) continue;
    Json item = flower_to_json(ef.flower);
    item["kind"] = ef.kind == FlowerKind::Flower ? "flower" : "extended";
    item["inequality"] = flower_ineq(ef.flower).to_string();
    list.push_back(item);
  }
  Json doc;
  doc["format"] = kFormatVersion;
  doc["count"] = flowers.size();
  doc["with_edge_neighbor"] = with_edge;
  doc["all_singleton"] = all_singleton;
  doc["flowers_proper"] = proper;
  if (!opt.count_only) doc["flowers"] = list;
  emit(out, doc);
  return kOk;
}

int cmd_separate(const Options& opt, std::ostream& out) {
  const MultilinearInstance inst = instance_from_json(read_json(opt.instance));
  const Point point = point_from_json(read_json(opt.point));
  const auto cut = separate_flower(inst.hypergraph, point, opt.max_neighbors);
  if (!cut) {
    out << "none\n";
    return kOk;
  }
  Json doc = flower_to_json(cut->flower);
  doc = Json{{"format", kFormatVersion}, {"center", doc["center"]}, {"neighbors", doc["neighbors"]}};
  doc["violation"] = rational_to_json(cut->violation);
  doc["inequality"] = flower_ineq(cut->flower).to_string();
  emit(out, doc);
  return kViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relaxations of multilinear sets: bounds, flower separation and checks", "mlrelax"};
  app.require_subcommand(1);
  Options opt;

  auto* bound = app.add_subcommand("bound", "LP bound of an instance over a relaxation");
  bound->add_option("instance", opt.instance, "instance JSON")->required();
  bound->add_option("--relaxation", opt.relaxation)
      ->check(CLI::IsMember({"standard", "flower", "cutting-plane", "dynamic"}));
  bound->add_option("--lin", opt.lins, "linearization JSON files; bound over the intersection of their relaxations");
  bound->add_option("--max-neighbors", opt.max_neighbors, "flower neighbor cap (0 = none)")->check(CLI::NonNegativeNumber);
  bound->add_option("--max-iters", opt.max_iters, "separation rounds for the iterative methods")->check(CLI::NonNegativeNumber);

  auto* check = app.add_subcommand("check", "verify a structural result, on given inputs or seeded samples");
  check->add_option("which", opt.check)
      ->required()
      ->check(CLI::IsMember({"lemma-projection", "lemma-path", "theorem", "fig3"}));
  check->add_option("inputs", opt.inputs, "instance (then extra linearizations) or linearization files");
  check->add_option("--edge", opt.edge, "edge to eliminate, e.g. \"1,2,3\"");
  check->add_option("--seed", opt.seed, "sampling seed (MLRELAX_SEED when absent)");
  check->add_option("--samples", opt.samples)->check(CLI::PositiveNumber);
  check->add_option("--extras", opt.extras, "random extra linearizations per sampled hypergraph")->check(CLI::NonNegativeNumber);

  auto* construct = app.add_subcommand("construct", "McCormick linearization built from a flower");
  construct->add_option("instance", opt.instance)->required();
  construct->add_option("--center", opt.center)->required();
  construct->add_option("--neighbor", opt.neighbors)->required();
  construct->add_option("--dot", opt.dot, "also write Graphviz output here");

  auto* flowers = app.add_subcommand("flowers", "list non-redundant extended flowers");
  flowers->add_option("instance", opt.instance)->required();
  flowers->add_option("--max-neighbors", opt.max_neighbors)->check(CLI::NonNegativeNumber);
  flowers->add_flag("--count-only", opt.count_only);

  auto* separate = app.add_subcommand("separate", "most violated flower inequality at a point");
  separate->add_option("instance", opt.instance)->required();
  separate->add_option("point", opt.point)->required();
  separate->add_option("--max-neighbors", opt.max_neighbors)->check(CLI::NonNegativeNumber);

  std::vector<const char*> argv{"mlrelax"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (bound->parsed()) return cmd_bound(opt, out);
    if (check->parsed()) return cmd_check(opt, out);
    if (construct->parsed()) return cmd_construct(opt, out, err);
    if (flowers->parsed()) return cmd_flowers(opt, out);
    return cmd_separate(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace mlrelax::cli
