// Command-line front end for the snc library.
//
// Exit codes: 0 success, 1 usage, 2 invalid instance, 3 verification
// failure, 4 flagged discovery.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "snc/certificates.hpp"
#include "snc/errors.hpp"
#include "snc/instance_io.hpp"
#include "snc/median_order.hpp"
#include "snc/neighborhood.hpp"
#include "snc/reductions.hpp"
#include "snc/sweep.hpp"
#include "snc/transforms.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_invalid = 2;
constexpr int exit_verification = 3;
constexpr int exit_discovery = 4;

snc::Instance load(const std::string& path) { return snc::parse_instance(snc::read_file(path)); }

snc::VertexWeighting load_weighting(const std::string& path, std::size_t n) {
  return snc::parse_weighting(snc::read_file(path), n);
}

snc::VertexWeighting required_vweights(const snc::Instance& instance, const std::string& path) {
  if (!instance.vertex_weights) throw snc::PreconditionError(path + " has no vweight lines");
  return *instance.vertex_weights;
}

void print_vertices(const std::vector<snc::Vertex>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) std::cout << (i ? " " : "") << vertices[i];
  std::cout << '\n';
}

bool has_non_unit_weight(const snc::Digraph& d) {
  for (const auto& arc : d.arcs()) {
    if (arc.weight != 1) return true;
  }
  return false;
}

// Parses "A..B" or a single "A".
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      std::size_t n = std::stoul(text);
      return {n, n};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n", "expected A..B, got '" + text + "'");
  }
}

snc::TrialChecks parse_checks(const std::vector<std::string>& names) {
  snc::TrialChecks checks;
  for (const auto& name : names) {
    if (name == "median-order") {
      checks.median_order = true;
    } else if (name == "ld-reverse") {
      checks.ld_reverse = true;
    } else {
      throw CLI::ValidationError("--check", "unknown check '" + name + "'");
    }
  }
  return checks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact second-neighborhood analysis of arc-weighted digraphs"};
  app.require_subcommand(1);
  int status = exit_ok;

  std::string file;
  std::string second_file;
  std::string third_file;

  // analyze
  std::string format = "json";
  bool with_flags = false;
  std::vector<std::string> check_names;
  auto* analyze = app.add_subcommand("analyze", "Per-vertex alpha, beta, delta and classification");
  analyze->add_option("file", file, "Instance file")->required();
  analyze->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  analyze->add_flag("--flags", with_flags, "Evaluate the sweep checks and report raised flags");
  analyze->add_option("--check", check_names, "Extra checks with --flags: median-order, ld-reverse");
  analyze->callback([&] {
    auto instance = load(file);
    if (!with_flags) {
      auto r = snc::report(instance.graph);
      std::cout << (format == "table" ? snc::report_to_table(r) : snc::report_to_json(r));
      return;
    }
    auto checks = parse_checks(check_names);
    auto outcome = snc::evaluate_trial(instance.graph, checks, checks.ld_reverse ? instance.vertex_weights : std::nullopt);
    nlohmann::ordered_json doc = {{"n", outcome.n},
                                  {"digest", outcome.digest},
                                  {"seymour_arc", outcome.seymour_arc},
                                  {"seymour_unweighted", outcome.seymour_unweighted},
                                  {"min_delta", snc::to_string(outcome.min_delta)},
                                  {"dichotomy", snc::to_string(outcome.variant)},
                                  {"flags", outcome.flags}};
    std::cout << doc.dump(2) << '\n';
    if (!outcome.flags.empty()) status = exit_discovery;
  });

  // seymour
  std::string seymour_mode = "arc";
  auto* seymour = app.add_subcommand("seymour", "Seymour vertices");
  seymour->add_option("file", file, "Instance file")->required();
  seymour->add_option("--mode", seymour_mode, "arc, unweighted or vertex")
      ->check(CLI::IsMember({"arc", "unweighted", "vertex"}));
  seymour->callback([&] {
    auto instance = load(file);
    std::vector<snc::Vertex> result;
    if (seymour_mode == "arc") {
      result = snc::seymour_vertices_arc(instance.graph);
    } else if (seymour_mode == "unweighted") {
      result = snc::seymour_vertices_unweighted(instance.graph);
    } else {
      result = snc::seymour_vertices_vw(instance.graph, required_vweights(instance, file));
    }
    print_vertices(result);
    if (result.empty()) status = exit_discovery;
  });

  // dichotomy
  auto* dichotomy = app.add_subcommand("dichotomy", "Expanding weighting of D or contracting weighting of its reverse");
  dichotomy->add_option("file", file, "Instance file")->required();
  dichotomy->callback([&] {
    auto instance = load(file);
    if (has_non_unit_weight(instance.graph)) std::cerr << "warning: arc weights are ignored by the dichotomy\n";
    std::cout << snc::serialize_certificate(snc::dichotomy(instance.graph));
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Re-check a certificate against an instance");
  verify->add_option("file", file, "Instance file")->required();
  verify->add_option("certfile", second_file, "Certificate file")->required();
  verify->callback([&] {
    auto instance = load(file);
    auto cert = snc::parse_certificate(snc::read_file(second_file), instance.graph.size());
    auto check = snc::verify_certificate(instance.graph, cert);
    if (check.ok) {
      std::cout << "pass " << snc::to_string(cert.variant) << '\n';
      return;
    }
    std::cout << "fail " << snc::to_string(cert.variant);
    if (check.problem) std::cout << ": " << *check.problem;
    if (!check.violations.empty()) {
      std::cout << "; violating vertices:";
      for (auto v : check.violations) std::cout << ' ' << v;
    }
    std::cout << '\n';
    status = exit_verification;
  });

  // losing-density
  bool arc_weighted = false;
  auto* density = app.add_subcommand("losing-density", "Losing density of the instance");
  density->add_option("file", file, "Instance file")->required();
  density->add_flag("--arc-weighted", arc_weighted, "Weight each term by its arc weight");
  density->callback([&] {
    auto instance = load(file);
    auto l = arc_weighted ? snc::arc_weighted_losing_density(instance.graph)
                          : std::optional(snc::losing_density(instance.graph));
    std::cout << (l ? snc::serialize_weighting(*l) : std::string("infeasible\n"));
  });

  // median-order
  std::string order_mode = "count";
  auto* median = app.add_subcommand("median-order", "Exact median order");
  median->add_option("file", file, "Instance file")->required();
  median->add_option("--mode", order_mode, "count or weight")->check(CLI::IsMember({"count", "weight"}));
  median->callback([&] {
    auto instance = load(file);
    auto mode = order_mode == "count" ? snc::OrderMode::count : snc::OrderMode::weight;
    auto check = snc::last_vertex_seymour(instance.graph, mode);
    std::cout << snc::serialize(check.order);
    if (!check.order.order.empty()) {
      std::cout << "# last " << check.order.order.back() << " seymour " << (check.seymour ? "true" : "false") << '\n';
    }
  });

  // expand
  bool normalize = false;
  auto* expand = app.add_subcommand("expand", "Unweighted auxiliary expansion");
  expand->add_option("file", file, "Instance file")->required();
  expand->add_flag("--normalize", normalize, "Drop zero arcs and scale to integers first");
  expand->callback([&] {
    auto d = load(file).graph;
    if (normalize) d = snc::rationalize_and_scale(snc::drop_zero_arcs(d));
    std::cout << snc::serialize(snc::expand_auxiliary(d));
  });

  // contract
  snc::Vertex contract_u = 0;
  snc::Vertex contract_v = 0;
  auto* contract = app.add_subcommand("contract", "Contract u to v");
  contract->add_option("file", file, "Instance file")->required();
  contract->add_option("u", contract_u, "Vertex removed")->required();
  contract->add_option("v", contract_v, "Vertex receiving u's in-weight")->required();
  contract->callback([&] {
    auto result = snc::contract(load(file).graph, contract_u, contract_v);
    std::cout << snc::serialize(result.graph);
    for (std::size_t old = 0; old < result.index_map.size(); ++old) {
      if (result.index_map[old]) std::cout << "# map " << old << " -> " << *result.index_map[old] << '\n';
    }
  });

  // blowup
  auto* blowup = app.add_subcommand("blowup", "Blow up a tournament by its vweight sizes");
  blowup->add_option("file", file, "Tournament instance with vweight lines")->required();
  blowup->callback([&] {
    auto instance = load(file);
    std::cout << snc::serialize(snc::blowup(instance.graph, required_vweights(instance, file)));
  });

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Shrink a vertex-weighted counterexample");
  reduce->add_option("file", file, "Instance file")->required();
  reduce->add_option("etafile", second_file, "Contracting weighting")->required();
  reduce->add_option("etaplusfile", third_file, "Expanding weighting")->required();
  reduce->callback([&] {
    auto d = load(file).graph;
    auto result = snc::reduce_counterexample(d, load_weighting(second_file, d.size()),
                                             load_weighting(third_file, d.size()));
    std::cout << "# t " << snc::to_string(result.t) << '\n';
    for (std::size_t i = 0; i < result.kept.size(); ++i) std::cout << "# map " << result.kept[i] << " -> " << i << '\n';
    std::cout << snc::serialize(snc::Instance{result.graph, result.weighting});
  });

  // eps-reduce
  auto* eps = app.add_subcommand("eps-reduce", "Subtract epsilon * eta from every positive arc");
  eps->add_option("file", file, "Instance file")->required();
  eps->add_option("etafile", second_file, "Vertex weighting")->required();
  eps->callback([&] {
    auto d = load(file).graph;
    auto result = snc::epsilon_reduce(d, load_weighting(second_file, d.size()));
    std::cout << "# epsilon " << snc::to_string(result.epsilon) << '\n' << snc::serialize(result.graph);
  });

  // sweep
  std::string kind = "tournament";
  std::string range;
  std::string weights = "unit";
  std::string out_dir;
  snc::SweepConfig config;
  auto* sweep = app.add_subcommand("sweep", "Randomized conjecture sweep");
  sweep->add_option("--kind", kind, "tournament, digraph or blowup")
      ->check(CLI::IsMember({"tournament", "digraph", "blowup"}));
  sweep->add_option("--n", range, "Vertex count range A..B")->required();
  sweep->add_option("--p", config.p, "Arc probability (digraph)");
  sweep->add_option("--weights", weights, "unit, int:M, zint:M or rat:Q");
  sweep->add_option("--max-block", config.max_block, "Largest blow-up block (blowup)");
  sweep->add_option("--trials", config.trials, "Number of trials")->required();
  sweep->add_option("--seed", config.seed, "64-bit seed")->required();
  sweep->add_option("--check", check_names, "median-order, ld-reverse");
  sweep->add_option("--stop-after", config.stop_after_flags, "Stop after this many flagged trials");
  sweep->add_option("--out", out_dir, "Output directory")->required();
  sweep->callback([&] {
    config.kind = snc::parse_generator_kind(kind);
    std::tie(config.n_min, config.n_max) = parse_range(range);
    try {
      config.weights = snc::parse_weight_scheme(weights);
      config.validate();
    } catch (const std::invalid_argument& e) {
      throw CLI::ValidationError("sweep", e.what());
    }
    config.checks = parse_checks(check_names);
    auto result = snc::sweep(config);
    snc::persist(result, out_dir);
    std::cout << "trials " << result.trials.size() << " flagged " << result.flagged_count() << '\n';
    if (result.flagged_count() != 0) status = exit_discovery;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? exit_ok : exit_usage;
  } catch (const snc::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return exit_verification;
  } catch (const snc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  }
  return status;
}
