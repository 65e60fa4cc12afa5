// Acceptance suite: one PASS/FAIL line per criterion, each with its runtime
// budget. Exit status is nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "snc/certificates.hpp"
#include "snc/instance_io.hpp"
#include "snc/median_order.hpp"
#include "snc/neighborhood.hpp"
#include "snc/sweep.hpp"
#include "snc/tournament_corpus.hpp"
#include "snc/transforms.hpp"

namespace {

using namespace snc;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct CommandResult {
  int status;
  std::string out;
};

fs::path g_work;

CommandResult run_cli(const std::string& args) {
  auto out = (g_work / "cli_stdout.txt").string();
  std::string command = std::string(SNC_CLI_PATH) + " " + args + " > " + out + " 2>/dev/null";
  int raw = std::system(command.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, read_file(out)};
}

// eta(N2+) - eta(N1+) from BFS layers of the matrix oracle.
Rational oracle_vw_delta(const testing::Matrix& m, Vertex v, const VertexWeighting& eta) {
  Rational delta = 0;
  for (Vertex s : m.at_distance(v, 2)) delta += eta[s];
  for (Vertex u : m.at_distance(v, 1)) delta -= eta[u];
  return delta;
}

bool oracle_losing_density(const Digraph& d, const VertexWeighting& l, bool weighted) {
  testing::Matrix m(d);
  Rational total = 0;
  for (Vertex v = 0; v < d.size(); ++v) {
    if (l[v] < 0) return false;
    total += l[v];
  }
  if (total != 1) return false;
  for (Vertex v = 0; v < d.size(); ++v) {
    Rational in = 0;
    Rational out = 0;
    for (Vertex x = 0; x < d.size(); ++x) {
      if (m.present[x][v]) in += (weighted ? m.weight[x][v] : Rational(1)) * l[x];
      if (m.present[v][x]) out += (weighted ? m.weight[v][x] : Rational(1)) * l[x];
    }
    if (in > out) return false;
  }
  return true;
}

// Fewest backward arcs over all orders, by enumeration.
long brute_force_backward_count(const Digraph& d) {
  testing::Matrix m(d);
  std::vector<std::size_t> perm(d.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  long best = -1;
  do {
    long cost = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) cost += m.present[perm[i]][perm[j]];
    }
    if (best < 0 || cost < best) best = cost;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best < 0 ? 0 : best;
}

Outcome fix_p_example() {
  Outcome o;
  auto d = testing::fix_p();
  auto start = Clock::now();
  auto r = report(d);
  auto elapsed = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  const auto& v = r.vertices[0];
  using Term = std::pair<Vertex, Rational>;
  if (v.alpha != 9) o.fail("alpha " + to_string(v.alpha));
  if (v.beta_terms != std::vector<Term>{{1, 1}, {2, 2}, {4, 5}}) o.fail("beta terms differ");
  if (v.beta != 8) o.fail("beta " + to_string(v.beta));
  if (v.delta != -1) o.fail("delta " + to_string(v.delta));
  if (elapsed >= 1.0) o.fail("report took " + std::to_string(elapsed) + " ms");

  auto path = (g_work / "fixp.txt").string();
  write_file(path, serialize(d));
  auto cli = run_cli("analyze " + path);
  for (const char* needle : {"\"alpha\": \"9\"", "\"beta\": \"8\"", "\"delta\": \"-1\"", "\"1\": \"1\"", "\"2\": \"2\"",
                             "\"4\": \"5\""}) {
    if (cli.status != 0 || cli.out.find(needle) == std::string::npos) o.fail(std::string("analyze output lacks ") + needle);
  }
  o.detail = o.ok ? "report in " + std::to_string(elapsed) + " ms" : o.detail;
  return o;
}

Outcome expansion_oracle() {
  Outcome o;
  Rng rng(1001);
  for (int trial = 0; trial < 500 && o.ok; ++trial) {
    auto d = generate_digraph(1 + rng.below(7), rng.unit(), parse_weight_scheme("int:4"), rng);
    auto e = expand_auxiliary(d);
    testing::Matrix original(d);
    testing::Matrix expanded(e.graph);
    for (Vertex v = 0; v < d.size(); ++v) {
      for (Vertex x : e.blocks[v]) {
        auto first = Rational(static_cast<unsigned long>(expanded.at_distance(x, 1).size()));
        auto second = Rational(static_cast<unsigned long>(expanded.at_distance(x, 2).size()));
        if (first != original.alpha(v) || second != original.beta(v)) {
          o.fail("cardinality mismatch at vertex " + std::to_string(v) + " of\n" + serialize(d));
        }
      }
    }
  }
  return o;
}

Outcome contraction_monotone() {
  Outcome o;
  Rng rng(1002);
  std::size_t pairs = 0;
  const char* schemes[] = {"zint:3", "int:4", "rat:4", "unit"};
  for (int trial = 0; trial < 500 && o.ok; ++trial) {
    auto d = generate_digraph(2 + rng.below(7), 0.3 + 0.7 * rng.unit(), parse_weight_scheme(schemes[trial % 4]), rng);
    testing::Matrix before(d);
    for (Vertex u = 0; u < d.size(); ++u) {
      for (Vertex v = 0; v < d.size(); ++v) {
        if (u == v || !can_contract(d, u, v)) continue;
        ++pairs;
        auto c = contract(d, u, v);
        testing::Matrix after(c.graph);
        for (Vertex y = 0; y < d.size(); ++y) {
          if (!c.index_map[y]) continue;
          Vertex z = *c.index_map[y];
          if (after.alpha(z) != before.alpha(y)) o.fail("alpha changed");
          if (after.beta(z) - after.alpha(z) > before.beta(y) - before.alpha(y)) o.fail("delta rose");
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " contractions";
  return o;
}

Outcome dichotomy_exclusive() {
  Outcome o;
  Rng rng(1003);
  for (int trial = 0; trial < 500 && o.ok; ++trial) {
    auto d = generate_digraph(1 + rng.below(8), rng.unit(), WeightScheme{}, rng);
    auto cert = dichotomy(d);
    if (!verify_certificate(d, cert).ok) o.fail("certificate rejected");
    auto flipped = cert;
    flipped.variant = cert.variant == CertificateVariant::expanding ? CertificateVariant::contracting
                                                                    : CertificateVariant::expanding;
    if (verify_certificate(d, flipped).ok) o.fail("both variants verify");

    // Independent recheck through BFS layers.
    testing::Matrix m(cert.variant == CertificateVariant::expanding ? d : reverse(d));
    if (cert.weighting.total() != 1) o.fail("not normalized");
    for (Vertex v = 0; v < d.size(); ++v) {
      Rational delta = oracle_vw_delta(m, v, cert.weighting);
      bool holds = cert.variant == CertificateVariant::expanding ? delta >= 0 : delta < 0;
      if (!holds) o.fail("oracle rejects vertex " + std::to_string(v));
    }
  }
  return o;
}

Outcome tournaments_expand() {
  Outcome o;
  auto check = [&](const Digraph& t) {
    auto cert = dichotomy(t);
    if (cert.variant != CertificateVariant::expanding) o.fail("contracting tournament\n" + serialize(t));
    testing::Matrix m(t);
    for (Vertex v = 0; v < t.size(); ++v) {
      if (oracle_vw_delta(m, v, cert.weighting) < 0) o.fail("oracle rejects expanding weighting");
    }
    auto l = losing_density(t);
    if (!oracle_losing_density(t, l, false)) o.fail("losing density rejected\n" + serialize(t));
  };

  std::set<std::pair<std::size_t, TournamentCode>> classes;
  std::size_t labeled = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (TournamentCode code = 0; code < (TournamentCode{1} << pairs); ++code) {
      auto t = tournament_from_code(n, code);
      check(t);
      classes.insert({n, canonical_code(t)});
      ++labeled;
    }
  }
  std::set<std::pair<std::size_t, TournamentCode>> corpus;
  for (const auto& c : small_tournament_classes()) corpus.insert({c.n, c.code});
  if (classes != corpus) o.fail("labeled enumeration does not realize the class corpus");
  std::size_t five = 0;
  for (const auto& c : classes) five += c.first == 5;
  if (five != 12) o.fail(std::to_string(five) + " classes on 5 vertices");

  Rng rng(1005);
  for (int trial = 0; trial < 2000 && o.ok; ++trial) check(generate_tournament(1 + rng.below(10), WeightScheme{}, rng));
  if (o.ok) o.detail = std::to_string(labeled) + " labeled + 2000 random";
  return o;
}

Outcome arc_weighted_tournaments() {
  Outcome o;
  Rng rng(1006);
  const char* schemes[] = {"int:5", "rat:6", "zint:5", "zint:1"};
  for (int trial = 0; trial < 2000 && o.ok; ++trial) {
    auto t = generate_tournament(1 + rng.below(8), parse_weight_scheme(schemes[trial % 4]), rng);
    auto seymour = seymour_vertices_arc(t);
    if (seymour.empty()) o.fail("no arc-weighted Seymour vertex\n" + serialize(t));
    testing::Matrix m(t);
    for (Vertex v : seymour) {
      if (m.beta(v) < m.alpha(v)) o.fail("oracle disagrees at vertex " + std::to_string(v));
    }
  }
  return o;
}

Outcome median_order_regression() {
  Outcome o;
  Rng rng(1007);
  std::size_t brute = 0;
  for (int trial = 0; trial < 1000 && o.ok; ++trial) {
    auto t = generate_tournament(1 + rng.below(10), WeightScheme{}, rng);
    auto check = last_vertex_seymour(t, OrderMode::count);
    testing::Matrix m(t);
    Vertex last = check.order.order.back();
    bool seymour = m.at_distance(last, 1).size() <= m.at_distance(last, 2).size();
    if (!check.seymour || !seymour) o.fail("last vertex not Seymour\n" + serialize(t));
    if (t.size() <= 8) {
      ++brute;
      if (check.order.backward != brute_force_backward_count(t)) o.fail("median order not optimal\n" + serialize(t));
    }
  }
  if (o.ok) o.detail = std::to_string(brute) + " orders checked exhaustively";
  return o;
}

// Runs sweeps in order until one flags `wanted`, within a shared trial budget.
std::optional<std::pair<SweepReport, std::size_t>> search(std::vector<SweepConfig> configs, const char* wanted,
                                                          std::size_t& budget) {
  for (auto& config : configs) {
    if (budget == 0) break;
    config.trials = std::min(config.trials, budget);
    config.stop_after_flags = 0;
    // Run in chunks so the search stops at the first hit.
    const std::size_t total = config.trials;
    for (std::size_t begin = 0; begin < total; begin += 500) {
      SweepConfig chunk = config;
      chunk.seed = trial_seed(config.seed, begin);
      chunk.trials = std::min<std::size_t>(500, total - begin);
      auto report = sweep(chunk);
      budget -= report.trials.size();
      for (const auto& [index, text] : report.flagged_instances) {
        const auto& flags = report.trials[index].outcome.flags;
        if (std::find(flags.begin(), flags.end(), wanted) != flags.end()) return std::make_pair(report, index);
      }
    }
  }
  return std::nullopt;
}

Outcome negative_results(const fs::path& witness_dir) {
  Outcome o;
  std::size_t budget = 100000;
  fs::remove_all(witness_dir);

  // (a) weighted median order whose last vertex is not a Seymour vertex.
  std::vector<SweepConfig> order_configs;
  for (auto [kind, n_max, weights] : {std::tuple{GeneratorKind::blowup, 4, "int:5"},
                                      std::tuple{GeneratorKind::blowup, 5, "zint:4"},
                                      std::tuple{GeneratorKind::tournament, 8, "int:5"}}) {
    SweepConfig c;
    c.kind = kind;
    c.n_min = 3;
    c.n_max = n_max;
    c.weights = parse_weight_scheme(weights);
    c.max_block = 2;
    c.trials = 30000;
    c.seed = 4001;
    c.checks.median_order = true;
    order_configs.push_back(c);
  }
  auto order_hit = search(order_configs, flag::last_vertex_weight, budget);
  if (!order_hit) {
    o.fail("no weighted last-vertex witness within the trial budget");
  } else {
    auto& [report, index] = *order_hit;
    report.flagged_instances = {{index, serialize(generate_trial(report.config, index))}};
    persist(report, (witness_dir / "median-order").string());
    const auto& digest = report.trials[index].outcome.digest;
    auto path = (witness_dir / "median-order" / (digest + ".txt")).string();
    auto d = parse_digraph(read_file(path));
    auto order = median_order(d, OrderMode::weight);
    testing::Matrix m(d);
    Vertex last = order.order.back();
    if (!(m.beta(last) < m.alpha(last))) o.fail("oracle finds the last vertex Seymour");
    if (d.size() <= 9 && order.backward != testing::brute_force_backward(d, false)) o.fail("order not optimal");
    auto replay = run_cli("analyze --flags --check median-order " + path);
    if (replay.status != 4 || replay.out.find(flag::last_vertex_weight) == std::string::npos) {
      o.fail("CLI replay did not raise last-vertex-weight");
    }
    auto cli_order = run_cli("median-order --mode weight " + path);
    if (cli_order.out.find("seymour false") == std::string::npos) o.fail("median-order CLI disagrees");
    o.detail = "(a) n=" + std::to_string(d.size()) + " " + path;
  }

  // (b) arc-weighted losing density that fails on the reverse.
  SweepConfig ld;
  ld.kind = GeneratorKind::tournament;
  ld.n_min = 3;
  ld.n_max = 8;
  ld.weights = parse_weight_scheme("int:5");
  ld.trials = 30000;
  ld.seed = 4002;
  ld.checks.ld_reverse = true;
  auto ld_hit = search({ld}, flag::ld_reverse, budget);
  if (!ld_hit) {
    o.fail("no ld-reverse witness within the trial budget");
  } else {
    auto& [report, index] = *ld_hit;
    report.flagged_instances = {{index, serialize(generate_trial(report.config, index))}};
    persist(report, (witness_dir / "ld-reverse").string());
    const auto& digest = report.trials[index].outcome.digest;
    auto path = (witness_dir / "ld-reverse" / (digest + ".ld.txt")).string();
    auto instance = parse_instance(read_file(path));
    const auto& d = instance.graph;
    if (!instance.vertex_weights || !oracle_losing_density(d, *instance.vertex_weights, true)) {
      o.fail("persisted density is not an arc-weighted losing density");
    } else {
      const auto& l = *instance.vertex_weights;
      Digraph r(d.size());
      for (const auto& arc : d.arcs()) r.add_arc(arc.head, arc.tail, Rational(arc.weight * l[arc.tail]));
      testing::Matrix m(r);
      bool fails = false;
      for (Vertex v = 0; v < d.size(); ++v) fails = fails || m.beta(v) < m.alpha(v);
      if (!fails) o.fail("oracle finds every vertex weakly expanding on the reverse");
    }
    auto replay = run_cli("analyze --flags --check ld-reverse " + path);
    if (replay.status != 4 || replay.out.find(flag::ld_reverse) == std::string::npos) {
      o.fail("CLI replay did not raise ld-reverse");
    }
    if (o.ok) o.detail += "; (b) n=" + std::to_string(d.size()) + " " + path;
  }
  if (o.ok) o.detail += "; " + std::to_string(100000 - budget) + " trials";
  return o;
}

Outcome triangle_full() {
  Outcome o;
  Rng rng(1009);
  int accepted = 0;
  while (accepted < 300 && o.ok) {
    auto d = testing::random_triangle_union(3 + rng.below(7), 1 + rng.below(10), rng);
    if (!every_arc_in_triangle(d)) continue;
    ++accepted;
    auto eta = testing::random_weighting(d.size(), rng, 7, 6, true);
    auto seymour = seymour_vertices_vw(d, eta);
    if (seymour.empty()) o.fail("no vertex-weighted Seymour vertex\n" + serialize(d));
    testing::Matrix m(d);
    for (Vertex v : seymour) {
      if (oracle_vw_delta(m, v, eta) < 0) o.fail("oracle disagrees");
    }
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  for (auto kind : {GeneratorKind::tournament, GeneratorKind::digraph, GeneratorKind::blowup}) {
    SweepConfig c;
    c.kind = kind;
    c.n_min = 2;
    c.n_max = 7;
    c.weights = parse_weight_scheme("rat:4");
    c.trials = 200;
    c.seed = 0xdecafbadULL;
    c.checks = {true, true};
    if (sweep_report_json(sweep(c)) != sweep_report_json(sweep(c))) o.fail(std::string("library sweep differs: ") + to_string(kind));
  }
  const std::string args = "sweep --kind blowup --n 2..4 --weights zint:3 --trials 300 --seed 77 --check median-order --check ld-reverse --out ";
  auto a = (g_work / "det_a").string();
  auto b = (g_work / "det_b").string();
  run_cli(args + a);
  run_cli(args + b);
  if (read_file(a + "/report.json") != read_file(b + "/report.json")) o.fail("CLI reports differ");
  for (const auto& entry : fs::directory_iterator(a)) {
    auto twin = fs::path(b) / entry.path().filename();
    if (!fs::exists(twin) || read_file(entry.path().string()) != read_file(twin.string())) o.fail("witness files differ");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  fs::path witness_dir = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "snc_acceptance";
  g_work = fs::temp_directory_path() / "snc_acceptance_work";
  fs::remove_all(g_work);
  fs::create_directories(g_work);

  struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"1 worked example", 1.0, fix_p_example},
      {"2 expansion cardinalities", 30, expansion_oracle},
      {"3 contraction monotone", 60, contraction_monotone},
      {"4 dichotomy exclusive", 60, dichotomy_exclusive},
      {"5 tournaments expand", 120, tournaments_expand},
      {"6 arc-weighted tournaments", 120, arc_weighted_tournaments},
      {"7 median order last vertex", 120, median_order_regression},
      {"8 negative results", 600, [&] { return negative_results(witness_dir); }},
      {"9 triangle-full", 30, triangle_full},
      {"10 determinism", 600, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    // Criterion 1 carries its own millisecond budget on the library call.
    if (c.budget_seconds > 1.0 && seconds > c.budget_seconds) o.fail("over budget");
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS " : "FAIL ") << c.name << " (" << seconds << " s)";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
  }
  fs::remove_all(g_work);
  return failures == 0 ? 0 : 1;
}
