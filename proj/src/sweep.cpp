#include "snc/sweep.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <stdexcept>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "snc/errors.hpp"
#include "snc/instance_io.hpp"
#include "snc/median_order.hpp"
#include "snc/neighborhood.hpp"
#include "snc/transforms.hpp"

namespace snc {

const char* to_string(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::tournament:
      return "tournament";
    case GeneratorKind::digraph:
      return "digraph";
    case GeneratorKind::blowup:
      return "blowup";
  }
  return "tournament";
}

GeneratorKind parse_generator_kind(const std::string& text) {
  if (text == "tournament") return GeneratorKind::tournament;
  if (text == "digraph") return GeneratorKind::digraph;
  if (text == "blowup") return GeneratorKind::blowup;
  throw std::invalid_argument("unknown generator kind '" + text + "'");
}

void SweepConfig::validate() const {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("n range must satisfy 1 <= A <= B");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("arc probability must lie in [0, 1]");
  if (weights.bound < 1) throw std::invalid_argument("weight bound must be at least 1");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (max_block < 1) throw std::invalid_argument("block size bound must be at least 1");
}

std::string instance_digest(const Digraph& d) {
  const std::string text = serialize(d);
  std::array<unsigned char, EVP_MAX_MD_SIZE> hash{};
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), hash.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string digest;
  digest.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    digest.push_back(hex[hash[i] >> 4]);
    digest.push_back(hex[hash[i] & 0xF]);
  }
  return digest;
}

TrialOutcome evaluate_trial(const Digraph& d, const TrialChecks& checks,
                            const std::optional<VertexWeighting>& density) {
  TrialOutcome outcome;
  outcome.n = d.size();
  outcome.digest = instance_digest(d);

  auto r = report(d);
  outcome.min_delta = r.vertices.front().delta;
  for (const auto& v : r.vertices) {
    if (v.delta >= 0) ++outcome.seymour_arc;
    outcome.min_delta = min(outcome.min_delta, v.delta);
  }
  outcome.seymour_unweighted = seymour_vertices_unweighted(d).size();
  outcome.variant = dichotomy(d).variant;

  const bool tournament = is_tournament(d);
  if (outcome.seymour_arc == 0) outcome.flags.emplace_back(flag::empty_seymour_arc);
  if (outcome.seymour_unweighted == 0) outcome.flags.emplace_back(flag::empty_seymour_unweighted);
  if (tournament && outcome.variant == CertificateVariant::contracting) {
    outcome.flags.emplace_back(flag::contracting_tournament);
  }

  if (checks.median_order && tournament && d.size() <= default_order_cap) {
    if (!last_vertex_seymour(d, OrderMode::count).seymour) outcome.flags.emplace_back(flag::last_vertex_count);
    if (!last_vertex_seymour(d, OrderMode::weight).seymour) outcome.flags.emplace_back(flag::last_vertex_weight);
  }

  if (checks.ld_reverse && tournament) {
    std::optional<VertexWeighting> l = density;
    if (l) {
      if (!is_losing_density(d, *l, true)) throw PreconditionError("supplied weighting is not an arc-weighted losing density");
    } else {
      l = arc_weighted_losing_density(d);
    }
    if (!l) {
      outcome.flags.emplace_back(flag::ld_infeasible);
    } else {
      auto weighted = report(density_weighted_reverse(d, *l));
      bool fails = std::any_of(weighted.vertices.begin(), weighted.vertices.end(),
                               [](const VertexReport& v) { return v.delta < 0; });
      if (fails) {
        outcome.flags.emplace_back(flag::ld_reverse);
        outcome.density = std::move(l);
      }
    }
  }
  return outcome;
}

Digraph generate_trial(const SweepConfig& config, std::size_t index) {
  Rng rng(trial_seed(config.seed, index));
  const std::size_t n = config.n_min + rng.below(config.n_max - config.n_min + 1);
  switch (config.kind) {
    case GeneratorKind::tournament:
      return generate_tournament(n, config.weights, rng);
    case GeneratorKind::digraph:
      return generate_digraph(n, config.p, config.weights, rng);
    case GeneratorKind::blowup: {
      Digraph base = generate_tournament(n, config.weights, rng);
      std::vector<Rational> sizes;
      for (std::size_t v = 0; v < n; ++v) sizes.emplace_back(std::to_string(1 + rng.below(config.max_block)));
      return blowup(base, VertexWeighting(std::move(sizes)), [&](Vertex, std::size_t, std::size_t) { return rng.coin(); });
    }
  }
  throw std::invalid_argument("unknown generator kind");
}

std::size_t SweepReport::flagged_count() const { return flagged_instances.size(); }

SweepReport sweep(const SweepConfig& config) {
  config.validate();
  SweepReport result;
  result.config = config;
  result.trials.reserve(config.trials);
  for (std::size_t index = 0; index < config.trials; ++index) {
    Digraph d = generate_trial(config, index);
    TrialRecord record{index, evaluate_trial(d, config.checks)};
    if (!record.outcome.flags.empty()) result.flagged_instances.emplace_back(index, serialize(d));
    result.trials.push_back(std::move(record));
    if (config.stop_after_flags != 0 && result.flagged_count() >= config.stop_after_flags) break;
  }
  return result;
}

std::string sweep_report_json(const SweepReport& report) {
  using json = nlohmann::ordered_json;
  const auto& c = report.config;
  json config = {{"kind", to_string(c.kind)},
                 {"n_min", c.n_min},
                 {"n_max", c.n_max},
                 {"weights", to_string(c.weights)},
                 {"trials", c.trials},
                 {"seed", c.seed},
                 {"check_median_order", c.checks.median_order},
                 {"check_ld_reverse", c.checks.ld_reverse}};
  if (c.kind == GeneratorKind::digraph) config["p"] = c.p;
  if (c.kind == GeneratorKind::blowup) config["max_block"] = c.max_block;

  static constexpr std::array flag_names{flag::empty_seymour_arc,   flag::empty_seymour_unweighted,
                                         flag::contracting_tournament, flag::last_vertex_count,
                                         flag::last_vertex_weight,  flag::ld_reverse,
                                         flag::ld_infeasible};
  json counts = json::object();
  for (const char* name : flag_names) counts[name] = 0;

  json trials = json::array();
  std::size_t expanding = 0;
  for (const auto& t : report.trials) {
    const auto& o = t.outcome;
    if (o.variant == CertificateVariant::expanding) ++expanding;
    for (const auto& f : o.flags) counts[f] = counts[f].get<std::size_t>() + 1;
    trials.push_back({{"index", t.index},
                      {"n", o.n},
                      {"digest", o.digest},
                      {"seymour_arc", o.seymour_arc},
                      {"seymour_unweighted", o.seymour_unweighted},
                      {"min_delta", to_string(o.min_delta)},
                      {"dichotomy", to_string(o.variant)},
                      {"flags", o.flags}});
  }

  json doc = {{"config", std::move(config)},
              {"totals",
               {{"trials_run", report.trials.size()},
                {"flagged", report.flagged_count()},
                {"expanding", expanding},
                {"contracting", report.trials.size() - expanding},
                {"flags", std::move(counts)}}},
              {"trials", std::move(trials)}};
  return doc.dump(2) + "\n";
}

std::vector<std::string> persist(const SweepReport& report, const std::string& directory) {
  namespace fs = std::filesystem;
  fs::create_directories(directory);
  std::vector<std::string> written;
  const fs::path base(directory);

  auto report_path = (base / "report.json").string();
  write_file(report_path, sweep_report_json(report));
  written.push_back(report_path);

  for (const auto& [index, text] : report.flagged_instances) {
    const auto& outcome = report.trials.at(index).outcome;
    auto path = (base / (outcome.digest + ".txt")).string();
    write_file(path, text);
    written.push_back(path);
    if (outcome.density) {
      auto ld_path = (base / (outcome.digest + ".ld.txt")).string();
      write_file(ld_path, text + serialize_weighting(*outcome.density));
      written.push_back(ld_path);
    }
  }
  return written;
}

}  // namespace snc
