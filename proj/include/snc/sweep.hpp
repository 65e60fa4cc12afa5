#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "snc/certificates.hpp"
#include "snc/digraph.hpp"
#include "snc/generators.hpp"

namespace snc {

enum class GeneratorKind {
  tournament,
  digraph,
  /// Random tournament whose vertices are blown up into blocks of 1..max_block
  /// vertices with zero-weight internal arcs of random orientation.
  blowup,
};

const char* to_string(GeneratorKind kind) noexcept;
GeneratorKind parse_generator_kind(const std::string& text);

struct TrialChecks {
  bool median_order = false;  ///< last vertex of weighted/count median orders
  bool ld_reverse = false;    ///< arc-weighted losing density on the reverse
};

struct SweepConfig {
  GeneratorKind kind = GeneratorKind::tournament;
  std::size_t n_min = 1;
  std::size_t n_max = 1;
  double p = 0.5;  ///< digraph kind only
  WeightScheme weights;
  std::size_t max_block = 3;  ///< blowup kind only
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  TrialChecks checks;
  /// Stop after this many flagged trials (0 = never).
  std::size_t stop_after_flags = 0;

  /// Throws std::invalid_argument on an out-of-range field.
  void validate() const;
};

/// Special events a trial can raise.
namespace flag {
inline constexpr const char* empty_seymour_arc = "empty-seymour-arc";
inline constexpr const char* empty_seymour_unweighted = "empty-seymour-unweighted";
inline constexpr const char* contracting_tournament = "contracting-tournament";
inline constexpr const char* last_vertex_count = "last-vertex-count";
inline constexpr const char* last_vertex_weight = "last-vertex-weight";
inline constexpr const char* ld_reverse = "ld-reverse";
inline constexpr const char* ld_infeasible = "ld-infeasible";
}  // namespace flag

struct TrialOutcome {
  std::size_t n = 0;
  std::string digest;
  std::size_t seymour_arc = 0;
  std::size_t seymour_unweighted = 0;
  Rational min_delta;
  CertificateVariant variant = CertificateVariant::expanding;
  std::vector<std::string> flags;
  /// Arc-weighted losing density used by the ld-reverse check.
  std::optional<VertexWeighting> density;
};

/// Runs every enabled check on one instance. `density`, when given, is used
/// in place of solving for the arc-weighted losing density; it must be one.
TrialOutcome evaluate_trial(const Digraph& d, const TrialChecks& checks,
                            const std::optional<VertexWeighting>& density = std::nullopt);

/// Instance for trial `index`, drawn from trial_seed(config.seed, index).
Digraph generate_trial(const SweepConfig& config, std::size_t index);

struct TrialRecord {
  std::size_t index = 0;
  TrialOutcome outcome;
};

struct SweepReport {
  SweepConfig config;
  std::vector<TrialRecord> trials;
  /// Flagged trials with their canonical instance text.
  std::vector<std::pair<std::size_t, std::string>> flagged_instances;

  std::size_t flagged_count() const;
};

SweepReport sweep(const SweepConfig& config);

/// Deterministic JSON rendering: identical configs give identical bytes.
std::string sweep_report_json(const SweepReport& report);

/// Writes report.json plus `<digest>.txt` for every flagged instance and
/// `<digest>.ld.txt` (instance plus density as vweight lines) for ld-reverse
/// witnesses. Returns the written paths.
std::vector<std::string> persist(const SweepReport& report, const std::string& directory);

/// Hex SHA-256 of the canonical instance text.
std::string instance_digest(const Digraph& d);

}  // namespace snc
