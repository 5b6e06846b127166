#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quditmap/bounds.hpp"
#include "quditmap/circuit.hpp"
#include "quditmap/pauli.hpp"
#include "quditmap/router.hpp"
#include "quditmap/topology.hpp"

// Entry points behind the command-line subcommands: decompose, synth, route,
// bounds and sweep.
namespace quditmap::experiment {

class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Decomposition {
  PauliSum sum;
  std::map<std::size_t, std::size_t> histogram;

  /// Pauli lines followed by `# terms`, `# max_length` and `# length p count` lines.
  [[nodiscard]] std::string to_text() const;
};

[[nodiscard]] Decomposition decompose(std::string_view op, std::size_t d, std::string_view encoding);

[[nodiscard]] Circuit synthesize_operator(std::string_view op, std::size_t d, std::string_view encoding,
                                          const TrotterParams& params = {});

struct RouteRecord {
  std::string op;
  std::size_t d = 0;
  std::string encoding;
  std::string topology;
  std::string placement_used;
  std::size_t qubits = 0;
  std::size_t cnot = 0;
  std::size_t swap = 0;
  std::size_t two_qubit_total = 0;
  std::size_t restarts = 0;
  std::uint64_t seed = 0;
  Circuit routed;

  [[nodiscard]] std::string to_json() const;
};

struct RouteRequest {
  std::string op;
  std::size_t d = 2;
  std::string encoding = "sb";
  TopologyKind topology = TopologyKind::Line;
  /// identity | hsnake | vsnake | all
  std::string placement = "all";
  RouteOptions options;
};

[[nodiscard]] std::vector<LabelledPlacement> placements_for(const Topology& t, std::string_view token);

[[nodiscard]] RouteRecord route_operator(const RouteRequest& request);

[[nodiscard]] bounds::BoundReport bounds_report(std::string_view op, std::size_t d, std::string_view encoding,
                                                const bounds::ReportOptions& options = {});

struct SweepConfig {
  std::vector<std::string> operators;
  std::vector<std::size_t> d_values;
  std::vector<std::string> encodings;
  std::vector<TopologyKind> topologies;
  std::string placement = "all";
  std::size_t restarts = 1000;
  std::uint64_t seed = 0;
  bool embed_fallback = false;
  bool dense_bound_corrected = false;
  bool best_compact_in_padding = false;
  std::size_t threads = 0;

  /// Throws ConfigError on empty lists, d < 2 or restarts < 1.
  void validate() const;
};

/// Parses `2-8`, `2,4,8` or a mix such as `2-4,16`.
[[nodiscard]] std::vector<std::size_t> parse_d_range(std::string_view text);

/**
 * Flat `key = value` configuration; `#` starts a comment. Keys: operators, d,
 * encodings, topologies, placement, restarts, seed, embed_fallback,
 * dense_bound_corrected, best_compact_in_padding, threads.
 */
[[nodiscard]] SweepConfig parse_sweep_config(std::string_view text);

struct SweepRow {
  RouteRecord record;
  std::string bounds;
  std::size_t best_padded_d = 0;
  std::size_t best_padded_total = 0;
};

[[nodiscard]] std::vector<SweepRow> run_sweep(const SweepConfig& config);

[[nodiscard]] std::string sweep_csv_header(const SweepConfig& config);
[[nodiscard]] std::string sweep_to_csv(const SweepConfig& config, const std::vector<SweepRow>& rows);
[[nodiscard]] std::string sweep_to_json(const SweepConfig& config, const std::vector<SweepRow>& rows);

}  // namespace quditmap::experiment
