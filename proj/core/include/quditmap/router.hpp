#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quditmap/circuit.hpp"
#include "quditmap/topology.hpp"

namespace quditmap {

/// Raised when a two-qubit gate cannot be brought onto an edge.
class Unroutable : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RouteResult {
  std::size_t swaps = 0;
  /// Original gates plus inserted SWAPs, operands rewritten to physical nodes.
  Circuit routed;
  Placement initial;
  Placement final_placement;
  std::uint64_t seed = 0;
  /// Which candidate produced the result: identity, hsnake, vsnake or line-embed.
  std::string placement_label;
};

/**
 * Routes `circuit` in program order with the greedy stochastic SWAP policy.
 *
 * For every two-qubit gate whose operands are not adjacent, each topology
 * edge is scored by how much its SWAP would shrink the distance between the
 * two operands; one of the best strictly positive candidates is applied at
 * random until the operands touch. Randomness comes from std::mt19937_64
 * seeded with `seed`.
 */
[[nodiscard]] RouteResult route_once(const Circuit& circuit, const Topology& topology,
                                     const Placement& initial, std::uint64_t seed);

struct RouteOptions {
  std::size_t restarts = 1000;
  std::uint64_t base_seed = 0;
  /// Adds the line schedule, embedded along the horizontal snake, as a
  /// candidate on ladder and grid hosts.
  bool embed_fallback = false;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 0;
};

struct LabelledPlacement {
  Placement placement;
  std::string label;
};

/**
 * Minimum-SWAP result over placements x restarts. Restart i runs with seed
 * base_seed + i; ties go to the lowest (placement, restart) index, so the
 * answer does not depend on thread scheduling.
 */
[[nodiscard]] RouteResult route_best(const Circuit& circuit, const Topology& topology,
                                     const std::vector<LabelledPlacement>& placements,
                                     const RouteOptions& options);

/// Placements the sweep tries for a host: identity on line/full, both snakes otherwise.
[[nodiscard]] std::vector<LabelledPlacement> default_placements(const Topology& topology);

/**
 * Exact minimum SWAP count by 0-1 breadth-first search over (next gate,
 * occupancy) states. Returns std::nullopt once more than `budget` states are
 * expanded.
 */
[[nodiscard]] std::optional<RouteResult> optimal_route(const Circuit& circuit,
                                                       const Topology& topology,
                                                       const Placement& initial,
                                                       std::size_t budget = 1'000'000);

/// True when every two-qubit gate of `routed` sits on a topology edge.
[[nodiscard]] bool respects_topology(const Circuit& routed, const Topology& topology);

}  // namespace quditmap
