#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quditmap/codes.hpp"
#include "quditmap/operators.hpp"

namespace quditmap::bounds {

// SWAP-count bounds for exponentiating encoded operators on a 1D line.
// Compact-code bounds are stated for d = 2^K; K is the qubit count per particle.

/// Reorder every qubit of a length-p string next to each other.
[[nodiscard]] double cluster_bound(std::size_t p, std::size_t k);
/// Walk one qubit out and back.
[[nodiscard]] double shuttle_bound(std::size_t p, std::size_t k);

/// Number of length-p strings from a real paired term |l><l'| + h.c. at Hamming distance h.
[[nodiscard]] double length_distribution(std::size_t p, std::size_t h, std::size_t k);

/// Shuttle bound summed over the length distribution of one paired term: 2^K (K - h) / 2.
[[nodiscard]] double single_term_bound(std::size_t h, std::size_t k);

/// Cluster bound over every {I, sigma} pattern of up to K qubits; 0 for K < 3.
[[nodiscard]] double all_strings_bound(std::size_t k);

/**
 * Lower bound for the all-strings case, from the half-weight patterns:
 * C(K, K/2) groups are needed, the initial line supplies K/2 + 1 and each
 * SWAP creates at most two more.
 */
[[nodiscard]] std::size_t all_strings_lower(std::size_t k);

/// all_strings_bound evaluated for two coupled K-qubit particles (2K qubits).
[[nodiscard]] double two_particle_all_bound(std::size_t k);
[[nodiscard]] std::size_t two_particle_lower(std::size_t k);

/// Concatenated residue classes mod w of 0..d-1 (0-indexed qubit order).
[[nodiscard]] std::vector<std::size_t> grouped_ordering(std::size_t w, std::size_t d);

/// Pairs i < j with order[i] > order[j]; equals the adjacent-SWAP distance to sorted order.
[[nodiscard]] std::size_t inversion_count(const std::vector<std::size_t>& order);

[[nodiscard]] double unary_inversion_bound(std::size_t w, std::size_t d);
[[nodiscard]] double unary_linear_bound(std::size_t w, std::size_t d);

/// Dense one-particle unary bound. `corrected` swaps the printed constant term 3/2 for 3d/2.
[[nodiscard]] double unary_dense_bound(std::size_t d, bool corrected = false);

enum class TwoParticleKind { DiagDiag, Banded1, BandedWide };

[[nodiscard]] double unary_two_particle_bound(TwoParticleKind kind, std::size_t w, std::size_t d);

struct BoundReport {
  std::string operator_label;
  std::string encoding;
  std::size_t d = 0;
  std::size_t qubits_per_particle = 0;
  bool two_particle = false;
  /// Compact bounds evaluated with K = ceil(log2 d) for d not a power of two.
  bool extrapolated = false;
  std::vector<std::size_t> bands;
  std::map<std::string, double> values;
  std::map<std::string, double> metadata;

  [[nodiscard]] std::string to_json() const;
};

struct ReportOptions {
  bool dense_corrected = false;
};

/// Evaluates every bound applicable to `op` under `scheme`.
[[nodiscard]] BoundReport report(const RegistryOperator& op, const EncodingScheme& scheme,
                                 const ReportOptions& options = {});

}  // namespace quditmap::bounds
