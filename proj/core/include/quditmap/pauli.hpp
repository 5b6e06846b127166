#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "quditmap/codes.hpp"
#include "quditmap/operators.hpp"

namespace quditmap {

/// Pauli weights at or below this magnitude are dropped by simplify().
inline constexpr double kPauliTolerance = 1e-12;

/**
 * @brief Weighted tensor product of I/X/Y/Z.
 *
 * `axes[i]` is the factor on qubit i, one of 'I', 'X', 'Y', 'Z'. The text
 * form prints qubit 0 first.
 */
struct PauliString {
  Complex weight;
  std::string axes;

  [[nodiscard]] std::size_t width() const { return axes.size(); }
  /// Number of non-identity factors.
  [[nodiscard]] std::size_t length() const;
  /// Qubits carrying a non-identity factor, ascending.
  [[nodiscard]] std::vector<std::size_t> support() const;
};

class PauliSum {
public:
  explicit PauliSum(std::size_t width = 0) : width_(width) {}
  PauliSum(std::size_t width, std::vector<PauliString> terms);

  [[nodiscard]] std::size_t width() const { return width_; }
  [[nodiscard]] const std::vector<PauliString>& terms() const { return terms_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  void add(PauliString term);
  void append(const PauliSum& other);
  void scale(Complex factor);

  /// `<weight> <axes>` per line, real part of the weight only.
  [[nodiscard]] std::string to_text() const;
  static PauliSum from_text(std::string_view text);

private:
  std::size_t width_;
  std::vector<PauliString> terms_;
};

/// Merges identical axes, drops |weight| <= tol, orders by axes.
[[nodiscard]] PauliSum simplify(const PauliSum& sum, double tol = kPauliTolerance);

/// Tensor product with `b` placed on the qubits after `a`.
[[nodiscard]] PauliSum tensor(const PauliSum& a, const PauliSum& b);

/// Pauli expansion of |enc(row)><enc(col)| restricted to C(row) u C(col).
[[nodiscard]] PauliSum map_entry(std::size_t row, std::size_t col, const EncodingScheme& scheme);

[[nodiscard]] PauliSum encode_operator(const DLevelOperator& op, const EncodingScheme& scheme);

/// Particle A on qubits [0, N), particle B on [N, 2N).
[[nodiscard]] PauliSum encode_two_particle(const DLevelOperator& a, const DLevelOperator& b,
                                           const EncodingScheme& scheme);
[[nodiscard]] PauliSum encode_two_particle(const TwoParticleOperator& op,
                                           const EncodingScheme& scheme);
[[nodiscard]] PauliSum encode(const RegistryOperator& op, const EncodingScheme& scheme);

/// Count of strings per length p.
[[nodiscard]] std::map<std::size_t, std::size_t> length_histogram(const PauliSum& sum);

[[nodiscard]] std::size_t max_length(const PauliSum& sum);

}  // namespace quditmap
