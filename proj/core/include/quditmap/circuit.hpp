#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "quditmap/pauli.hpp"

namespace quditmap {

enum class GateKind { H, RX, RY, RZ, CNOT, SWAP };

[[nodiscard]] std::string_view to_string(GateKind kind);
[[nodiscard]] bool is_two_qubit(GateKind kind);
[[nodiscard]] bool has_angle(GateKind kind);

/// Single gate; `target` is unused for one-qubit gates. CNOT controls `control`.
struct Gate {
  GateKind kind;
  std::size_t control;
  std::size_t target = 0;
  double angle = 0.0;

  static Gate h(std::size_t q) { return {GateKind::H, q}; }
  static Gate rx(std::size_t q, double a) { return {GateKind::RX, q, 0, a}; }
  static Gate ry(std::size_t q, double a) { return {GateKind::RY, q, 0, a}; }
  static Gate rz(std::size_t q, double a) { return {GateKind::RZ, q, 0, a}; }
  static Gate cnot(std::size_t c, std::size_t t) { return {GateKind::CNOT, c, t}; }
  static Gate swap(std::size_t a, std::size_t b) { return {GateKind::SWAP, a, b}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
public:
  explicit Circuit(std::size_t width = 0) : width_(width) {}

  [[nodiscard]] std::size_t width() const { return width_; }
  [[nodiscard]] const std::vector<Gate>& gates() const { return gates_; }
  [[nodiscard]] bool empty() const { return gates_.empty(); }

  /// Validates operands against the register before appending.
  void push(const Gate& gate);
  void append(const Circuit& other);

  /**
   * Text form: a `qubits N` header, then one gate per line such as
   * `CNOT q3 q4` or `RZ q2 0.785398`. Angles use the shortest decimal that
   * parses back to the same double, so parse(to_text()) is exact.
   */
  [[nodiscard]] std::string to_text() const;
  static Circuit parse(std::string_view text);

  friend bool operator==(const Circuit&, const Circuit&) = default;

private:
  std::size_t width_;
  std::vector<Gate> gates_;
};

[[nodiscard]] std::size_t cnot_count(const Circuit& c);
[[nodiscard]] std::size_t swap_count(const Circuit& c);
/// CNOT + SWAP; a SWAP is one two-qubit gate.
[[nodiscard]] std::size_t two_qubit_count(const Circuit& c);

/// One Suzuki-Trotter step: tau / eta per term. The eta repetitions are left to callers.
struct TrotterParams {
  double tau = 1.0;
  std::size_t eta = 1;

  [[nodiscard]] double step_angle() const;
};

/// Thrown when a term's weight has a non-negligible imaginary part.
class InvalidTerm : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/**
 * CNOT-staircase circuit for exp(-i * angle * weight * P) on `term`'s register.
 *
 * X factors are rotated with H and Y factors with RX(pi/2) ... RX(-pi/2); the
 * CNOT chain runs over the support in ascending qubit order and RZ lands on
 * the highest qubit. Identity strings produce an empty circuit.
 */
[[nodiscard]] Circuit exponentiate_string(const PauliString& term, double angle,
                                          double tol = 1e-9);

/// Terms grouped by support (groups in lexicographic support order), then by axes.
[[nodiscard]] std::vector<PauliString> trotter_order(const PauliSum& sum);

[[nodiscard]] Circuit synthesize(const PauliSum& sum, const TrotterParams& params);

/// Sum over terms with p >= 2 of 2(p - 1).
[[nodiscard]] std::size_t staircase_cnot_count(const PauliSum& sum);

}  // namespace quditmap
