#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "quditmap/circuit.hpp"
#include "quditmap/codes.hpp"
#include "quditmap/operators.hpp"
#include "quditmap/pauli.hpp"
#include "quditmap/router.hpp"

// Independent numerical oracles. Arithmetic here uses its own pair-of-reals
// amplitude type and never calls back into the encoding or routing code.
namespace quditmap::verify {

struct Amplitude {
  double re = 0.0;
  double im = 0.0;

  friend Amplitude operator+(Amplitude a, Amplitude b) { return {a.re + b.re, a.im + b.im}; }
  friend Amplitude operator-(Amplitude a, Amplitude b) { return {a.re - b.re, a.im - b.im}; }
  friend Amplitude operator*(Amplitude a, Amplitude b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Amplitude& operator+=(Amplitude b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  [[nodiscard]] Amplitude conj() const { return {re, -im}; }
  [[nodiscard]] double norm() const;
};

/// Square complex matrix, row-major; basis index bit i is qubit i.
class DenseMatrix {
public:
  explicit DenseMatrix(std::size_t dim = 0) : dim_(dim), data_(dim * dim) {}
  static DenseMatrix identity(std::size_t dim);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  Amplitude& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  [[nodiscard]] Amplitude operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  [[nodiscard]] DenseMatrix adjoint() const;
  [[nodiscard]] DenseMatrix scaled(Amplitude factor) const;
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);

  [[nodiscard]] double max_abs_diff(const DenseMatrix& other) const;
  [[nodiscard]] bool is_hermitian(double tol) const;

private:
  std::size_t dim_;
  std::vector<Amplitude> data_;
};

inline constexpr std::size_t kMaxMatrixWidth = 12;
inline constexpr std::size_t kMaxUnitaryWidth = 10;

/// Dense matrix of a Pauli sum; width capped at kMaxMatrixWidth.
[[nodiscard]] DenseMatrix pauli_sum_to_matrix(const PauliSum& sum);

/// Single element <row| sum |col> without building the matrix.
[[nodiscard]] Amplitude pauli_sum_element(const PauliSum& sum, std::uint64_t row, std::uint64_t col);

struct CheckResult {
  bool pass = false;
  double max_deviation = 0.0;
};

/// Compares <enc(l)| M |enc(l')> with op(l, l') for all level pairs.
[[nodiscard]] CheckResult code_subspace_check(const DLevelOperator& op, const EncodingScheme& scheme,
                                              const PauliSum& sum, double tol = 1e-10);
/// Two-particle form; particle B's codeword sits above particle A's.
[[nodiscard]] CheckResult code_subspace_check(const TwoParticleOperator& op, const EncodingScheme& scheme,
                                              const PauliSum& sum, double tol = 1e-10);
[[nodiscard]] CheckResult code_subspace_check(const RegistryOperator& op, const EncodingScheme& scheme,
                                              const PauliSum& sum, double tol = 1e-10);

/// Product of gate matrices in circuit order; width capped at kMaxUnitaryWidth.
[[nodiscard]] DenseMatrix circuit_to_unitary(const Circuit& c);

/// exp(factor * m) by scaling and squaring of a truncated Taylor series.
[[nodiscard]] DenseMatrix matrix_exponential(const DenseMatrix& m, Amplitude factor);

/// Max deviation after aligning global phase on the largest-magnitude entry of `expected`.
[[nodiscard]] CheckResult equal_up_to_phase(const DenseMatrix& actual, const DenseMatrix& expected,
                                            double tol);

/**
 * Checks that the routed circuit acts like the original once program qubits
 * are read through the initial placement on input and the final placement on
 * output. Spare nodes start in |0>.
 */
[[nodiscard]] CheckResult routed_equivalence(const Circuit& original, const RouteResult& result,
                                             const Placement& initial, double tol = 1e-9);

}  // namespace quditmap::verify
