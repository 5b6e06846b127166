#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace quditmap {

using Complex = std::complex<double>;

/// Uniform zero-detection tolerance for operator amplitudes.
inline constexpr double kAmplitudeTolerance = 1e-12;

/**
 * @brief Sparse d x d complex matrix acting on one d-level particle.
 *
 * Entries are keyed by (row, column) in the number (or S_z) basis. Entries
 * with magnitude at or below kAmplitudeTolerance are never stored.
 */
class DLevelOperator {
public:
  using Index = std::pair<std::size_t, std::size_t>;

  DLevelOperator(std::size_t d, std::string label);

  [[nodiscard]] std::size_t levels() const { return d_; }
  [[nodiscard]] const std::string& label() const { return label_; }
  [[nodiscard]] const std::map<Index, Complex>& entries() const { return entries_; }
  [[nodiscard]] Complex entry(std::size_t row, std::size_t col) const;

  /// Adds `value` to entry (row, col); drops the entry if it cancels to zero.
  void add(std::size_t row, std::size_t col, Complex value);

  [[nodiscard]] bool is_hermitian(double tol = kAmplitudeTolerance) const;
  [[nodiscard]] DLevelOperator adjoint() const;

  /// Matrix product of two operators already truncated at the same d.
  friend DLevelOperator operator*(const DLevelOperator& a, const DLevelOperator& b);
  friend DLevelOperator operator+(const DLevelOperator& a, const DLevelOperator& b);

private:
  std::size_t d_;
  std::string label_;
  std::map<Index, Complex> entries_;
};

/// Occupied bands w = |l - l'|.
using BandProfile = std::set<std::size_t>;

[[nodiscard]] BandProfile band_profile(const DLevelOperator& op);

[[nodiscard]] DLevelOperator number_op(std::size_t d);
[[nodiscard]] DLevelOperator position_op(std::size_t d);
[[nodiscard]] DLevelOperator momentum_op(std::size_t d);
[[nodiscard]] DLevelOperator creation_op(std::size_t d);
[[nodiscard]] DLevelOperator annihilation_op(std::size_t d);

/// Power of an operator computed as a product of truncated matrices.
[[nodiscard]] DLevelOperator op_power(const DLevelOperator& op, std::size_t k);

struct HopFactors {
  DLevelOperator raise;  // a^dagger
  DLevelOperator lower;  // a
};
[[nodiscard]] HopFactors hop_op(std::size_t d);

struct SpinOperators {
  DLevelOperator sx;
  DLevelOperator sy;
  DLevelOperator sz;
};

/**
 * Spin operators for spin s = two_s / 2, with d = two_s + 1. Level l carries
 * magnetic quantum number m = l - s.
 */
[[nodiscard]] SpinOperators spin_ops(std::size_t two_s);

/**
 * @brief Sum of products opA (x) opB on two particles, kept in factored form.
 *
 * Particle A is the first factor of every product. A single product is the
 * usual case; a^dagger (x) a + a (x) a^dagger needs two.
 */
class TwoParticleOperator {
public:
  struct Product {
    DLevelOperator first;
    DLevelOperator second;
  };

  TwoParticleOperator(std::string label, std::vector<Product> products);

  [[nodiscard]] const std::string& label() const { return label_; }
  [[nodiscard]] std::size_t levels() const { return products_.front().first.levels(); }
  [[nodiscard]] const std::vector<Product>& products() const { return products_; }

  /// Matrix element <la, lb| O |la', lb'>.
  [[nodiscard]] Complex entry(std::size_t row_a, std::size_t row_b, std::size_t col_a,
                              std::size_t col_b) const;

private:
  std::string label_;
  std::vector<Product> products_;
};

[[nodiscard]] TwoParticleOperator two_particle(const DLevelOperator& a, const DLevelOperator& b);

using RegistryOperator = std::variant<DLevelOperator, TwoParticleOperator>;

/// Names accepted by make_operator().
[[nodiscard]] const std::vector<std::string>& operator_names();
[[nodiscard]] bool is_two_particle_name(std::string_view name);

/**
 * Builds a named operator truncated at d. Spin operators (sx, sy, sz and their
 * products) use s = (d - 1) / 2.
 */
[[nodiscard]] RegistryOperator make_operator(std::string_view name, std::size_t d);

}  // namespace quditmap
