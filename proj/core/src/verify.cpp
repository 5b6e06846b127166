#include "quditmap/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace quditmap::verify {

namespace {

// A Pauli string as bit masks: flip = X|Y, sign = Y|Z, plus i^(#Y) * weight.
struct MaskedString {
  std::uint64_t flip = 0;
  std::uint64_t sign = 0;
  Amplitude coefficient;
};

Amplitude i_power(std::size_t n) {
  switch (n % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

MaskedString mask(const PauliString& s) {
  if (s.axes.size() > 64) throw std::domain_error("verify: Pauli strings wider than 64 qubits");
  MaskedString m;
  std::size_t y_count = 0;
  for (std::size_t q = 0; q < s.axes.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (s.axes[q]) {
      case 'X': m.flip |= bit; break;
      case 'Y':
        m.flip |= bit;
        m.sign |= bit;
        ++y_count;
        break;
      case 'Z': m.sign |= bit; break;
      default: break;
    }
  }
  m.coefficient = Amplitude{s.weight.real(), s.weight.imag()} * i_power(y_count);
  return m;
}

Amplitude masked_element(const MaskedString& m, std::uint64_t col) {
  const bool negative = (std::popcount(col & m.sign) % 2) != 0;
  return negative ? Amplitude{-m.coefficient.re, -m.coefficient.im} : m.coefficient;
}

class MaskedSum {
public:
  explicit MaskedSum(const PauliSum& sum) {
    for (const auto& t : sum.terms()) {
      const MaskedString m = mask(t);
      by_flip_[m.flip].push_back(m);
    }
  }

  [[nodiscard]] Amplitude element(std::uint64_t row, std::uint64_t col) const {
    Amplitude total;
    auto it = by_flip_.find(row ^ col);
    if (it == by_flip_.end()) return total;
    for (const auto& m : it->second) total += masked_element(m, col);
    return total;
  }

private:
  std::unordered_map<std::uint64_t, std::vector<MaskedString>> by_flip_;
};

double deviation(Amplitude a, std::complex<double> b) {
  return std::hypot(a.re - b.real(), a.im - b.imag());
}

std::uint64_t concat_codeword(const EncodingScheme& scheme, std::size_t level_a, std::size_t level_b) {
  return scheme.encode(level_a).bits() | (scheme.encode(level_b).bits() << scheme.qubit_count());
}

using State = std::vector<Amplitude>;

void apply_single(State& state, std::size_t q, const Amplitude (&u)[2][2]) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if ((i & bit) != 0) continue;
    const Amplitude a0 = state[i];
    const Amplitude a1 = state[i | bit];
    state[i] = u[0][0] * a0 + u[0][1] * a1;
    state[i | bit] = u[1][0] * a0 + u[1][1] * a1;
  }
}

void apply_gate(State& state, const Gate& g) {
  const double half = g.angle / 2.0;
  const double c = std::cos(half);
  const double s = std::sin(half);
  switch (g.kind) {
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      const Amplitude u[2][2] = {{{r, 0}, {r, 0}}, {{r, 0}, {-r, 0}}};
      apply_single(state, g.control, u);
      break;
    }
    case GateKind::RX: {
      const Amplitude u[2][2] = {{{c, 0}, {0, -s}}, {{0, -s}, {c, 0}}};
      apply_single(state, g.control, u);
      break;
    }
    case GateKind::RY: {
      const Amplitude u[2][2] = {{{c, 0}, {-s, 0}}, {{s, 0}, {c, 0}}};
      apply_single(state, g.control, u);
      break;
    }
    case GateKind::RZ: {
      const Amplitude u[2][2] = {{{c, -s}, {0, 0}}, {{0, 0}, {c, s}}};
      apply_single(state, g.control, u);
      break;
    }
    case GateKind::CNOT: {
      const std::size_t cb = std::size_t{1} << g.control;
      const std::size_t tb = std::size_t{1} << g.target;
      for (std::size_t i = 0; i < state.size(); ++i) {
        if ((i & cb) != 0 && (i & tb) == 0) std::swap(state[i], state[i | tb]);
      }
      break;
    }
    case GateKind::SWAP: {
      const std::size_t ab = std::size_t{1} << g.control;
      const std::size_t bb = std::size_t{1} << g.target;
      for (std::size_t i = 0; i < state.size(); ++i) {
        if ((i & ab) != 0 && (i & bb) == 0) std::swap(state[i], state[(i ^ ab) | bb]);
      }
      break;
    }
  }
}

State simulate(const Circuit& c, std::size_t width, std::uint64_t basis) {
  State state(std::size_t{1} << width);
  state[basis] = {1.0, 0.0};
  for (const Gate& g : c.gates()) apply_gate(state, g);
  return state;
}

std::uint64_t scatter(std::uint64_t program_bits, const Placement& placement) {
  std::uint64_t out = 0;
  for (std::size_t p = 0; p < placement.size(); ++p) {
    if ((program_bits >> p) & 1U) out |= std::uint64_t{1} << placement.physical(p);
  }
  return out;
}

}  // namespace

double Amplitude::norm() const { return std::hypot(re, im); }

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = {1.0, 0.0};
  return m;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c).conj();
  }
  return out;
}

DenseMatrix DenseMatrix::scaled(Amplitude factor) const {
  DenseMatrix out(dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * factor;
  return out;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim_ != b.dim_) throw std::domain_error("matrix product dimension mismatch");
  const std::size_t n = a.dim_;
  DenseMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Amplitude ark = a(r, k);
      if (ark.re == 0.0 && ark.im == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim_ != b.dim_) throw std::domain_error("matrix sum dimension mismatch");
  DenseMatrix out(a.dim_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
  return out;
}

double DenseMatrix::max_abs_diff(const DenseMatrix& other) const {
  if (dim_ != other.dim_) throw std::domain_error("matrix comparison dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) worst = std::max(worst, (data_[i] - other.data_[i]).norm());
  return worst;
}

bool DenseMatrix::is_hermitian(double tol) const { return max_abs_diff(adjoint()) <= tol; }

DenseMatrix pauli_sum_to_matrix(const PauliSum& sum) {
  if (sum.width() > kMaxMatrixWidth) {
    throw std::domain_error("pauli_sum_to_matrix: width " + std::to_string(sum.width()) + " exceeds cap");
  }
  const std::size_t dim = std::size_t{1} << sum.width();
  DenseMatrix m(dim);
  for (const auto& t : sum.terms()) {
    const MaskedString ms = mask(t);
    for (std::uint64_t col = 0; col < dim; ++col) m(col ^ ms.flip, col) += masked_element(ms, col);
  }
  return m;
}

Amplitude pauli_sum_element(const PauliSum& sum, std::uint64_t row, std::uint64_t col) {
  Amplitude total;
  for (const auto& t : sum.terms()) {
    const MaskedString ms = mask(t);
    if ((row ^ col) == ms.flip) total += masked_element(ms, col);
  }
  return total;
}

CheckResult code_subspace_check(const DLevelOperator& op, const EncodingScheme& scheme, const PauliSum& sum,
                                double tol) {
  if (sum.width() != scheme.qubit_count()) throw std::domain_error("code_subspace_check: register width mismatch");
  const MaskedSum masked(sum);
  CheckResult result{true, 0.0};
  for (std::size_t r = 0; r < op.levels(); ++r) {
    for (std::size_t c = 0; c < op.levels(); ++c) {
      const Amplitude got = masked.element(scheme.encode(r).bits(), scheme.encode(c).bits());
      result.max_deviation = std::max(result.max_deviation, deviation(got, op.entry(r, c)));
    }
  }
  result.pass = result.max_deviation < tol;
  return result;
}

CheckResult code_subspace_check(const TwoParticleOperator& op, const EncodingScheme& scheme,
                                const PauliSum& sum, double tol) {
  if (sum.width() != 2 * scheme.qubit_count()) {
    throw std::domain_error("code_subspace_check: register width mismatch");
  }
  const MaskedSum masked(sum);
  const std::size_t d = op.levels();
  CheckResult result{true, 0.0};
  for (std::size_t ra = 0; ra < d; ++ra) {
    for (std::size_t rb = 0; rb < d; ++rb) {
      const std::uint64_t row = concat_codeword(scheme, ra, rb);
      for (std::size_t ca = 0; ca < d; ++ca) {
        for (std::size_t cb = 0; cb < d; ++cb) {
          const Amplitude got = masked.element(row, concat_codeword(scheme, ca, cb));
          result.max_deviation = std::max(result.max_deviation, deviation(got, op.entry(ra, rb, ca, cb)));
        }
      }
    }
  }
  result.pass = result.max_deviation < tol;
  return result;
}

CheckResult code_subspace_check(const RegistryOperator& op, const EncodingScheme& scheme, const PauliSum& sum,
                                double tol) {
  if (const auto* one = std::get_if<DLevelOperator>(&op)) return code_subspace_check(*one, scheme, sum, tol);
  return code_subspace_check(std::get<TwoParticleOperator>(op), scheme, sum, tol);
}

DenseMatrix circuit_to_unitary(const Circuit& c) {
  if (c.width() > kMaxUnitaryWidth) {
    throw std::domain_error("circuit_to_unitary: width " + std::to_string(c.width()) + " exceeds cap");
  }
  const std::size_t dim = std::size_t{1} << c.width();
  DenseMatrix u(dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    const State column = simulate(c, c.width(), col);
    for (std::size_t r = 0; r < dim; ++r) u(r, col) = column[r];
  }
  return u;
}

DenseMatrix matrix_exponential(const DenseMatrix& m, Amplitude factor) {
  const DenseMatrix a = m.scaled(factor);
  double norm = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    double row = 0.0;
    for (std::size_t c = 0; c < a.dim(); ++c) row += a(r, c).norm();
    norm = std::max(norm, row);
  }
  int squarings = 0;
  while (norm > 0.25) {
    norm /= 2.0;
    ++squarings;
  }
  const DenseMatrix scaled = a.scaled({std::ldexp(1.0, -squarings), 0.0});
  DenseMatrix result = DenseMatrix::identity(a.dim());
  DenseMatrix term = DenseMatrix::identity(a.dim());
  for (int k = 1; k <= 24; ++k) {
    term = (term * scaled).scaled({1.0 / k, 0.0});
    result = result + term;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

CheckResult equal_up_to_phase(const DenseMatrix& actual, const DenseMatrix& expected, double tol) {
  if (actual.dim() != expected.dim()) return {false, INFINITY};
  std::size_t pr = 0;
  std::size_t pc = 0;
  double largest = -1.0;
  for (std::size_t r = 0; r < expected.dim(); ++r) {
    for (std::size_t c = 0; c < expected.dim(); ++c) {
      if (expected(r, c).norm() > largest) {
        largest = expected(r, c).norm();
        pr = r;
        pc = c;
      }
    }
  }
  Amplitude phase{1.0, 0.0};
  const Amplitude a = actual(pr, pc);
  if (a.norm() > 0.0 && largest > 0.0) {
    const Amplitude ratio = a * expected(pr, pc).conj();
    const double n = ratio.norm();
    phase = {ratio.re / n, ratio.im / n};
  }
  const double dev = actual.max_abs_diff(expected.scaled(phase));
  return {dev <= tol, dev};
}

CheckResult routed_equivalence(const Circuit& original, const RouteResult& result, const Placement& initial,
                               double tol) {
  const std::size_t program = original.width();
  const std::size_t nodes = result.routed.width();
  if (program > kMaxUnitaryWidth || nodes > kMaxUnitaryWidth) {
    throw std::domain_error("routed_equivalence: register exceeds unitary cap");
  }
  if (initial.size() < program || result.final_placement.size() < program) {
    throw std::invalid_argument("routed_equivalence: placement narrower than circuit");
  }
  const std::size_t inputs = std::size_t{1} << program;
  const std::size_t dim = std::size_t{1} << nodes;

  // Columns indexed by program input; rows by node basis state. Padded square for phase alignment.
  DenseMatrix actual(dim);
  DenseMatrix expected(dim);
  for (std::uint64_t x = 0; x < inputs; ++x) {
    const State routed = simulate(result.routed, nodes, scatter(x, initial));
    const State logical = simulate(original, program, x);
    for (std::size_t r = 0; r < dim; ++r) actual(r, x) = routed[r];
    for (std::uint64_t y = 0; y < inputs; ++y) {
      expected(scatter(y, result.final_placement), x) += logical[y];
    }
  }
  return equal_up_to_phase(actual, expected, tol);
}

}  // namespace quditmap::verify
