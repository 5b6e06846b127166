#include "quditmap/operators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace quditmap {

namespace {

void require_levels(std::size_t d) {
  if (d < 2) throw std::domain_error("operators require d >= 2, got " + std::to_string(d));
}

}  // namespace

DLevelOperator::DLevelOperator(std::size_t d, std::string label) : d_(d), label_(std::move(label)) {
  require_levels(d);
}

Complex DLevelOperator::entry(std::size_t row, std::size_t col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Complex{} : it->second;
}

void DLevelOperator::add(std::size_t row, std::size_t col, Complex value) {
  if (row >= d_ || col >= d_) {
    throw std::out_of_range("operator index (" + std::to_string(row) + "," +
                            std::to_string(col) + ") outside d=" + std::to_string(d_));
  }
  Complex& slot = entries_[{row, col}];
  slot += value;
  if (std::abs(slot) <= kAmplitudeTolerance) entries_.erase({row, col});
}

bool DLevelOperator::is_hermitian(double tol) const {
  for (const auto& [idx, value] : entries_) {
    if (std::abs(value - std::conj(entry(idx.second, idx.first))) > tol) return false;
  }
  return true;
}

DLevelOperator DLevelOperator::adjoint() const {
  DLevelOperator out(d_, label_ + "^dag");
  for (const auto& [idx, value] : entries_) out.add(idx.second, idx.first, std::conj(value));
  return out;
}

DLevelOperator operator*(const DLevelOperator& a, const DLevelOperator& b) {
  if (a.d_ != b.d_) throw std::domain_error("operator product: dimension mismatch");
  DLevelOperator out(a.d_, a.label_ + "*" + b.label_);
  // Row-major walk of b keyed by its row index.
  std::vector<std::vector<std::pair<std::size_t, Complex>>> b_rows(b.d_);
  for (const auto& [idx, value] : b.entries_) b_rows[idx.first].emplace_back(idx.second, value);
  std::map<DLevelOperator::Index, Complex> acc;
  for (const auto& [idx, value] : a.entries_) {
    for (const auto& [col, bv] : b_rows[idx.second]) acc[{idx.first, col}] += value * bv;
  }
  for (const auto& [idx, value] : acc) {
    if (std::abs(value) > kAmplitudeTolerance) out.entries_.emplace(idx, value);
  }
  return out;
}

DLevelOperator operator+(const DLevelOperator& a, const DLevelOperator& b) {
  if (a.d_ != b.d_) throw std::domain_error("operator sum: dimension mismatch");
  DLevelOperator out = a;
  out.label_ = a.label_ + "+" + b.label_;
  for (const auto& [idx, value] : b.entries_) out.add(idx.first, idx.second, value);
  return out;
}

BandProfile band_profile(const DLevelOperator& op) {
  BandProfile bands;
  for (const auto& [idx, value] : op.entries()) {
    bands.insert(idx.first > idx.second ? idx.first - idx.second : idx.second - idx.first);
  }
  return bands;
}

DLevelOperator number_op(std::size_t d) {
  DLevelOperator op(d, "n");
  for (std::size_t l = 1; l < d; ++l) op.add(l, l, static_cast<double>(l));
  return op;
}

DLevelOperator creation_op(std::size_t d) {
  DLevelOperator op(d, "adag");
  for (std::size_t l = 0; l + 1 < d; ++l) op.add(l + 1, l, std::sqrt(static_cast<double>(l + 1)));
  return op;
}

DLevelOperator annihilation_op(std::size_t d) {
  DLevelOperator op(d, "a");
  for (std::size_t l = 0; l + 1 < d; ++l) op.add(l, l + 1, std::sqrt(static_cast<double>(l + 1)));
  return op;
}

DLevelOperator position_op(std::size_t d) {
  DLevelOperator op(d, "q");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t l = 0; l + 1 < d; ++l) {
    const double amp = std::sqrt(static_cast<double>(l + 1)) * inv_sqrt2;
    op.add(l, l + 1, amp);
    op.add(l + 1, l, amp);
  }
  return op;
}

DLevelOperator momentum_op(std::size_t d) {
  // p = i (a^dag - a) / sqrt 2
  DLevelOperator op(d, "p");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t l = 0; l + 1 < d; ++l) {
    const double amp = std::sqrt(static_cast<double>(l + 1)) * inv_sqrt2;
    op.add(l + 1, l, Complex(0.0, amp));
    op.add(l, l + 1, Complex(0.0, -amp));
  }
  return op;
}

DLevelOperator op_power(const DLevelOperator& op, std::size_t k) {
  if (k < 1) throw std::domain_error("op_power requires k >= 1");
  DLevelOperator result = op;
  for (std::size_t i = 1; i < k; ++i) result = result * op;
  DLevelOperator labelled(op.levels(), op.label() + "^" + std::to_string(k));
  for (const auto& [idx, value] : result.entries()) labelled.add(idx.first, idx.second, value);
  return labelled;
}

HopFactors hop_op(std::size_t d) { return {creation_op(d), annihilation_op(d)}; }

SpinOperators spin_ops(std::size_t two_s) {
  if (two_s < 1) throw std::domain_error("spin must be s >= 1/2");
  const std::size_t d = two_s + 1;
  const double s = static_cast<double>(two_s) / 2.0;
  SpinOperators ops{DLevelOperator(d, "sx"), DLevelOperator(d, "sy"), DLevelOperator(d, "sz")};
  for (std::size_t l = 0; l < d; ++l) {
    const double m = static_cast<double>(l) - s;
    ops.sz.add(l, l, m);
    if (l + 1 < d) {
      // <m+1| S+ |m> = sqrt(s(s+1) - m(m+1))
      const double raise = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
      ops.sx.add(l + 1, l, raise / 2.0);
      ops.sx.add(l, l + 1, raise / 2.0);
      ops.sy.add(l + 1, l, Complex(0.0, -raise / 2.0));
      ops.sy.add(l, l + 1, Complex(0.0, raise / 2.0));
    }
  }
  return ops;
}

TwoParticleOperator::TwoParticleOperator(std::string label, std::vector<Product> products)
    : label_(std::move(label)), products_(std::move(products)) {
  if (products_.empty()) throw std::domain_error("two-particle operator needs a product");
  const std::size_t d = products_.front().first.levels();
  for (const auto& p : products_) {
    if (p.first.levels() != d || p.second.levels() != d) {
      throw std::domain_error("two-particle operator factors must share d");
    }
  }
}

Complex TwoParticleOperator::entry(std::size_t row_a, std::size_t row_b, std::size_t col_a,
                                   std::size_t col_b) const {
  Complex total{};
  for (const auto& p : products_) total += p.first.entry(row_a, col_a) * p.second.entry(row_b, col_b);
  return total;
}

TwoParticleOperator two_particle(const DLevelOperator& a, const DLevelOperator& b) {
  if (a.levels() != b.levels()) throw std::domain_error("two_particle: dimension mismatch");
  return TwoParticleOperator(a.label() + "(x)" + b.label(), {{a, b}});
}

const std::vector<std::string>& operator_names() {
  static const std::vector<std::string> names = {"n",  "q",  "p",  "n2",  "q2",   "nn",   "qn",  "qq",
                                                 "hop", "sx", "sy", "sz", "sxsx", "szsz", "sxsz"};
  return names;
}

bool is_two_particle_name(std::string_view name) {
  return name == "nn" || name == "qn" || name == "qq" || name == "hop" || name == "sxsx" ||
         name == "szsz" || name == "sxsz";
}

RegistryOperator make_operator(std::string_view name, std::size_t d) {
  require_levels(d);
  auto relabel = [](DLevelOperator op, std::string_view label) {
    DLevelOperator out(op.levels(), std::string(label));
    for (const auto& [idx, value] : op.entries()) out.add(idx.first, idx.second, value);
    return out;
  };
  auto named_pair = [&](const DLevelOperator& a, const DLevelOperator& b) {
    return TwoParticleOperator(std::string(name), {{a, b}});
  };

  if (name == "n") return number_op(d);
  if (name == "q") return position_op(d);
  if (name == "p") return momentum_op(d);
  if (name == "n2") return relabel(op_power(number_op(d), 2), name);
  if (name == "q2") return relabel(op_power(position_op(d), 2), name);
  if (name == "nn") return named_pair(number_op(d), number_op(d));
  if (name == "qn") return named_pair(position_op(d), number_op(d));
  if (name == "qq") return named_pair(position_op(d), position_op(d));
  if (name == "hop") {
    const HopFactors f = hop_op(d);
    return TwoParticleOperator("hop", {{f.raise, f.lower}, {f.lower, f.raise}});
  }
  const SpinOperators spin = spin_ops(d - 1);
  if (name == "sx") return spin.sx;
  if (name == "sy") return spin.sy;
  if (name == "sz") return spin.sz;
  if (name == "sxsx") return named_pair(spin.sx, spin.sx);
  if (name == "szsz") return named_pair(spin.sz, spin.sz);
  if (name == "sxsz") return named_pair(spin.sx, spin.sz);
  throw std::invalid_argument("unknown operator '" + std::string(name) + "'");
}

}  // namespace quditmap
