#include "quditmap/pauli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace quditmap {

namespace {

// |x><x'| on one qubit as (coefficient, axis) pairs.
struct Projector {
  Complex c0;
  char a0;
  Complex c1;
  char a1;
};

Projector single_qubit(bool ket_bit, bool bra_bit) {
  const Complex half(0.5, 0.0);
  const Complex half_i(0.0, 0.5);
  if (!ket_bit && !bra_bit) return {half, 'I', half, 'Z'};    // |0><0| = (I + Z)/2
  if (ket_bit && bra_bit) return {half, 'I', -half, 'Z'};     // |1><1| = (I - Z)/2
  if (!ket_bit && bra_bit) return {half, 'X', half_i, 'Y'};   // |0><1| = (X + iY)/2
  return {half, 'X', -half_i, 'Y'};                           // |1><0| = (X - iY)/2
}

std::vector<std::size_t> merged_subset(const EncodingScheme& scheme, std::size_t row,
                                       std::size_t col) {
  std::vector<std::size_t> a = scheme.bitmask_subset(row);
  const std::vector<std::size_t> b = scheme.bitmask_subset(col);
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

std::size_t PauliString::length() const {
  return static_cast<std::size_t>(std::count_if(axes.begin(), axes.end(), [](char c) { return c != 'I'; }));
}

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (axes[i] != 'I') out.push_back(i);
  }
  return out;
}

PauliSum::PauliSum(std::size_t width, std::vector<PauliString> terms) : width_(width) {
  for (auto& t : terms) add(std::move(t));
}

void PauliSum::add(PauliString term) {
  if (term.axes.size() != width_) {
    throw std::domain_error("Pauli string width " + std::to_string(term.axes.size()) +
                            " does not match register width " + std::to_string(width_));
  }
  for (char c : term.axes) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw std::invalid_argument("invalid Pauli axis '" + std::string(1, c) + "'");
    }
  }
  terms_.push_back(std::move(term));
}

void PauliSum::append(const PauliSum& other) {
  for (const auto& t : other.terms_) add(t);
}

void PauliSum::scale(Complex factor) {
  for (auto& t : terms_) t.weight *= factor;
}

std::string PauliSum::to_text() const {
  std::ostringstream out;
  out << std::setprecision(17);
  for (const auto& t : terms_) out << t.weight.real() << ' ' << t.axes << '\n';
  return out.str();
}

PauliSum PauliSum::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<PauliString> terms;
  std::size_t width = 0;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    double weight = 0.0;
    std::string axes;
    if (!(fields >> weight >> axes)) throw std::invalid_argument("malformed Pauli line: " + line);
    if (first) {
      width = axes.size();
      first = false;
    }
    terms.push_back({Complex(weight, 0.0), axes});
  }
  return PauliSum(width, std::move(terms));
}

PauliSum simplify(const PauliSum& sum, double tol) {
  std::map<std::string, Complex> merged;
  for (const auto& t : sum.terms()) merged[t.axes] += t.weight;
  PauliSum out(sum.width());
  for (auto& [axes, weight] : merged) {
    if (std::abs(weight) > tol) out.add({weight, axes});
  }
  return out;
}

PauliSum tensor(const PauliSum& a, const PauliSum& b) {
  PauliSum out(a.width() + b.width());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) out.add({ta.weight * tb.weight, ta.axes + tb.axes});
  }
  return out;
}

PauliSum map_entry(std::size_t row, std::size_t col, const EncodingScheme& scheme) {
  const BitString ket = scheme.encode(row);
  const BitString bra = scheme.encode(col);
  const std::size_t width = scheme.qubit_count();

  std::vector<PauliString> terms{{Complex(1.0, 0.0), std::string(width, 'I')}};
  for (std::size_t q : merged_subset(scheme, row, col)) {
    const Projector proj = single_qubit(ket.test(q), bra.test(q));
    std::vector<PauliString> next;
    next.reserve(terms.size() * 2);
    for (const auto& t : terms) {
      PauliString s0 = t;
      s0.weight *= proj.c0;
      s0.axes[q] = proj.a0;
      PauliString s1 = t;
      s1.weight *= proj.c1;
      s1.axes[q] = proj.a1;
      next.push_back(std::move(s0));
      next.push_back(std::move(s1));
    }
    terms = std::move(next);
  }
  return PauliSum(width, std::move(terms));
}

PauliSum encode_operator(const DLevelOperator& op, const EncodingScheme& scheme) {
  if (op.levels() != scheme.levels()) {
    throw std::domain_error("encode_operator: operator d=" + std::to_string(op.levels()) +
                            " but encoding d=" + std::to_string(scheme.levels()));
  }
  PauliSum acc(scheme.qubit_count());
  for (const auto& [idx, value] : op.entries()) {
    PauliSum term = map_entry(idx.first, idx.second, scheme);
    term.scale(value);
    acc.append(term);
  }
  return simplify(acc);
}

PauliSum encode_two_particle(const DLevelOperator& a, const DLevelOperator& b,
                             const EncodingScheme& scheme) {
  return encode_two_particle(two_particle(a, b), scheme);
}

PauliSum encode_two_particle(const TwoParticleOperator& op, const EncodingScheme& scheme) {
  if (op.levels() != scheme.levels()) {
    throw std::domain_error("encode_two_particle: operator d=" + std::to_string(op.levels()) +
                            " but encoding d=" + std::to_string(scheme.levels()));
  }
  PauliSum acc(2 * scheme.qubit_count());
  for (const auto& product : op.products()) {
    acc.append(tensor(encode_operator(product.first, scheme), encode_operator(product.second, scheme)));
  }
  return simplify(acc);
}

PauliSum encode(const RegistryOperator& op, const EncodingScheme& scheme) {
  if (const auto* one = std::get_if<DLevelOperator>(&op)) return encode_operator(*one, scheme);
  return encode_two_particle(std::get<TwoParticleOperator>(op), scheme);
}

std::map<std::size_t, std::size_t> length_histogram(const PauliSum& sum) {
  std::map<std::size_t, std::size_t> hist;
  for (const auto& t : sum.terms()) ++hist[t.length()];
  return hist;
}

std::size_t max_length(const PauliSum& sum) {
  std::size_t best = 0;
  for (const auto& t : sum.terms()) best = std::max(best, t.length());
  return best;
}

}  // namespace quditmap
