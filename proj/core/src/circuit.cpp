#include "quditmap/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace quditmap {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
  }
  return "?";
}

bool is_two_qubit(GateKind kind) { return kind == GateKind::CNOT || kind == GateKind::SWAP; }

bool has_angle(GateKind kind) {
  return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

void Circuit::push(const Gate& gate) {
  if (gate.control >= width_ || (is_two_qubit(gate.kind) && gate.target >= width_)) {
    throw std::out_of_range(std::string(to_string(gate.kind)) + " operand outside " +
                            std::to_string(width_) + "-qubit register");
  }
  if (is_two_qubit(gate.kind) && gate.control == gate.target) {
    throw std::invalid_argument(std::string(to_string(gate.kind)) + " needs two distinct qubits");
  }
  Gate stored = gate;
  if (!is_two_qubit(stored.kind)) stored.target = 0;
  if (!has_angle(stored.kind)) stored.angle = 0.0;
  gates_.push_back(stored);
}

void Circuit::append(const Circuit& other) {
  if (other.width_ > width_) throw std::out_of_range("appending a wider circuit");
  for (const auto& g : other.gates_) push(g);
}

std::string Circuit::to_text() const {
  std::string out = "qubits " + std::to_string(width_) + "\n";
  char buf[64];
  for (const auto& g : gates_) {
    out += to_string(g.kind);
    out += " q" + std::to_string(g.control);
    if (is_two_qubit(g.kind)) out += " q" + std::to_string(g.target);
    if (has_angle(g.kind)) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), g.angle);
      if (ec != std::errc{}) throw std::runtime_error("angle formatting failed");
      out += ' ';
      out.append(buf, ptr);
    }
    out += '\n';
  }
  return out;
}

namespace {

std::size_t parse_qubit(const std::string& token, std::size_t line_no) {
  std::size_t q = 0;
  if (token.size() < 2 || token[0] != 'q') {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": expected qubit, got '" +
                                token + "'");
  }
  auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), q);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": bad qubit '" + token + "'");
  }
  return q;
}

GateKind parse_kind(const std::string& token, std::size_t line_no) {
  for (GateKind k : {GateKind::H, GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::CNOT,
                     GateKind::SWAP}) {
    if (token == to_string(k)) return k;
  }
  throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown gate '" + token + "'");
}

}  // namespace

Circuit Circuit::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<Circuit> circuit;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string head;
    fields >> head;
    if (!circuit) {
      std::size_t width = 0;
      if (head != "qubits" || !(fields >> width)) {
        throw std::invalid_argument("circuit text must start with 'qubits N'");
      }
      circuit.emplace(width);
      continue;
    }
    const GateKind kind = parse_kind(head, line_no);
    std::string tok;
    if (!(fields >> tok)) throw std::invalid_argument("line " + std::to_string(line_no) + ": missing operand");
    Gate g{kind, parse_qubit(tok, line_no)};
    if (is_two_qubit(kind)) {
      if (!(fields >> tok)) throw std::invalid_argument("line " + std::to_string(line_no) + ": missing target");
      g.target = parse_qubit(tok, line_no);
    }
    if (has_angle(kind)) {
      if (!(fields >> tok)) throw std::invalid_argument("line " + std::to_string(line_no) + ": missing angle");
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), g.angle);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad angle '" + tok + "'");
      }
    }
    if (fields >> tok) throw std::invalid_argument("line " + std::to_string(line_no) + ": trailing token '" + tok + "'");
    circuit->push(g);
  }
  if (!circuit) throw std::invalid_argument("empty circuit text");
  return *circuit;
}

std::size_t cnot_count(const Circuit& c) {
  return static_cast<std::size_t>(std::count_if(c.gates().begin(), c.gates().end(),
                                                [](const Gate& g) { return g.kind == GateKind::CNOT; }));
}

std::size_t swap_count(const Circuit& c) {
  return static_cast<std::size_t>(std::count_if(c.gates().begin(), c.gates().end(),
                                                [](const Gate& g) { return g.kind == GateKind::SWAP; }));
}

std::size_t two_qubit_count(const Circuit& c) { return cnot_count(c) + swap_count(c); }

double TrotterParams::step_angle() const {
  if (eta < 1) throw std::domain_error("Trotter step count must be >= 1");
  return tau / static_cast<double>(eta);
}

Circuit exponentiate_string(const PauliString& term, double angle, double tol) {
  if (std::abs(term.weight.imag()) > tol) {
    throw InvalidTerm("cannot exponentiate Pauli string " + term.axes +
                      " with complex weight (imaginary part " + std::to_string(term.weight.imag()) + ")");
  }
  Circuit circuit(term.width());
  const std::vector<std::size_t> support = term.support();
  if (support.empty()) return circuit;

  constexpr double half_pi = std::numbers::pi / 2.0;
  for (std::size_t q : support) {
    if (term.axes[q] == 'X') circuit.push(Gate::h(q));
    if (term.axes[q] == 'Y') circuit.push(Gate::rx(q, half_pi));
  }
  for (std::size_t i = 0; i + 1 < support.size(); ++i) circuit.push(Gate::cnot(support[i], support[i + 1]));
  circuit.push(Gate::rz(support.back(), 2.0 * term.weight.real() * angle));
  for (std::size_t i = support.size() - 1; i > 0; --i) circuit.push(Gate::cnot(support[i - 1], support[i]));
  for (std::size_t q : support) {
    if (term.axes[q] == 'X') circuit.push(Gate::h(q));
    if (term.axes[q] == 'Y') circuit.push(Gate::rx(q, -half_pi));
  }
  return circuit;
}

std::vector<PauliString> trotter_order(const PauliSum& sum) {
  std::vector<PauliString> terms = sum.terms();
  std::stable_sort(terms.begin(), terms.end(), [](const PauliString& a, const PauliString& b) {
    const auto sa = a.support();
    const auto sb = b.support();
    if (sa != sb) return sa < sb;
    return a.axes < b.axes;
  });
  return terms;
}

Circuit synthesize(const PauliSum& sum, const TrotterParams& params) {
  const double angle = params.step_angle();
  Circuit circuit(sum.width());
  for (const auto& term : trotter_order(sum)) {
    if (term.length() == 0) continue;
    circuit.append(exponentiate_string(term, angle));
  }
  return circuit;
}

std::size_t staircase_cnot_count(const PauliSum& sum) {
  std::size_t total = 0;
  for (const auto& t : sum.terms()) {
    if (t.length() >= 2) total += 2 * (t.length() - 1);
  }
  return total;
}

}  // namespace quditmap
