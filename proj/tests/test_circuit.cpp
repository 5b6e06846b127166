#include <doctest.h>

#include <cmath>
#include <random>

#include "quditmap/circuit.hpp"
#include "quditmap/verify.hpp"

using namespace quditmap;
using verify::Amplitude;
using verify::DenseMatrix;

TEST_CASE("staircase CNOT count is 2(p - 1)") {
  const auto c = exponentiate_string({Complex(1.0), "XYZZ"}, 0.3);
  CHECK(cnot_count(c) == 6);
  CHECK(two_qubit_count(c) == 6);
  const auto single = exponentiate_string({Complex(0.5), "IZI"}, 0.3);
  REQUIRE(single.gates().size() == 1);
  CHECK(single.gates()[0].kind == GateKind::RZ);
  CHECK(single.gates()[0].control == 1);
  CHECK(single.gates()[0].angle == doctest::Approx(0.3));
  CHECK(exponentiate_string({Complex(2.0), "III"}, 0.3).empty());
}

TEST_CASE("complex weights are rejected") {
  CHECK_THROWS_AS((void)exponentiate_string({Complex(1.0, 0.5), "XZ"}, 0.1), InvalidTerm);
}

TEST_CASE("ZZ rotation unitary is diag(e^-it, e^it, e^it, e^-it)") {
  const double theta = 0.37;
  const auto u = verify::circuit_to_unitary(exponentiate_string({Complex(1.0), "ZZ"}, theta));
  const double signs[4] = {-1, 1, 1, -1};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(u(i, i).re == doctest::Approx(std::cos(theta)));
    CHECK(u(i, i).im == doctest::Approx(signs[i] * std::sin(theta)));
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) CHECK(std::hypot(u(i, j).re, u(i, j).im) < 1e-14);
  }
}

TEST_CASE("property: every single string exponentiates exactly") {
  std::mt19937_64 rng(7);
  const char axes[4] = {'I', 'X', 'Y', 'Z'};
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    std::string s(n, 'I');
    for (auto& c : s) c = axes[rng() % 4];
    const double w = std::uniform_real_distribution<double>(-2, 2)(rng);
    const double angle = std::uniform_real_distribution<double>(-1, 1)(rng);
    PauliSum sum(n, {{Complex(w), s}});
    const auto expected = verify::matrix_exponential(verify::pauli_sum_to_matrix(sum), {0.0, -angle});
    const auto actual = verify::circuit_to_unitary(exponentiate_string(sum.terms()[0], angle));
    const auto check = verify::equal_up_to_phase(actual, expected, 1e-10);
    CHECK_MESSAGE(check.pass, s << " dev " << check.max_deviation);
  }
}

TEST_CASE("Trotter error shrinks with more steps") {
  PauliSum h(3, {{Complex(0.7), "XXI"}, {Complex(-0.4), "IZY"}, {Complex(0.3), "ZIX"}, {Complex(0.5), "YYZ"}});
  const double tau = 0.8;
  const auto exact = verify::matrix_exponential(verify::pauli_sum_to_matrix(h), {0.0, -tau});
  double previous = 1e9;
  double first = 0.0;
  for (std::size_t eta : {1U, 2U, 4U, 8U, 16U}) {
    const Circuit step = synthesize(h, {tau, eta});
    Circuit full(step.width());
    for (std::size_t i = 0; i < eta; ++i) full.append(step);
    const double dev = verify::equal_up_to_phase(verify::circuit_to_unitary(full), exact, 1.0).max_deviation;
    if (eta == 1) first = dev;
    // First-order product formula: doubling the step count roughly halves the error.
    if (eta > 1) CHECK(dev < 0.6 * previous);
    previous = dev;
  }
  CHECK(previous < first / 8);
}

TEST_CASE("commuting sum is exact in one step") {
  PauliSum h(3, {{Complex(0.2), "ZZI"}, {Complex(-0.9), "IZZ"}, {Complex(0.4), "ZIZ"}, {Complex(1.1), "ZII"}});
  const auto exact = verify::matrix_exponential(verify::pauli_sum_to_matrix(h), {0.0, -1.3});
  const auto u = verify::circuit_to_unitary(synthesize(h, {1.3, 1}));
  CHECK(verify::equal_up_to_phase(u, exact, 1e-10).pass);
}

TEST_CASE("synthesis order and CNOT totals") {
  PauliSum h(3, {{Complex(1.0), "ZZZ"}, {Complex(1.0), "XII"}, {Complex(1.0), "IXX"}, {Complex(1.0), "III"}});
  const auto order = trotter_order(h);
  REQUIRE(order.size() == 4);
  CHECK(order[0].axes == "III");
  CHECK(order[1].axes == "XII");
  CHECK(order[2].axes == "ZZZ");
  CHECK(order[3].axes == "IXX");
  CHECK(staircase_cnot_count(h) == 6);
  CHECK(cnot_count(synthesize(h, {})) == 6);
}

TEST_CASE("step angle") {
  CHECK(TrotterParams{2.0, 4}.step_angle() == doctest::Approx(0.5));
  CHECK_THROWS((void)TrotterParams{1.0, 0}.step_angle());
}

TEST_CASE("text round trip is exact") {
  Circuit c(4);
  c.push(Gate::h(0));
  c.push(Gate::rx(1, 0.1));
  c.push(Gate::rz(3, -std::acos(-1.0) / 3));
  c.push(Gate::cnot(2, 3));
  c.push(Gate::swap(0, 1));
  c.push(Gate::ry(2, 1e-17));
  const std::string text = c.to_text();
  const Circuit back = Circuit::parse(text);
  CHECK(back.to_text() == text);
  REQUIRE(back.gates().size() == c.gates().size());
  for (std::size_t i = 0; i < c.gates().size(); ++i) CHECK(back.gates()[i].angle == c.gates()[i].angle);
  CHECK(text.rfind("qubits 4\n", 0) == 0);
  CHECK(swap_count(c) == 1);
}

TEST_CASE("invalid gates and text") {
  Circuit c(2);
  CHECK_THROWS((void)c.push(Gate::cnot(0, 0)));
  CHECK_THROWS((void)c.push(Gate::h(2)));
  CHECK_THROWS((void)Circuit::parse("qubits 2\nFOO q0\n"));
  CHECK_THROWS((void)Circuit::parse("CNOT q0 q1\n"));
  CHECK_THROWS((void)Circuit::parse("qubits 2\nRZ q0 abc\n"));
}
