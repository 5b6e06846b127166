#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "quditmap/router.hpp"
#include "quditmap/verify.hpp"

using namespace quditmap;

namespace {

Circuit random_circuit(std::mt19937_64& rng, std::size_t width, std::size_t two_qubit_gates) {
  Circuit c(width);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (std::size_t i = 0; i < two_qubit_gates; ++i) {
    const std::size_t a = rng() % width;
    std::size_t b = rng() % (width - 1);
    if (b >= a) ++b;
    c.push(Gate::h(a));
    c.push(Gate::rz(b, angle(rng)));
    c.push(Gate::cnot(a, b));
    c.push(Gate::rx(a, angle(rng)));
  }
  return c;
}

std::vector<LabelledPlacement> identity_only(const Topology& t) { return {{identity_placement(t), "identity"}}; }

}  // namespace

TEST_CASE("single CNOT on a line") {
  Circuit c(3);
  c.push(Gate::cnot(0, 2));
  const auto t = Topology::line(3);
  const auto r = route_once(c, t, identity_placement(t), 0);
  CHECK(r.swaps == 1);
  CHECK(swap_count(r.routed) == 1);
  CHECK(respects_topology(r.routed, t));
  CHECK(route_best(c, t, identity_only(t), {100, 0, false, 2}).swaps == 1);
  CHECK(optimal_route(c, t, identity_placement(t))->swaps == 1);

  Circuit adjacent(3);
  adjacent.push(Gate::cnot(0, 1));
  CHECK(optimal_route(adjacent, t, identity_placement(t))->swaps == 0);

  Circuit far(4);
  far.push(Gate::cnot(0, 3));
  const auto t4 = Topology::line(4);
  CHECK(optimal_route(far, t4, identity_placement(t4))->swaps == 2);
  CHECK(route_once(far, t4, identity_placement(t4), 3).swaps == 2);
}

TEST_CASE("fully connected hosts never need SWAPs") {
  std::mt19937_64 rng(1);
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto c = random_circuit(rng, n, 10);
    const auto t = Topology::full(n);
    CHECK(route_best(c, t, default_placements(t), {20, 5, false, 0}).swaps == 0);
  }
}

TEST_CASE("property: routing is deterministic per seed") {
  std::mt19937_64 rng(2);
  const auto c = random_circuit(rng, 7, 12);
  const auto t = Topology::grid(7);
  const auto p = snake_placement(t, PlacementKind::HorizontalSnake);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto a = route_once(c, t, p, seed);
    const auto b = route_once(c, t, p, seed);
    CHECK(a.swaps == b.swaps);
    CHECK(a.routed.to_text() == b.routed.to_text());
  }
  const RouteOptions opts{50, 11, false, 1};
  RouteOptions many = opts;
  many.threads = 4;
  const auto x = route_best(c, t, default_placements(t), opts);
  const auto y = route_best(c, t, default_placements(t), many);
  CHECK(x.routed.to_text() == y.routed.to_text());
  CHECK(x.seed == y.seed);
  CHECK(x.placement_label == y.placement_label);
}

TEST_CASE("property: routed circuits are valid, equivalent and never beat the optimum") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const auto c = random_circuit(rng, n, 1 + rng() % 4);
    for (TopologyKind kind : {TopologyKind::Line, TopologyKind::Ladder, TopologyKind::Grid, TopologyKind::Full}) {
      const auto t = Topology::make(kind, n);
      const auto p = identity_placement(t);
      const auto r = route_once(c, t, p, trial);
      REQUIRE(respects_topology(r.routed, t));
      CHECK(r.swaps == swap_count(r.routed));
      CHECK(verify::routed_equivalence(c, r, p).pass);
      if (const auto best = optimal_route(c, t, p, 200'000)) {
        CHECK(r.swaps >= best->swaps);
        CHECK(respects_topology(best->routed, t));
        CHECK(verify::routed_equivalence(c, *best, p).pass);
      }
    }
  }
}

TEST_CASE("property: optimal_route matches exhaustive SWAP search on single gates") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + rng() % 4;
    const std::size_t a = rng() % n;
    std::size_t b = rng() % (n - 1);
    if (b >= a) ++b;
    Circuit c(n);
    c.push(Gate::cnot(a, b));
    for (TopologyKind kind : {TopologyKind::Line, TopologyKind::Ladder, TopologyKind::Grid}) {
      const auto t = Topology::make(kind, n);
      const auto p = identity_placement(t);
      const auto best = optimal_route(c, t, p);
      REQUIRE(best.has_value());
      CHECK(best->swaps == oracle::min_swaps_single_gate(t.node_count(), t.edges(), p.physical_nodes(), a, b, 4));
    }
  }
}

TEST_CASE("a corrupted routed circuit fails the equivalence check") {
  Circuit c(3);
  c.push(Gate::h(0));
  c.push(Gate::cnot(0, 2));
  c.push(Gate::rz(2, 0.4));
  const auto t = Topology::line(3);
  const auto p = identity_placement(t);
  auto r = route_once(c, t, p, 0);
  REQUIRE(verify::routed_equivalence(c, r, p).pass);
  Circuit broken(r.routed.width());
  for (const Gate& g : r.routed.gates())
    if (g.kind != GateKind::SWAP) broken.push(g);
  r.routed = broken;
  CHECK_FALSE(verify::routed_equivalence(c, r, p).pass);
}

TEST_CASE("property: with the line fallback, ladder and grid never lose to the line") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 4 + rng() % 6;
    const auto c = random_circuit(rng, n, 10);
    const RouteOptions opts{30, 0, true, 0};
    const auto line = Topology::line(n);
    const auto best_line = route_best(c, line, default_placements(line), opts);
    for (TopologyKind kind : {TopologyKind::Ladder, TopologyKind::Grid}) {
      const auto t = Topology::make(kind, n);
      const auto best = route_best(c, t, default_placements(t), opts);
      CHECK(best.swaps <= best_line.swaps);
      CHECK(respects_topology(best.routed, t));
      CHECK(verify::routed_equivalence(c, best, best.initial).pass);
    }
  }
}

TEST_CASE("nearest-neighbour CNOT chains need no SWAPs on a line") {
  for (std::size_t n = 2; n <= 8; ++n) {
    Circuit c(n);
    for (std::size_t q = 0; q + 1 < n; ++q) c.push(Gate::cnot(q, q + 1));
    const auto t = Topology::line(n);
    CHECK(route_once(c, t, identity_placement(t), 0).swaps == 0);
  }
}

TEST_CASE("invalid routing requests") {
  Circuit c(3);
  c.push(Gate::cnot(0, 2));
  const auto t = Topology::line(3);
  CHECK_THROWS((void)route_best(c, t, {}, {}));
  CHECK_THROWS((void)route_once(c, Topology::line(2), identity_placement(Topology::line(2)), 0));
}
