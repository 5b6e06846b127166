#include <doctest.h>

#include "oracles.hpp"
#include "quditmap/topology.hpp"

using namespace quditmap;

TEST_CASE("built-in shapes") {
  const auto line = Topology::line(5);
  CHECK(line.edges().size() == 4);
  CHECK(line.adjacent(2, 3));
  CHECK_FALSE(line.adjacent(1, 3));

  const auto ladder = Topology::ladder(7);
  CHECK(ladder.rows() == 2);
  CHECK(ladder.cols() == 4);
  CHECK(ladder.node_count() == 8);
  CHECK(ladder.program_qubits() == 7);
  CHECK(ladder.edges().size() == 10);

  const auto grid = Topology::grid(10);
  CHECK(grid.rows() == 4);
  CHECK(grid.cols() == 4);
  CHECK(grid.edges().size() == 24);
  CHECK(Topology::grid(9).node_count() == 9);

  CHECK(Topology::full(5).edges().size() == 10);
  CHECK(topology_kind_from_token("grid") == TopologyKind::Grid);
  CHECK_THROWS_AS((void)topology_kind_from_token("torus"), std::invalid_argument);
}

TEST_CASE("ladder distance corner to corner") {
  const auto d = distances(Topology::ladder(6));
  CHECK(d(0, 5) == 3);
  CHECK(d(0, 3) == 1);
}

TEST_CASE("property: BFS distances match Floyd-Warshall") {
  for (std::size_t n = 1; n <= 30; ++n) {
    for (TopologyKind kind : {TopologyKind::Line, TopologyKind::Ladder, TopologyKind::Grid, TopologyKind::Full}) {
      const auto t = Topology::make(kind, n);
      CHECK(t.connected());
      const auto d = distances(t);
      const auto ref = oracle::floyd_warshall(t.node_count(), t.edges());
      for (std::size_t a = 0; a < t.node_count(); ++a)
        for (std::size_t b = 0; b < t.node_count(); ++b) REQUIRE(d(a, b) == ref[a][b]);
    }
  }
}

TEST_CASE("property: snake orders are Hamiltonian paths") {
  for (std::size_t n = 2; n <= 30; ++n) {
    for (TopologyKind kind : {TopologyKind::Ladder, TopologyKind::Grid}) {
      const auto t = Topology::make(kind, n);
      for (PlacementKind pk : {PlacementKind::HorizontalSnake, PlacementKind::VerticalSnake}) {
        const auto order = snake_order(t, pk);
        REQUIRE(order.size() == t.node_count());
        std::vector<std::size_t> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) REQUIRE(sorted[i] == i);
        for (std::size_t i = 0; i + 1 < order.size(); ++i) REQUIRE(t.adjacent(order[i], order[i + 1]));
        const auto placement = snake_placement(t, pk);
        CHECK(placement.size() == n);
        for (std::size_t q = 0; q < n; ++q) CHECK(placement.physical(q) == order[q]);
      }
    }
  }
}

TEST_CASE("placements") {
  const auto t = Topology::grid(5);
  const auto id = identity_placement(t);
  CHECK(id.physical_nodes() == std::vector<std::size_t>{0, 1, 2, 3, 4});
  const auto occ = id.occupancy();
  CHECK(occ[4] == 4);
  CHECK(occ[8] == Placement::kEmpty);
  CHECK(snake_order(t, PlacementKind::HorizontalSnake) == std::vector<std::size_t>{0, 1, 2, 5, 4, 3, 6, 7, 8});
  CHECK(snake_order(t, PlacementKind::VerticalSnake) == std::vector<std::size_t>{0, 3, 6, 7, 4, 1, 2, 5, 8});
  CHECK_THROWS((void)Placement({0, 0}, 3));
  CHECK_THROWS((void)Placement({0, 3}, 3));
  CHECK(placement_kind_from_token("vsnake") == PlacementKind::VerticalSnake);
}
