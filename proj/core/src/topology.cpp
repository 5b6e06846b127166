#include "quditmap/topology.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace quditmap {

std::string_view to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::Line: return "line";
    case TopologyKind::Ladder: return "ladder";
    case TopologyKind::Grid: return "grid";
    case TopologyKind::Full: return "full";
  }
  return "?";
}

TopologyKind topology_kind_from_token(std::string_view token) {
  if (token == "line") return TopologyKind::Line;
  if (token == "ladder") return TopologyKind::Ladder;
  if (token == "grid") return TopologyKind::Grid;
  if (token == "full") return TopologyKind::Full;
  throw std::invalid_argument("unknown topology '" + std::string(token) + "'");
}

Topology::Topology(TopologyKind kind, std::size_t program_qubits, std::size_t rows, std::size_t cols)
    : kind_(kind),
      program_qubits_(program_qubits),
      rows_(rows),
      cols_(cols),
      adjacency_(rows * cols),
      adjacency_matrix_(rows * cols * rows * cols, false) {
  if (program_qubits == 0) throw std::domain_error("topology needs at least one qubit");
}

void Topology::add_edge(std::size_t a, std::size_t b) {
  edges_.emplace_back(std::min(a, b), std::max(a, b));
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
  adjacency_matrix_[a * node_count() + b] = true;
  adjacency_matrix_[b * node_count() + a] = true;
}

bool Topology::adjacent(std::size_t a, std::size_t b) const {
  if (a >= node_count() || b >= node_count()) throw std::out_of_range("node outside topology");
  return adjacency_matrix_[a * node_count() + b];
}

Topology Topology::line(std::size_t n) {
  Topology t(TopologyKind::Line, n, 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i) t.add_edge(i, i + 1);
  return t;
}

Topology Topology::ladder(std::size_t n) {
  const std::size_t cols = (n + 1) / 2;
  Topology t(TopologyKind::Ladder, n, 2, cols);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c + 1 < cols; ++c) t.add_edge(r * cols + c, r * cols + c + 1);
  }
  for (std::size_t c = 0; c < cols; ++c) t.add_edge(c, cols + c);
  return t;
}

Topology Topology::grid(std::size_t n) {
  std::size_t side = 0;
  while (side * side < n) ++side;
  Topology t(TopologyKind::Grid, n, side, side);
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      const std::size_t node = r * side + c;
      if (c + 1 < side) t.add_edge(node, node + 1);
      if (r + 1 < side) t.add_edge(node, node + side);
    }
  }
  return t;
}

Topology Topology::full(std::size_t n) {
  Topology t(TopologyKind::Full, n, 1, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) t.add_edge(a, b);
  }
  return t;
}

Topology Topology::make(TopologyKind kind, std::size_t n) {
  switch (kind) {
    case TopologyKind::Line: return line(n);
    case TopologyKind::Ladder: return ladder(n);
    case TopologyKind::Grid: return grid(n);
    case TopologyKind::Full: return full(n);
  }
  throw std::logic_error("unreachable");
}

bool Topology::connected() const {
  const DistanceMatrix dist(*this);
  for (std::size_t v = 0; v < node_count(); ++v) {
    if (dist(0, v) == DistanceMatrix::kUnreachable) return false;
  }
  return true;
}

DistanceMatrix::DistanceMatrix(const Topology& t)
    : n_(t.node_count()), dist_(t.node_count() * t.node_count(), kUnreachable) {
  std::deque<std::size_t> frontier;
  for (std::size_t src = 0; src < n_; ++src) {
    dist_[src * n_ + src] = 0;
    frontier.assign(1, src);
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop_front();
      for (std::size_t v : t.neighbors(u)) {
        if (dist_[src * n_ + v] != kUnreachable) continue;
        dist_[src * n_ + v] = dist_[src * n_ + u] + 1;
        frontier.push_back(v);
      }
    }
  }
}

DistanceMatrix distances(const Topology& t) { return DistanceMatrix(t); }

std::string_view to_string(PlacementKind kind) {
  switch (kind) {
    case PlacementKind::Identity: return "identity";
    case PlacementKind::HorizontalSnake: return "hsnake";
    case PlacementKind::VerticalSnake: return "vsnake";
  }
  return "?";
}

PlacementKind placement_kind_from_token(std::string_view token) {
  if (token == "identity") return PlacementKind::Identity;
  if (token == "hsnake") return PlacementKind::HorizontalSnake;
  if (token == "vsnake") return PlacementKind::VerticalSnake;
  throw std::invalid_argument("unknown placement '" + std::string(token) + "'");
}

Placement::Placement(std::vector<std::size_t> physical, std::size_t node_count)
    : physical_(std::move(physical)), node_count_(node_count) {
  std::vector<bool> used(node_count, false);
  for (std::size_t node : physical_) {
    if (node >= node_count) throw std::out_of_range("placement node outside topology");
    if (used[node]) throw std::invalid_argument("placement maps two program qubits to one node");
    used[node] = true;
  }
}

std::vector<std::size_t> Placement::occupancy() const {
  std::vector<std::size_t> occ(node_count_, kEmpty);
  for (std::size_t p = 0; p < physical_.size(); ++p) occ[physical_[p]] = p;
  return occ;
}

std::vector<std::size_t> snake_order(const Topology& t, PlacementKind kind) {
  std::vector<std::size_t> order;
  order.reserve(t.node_count());
  const std::size_t rows = t.rows();
  const std::size_t cols = t.cols();
  if (kind == PlacementKind::Identity || t.kind() == TopologyKind::Line ||
      t.kind() == TopologyKind::Full) {
    for (std::size_t v = 0; v < t.node_count(); ++v) order.push_back(v);
    return order;
  }
  if (kind == PlacementKind::HorizontalSnake) {
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t i = 0; i < cols; ++i) {
        const std::size_t c = (r % 2 == 0) ? i : cols - 1 - i;
        order.push_back(r * cols + c);
      }
    }
  } else {
    for (std::size_t c = 0; c < cols; ++c) {
      for (std::size_t i = 0; i < rows; ++i) {
        const std::size_t r = (c % 2 == 0) ? i : rows - 1 - i;
        order.push_back(r * cols + c);
      }
    }
  }
  return order;
}

Placement snake_placement(const Topology& t, PlacementKind kind) {
  std::vector<std::size_t> order = snake_order(t, kind);
  order.resize(t.program_qubits());
  return Placement(std::move(order), t.node_count());
}

Placement identity_placement(const Topology& t) { return snake_placement(t, PlacementKind::Identity); }

Placement make_placement(const Topology& t, PlacementKind kind) { return snake_placement(t, kind); }

}  // namespace quditmap
