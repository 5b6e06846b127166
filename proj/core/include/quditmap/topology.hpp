#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quditmap {

enum class TopologyKind { Line, Ladder, Grid, Full };

[[nodiscard]] std::string_view to_string(TopologyKind kind);
[[nodiscard]] TopologyKind topology_kind_from_token(std::string_view token);

/**
 * @brief Undirected coupling graph hosting a register of program qubits.
 *
 * Ladder and grid hosts may carry more nodes than program qubits; spare
 * nodes are ordinary vertices that SWAPs may route through. Nodes of ladder
 * and grid hosts are numbered row-major (node = row * cols + col).
 */
class Topology {
public:
  using Edge = std::pair<std::size_t, std::size_t>;

  static Topology line(std::size_t n);
  /// 2 x ceil(n/2) nodes.
  static Topology ladder(std::size_t n);
  /// s x s nodes with s = ceil(sqrt(n)).
  static Topology grid(std::size_t n);
  static Topology full(std::size_t n);
  static Topology make(TopologyKind kind, std::size_t n);

  [[nodiscard]] TopologyKind kind() const { return kind_; }
  [[nodiscard]] std::size_t node_count() const { return rows_ * cols_; }
  [[nodiscard]] std::size_t program_qubits() const { return program_qubits_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const std::vector<std::size_t>& neighbors(std::size_t node) const {
    return adjacency_.at(node);
  }
  [[nodiscard]] bool adjacent(std::size_t a, std::size_t b) const;
  [[nodiscard]] bool connected() const;

private:
  Topology(TopologyKind kind, std::size_t program_qubits, std::size_t rows, std::size_t cols);
  void add_edge(std::size_t a, std::size_t b);

  TopologyKind kind_;
  std::size_t program_qubits_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<bool> adjacency_matrix_;
};

/// All-pairs shortest-path lengths by breadth-first search, row-major.
class DistanceMatrix {
public:
  explicit DistanceMatrix(const Topology& t);

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] std::size_t operator()(std::size_t a, std::size_t b) const { return dist_[a * n_ + b]; }

  static constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);

private:
  std::size_t n_;
  std::vector<std::size_t> dist_;
};

[[nodiscard]] DistanceMatrix distances(const Topology& t);

enum class PlacementKind { Identity, HorizontalSnake, VerticalSnake };

[[nodiscard]] std::string_view to_string(PlacementKind kind);
[[nodiscard]] PlacementKind placement_kind_from_token(std::string_view token);

/// Injective program-qubit -> physical-node map.
class Placement {
public:
  Placement() = default;
  Placement(std::vector<std::size_t> physical, std::size_t node_count);

  [[nodiscard]] std::size_t size() const { return physical_.size(); }
  [[nodiscard]] std::size_t node_count() const { return node_count_; }
  [[nodiscard]] std::size_t physical(std::size_t program) const { return physical_.at(program); }
  [[nodiscard]] const std::vector<std::size_t>& physical_nodes() const { return physical_; }

  /// Program qubit on each node, or kEmpty.
  [[nodiscard]] std::vector<std::size_t> occupancy() const;

  static constexpr std::size_t kEmpty = static_cast<std::size_t>(-1);

  friend bool operator==(const Placement&, const Placement&) = default;

private:
  std::vector<std::size_t> physical_;
  std::size_t node_count_ = 0;
};

/// Node visiting order of the boustrophedon path for the given orientation.
[[nodiscard]] std::vector<std::size_t> snake_order(const Topology& t, PlacementKind kind);

/// First program_qubits() nodes of the snake; identity for line and full hosts.
[[nodiscard]] Placement snake_placement(const Topology& t, PlacementKind kind);
[[nodiscard]] Placement identity_placement(const Topology& t);
[[nodiscard]] Placement make_placement(const Topology& t, PlacementKind kind);

}  // namespace quditmap
