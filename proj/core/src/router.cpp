#include "quditmap/router.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <deque>
#include <limits>
#include <mutex>
#include <random>
#include <thread>
#include <unordered_map>

namespace quditmap {

namespace {

struct RoutingState {
  std::vector<std::size_t> position;   // program -> node
  std::vector<std::size_t> occupancy;  // node -> program or kEmpty

  void apply_swap(std::size_t u, std::size_t v) {
    std::swap(occupancy[u], occupancy[v]);
    if (occupancy[u] != Placement::kEmpty) position[occupancy[u]] = u;
    if (occupancy[v] != Placement::kEmpty) position[occupancy[v]] = v;
  }
};

RoutingState initial_state(const Circuit& circuit, const Topology& topology, const Placement& initial) {
  if (initial.node_count() != topology.node_count()) {
    throw std::invalid_argument("placement was built for a different topology");
  }
  if (circuit.width() > initial.size()) {
    throw std::invalid_argument("circuit has " + std::to_string(circuit.width()) +
                                " qubits but the placement maps only " + std::to_string(initial.size()));
  }
  return {initial.physical_nodes(), initial.occupancy()};
}

Gate to_physical(const Gate& g, const RoutingState& state) {
  Gate out = g;
  out.control = state.position[g.control];
  if (is_two_qubit(g.kind)) out.target = state.position[g.target];
  return out;
}

std::size_t moved(std::size_t node, const Topology::Edge& e) {
  if (node == e.first) return e.second;
  if (node == e.second) return e.first;
  return node;
}

RouteResult route_with(const Circuit& circuit, const Topology& topology, const DistanceMatrix& dist,
                       const Placement& initial, std::uint64_t seed) {
  RoutingState state = initial_state(circuit, topology, initial);
  std::mt19937_64 rng(seed);
  RouteResult result{0, Circuit(topology.node_count()), initial, {}, seed, {}};
  std::vector<const Topology::Edge*> candidates;

  for (const Gate& g : circuit.gates()) {
    if (!is_two_qubit(g.kind)) {
      result.routed.push(to_physical(g, state));
      continue;
    }
    std::size_t a = state.position[g.control];
    std::size_t b = state.position[g.target];
    if (dist(a, b) == DistanceMatrix::kUnreachable) {
      throw Unroutable("nodes " + std::to_string(a) + " and " + std::to_string(b) + " are disconnected");
    }
    while (dist(a, b) > 1) {
      const auto current = static_cast<long>(dist(a, b));
      long best = 0;
      candidates.clear();
      for (const auto& edge : topology.edges()) {
        const long utility = current - static_cast<long>(dist(moved(a, edge), moved(b, edge)));
        if (utility <= 0 || utility < best) continue;
        if (utility > best) {
          best = utility;
          candidates.clear();
        }
        candidates.push_back(&edge);
      }
      if (candidates.empty()) {
        throw Unroutable("no SWAP reduces the distance between nodes " + std::to_string(a) +
                         " and " + std::to_string(b));
      }
      const Topology::Edge& pick = *candidates[rng() % candidates.size()];
      state.apply_swap(pick.first, pick.second);
      result.routed.push(Gate::swap(pick.first, pick.second));
      ++result.swaps;
      a = state.position[g.control];
      b = state.position[g.target];
    }
    result.routed.push(to_physical(g, state));
  }
  result.final_placement = Placement(state.position, topology.node_count());
  return result;
}

// Rewrites a line schedule onto a host whose snake path starts with the line's nodes.
RouteResult embed_line_result(const RouteResult& line, const Topology& host) {
  const std::vector<std::size_t> path = snake_order(host, PlacementKind::HorizontalSnake);
  auto map_nodes = [&](const Placement& p) {
    std::vector<std::size_t> nodes;
    for (std::size_t n : p.physical_nodes()) nodes.push_back(path[n]);
    return Placement(std::move(nodes), host.node_count());
  };
  RouteResult out{line.swaps, Circuit(host.node_count()), map_nodes(line.initial),
                  map_nodes(line.final_placement), line.seed, "line-embed"};
  for (Gate g : line.routed.gates()) {
    g.control = path[g.control];
    if (is_two_qubit(g.kind)) g.target = path[g.target];
    out.routed.push(g);
  }
  return out;
}

}  // namespace

RouteResult route_once(const Circuit& circuit, const Topology& topology, const Placement& initial,
                       std::uint64_t seed) {
  return route_with(circuit, topology, DistanceMatrix(topology), initial, seed);
}

RouteResult route_best(const Circuit& circuit, const Topology& topology,
                       const std::vector<LabelledPlacement>& placements, const RouteOptions& options) {
  if (placements.empty()) throw std::invalid_argument("route_best needs at least one placement");
  if (options.restarts < 1) throw std::invalid_argument("route_best needs restarts >= 1");

  const DistanceMatrix dist(topology);
  const std::size_t total = placements.size() * options.restarts;
  std::size_t workers = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, total);

  std::atomic<std::size_t> next{0};
  std::mutex guard;
  std::optional<std::pair<std::size_t, RouteResult>> best;  // (task index, result)
  std::exception_ptr failure;

  auto work = [&] {
    std::optional<std::pair<std::size_t, RouteResult>> local;
    try {
      for (std::size_t task = next++; task < total; task = next++) {
        const auto& candidate = placements[task / options.restarts];
        const std::uint64_t seed = options.base_seed + task % options.restarts;
        RouteResult r = route_with(circuit, topology, dist, candidate.placement, seed);
        r.placement_label = candidate.label;
        if (!local || r.swaps < local->second.swaps) local.emplace(task, std::move(r));
      }
    } catch (...) {
      std::lock_guard lock(guard);
      if (!failure) failure = std::current_exception();
      return;
    }
    std::lock_guard lock(guard);
    if (local && (!best || local->second.swaps < best->second.swaps ||
                  (local->second.swaps == best->second.swaps && local->first < best->first))) {
      best = std::move(local);
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  RouteResult result = std::move(best->second);
  const bool embeddable = topology.kind() == TopologyKind::Ladder || topology.kind() == TopologyKind::Grid;
  if (options.embed_fallback && embeddable) {
    const Topology line = Topology::line(topology.program_qubits());
    RouteOptions line_options = options;
    line_options.embed_fallback = false;
    const RouteResult line_best =
        route_best(circuit, line, {{identity_placement(line), "identity"}}, line_options);
    if (line_best.swaps < result.swaps) result = embed_line_result(line_best, topology);
  }
  return result;
}

std::vector<LabelledPlacement> default_placements(const Topology& topology) {
  if (topology.kind() == TopologyKind::Line || topology.kind() == TopologyKind::Full) {
    return {{identity_placement(topology), "identity"}};
  }
  return {{snake_placement(topology, PlacementKind::HorizontalSnake), "hsnake"},
          {snake_placement(topology, PlacementKind::VerticalSnake), "vsnake"}};
}

std::optional<RouteResult> optimal_route(const Circuit& circuit, const Topology& topology,
                                         const Placement& initial, std::size_t budget) {
  const RoutingState start = initial_state(circuit, topology, initial);
  const auto& gates = circuit.gates();
  const std::size_t nodes = topology.node_count();

  struct Action {
    bool is_swap;
    std::size_t edge;
  };
  struct Vertex {
    std::size_t gate;
    std::vector<std::size_t> occupancy;
    std::size_t cost;
    std::size_t parent;
    Action action;
  };
  std::vector<Vertex> vertices;
  std::unordered_map<std::string, std::size_t> index;
  auto key_of = [](std::size_t gate, const std::vector<std::size_t>& occ) {
    std::string key(sizeof(std::size_t) * (occ.size() + 1), '\0');
    std::memcpy(key.data(), &gate, sizeof gate);
    std::memcpy(key.data() + sizeof gate, occ.data(), sizeof(std::size_t) * occ.size());
    return key;
  };

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::deque<std::size_t> queue;
  auto relax = [&](std::size_t gate, std::vector<std::size_t> occ, std::size_t cost, std::size_t parent,
                   Action action) {
    const std::string key = key_of(gate, occ);
    auto it = index.find(key);
    if (it != index.end() && vertices[it->second].cost <= cost) return;
    std::size_t id;
    if (it == index.end()) {
      id = vertices.size();
      index.emplace(key, id);
      vertices.push_back({gate, std::move(occ), cost, parent, action});
    } else {
      id = it->second;
      vertices[id].cost = cost;
      vertices[id].parent = parent;
      vertices[id].action = action;
    }
    if (action.is_swap) {
      queue.push_back(id);
    } else {
      queue.push_front(id);
    }
  };

  relax(0, start.occupancy, 0, kNone, {false, 0});
  std::size_t expanded = 0;
  std::size_t goal = kNone;
  std::vector<bool> done;
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    if (id < done.size() && done[id]) continue;
    if (done.size() < vertices.size()) done.resize(vertices.size(), false);
    done[id] = true;
    if (++expanded > budget) return std::nullopt;

    const std::size_t gi = vertices[id].gate;
    const std::size_t cost = vertices[id].cost;
    if (gi == gates.size()) {
      goal = id;
      break;
    }
    std::vector<std::size_t> occ = vertices[id].occupancy;
    std::vector<std::size_t> pos(initial.size(), kNone);
    for (std::size_t n = 0; n < nodes; ++n) {
      if (occ[n] != Placement::kEmpty) pos[occ[n]] = n;
    }
    const Gate& g = gates[gi];
    if (!is_two_qubit(g.kind) || topology.adjacent(pos[g.control], pos[g.target])) {
      relax(gi + 1, occ, cost, id, {false, 0});
      continue;
    }
    for (std::size_t e = 0; e < topology.edges().size(); ++e) {
      const auto& [u, v] = topology.edges()[e];
      if (occ[u] == Placement::kEmpty && occ[v] == Placement::kEmpty) continue;
      std::vector<std::size_t> next = occ;
      std::swap(next[u], next[v]);
      relax(gi, std::move(next), cost + 1, id, {true, e});
    }
  }
  if (goal == kNone) throw Unroutable("optimal_route: no schedule exists");

  std::vector<Action> actions;
  for (std::size_t v = goal; vertices[v].parent != kNone; v = vertices[v].parent) {
    actions.push_back(vertices[v].action);
  }
  std::reverse(actions.begin(), actions.end());

  RoutingState state = start;
  RouteResult result{0, Circuit(nodes), initial, {}, 0, "optimal"};
  std::size_t gi = 0;
  for (const Action& a : actions) {
    if (a.is_swap) {
      const auto& [u, v] = topology.edges()[a.edge];
      state.apply_swap(u, v);
      result.routed.push(Gate::swap(u, v));
      ++result.swaps;
    } else {
      result.routed.push(to_physical(gates[gi++], state));
    }
  }
  result.final_placement = Placement(state.position, nodes);
  return result;
}

bool respects_topology(const Circuit& routed, const Topology& topology) {
  if (routed.width() > topology.node_count()) return false;
  return std::all_of(routed.gates().begin(), routed.gates().end(), [&](const Gate& g) {
    return !is_two_qubit(g.kind) || topology.adjacent(g.control, g.target);
  });
}

}  // namespace quditmap
