#include "quditmap/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace quditmap::experiment {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

template <typename T>
T parse_number(std::string_view text, std::string_view key) {
  T value{};
  text = trim(text);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("bad number '" + std::string(text) + "' for " + std::string(key));
  }
  return value;
}

bool parse_bool(std::string_view text, std::string_view key) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw ConfigError("bad boolean '" + std::string(text) + "' for " + std::string(key));
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string bounds_cell(const bounds::BoundReport& report) {
  std::string out;
  for (const auto& [name, value] : report.values) {
    if (!out.empty()) out += ';';
    out += name + "=" + format_value(value);
  }
  return out;
}

PauliSum encoded_sum(std::string_view op, std::size_t d, std::string_view encoding) {
  const EncodingScheme scheme = EncodingScheme::from_token(encoding, d);
  return encode(make_operator(op, d), scheme);
}

}  // namespace

std::string Decomposition::to_text() const {
  std::string out = sum.to_text();
  out += "# terms " + std::to_string(sum.size()) + "\n";
  out += "# max_length " + std::to_string(max_length(sum)) + "\n";
  for (const auto& [p, count] : histogram) {
    out += "# length " + std::to_string(p) + " " + std::to_string(count) + "\n";
  }
  return out;
}

Decomposition decompose(std::string_view op, std::size_t d, std::string_view encoding) {
  PauliSum sum = encoded_sum(op, d, encoding);
  auto hist = length_histogram(sum);
  return {std::move(sum), std::move(hist)};
}

Circuit synthesize_operator(std::string_view op, std::size_t d, std::string_view encoding,
                            const TrotterParams& params) {
  return synthesize(encoded_sum(op, d, encoding), params);
}

std::string RouteRecord::to_json() const {
  nlohmann::ordered_json j;
  j["operator"] = op;
  j["d"] = d;
  j["encoding"] = encoding;
  j["topology"] = topology;
  j["placement_used"] = placement_used;
  j["qubits"] = qubits;
  j["cnot"] = cnot;
  j["swap"] = swap;
  j["two_qubit_total"] = two_qubit_total;
  j["restarts"] = restarts;
  j["seed"] = seed;
  return j.dump(2);
}

std::vector<LabelledPlacement> placements_for(const Topology& t, std::string_view token) {
  if (token == "all") return default_placements(t);
  const PlacementKind kind = placement_kind_from_token(token);
  return {{make_placement(t, kind), std::string(token)}};
}

RouteRecord route_operator(const RouteRequest& request) {
  const EncodingScheme scheme = EncodingScheme::from_token(request.encoding, request.d);
  const Circuit circuit = synthesize(encode(make_operator(request.op, request.d), scheme), {});
  const Topology topology = Topology::make(request.topology, circuit.width());
  const RouteResult best =
      route_best(circuit, topology, placements_for(topology, request.placement), request.options);

  RouteRecord rec;
  rec.op = request.op;
  rec.d = request.d;
  rec.encoding = scheme.token();
  rec.topology = std::string(to_string(request.topology));
  rec.placement_used = best.placement_label;
  rec.qubits = circuit.width();
  rec.cnot = cnot_count(circuit);
  rec.swap = best.swaps;
  rec.two_qubit_total = rec.cnot + rec.swap;
  rec.restarts = request.options.restarts;
  rec.seed = request.options.base_seed;
  rec.routed = best.routed;
  return rec;
}

bounds::BoundReport bounds_report(std::string_view op, std::size_t d, std::string_view encoding,
                                  const bounds::ReportOptions& options) {
  return bounds::report(make_operator(op, d), EncodingScheme::from_token(encoding, d), options);
}

void SweepConfig::validate() const {
  if (operators.empty()) throw ConfigError("sweep needs at least one operator");
  if (d_values.empty()) throw ConfigError("sweep needs a non-empty d range");
  if (encodings.empty()) throw ConfigError("sweep needs at least one encoding");
  if (topologies.empty()) throw ConfigError("sweep needs at least one topology");
  if (restarts < 1) throw ConfigError("restarts must be >= 1");
  for (std::size_t d : d_values) {
    if (d < 2) throw ConfigError("d must be >= 2, got " + std::to_string(d));
  }
  for (const auto& op : operators) {
    const auto& names = operator_names();
    if (std::find(names.begin(), names.end(), op) == names.end()) {
      throw ConfigError("unknown operator '" + op + "'");
    }
  }
  for (const auto& enc : encodings) {
    try {
      (void)EncodingScheme::from_token(enc, 2);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (placement != "all") {
    try {
      (void)placement_kind_from_token(placement);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
}

std::vector<std::size_t> parse_d_range(std::string_view text) {
  std::vector<std::size_t> out;
  for (const std::string& item : split_list(text)) {
    const std::size_t dash = item.find('-');
    if (dash == std::string::npos) {
      out.push_back(parse_number<std::size_t>(item, "d"));
      continue;
    }
    const auto lo = parse_number<std::size_t>(std::string_view(item).substr(0, dash), "d");
    const auto hi = parse_number<std::size_t>(std::string_view(item).substr(dash + 1), "d");
    for (std::size_t d = lo; d <= hi; ++d) out.push_back(d);
  }
  return out;
}

SweepConfig parse_sweep_config(std::string_view text) {
  SweepConfig config;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "operators") {
      config.operators = split_list(value);
    } else if (key == "d") {
      config.d_values = parse_d_range(value);
    } else if (key == "encodings") {
      config.encodings = split_list(value);
    } else if (key == "topologies") {
      config.topologies.clear();
      for (const auto& t : split_list(value)) {
        try {
          config.topologies.push_back(topology_kind_from_token(t));
        } catch (const std::invalid_argument& e) {
          throw ConfigError(e.what());
        }
      }
    } else if (key == "placement") {
      config.placement = std::string(value);
    } else if (key == "restarts") {
      config.restarts = parse_number<std::size_t>(value, key);
    } else if (key == "seed") {
      config.seed = parse_number<std::uint64_t>(value, key);
    } else if (key == "embed_fallback") {
      config.embed_fallback = parse_bool(value, key);
    } else if (key == "dense_bound_corrected") {
      config.dense_bound_corrected = parse_bool(value, key);
    } else if (key == "best_compact_in_padding") {
      config.best_compact_in_padding = parse_bool(value, key);
    } else if (key == "threads") {
      config.threads = parse_number<std::size_t>(value, key);
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  config.validate();
  return config;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  RouteOptions options;
  options.restarts = config.restarts;
  options.base_seed = config.seed;
  options.embed_fallback = config.embed_fallback;
  options.threads = config.threads;

  auto route = [&](const std::string& op, std::size_t d, const std::string& enc, TopologyKind topo) {
    RouteRequest request{op, d, enc, topo, config.placement, options};
    return route_operator(request);
  };

  std::vector<SweepRow> rows;
  for (const auto& op : config.operators) {
    for (std::size_t d : config.d_values) {
      for (const auto& enc : config.encodings) {
        const bounds::BoundReport report =
            bounds_report(op, d, enc, bounds::ReportOptions{config.dense_bound_corrected});
        for (TopologyKind topo : config.topologies) {
          SweepRow row{route(op, d, enc, topo), bounds_cell(report), d, 0};
          row.record.routed = Circuit();
          row.best_padded_total = row.record.two_qubit_total;
          if (config.best_compact_in_padding && EncodingScheme::from_token(enc, d).is_compact()) {
            const std::size_t top = std::size_t{1} << ceil_log2(d);
            for (std::size_t padded = d + 1; padded <= top; ++padded) {
              const RouteRecord alt = route(op, padded, enc, topo);
              if (alt.two_qubit_total < row.best_padded_total) {
                row.best_padded_total = alt.two_qubit_total;
                row.best_padded_d = padded;
              }
            }
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

std::string sweep_csv_header(const SweepConfig& config) {
  std::string header = "operator,d,encoding,topology,placement_used,qubits,cnot,swap,total_2q,bounds";
  if (config.best_compact_in_padding) header += ",best_padded_d,best_padded_total_2q";
  return header;
}

std::string sweep_to_csv(const SweepConfig& config, const std::vector<SweepRow>& rows) {
  std::string out = sweep_csv_header(config) + "\n";
  for (const auto& row : rows) {
    const RouteRecord& r = row.record;
    out += r.op + "," + std::to_string(r.d) + "," + r.encoding + "," + r.topology + "," + r.placement_used +
           "," + std::to_string(r.qubits) + "," + std::to_string(r.cnot) + "," + std::to_string(r.swap) + "," +
           std::to_string(r.two_qubit_total) + "," + row.bounds;
    if (config.best_compact_in_padding) {
      out += "," + std::to_string(row.best_padded_d) + "," + std::to_string(row.best_padded_total);
    }
    out += "\n";
  }
  return out;
}

std::string sweep_to_json(const SweepConfig& config, const std::vector<SweepRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    const RouteRecord& r = row.record;
    nlohmann::ordered_json j;
    j["operator"] = r.op;
    j["d"] = r.d;
    j["encoding"] = r.encoding;
    j["topology"] = r.topology;
    j["placement_used"] = r.placement_used;
    j["qubits"] = r.qubits;
    j["cnot"] = r.cnot;
    j["swap"] = r.swap;
    j["total_2q"] = r.two_qubit_total;
    j["bounds"] = row.bounds;
    if (config.best_compact_in_padding) {
      j["best_padded_d"] = row.best_padded_d;
      j["best_padded_total_2q"] = row.best_padded_total;
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace quditmap::experiment
