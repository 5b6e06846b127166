// quditmap: encode d-level operators, synthesize Trotter circuits, route them
// on constrained hardware and evaluate SWAP-count bounds.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "quditmap/experiment.hpp"

namespace {

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::size_t restarts = 1000;
  double tol = quditmap::kPauliTolerance;
  bool embed_fallback = false;
  bool dense_corrected = false;
  bool best_compact_in_padding = false;
  std::string output;
  std::string format = "json";
  std::size_t threads = 0;
};

struct InstanceOptions {
  std::string op;
  std::size_t d = 2;
  std::string encoding = "sb";
};

void add_instance(CLI::App* cmd, InstanceOptions& inst) {
  cmd->add_option("operator", inst.op, "Operator name (n, q, p, n2, q2, nn, qn, qq, hop, sx, sy, sz, sxsx, szsz, sxsz)")
      ->required();
  cmd->add_option("-d,--levels", inst.d, "Truncation / number of levels")->required()->check(CLI::Range(2, 64));
  cmd->add_option("-e,--encoding", inst.encoding, "unary | sb | gray | bu<g>[-sb|-gray]");
}

void emit(const GlobalOptions& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + g.output);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace quditmap;

  CLI::App app{"quditmap: qudit encodings, Trotter synthesis and SWAP routing"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--seed", g.seed, "Base RNG seed; restart i uses seed + i");
  app.add_option("--restarts", g.restarts, "Stochastic routing restarts")->check(CLI::PositiveNumber);
  app.add_option("--tol", g.tol, "Pauli weight drop tolerance");
  app.add_flag("--embed-fallback", g.embed_fallback, "Also try the line schedule embedded along the snake");
  app.add_flag("--dense-bound-corrected", g.dense_corrected, "Use d^2/2 - 3d/2 + 1 for the dense unary bound");
  app.add_flag("--best-compact-in-padding", g.best_compact_in_padding,
               "Sweep: also report the cheapest compact run over d..2^ceil(log2 d)");
  app.add_option("--output", g.output, "Write output to a file instead of stdout");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", g.threads, "Worker threads for restarts (0 = all cores)");

  InstanceOptions decompose_opts;
  auto* decompose_cmd = app.add_subcommand("decompose", "Print the Pauli decomposition and length histogram");
  add_instance(decompose_cmd, decompose_opts);

  InstanceOptions synth_opts;
  double tau = 1.0;
  std::size_t eta = 1;
  auto* synth_cmd = app.add_subcommand("synth", "Synthesize one Trotter step as circuit text");
  add_instance(synth_cmd, synth_opts);
  synth_cmd->add_option("--tau", tau, "Evolution time");
  synth_cmd->add_option("--eta", eta, "Trotter steps (angle per step is tau/eta)")->check(CLI::PositiveNumber);

  InstanceOptions route_opts;
  std::string topology = "line";
  std::string placement = "all";
  std::string circuit_out;
  auto* route_cmd = app.add_subcommand("route", "Route one Trotter step and report CNOT/SWAP counts");
  add_instance(route_cmd, route_opts);
  route_cmd->add_option("-t,--topology", topology, "line | ladder | grid | full")
      ->check(CLI::IsMember({"line", "ladder", "grid", "full"}));
  route_cmd->add_option("--placement", placement, "identity | hsnake | vsnake | all")
      ->check(CLI::IsMember({"identity", "hsnake", "vsnake", "all"}));
  route_cmd->add_option("--circuit-out", circuit_out, "Write the routed circuit text here");

  InstanceOptions bounds_opts;
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate analytical SWAP bounds as JSON");
  add_instance(bounds_cmd, bounds_opts);

  std::string config_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep from a key = value config file");
  sweep_cmd->add_option("config", config_path, "Sweep configuration file")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*decompose_cmd) {
      const auto& o = decompose_opts;
      experiment::Decomposition dec = experiment::decompose(o.op, o.d, o.encoding);
      dec.sum = simplify(dec.sum, g.tol);
      dec.histogram = length_histogram(dec.sum);
      emit(g, dec.to_text());
    } else if (*synth_cmd) {
      const auto& o = synth_opts;
      const Circuit c = experiment::synthesize_operator(o.op, o.d, o.encoding, TrotterParams{tau, eta});
      std::cerr << "cnot " << cnot_count(c) << "\n";
      emit(g, c.to_text());
    } else if (*route_cmd) {
      const auto& o = route_opts;
      experiment::RouteRequest req;
      req.op = o.op;
      req.d = o.d;
      req.encoding = o.encoding;
      req.topology = topology_kind_from_token(topology);
      req.placement = placement;
      req.options = RouteOptions{g.restarts, g.seed, g.embed_fallback, g.threads};
      const experiment::RouteRecord rec = experiment::route_operator(req);
      if (!circuit_out.empty()) {
        std::ofstream out(circuit_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + circuit_out);
        out << rec.routed.to_text();
      }
      if (g.format == "csv") {
        emit(g, "operator,d,encoding,topology,placement_used,qubits,cnot,swap,total_2q\n" + rec.op + "," +
                    std::to_string(rec.d) + "," + rec.encoding + "," + rec.topology + "," + rec.placement_used +
                    "," + std::to_string(rec.qubits) + "," + std::to_string(rec.cnot) + "," +
                    std::to_string(rec.swap) + "," + std::to_string(rec.two_qubit_total) + "\n");
      } else {
        emit(g, rec.to_json());
      }
    } else if (*bounds_cmd) {
      const auto& o = bounds_opts;
      emit(g, experiment::bounds_report(o.op, o.d, o.encoding, bounds::ReportOptions{g.dense_corrected}).to_json());
    } else if (*sweep_cmd) {
      experiment::SweepConfig config = experiment::parse_sweep_config(read_file(config_path));
      // Command-line flags override the file when given explicitly.
      if (app.count("--seed") != 0) config.seed = g.seed;
      if (app.count("--restarts") != 0) config.restarts = g.restarts;
      if (app.count("--threads") != 0) config.threads = g.threads;
      if (g.embed_fallback) config.embed_fallback = true;
      if (g.dense_corrected) config.dense_bound_corrected = true;
      if (g.best_compact_in_padding) config.best_compact_in_padding = true;
      const auto rows = experiment::run_sweep(config);
      const bool json = app.count("--format") != 0 && g.format == "json";
      emit(g, json ? experiment::sweep_to_json(config, rows) : experiment::sweep_to_csv(config, rows));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
