// Copyright 2026 The distqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "distqc/distqc.hpp"

namespace {

using namespace distqc;

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("failed writing '" + path + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed quantum circuit compiler"};
  app.require_subcommand(1);

  // gen-topology
  auto* topo = app.add_subcommand("gen-topology", "Generate a processor lattice");
  std::string topo_kind = "rect-low", topo_out;
  std::size_t topo_g = 1;
  bool topo_network = false;
  topo->add_option("--kind", topo_kind, "rect-low, rect-high, hex or path")
      ->check(CLI::IsMember({"rect-low", "rect-high", "hex", "path"}));
  topo->add_option("--g", topo_g, "Generating value (processor count for path)")->required();
  topo->add_flag("--network", topo_network, "Emit the qubit-level network instead of the quotient graph");
  topo->add_option("--out", topo_out, "Output file (default stdout)");

  // gen-circuit
  auto* gen = app.add_subcommand("gen-circuit", "Generate a benchmark circuit");
  std::string gen_kind = "random-cz", gen_out;
  std::size_t gen_qubits = 4, gen_gates = 16;
  std::uint64_t gen_seed = 1;
  gen->add_option("--kind", gen_kind, "random-cz, random-clifford or hardest-fanin")
      ->check(CLI::IsMember({"random-cz", "random-clifford", "hardest-fanin"}));
  gen->add_option("--qubits", gen_qubits, "Qubit count");
  gen->add_option("--gates", gen_gates, "Gate count for random circuits");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // compile
  auto* comp = app.add_subcommand("compile", "Compile a circuit onto a topology");
  std::string comp_topo, comp_circ, comp_place, comp_backend = "flow-greedy", comp_out;
  std::string comp_labeling = "figure";
  bool comp_exact = false, comp_greedy = false, comp_cancel = false, comp_no_emit = false;
  comp->add_option("--topology", comp_topo, "Quotient graph or network JSON")->required();
  comp->add_option("--circuit", comp_circ, "Circuit JSON")->required();
  comp->add_option("--placement", comp_place, "Placement JSON (default round-robin)");
  comp->add_option("--backend", comp_backend, "flow-exact, flow-greedy, steiner or flow")
      ->check(CLI::IsMember({"flow-exact", "flow-greedy", "steiner", "flow"}));
  auto* ex = comp->add_flag("--exact", comp_exact, "With --backend flow: exact sub-solver");
  comp->add_flag("--greedy", comp_greedy, "With --backend flow: iterative greedy")->excludes(ex);
  comp->add_option("--labeling", comp_labeling, "Measurement bit numbering: figure or theorem")
      ->check(CLI::IsMember({"figure", "theorem"}));
  comp->add_flag("--cancel-pairs", comp_cancel, "Cancel repeated CZ pairs before densifying");
  comp->add_flag("--no-emit", comp_no_emit, "Report the schedule and metrics only");
  comp->add_option("--out", comp_out, "Output file (default stdout)");

  // verify
  auto* ver = app.add_subcommand("verify", "Check an extended circuit against a logical one");
  std::string ver_ext, ver_log;
  std::size_t ver_trials = 20, ver_branches = 10;
  std::uint64_t ver_seed = 1;
  ver->add_option("--extended", ver_ext, "Extended circuit JSON or compile output")->required();
  ver->add_option("--logical", ver_log, "Logical circuit JSON")->required();
  ver->add_option("--trials", ver_trials, "Random inputs");
  ver->add_option("--branches", ver_branches, "Measurement branches per input");
  ver->add_option("--seed", ver_seed, "RNG seed");

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark sweep and write CSV");
  BenchConfig cfg;
  std::vector<std::string> bench_backends{"flow-greedy", "steiner"};
  std::string bench_circuit = "random-cz", bench_out;
  bench->add_option("--topology", cfg.topologies, "Topologies")
      ->check(CLI::IsMember({"rect-low", "rect-high", "hex", "path"}));
  bench->add_option("--g", cfg.g, "Generating values");
  bench->add_option("--sizes", cfg.sizes, "CZ gate counts");
  bench->add_option("--samples", cfg.samples, "Random circuits per cell");
  bench->add_option("--backend", bench_backends, "Backends")
      ->check(CLI::IsMember({"flow-exact", "flow-greedy", "steiner"}));
  bench->add_option("--circuit", bench_circuit, "random-cz or hardest-fanin")
      ->check(CLI::IsMember({"random-cz", "hardest-fanin"}));
  bench->add_option("--seed", cfg.seed, "RNG seed");
  bench->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
  bench->add_flag("--timing", cfg.timing, "Fill wall_time_ms (output is then not reproducible)");
  bench->add_option("--out", bench_out, "CSV file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*topo) {
      QuotientGraph q = gen_topology(topo_kind, topo_g);
      write_out(topo_out, dump(topo_network ? to_json(network_from_quotient(q)) : to_json(q)));
    } else if (*gen) {
      Circuit c;
      if (gen_kind == "hardest-fanin") {
        c = gen_hardest_fanin(gen_qubits);
      } else {
        Rng rng(gen_seed);
        c = gen_kind == "random-cz" ? gen_random_cz_circuit(gen_qubits, gen_gates, rng)
                                    : gen_random_clifford_circuit(gen_qubits, gen_gates, rng);
      }
      write_out(gen_out, dump(to_json(c)));
    } else if (*comp) {
      QuotientGraph q = topology_from_json(read_json_file(comp_topo));
      Circuit c = circuit_from_json(read_json_file(comp_circ));
      Placement p = comp_place.empty() ? Placement::round_robin(c.num_qubits, q.node_count)
                                       : placement_from_json(read_json_file(comp_place));
      CompileOptions opt;
      if (comp_backend == "flow") {
        opt.backend = comp_exact ? Backend::kFlowExact : Backend::kFlowGreedy;
      } else {
        if (comp_exact || comp_greedy) throw Error("--exact and --greedy go with --backend flow");
        opt.backend = backend_from_name(comp_backend);
      }
      opt.emit = !comp_no_emit;
      opt.cancel_pairs = comp_cancel;
      opt.labeling = comp_labeling == "theorem" ? BitLabeling::kTheorem : BitLabeling::kFigure;
      CompiledCircuit out = compile(c, p, q, opt);
      Json j{{"backend", std::string(backend_name(opt.backend))},
             {"metrics", {{"e_depth", out.metrics.e_depth}, {"e_count", out.metrics.e_count}}},
             {"schedule", to_json(out.schedule)}};
      if (opt.emit) j["circuit"] = to_json(out.circuit);
      write_out(comp_out, dump(j));
    } else if (*ver) {
      Json ej = read_json_file(ver_ext);
      if (ej.contains("circuit") && !ej.contains("layers")) ej = ej.at("circuit");
      ExtendedCircuit ec = extended_from_json(ej);
      Circuit logical = circuit_from_json(read_json_file(ver_log));
      Rng rng(ver_seed);
      EquivalenceReport r = check_channel(ec, logical, ver_trials, ver_branches, rng);
      if (r.status == EquivalenceStatus::kEntangled) {
        throw Error("compilation bug: " + r.detail);
      }
      if (!r.ok()) {
        std::cout << "not equivalent (trial " << r.trial << ", branch " << r.branch << "): "
                  << r.detail << "\n";
        return 1;
      }
      std::cout << "equivalent\n";
    } else if (*bench) {
      cfg.backends.clear();
      for (const auto& b : bench_backends) cfg.backends.push_back(backend_from_name(b));
      cfg.circuit = bench_circuit == "hardest-fanin" ? BenchCircuit::kHardestFanIn
                                                     : BenchCircuit::kRandomCZ;
      std::ostringstream csv;
      write_bench_csv(csv, run_bench(cfg));
      write_out(bench_out, csv.str());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
