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

#ifndef DISTQC_BENCH_HPP
#define DISTQC_BENCH_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "distqc/circuit.hpp"
#include "distqc/common.hpp"
#include "distqc/compile.hpp"
#include "distqc/netmodel.hpp"
#include "distqc/stab_sim.hpp"

namespace distqc {

/// Topology by name: "rect-low", "rect-high", "hex" (generating value g) or
/// "path" (g processors).
inline QuotientGraph gen_topology(const std::string& kind, std::size_t g) {
  if (g < 1) throw Error("generating value must be at least 1");
  if (kind == "rect-low") return gen_rect_low(g);
  if (kind == "rect-high") return gen_rect_high(g);
  if (kind == "hex") return gen_hex(g);
  if (kind == "path") return gen_path(g);
  throw Error("unknown topology '" + kind + "'");
}

/// `k` CZ gates on uniformly random distinct pairs, packed ASAP into layers.
inline Circuit gen_random_cz_circuit(std::size_t n, std::size_t k, Rng& rng) {
  if (n < 2) throw Error("random CZ circuits need at least 2 qubits");
  std::vector<Gate> gates;
  for (std::size_t i = 0; i < k; ++i) {
    QubitId a = static_cast<QubitId>(rng() % n);
    QubitId b = static_cast<QubitId>(rng() % (n - 1));
    if (b >= a) ++b;
    gates.push_back(Gate::cz(a, b));
  }
  return Circuit{n, asap_layers(gates, n)};
}

/// Layer j holds the fan-in from q_j to every later qubit.
inline Circuit gen_hardest_fanin(std::size_t n) {
  if (n < 2) throw Error("hardest fan-in needs at least 2 qubits");
  Circuit c{n, {}};
  for (std::size_t j = 0; j + 1 < n; ++j) {
    std::vector<QubitId> targets;
    for (std::size_t t = j + 1; t < n; ++t) targets.push_back(static_cast<QubitId>(t));
    QubitId ctl = static_cast<QubitId>(j);
    c.layers.push_back({targets.size() == 1 ? Gate::cx(ctl, targets[0]) : Gate::fanin_cx(ctl, targets)});
  }
  return c;
}

/// `k` random gates from CX, CZ, fan-in, fan-out and the three half turns,
/// packed ASAP into layers.
inline Circuit gen_random_clifford_circuit(std::size_t n, std::size_t k, Rng& rng) {
  if (n < 2) throw Error("random Clifford circuits need at least 2 qubits");
  std::vector<Gate> gates;
  auto distinct = [&](std::size_t m) {
    std::vector<QubitId> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<QubitId>(i);
    for (std::size_t i = 0; i < m; ++i) std::swap(all[i], all[i + rng() % (n - i)]);
    all.resize(m);
    return all;
  };
  for (std::size_t i = 0; i < k; ++i) {
    switch (rng() % 7) {
      case 0: {
        auto q = distinct(2);
        gates.push_back(Gate::cx(q[0], q[1]));
        break;
      }
      case 1: {
        auto q = distinct(2);
        gates.push_back(Gate::cz(q[0], q[1]));
        break;
      }
      case 2:
      case 3: {
        auto q = distinct(2 + rng() % std::min<std::size_t>(3, n - 1));
        std::vector<QubitId> rest(q.begin() + 1, q.end());
        gates.push_back(rng() % 2 ? Gate::fanin_cx(q[0], rest) : Gate::fanout_cx(q[0], rest));
        break;
      }
      case 4:
        gates.push_back(Gate::yhalf(static_cast<QubitId>(rng() % n)));
        break;
      case 5:
        gates.push_back(Gate::xhalf(static_cast<QubitId>(rng() % n)));
        break;
      default:
        gates.push_back(Gate::zhalf(static_cast<QubitId>(rng() % n)));
        break;
    }
  }
  return Circuit{n, asap_layers(gates, n)};
}

enum class BenchCircuit { kRandomCZ, kHardestFanIn };

struct BenchConfig {
  std::vector<std::string> topologies{"rect-low", "hex"};
  std::vector<std::size_t> g{2, 3};
  std::vector<std::size_t> sizes{16};
  std::size_t samples = 10;
  std::vector<Backend> backends{Backend::kFlowGreedy, Backend::kSteiner};
  BenchCircuit circuit = BenchCircuit::kRandomCZ;
  std::uint64_t seed = 1;
  std::size_t threads = 0;  // 0: hardware concurrency
  bool timing = false;

  void check() const {
    if (topologies.empty() || g.empty() || backends.empty()) {
      throw Error("bench needs at least one topology, g value and backend");
    }
    for (std::size_t v : g) {
      if (v < 1) throw Error("g entries must be at least 1");
    }
    if (circuit == BenchCircuit::kRandomCZ) {
      if (sizes.empty()) throw Error("bench needs at least one size");
      for (std::size_t s : sizes) {
        if (s < 1) throw Error("sizes must be positive");
      }
      if (samples < 1) throw Error("samples must be positive");
    }
  }
};

struct BenchRecord {
  std::string topology;
  std::size_t g = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t k = 0;
  std::string backend;
  std::size_t e_depth = 0;
  std::size_t e_count = 0;
  std::optional<double> wall_time_ms;
  std::uint64_t seed = 0;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Seed of one instance, stable across platforms.
inline std::uint64_t instance_seed(std::uint64_t seed, const std::string& topology, std::size_t g,
                                   std::size_t size, std::size_t sample) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : topology) h = (h ^ ch) * 0x100000001b3ull;
  std::uint64_t x = splitmix64(seed ^ h);
  for (std::uint64_t v : {std::uint64_t(g), std::uint64_t(size), std::uint64_t(sample)}) {
    x = splitmix64(x ^ v);
  }
  return x;
}

/// Runs every (topology, g, size, sample) instance under every backend.
/// Qubit q_i sits on processor P_i (round-robin over the processors). Rows
/// come out in loop order regardless of the worker count.
inline std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  cfg.check();
  struct Task {
    std::string topology;
    std::size_t g, size, sample;
  };
  std::vector<Task> tasks;
  for (const auto& t : cfg.topologies) {
    for (std::size_t g : cfg.g) {
      if (cfg.circuit == BenchCircuit::kHardestFanIn) {
        tasks.push_back({t, g, 0, 0});
        continue;
      }
      for (std::size_t s : cfg.sizes) {
        for (std::size_t i = 0; i < cfg.samples; ++i) tasks.push_back({t, g, s, i});
      }
    }
  }
  std::size_t nb = cfg.backends.size();
  std::vector<BenchRecord> rows(tasks.size() * nb);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (std::size_t ti; (ti = next.fetch_add(1)) < tasks.size();) {
      try {
        const Task& task = tasks[ti];
        QuotientGraph q = gen_topology(task.topology, task.g);
        std::uint64_t s = instance_seed(cfg.seed, task.topology, task.g, task.size, task.sample);
        Circuit c;
        if (cfg.circuit == BenchCircuit::kHardestFanIn) {
          c = gen_hardest_fanin(q.node_count);
        } else {
          Rng rng(s);
          c = gen_random_cz_circuit(q.node_count, task.size, rng);
        }
        Placement p = Placement::round_robin(c.num_qubits, q.node_count);
        std::size_t k = cfg.circuit == BenchCircuit::kHardestFanIn ? c.num_qubits : task.size;
        for (std::size_t bi = 0; bi < nb; ++bi) {
          CompileOptions opt;
          opt.backend = cfg.backends[bi];
          opt.emit = false;
          auto t0 = std::chrono::steady_clock::now();
          CompiledCircuit out = compile(c, p, q, opt);
          auto t1 = std::chrono::steady_clock::now();
          BenchRecord r{task.topology, task.g, q.node_count, q.edges.size(), k,
                        std::string(backend_name(opt.backend)), out.metrics.e_depth,
                        out.metrics.e_count, std::nullopt, s};
          if (cfg.timing) {
            r.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
          }
          rows[ti * nb + bi] = std::move(r);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
      }
    }
  };
  std::size_t workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(1, tasks.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

inline constexpr const char* kBenchCsvHeader =
    "topology,g,nodes,edges,k,backend,e_depth,e_count,wall_time_ms,seed";

inline void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& rows) {
  os << kBenchCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.topology << ',' << r.g << ',' << r.nodes << ',' << r.edges << ',' << r.k << ','
       << r.backend << ',' << r.e_depth << ',' << r.e_count << ',';
    if (r.wall_time_ms) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", *r.wall_time_ms);
      os << buf;
    }
    os << ',' << r.seed << '\n';
  }
}

}  // namespace distqc

#endif  // DISTQC_BENCH_HPP
