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

// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "distqc/distqc.hpp"

namespace {

using namespace distqc;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// ---------------------------------------------------------------- 1, 2

Outcome topology_sizes() {
  struct Want {
    const char* name;
    std::size_t p, e;
  };
  Outcome o;
  std::ostringstream d;
  for (const Want& w : {Want{"hex", 96, 131}, Want{"rect-low", 49, 84}, Want{"rect-high", 144, 264}}) {
    QuotientGraph q = gen_topology(w.name, 11);
    d << w.name << "(11)=(" << q.node_count << "," << q.edges.size() << ") ";
    o.pass &= q.node_count == w.p && q.edges.size() == w.e;
  }
  o.detail = d.str();
  return o;
}

Outcome ratio_limits() {
  Outcome o;
  std::ostringstream d;
  for (auto [name, want] : {std::pair<const char*, double>{"rect-low", 2.0}, {"rect-high", 2.0}, {"hex", 1.5}}) {
    double r = edge_node_ratio(gen_topology(name, 50)).value();
    d << name << " " << fmt("%.4f", r) << " ";
    o.pass &= std::abs(r - want) <= 0.1;
  }
  o.detail = d.str();
  return o;
}

// ---------------------------------------------------------------- 3

Outcome depth_four_telegates() {
  Outcome o;
  for (std::size_t m = 1; m <= 6; ++m) {
    std::vector<ProcId> path;
    for (std::size_t i = 0; i <= m; ++i) path.push_back(static_cast<ProcId>(i));
    ExtendedCircuit ec =
        expand_telegate_cx(0, static_cast<ProcId>(m), path, nullptr, BitLabeling::kTheorem);
    XorExpr odd, even;
    for (std::size_t k = 1; k <= m; ++k) {
      odd ^= XorExpr::bit(static_cast<BitId>(2 * k - 1));
      even ^= XorExpr::bit(static_cast<BitId>(2 * k));
    }
    bool ok = quantum_depth(ec.gates, ec.num_qubits) == 4 && ec.frame[0].z == odd &&
              ec.frame[0].x.empty() && ec.frame[1].x == even && ec.frame[1].z.empty();
    for (std::size_t qb = 2; qb < ec.frame.size(); ++qb) {
      ok &= ec.frame[static_cast<QubitId>(qb)].x.empty() && ec.frame[static_cast<QubitId>(qb)].z.empty();
    }
    if (!ok) {
      o.pass = false;
      o.detail += "m=" + std::to_string(m) + " wrong; ";
    }
  }
  if (o.pass) o.detail = "m=1..6: 4 slices, control Z^{odd}, target X^{even}";
  return o;
}

// ---------------------------------------------------------------- 4, 5

Outcome hardest_fanin() {
  Outcome o;
  std::ostringstream d;
  for (std::size_t n = 3; n <= 8; ++n) {
    CompileOptions opt;
    opt.backend = Backend::kSteiner;
    Circuit c = gen_hardest_fanin(n);
    CompiledCircuit out = compile(c, Placement::identity(n), gen_path(n), opt);
    Rng rng(n);
    bool eq = channel_equivalent(out.circuit, c, 5, 3, rng);
    bool ok = out.metrics.e_count == n * (n - 1) / 2 && out.metrics.e_depth == n - 1 && eq;
    d << "n=" << n << ":(" << out.metrics.e_count << "," << out.metrics.e_depth << ") ";
    o.pass &= ok;
  }
  o.detail = d.str();
  return o;
}

Outcome cz_densification() {
  Outcome o;
  std::ostringstream d;
  for (std::size_t n = 3; n <= 10; ++n) {
    Circuit c{n, {}};
    for (QubitId a = 0; a < n; ++a) {
      for (QubitId b = a + 1; b < n; ++b) c.layers.push_back({Gate::cz(a, b)});
    }
    Circuit dense = cz_to_dense_fanin(c).to_circuit(n);
    std::multiset<std::pair<QubitId, QubitId>> before, after;
    for (const Gate& g : flatten(c)) before.insert({g.q[0], g.q[1]});
    for (const Gate& g : flatten(dense)) {
      for (std::size_t i = 1; i < g.q.size(); ++i) after.insert({std::min(g.q[0], g.q[i]), std::max(g.q[0], g.q[i])});
    }
    o.pass &= dense.layers.size() <= n - 1 && before == after && !validate_layers(dense);
    d << dense.layers.size() << (n < 10 ? "," : "");
  }
  o.detail = "layers for n=3..10: " + d.str();
  return o;
}

// ---------------------------------------------------------------- 6, 7

QuotientGraph random_graph(std::size_t n, std::uint32_t max_cap, Rng& rng) {
  std::vector<std::pair<ProcId, ProcId>> pairs;
  std::set<std::pair<ProcId, ProcId>> have;
  auto add = [&](ProcId a, ProcId b) {
    if (a == b || !have.insert({std::min(a, b), std::max(a, b)}).second) return;
    std::uint32_t cap = 1 + static_cast<std::uint32_t>(rng() % max_cap);
    for (std::uint32_t c = 0; c < cap; ++c) pairs.push_back({a, b});
  };
  for (std::size_t v = 1; v < n; ++v) add(static_cast<ProcId>(rng() % v), static_cast<ProcId>(v));
  for (std::size_t k = 0; k < n; ++k) add(static_cast<ProcId>(rng() % n), static_cast<ProcId>(rng() % n));
  return quotient_from_edges(n, pairs);
}

CommoditySet random_instance(const QuotientGraph& q, std::size_t k, Rng& rng) {
  std::vector<Commodity> items;
  for (std::size_t i = 0; i < k; ++i) {
    Commodity c;
    c.source = static_cast<ProcId>(rng() % q.node_count);
    c.target = static_cast<ProcId>(rng() % (q.node_count - 1));
    if (c.target >= c.source) ++c.target;
    items.push_back(c);
  }
  CommoditySet cs(items);
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (rng() % 3 == 0) {
        cs.add_precedence(j, i);
        if (rng() % 2) cs.add_quasi_parallel(i, j);
      }
    }
  }
  return cs;
}

// Minimum E-count over all (step, simple path) assignments passing
// check_feasible at horizon d.
std::optional<std::size_t> enumerate_mcf(const QuotientGraph& q, const CommoditySet& cs, std::size_t d) {
  auto adj = q.adjacency();
  std::size_t k = cs.size();
  std::vector<std::vector<EdgeList>> paths(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<ProcId> cur{cs[i].source};
    std::vector<bool> on(q.node_count, false);
    on[cs[i].source] = true;
    std::function<void(ProcId)> go = [&](ProcId u) {
      if (u == cs[i].target) {
        paths[i].push_back(edges_of(cur));
        return;
      }
      for (auto [v, e] : adj[u]) {
        if (on[v]) continue;
        on[v] = true;
        cur.push_back(v);
        go(v);
        cur.pop_back();
        on[v] = false;
      }
    };
    go(cs[i].source);
  }
  FlowSchedule s{d, std::vector<Assignment>(k)};
  std::optional<std::size_t> best;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t cost) {
    if (best && cost >= *best) return;
    if (i == k) {
      if (!check_feasible(s, q, cs)) best = cost;
      return;
    }
    for (const auto& p : paths[i]) {
      for (std::size_t t = 1; t <= d; ++t) {
        s.assignments[i] = {i, t, p};
        rec(i + 1, cost + p.size());
      }
    }
  };
  rec(0, 0);
  return best;
}

Outcome exact_oracle() {
  Rng rng(606);
  Outcome o;
  std::size_t agree = 0;
  for (int inst = 0; inst < 200; ++inst) {
    std::size_t n = 2 + rng() % 4;
    QuotientGraph q = random_graph(n, 2, rng);
    CommoditySet cs = random_instance(q, 1 + rng() % 4, rng);
    std::size_t d_star = 0, f_star = 0;
    for (std::size_t d = 1; d <= cs.size(); ++d) {
      if (auto f = enumerate_mcf(q, cs, d)) {
        d_star = d;
        f_star = *f;
        break;
      }
    }
    FlowSchedule s = quickest_flow(q, cs).schedule;
    bool ok = s.d == d_star && metrics(s).e_count == f_star && !check_feasible(s, q, cs);
    agree += ok;
    if (!ok && o.pass) {
      o.pass = false;
      o.detail = "instance " + std::to_string(inst) + ": solver (" + std::to_string(s.d) + "," +
                 std::to_string(metrics(s).e_count) + ") vs enumeration (" + std::to_string(d_star) +
                 "," + std::to_string(f_star) + "); ";
    }
  }
  o.detail += std::to_string(agree) + "/200 instances agree on (d, f)";
  return o;
}

Outcome greedy_soundness() {
  Rng rng(707);
  Outcome o;
  std::size_t feasible = 0, dominated = 0, compared = 0;
  for (int inst = 0; inst < 500; ++inst) {
    std::size_t n = 3 + rng() % 8;
    QuotientGraph q = random_graph(n, 2, rng);
    CommoditySet cs = random_instance(q, 1 + rng() % 7, rng);
    FlowSchedule g = iterative_greedy(q, cs);
    feasible += !check_feasible(g, q, cs);
    ExactLimits lim;
    if (cs.size() <= lim.max_commodities && q.node_count <= lim.max_nodes) {
      ++compared;
      dominated += g.d >= quickest_flow(q, cs).schedule.d;
    }
  }
  o.pass = feasible == 500 && dominated == compared;
  o.detail = std::to_string(feasible) + "/500 feasible, greedy d >= exact d on " +
             std::to_string(dominated) + "/" + std::to_string(compared);
  return o;
}

// ---------------------------------------------------------------- 8

Outcome lattice_trend() {
  BenchConfig cfg;
  cfg.topologies = {"rect-low", "hex"};
  cfg.g = {2, 3, 4, 5};
  cfg.sizes = {64, 128};
  cfg.samples = 10;
  cfg.backends = {Backend::kFlowGreedy};
  cfg.seed = 2026;
  std::map<std::tuple<std::string, std::size_t, std::size_t>, double> sum;
  for (const auto& r : run_bench(cfg)) sum[{r.topology, r.g, r.k}] += static_cast<double>(r.e_depth);
  Outcome o;
  std::ostringstream d;
  for (std::size_t g : cfg.g) {
    for (std::size_t k : cfg.sizes) {
      double rect = sum[{"rect-low", g, k}] / 10, hex = sum[{"hex", g, k}] / 10;
      bool ok = rect <= hex;
      o.pass &= ok;
      d << "g=" << g << ",k=" << k << fmt(": %.1f vs %.1f", rect, hex) << (ok ? "" : " (x)") << "; ";
    }
  }
  o.detail = "mean E-depth rect-low vs hex " + d.str();
  return o;
}

// ---------------------------------------------------------------- 9

Outcome channel_equivalence() {
  Rng rng(909);
  QuotientGraph q = gen_grid(2, 3);
  const Backend backends[] = {Backend::kFlowExact, Backend::kFlowGreedy, Backend::kSteiner};
  std::map<Backend, std::size_t> equivalent, caught;
  std::size_t resampled = 0;
  for (int i = 0; i < 100; ++i) {
    Circuit c;
    Placement p;
    // Circuits without any remote gate cannot exercise a correction; draw again.
    while (true) {
      std::size_t n = 3 + rng() % 4;
      c = gen_random_clifford_circuit(n, 8 + rng() % 13, rng);
      p = Placement::round_robin(n, q.node_count);
      if (!extract_commodities(c, p).empty()) break;
      ++resampled;
    }
    for (Backend b : backends) {
      CompileOptions opt;
      opt.backend = b;
      CompiledCircuit out = compile(c, p, q, opt);
      Rng vr(static_cast<std::uint64_t>(i) * 7 + static_cast<std::uint64_t>(b));
      equivalent[b] += channel_equivalent(out.circuit, c, 20, 10, vr);
      Rng nr(static_cast<std::uint64_t>(i) * 7 + static_cast<std::uint64_t>(b));
      caught[b] += !check_channel(drop_corrections(out.circuit), c, 20, 10, nr).ok();
    }
  }
  Outcome o;
  std::ostringstream d;
  for (Backend b : backends) {
    o.pass &= equivalent[b] == 100 && caught[b] >= 99;
    d << backend_name(b) << " " << equivalent[b] << "/100 equivalent, " << caught[b]
      << "/100 drops caught; ";
  }
  d << resampled << " local-only circuits redrawn";
  o.detail = d.str();
  return o;
}

// ---------------------------------------------------------------- 10

Outcome pushing_correctness() {
  struct Rule {
    Gate gate;
    Basis pauli;
    QubitId qubit;
  };
  const Rule rules[] = {
      {Gate::cx(0, 1), Basis::kX, 0}, {Gate::cx(0, 1), Basis::kZ, 0}, {Gate::cx(0, 1), Basis::kX, 1},
      {Gate::cx(0, 1), Basis::kZ, 1}, {Gate::cz(0, 1), Basis::kX, 0}, {Gate::cz(0, 1), Basis::kZ, 0},
      {Gate::yhalf(0), Basis::kX, 0}, {Gate::yhalf(0), Basis::kZ, 0},
  };
  Rng rng(1010);
  std::size_t rules_ok = 0;
  for (const Rule& r : rules) {
    bool ok = true;
    for (int trial = 0; trial < 50; ++trial) {
      bool fire = rng() % 2;
      std::vector<std::uint8_t> bits{0, fire};
      CondPauli p{r.pauli, r.qubit, XorExpr::bit(1)};
      auto pushed = push_pauli(r.gate, p);
      auto prefix = random_clifford_prefix(2, rng);
      auto run = [&](bool before) {
        // Qubits 0, 1 data; 2, 3 references.
        StabilizerState s(4);
        for (QubitId i = 0; i < 2; ++i) {
          s.h(i + 2);
          s.cx(i + 2, i);
        }
        for (const Gate& g : prefix) s.apply(g);
        Branch b{bits};
        if (before) {
          run_gates(s, {Gate::pauli(p.pauli, p.qubit, p.cond), r.gate}, b, rng);
        } else {
          std::vector<Gate> seq{r.gate};
          for (const auto& c : pushed) seq.push_back(Gate::pauli(c.pauli, c.qubit, c.cond));
          run_gates(s, seq, b, rng);
        }
        return s.canonical_stabilizers();
      };
      ok &= run(true) == run(false);
    }
    rules_ok += ok;
  }
  // Normalization: compiled circuits with their frame written out as trailing
  // conditioned Paulis, plus identities P^c G P'^c (P' the pushed P) inserted
  // around CX, CZ and Y^{1/2} gates after the first measurement.
  QuotientGraph q = gen_grid(2, 3);
  std::size_t normalized_ok = 0;
  for (int i = 0; i < 20; ++i) {
    std::size_t n = 3 + rng() % 4;
    Circuit c = gen_random_clifford_circuit(n, 12, rng);
    ExtendedCircuit ec = compile(c, Placement::round_robin(n, q.node_count), q).circuit;
    ExtendedCircuit raw = ec;
    raw.gates.clear();
    std::vector<BitId> measured;
    for (const Gate& g : ec.gates) {
      bool pushable = g.kind == GateKind::kCX || g.kind == GateKind::kCZ || g.kind == GateKind::kYHalf;
      if (pushable && !measured.empty() && rng() % 2) {
        CondPauli cp{rng() % 2 ? Basis::kX : Basis::kZ, g.q[rng() % g.q.size()],
                     XorExpr::bit(measured[rng() % measured.size()])};
        raw.gates.push_back(Gate::pauli(cp.pauli, cp.qubit, cp.cond));
        raw.gates.push_back(g);
        for (const auto& o : push_pauli(g, cp)) raw.gates.push_back(Gate::pauli(o.pauli, o.qubit, o.cond));
      } else {
        raw.gates.push_back(g);
      }
      if (g.kind == GateKind::kMeas) measured.push_back(g.bit);
    }
    for (std::size_t qb = 0; qb < raw.frame.size(); ++qb) {
      auto& e = raw.frame[static_cast<QubitId>(qb)];
      if (!e.x.empty()) raw.gates.push_back(Gate::pauli(Basis::kX, static_cast<QubitId>(qb), e.x));
      if (!e.z.empty()) raw.gates.push_back(Gate::pauli(Basis::kZ, static_cast<QubitId>(qb), e.z));
      e = {};
    }
    ExtendedCircuit norm = normalize_frame(raw);
    bool clean = true;
    for (const Gate& g : norm.gates) clean &= g.kind != GateKind::kPauli;
    Rng va(i), vb(i);
    bool raw_eq = channel_equivalent(raw, c, 5, 5, va);
    bool norm_eq = channel_equivalent(norm, c, 5, 5, vb);
    normalized_ok += clean && raw_eq && norm_eq;
  }
  Outcome o;
  o.pass = rules_ok == 8 && normalized_ok == 20;
  o.detail = std::to_string(rules_ok) + "/8 push rules hold on 50 trials; " +
             std::to_string(normalized_ok) + "/20 normalized circuits Pauli-free and equivalent";
  return o;
}

// ---------------------------------------------------------------- 11

Outcome steiner_approximation() {
  Rng rng(1111);
  Outcome o;
  std::size_t ok = 0;
  std::size_t ratio_num = 0, ratio_den = 0;
  const char* kinds[] = {"rect-low", "rect-high", "hex"};
  for (int i = 0; i < 100; ++i) {
    QuotientGraph q = gen_topology(kinds[i % 3], 1 + rng() % 4);
    std::size_t want = std::min<std::size_t>(q.node_count, 2 + rng() % 7);
    std::set<ProcId> ts;
    while (ts.size() < want) ts.insert(static_cast<ProcId>(rng() % q.node_count));
    std::vector<ProcId> terms(ts.begin(), ts.end());
    std::size_t a = steiner_tree(q, terms, SteinerMode::kApprox).size();
    std::size_t e = steiner_tree(q, terms, SteinerMode::kExact).size();
    ok += a <= 2 * e && e <= a;
    ratio_num += a;
    ratio_den += e;
  }
  o.pass = ok == 100;
  o.detail = std::to_string(ok) + "/100 within bounds; total approx/exact weight " +
             fmt("%.3f", static_cast<double>(ratio_num) / static_cast<double>(ratio_den));
  return o;
}

// ---------------------------------------------------------------- 12

Outcome determinism() {
  BenchConfig cfg;
  cfg.topologies = {"rect-low", "rect-high", "hex"};
  cfg.g = {2, 3};
  cfg.sizes = {16, 32};
  cfg.samples = 3;
  cfg.backends = {Backend::kFlowGreedy, Backend::kSteiner, Backend::kFlowExact};
  cfg.seed = 12;
  std::ostringstream a, b;
  cfg.threads = 1;
  write_bench_csv(a, run_bench(cfg));
  cfg.threads = 0;
  write_bench_csv(b, run_bench(cfg));
  Outcome o;
  o.pass = a.str() == b.str();
  o.detail = std::to_string(a.str().size()) + " CSV bytes, " + (o.pass ? "identical" : "different");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "topology sizes", 1, topology_sizes},
      {2, "ratio limits", 1, ratio_limits},
      {3, "depth-4 telegates", 1, depth_four_telegates},
      {4, "hardest fan-in optimality", 5, hardest_fanin},
      {5, "CZ densification bound", 1, cz_densification},
      {6, "exact solver oracle", 60, exact_oracle},
      {7, "greedy soundness and dominance", 120, greedy_soundness},
      {8, "lattice trend", 600, lattice_trend},
      {9, "channel equivalence", 600, channel_equivalence},
      {10, "pushing correctness", 30, pushing_correctness},
      {11, "Steiner approximation", 60, steiner_approximation},
      {12, "determinism", 600, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) {
      o.pass = false;
      o.detail += fmt(" [over the %.0f s budget]", c.budget_s);
    }
    failed += !o.pass;
    std::printf("%s %d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
