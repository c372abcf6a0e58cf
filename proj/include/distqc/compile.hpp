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

#ifndef DISTQC_COMPILE_HPP
#define DISTQC_COMPILE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distqc/circuit.hpp"
#include "distqc/commodity.hpp"
#include "distqc/common.hpp"
#include "distqc/flow_compiler.hpp"
#include "distqc/netmodel.hpp"
#include "distqc/steiner.hpp"
#include "distqc/telegate.hpp"

namespace distqc {

enum class Backend { kFlowExact, kFlowGreedy, kSteiner };

inline std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::kFlowExact: return "flow-exact";
    case Backend::kFlowGreedy: return "flow-greedy";
    case Backend::kSteiner: return "steiner";
  }
  return "?";
}

inline Backend backend_from_name(std::string_view s) {
  for (Backend b : {Backend::kFlowExact, Backend::kFlowGreedy, Backend::kSteiner}) {
    if (backend_name(b) == s) return b;
  }
  throw Error("unknown backend '" + std::string(s) + "'");
}

struct CompileOptions {
  Backend backend = Backend::kFlowGreedy;
  bool emit = true;
  bool cancel_pairs = false;
  BitLabeling labeling = BitLabeling::kFigure;
  SteinerMode steiner_mode = SteinerMode::kAuto;
  std::size_t exact_window = ExactLimits{}.max_commodities;
};

/// Replaces every maximal run of CZ-only layers with its dense fan-in form.
inline Circuit densify_cz_runs(const Circuit& c, bool cancel_pairs = false) {
  auto cz_only = [](const std::vector<Gate>& layer) {
    return !layer.empty() && std::all_of(layer.begin(), layer.end(), [](const Gate& g) {
      return g.kind == GateKind::kCZ || g.kind == GateKind::kFanInCZ;
    });
  };
  Circuit out{c.num_qubits, {}};
  for (std::size_t i = 0; i < c.layers.size();) {
    if (!cz_only(c.layers[i])) {
      out.layers.push_back(c.layers[i++]);
      continue;
    }
    Circuit run{c.num_qubits, {}};
    while (i < c.layers.size() && cz_only(c.layers[i])) run.layers.push_back(c.layers[i++]);
    auto dense = cz_to_dense_fanin(run, cancel_pairs);
    out.layers.insert(out.layers.end(), dense.layers.begin(), dense.layers.end());
  }
  return out;
}

namespace detail {

/// Emits `c` in logical order, running each commodity as a telegate along its
/// scheduled path in its scheduled round.
inline ExtendedCircuit emit_flow(const Circuit& c, const Placement& p, const CommoditySet& cs,
                                 const FlowSchedule& s, BitLabeling labeling) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> of_gate;
  for (std::size_t i = 0; i < cs.size(); ++i) of_gate[{cs[i].layer, cs[i].gate}].push_back(i);
  std::vector<const Assignment*> by_i(cs.size(), nullptr);
  for (const auto& a : s.assignments) by_i.at(a.i) = &a;
  ExtendedBuilder b(c.num_qubits);
  b.labeling = labeling;
  auto hadamard_all = [&](const Gate& g) {
    for (QubitId x : g.q) {
      b.append(Gate::pauli(Basis::kZ, x));
      b.append(Gate::yhalf(x));
    }
  };
  for (std::size_t li = 0; li < c.layers.size(); ++li) {
    for (std::size_t gi : layer_order(c.layers[li])) {
      const Gate& g = c.layers[li][gi];
      auto it = of_gate.find({li, gi});
      if (it == of_gate.end()) {
        b.append(g);
        continue;
      }
      ProcId home = p[g.q[0]];
      bool diag = g.kind == GateKind::kCZ || g.kind == GateKind::kFanInCZ;
      std::vector<QubitId> local;
      for (std::size_t k = 1; k < g.q.size(); ++k) {
        if (p[g.q[k]] == home) local.push_back(g.q[k]);
      }
      if (g.kind == GateKind::kFanOutCX) hadamard_all(g);
      if (!local.empty()) {
        b.append(diag ? Gate::fanin_cz(g.q[0], local) : Gate::fanin_cx(g.q[0], local));
      }
      for (std::size_t i : it->second) {
        const Assignment* a = by_i[i];
        if (!a) throw Error("schedule misses commodity " + std::to_string(i));
        TreeTelegate t;
        t.root = g.q[0];
        t.root_proc = home;
        t.targets[cs[i].target] = cs[i].qubits;
        t.tree = a->path;
        t.action = diag ? TargetAction::kCZ : TargetAction::kCX;
        t.round = static_cast<int>(a->tau);
        b.telegate(t);
      }
      if (g.kind == GateKind::kFanOutCX) hadamard_all(g);
    }
  }
  return b.finish();
}

}  // namespace detail

/// Commodities [begin, end) with their relations, renumbered from 0.
inline CommoditySet restrict_commodities(const CommoditySet& cs, std::size_t begin,
                                         std::size_t end) {
  std::vector<Commodity> items(cs.items().begin() + static_cast<std::ptrdiff_t>(begin),
                               cs.items().begin() + static_cast<std::ptrdiff_t>(end));
  CommoditySet out(std::move(items));
  for (std::size_t i = begin; i < end; ++i) {
    for (std::size_t j : cs.preds(i)) {
      if (j >= begin) out.add_precedence(j - begin, i - begin);
    }
  }
  for (auto [a, b] : cs.qpar_pairs()) {
    if (a >= begin && b < end) out.add_quasi_parallel(a - begin, b - begin);
  }
  return out;
}

/// Quickest flow with the exact sub-solver over consecutive windows of at most
/// `window` commodities, each window starting after the previous one ends.
inline FlowSchedule windowed_exact_flow(const QuotientGraph& q, const CommoditySet& cs,
                                        std::size_t window) {
  if (window == 0) throw Error("exact window must be positive");
  FlowSchedule s;
  for (std::size_t begin = 0; begin < cs.size(); begin += window) {
    std::size_t end = std::min(cs.size(), begin + window);
    FlowSchedule part = quickest_flow(q, restrict_commodities(cs, begin, end)).schedule;
    for (auto a : part.assignments) {
      a.i += begin;
      a.tau += s.d;
      s.assignments.push_back(std::move(a));
    }
    s.d += part.d;
  }
  return s;
}

/// Compiles `c` under placement `p` onto the quotient graph `q`.
inline CompiledCircuit compile(const Circuit& c, const Placement& p, const QuotientGraph& q,
                               const CompileOptions& opt = {}) {
  if (auto v = validate_layers(c)) throw Error("invalid circuit: " + v->reason);
  p.check(c.num_qubits, q.node_count);
  if (opt.backend == Backend::kSteiner) {
    SteinerOptions so;
    so.mode = opt.steiner_mode;
    so.emit = opt.emit;
    so.labeling = opt.labeling;
    return compile_fanin_circuit(densify_cz_runs(c, opt.cancel_pairs), p, q, so);
  }
  CommoditySet cs = extract_commodities(c, p);
  CompiledCircuit out;
  if (!cs.empty()) {
    out.schedule = opt.backend == Backend::kFlowExact
                       ? windowed_exact_flow(q, cs, opt.exact_window)
                       : iterative_greedy(q, cs);
  }
  if (auto v = check_feasible(out.schedule, q, cs)) {
    throw Error("internal error: infeasible schedule (" + v->constraint + "): " + v->message);
  }
  out.metrics = metrics(out.schedule);
  if (opt.emit) out.circuit = detail::emit_flow(c, p, cs, out.schedule, opt.labeling);
  return out;
}

}  // namespace distqc

#endif  // DISTQC_COMPILE_HPP
