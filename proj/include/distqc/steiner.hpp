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

#ifndef DISTQC_STEINER_HPP
#define DISTQC_STEINER_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "distqc/circuit.hpp"
#include "distqc/commodity.hpp"
#include "distqc/common.hpp"
#include "distqc/flow_compiler.hpp"
#include "distqc/netmodel.hpp"
#include "distqc/telegate.hpp"

namespace distqc {

/// A Steiner problem on the quotient graph with unit edge weights.
struct SteinerInstance {
  const QuotientGraph& graph;
  std::vector<ProcId> terminals;
};

namespace detail {

using Adjacency = std::vector<std::vector<std::pair<ProcId, std::size_t>>>;

/// BFS parents from `src`; ties go to the lowest-numbered neighbor.
inline std::vector<long> bfs_parents(const Adjacency& adj, ProcId src) {
  std::vector<long> parent(adj.size(), -2);
  std::queue<ProcId> queue;
  parent[src] = -1;
  queue.push(src);
  while (!queue.empty()) {
    ProcId u = queue.front();
    queue.pop();
    for (auto [v, e] : adj[u]) {
      if (parent[v] == -2) {
        parent[v] = static_cast<long>(u);
        queue.push(v);
      }
    }
  }
  return parent;
}

inline std::pair<ProcId, ProcId> norm_edge(ProcId a, ProcId b) {
  return {std::min(a, b), std::max(a, b)};
}

/// Adds the tree path from `v` back to the BFS source.
inline void add_parent_path(const std::vector<long>& parent, ProcId v,
                            std::set<std::pair<ProcId, ProcId>>& edges) {
  if (parent[v] == -2) throw Error("Steiner terminals are disconnected");
  for (long u = v; parent[u] >= 0; u = parent[u]) {
    edges.insert(norm_edge(static_cast<ProcId>(parent[u]), static_cast<ProcId>(u)));
  }
}

inline std::vector<ProcId> checked_terminals(const QuotientGraph& q, std::vector<ProcId> t) {
  for (ProcId p : t) {
    if (p >= q.node_count) throw Error("terminal " + std::to_string(p) + " is not in the graph");
  }
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

/// Spanning tree of the edge set (BFS from the first terminal), with
/// non-terminal leaves pruned repeatedly.
inline EdgeList tidy_tree(std::size_t n, const std::set<std::pair<ProcId, ProcId>>& edges,
                          const std::vector<ProcId>& terminals) {
  if (terminals.size() <= 1) return {};
  std::vector<std::vector<ProcId>> nb(n);
  for (auto [a, b] : edges) {
    nb[a].push_back(b);
    nb[b].push_back(a);
  }
  for (auto& v : nb) std::sort(v.begin(), v.end());
  std::vector<long> parent(n, -2);
  std::queue<ProcId> queue;
  parent[terminals[0]] = -1;
  queue.push(terminals[0]);
  std::set<std::pair<ProcId, ProcId>> tree;
  while (!queue.empty()) {
    ProcId u = queue.front();
    queue.pop();
    for (ProcId v : nb[u]) {
      if (parent[v] != -2) continue;
      parent[v] = static_cast<long>(u);
      tree.insert(norm_edge(u, v));
      queue.push(v);
    }
  }
  for (ProcId t : terminals) {
    if (parent[t] == -2) throw Error("Steiner terminals are disconnected");
  }
  std::vector<std::uint8_t> is_term(n, 0);
  for (ProcId t : terminals) is_term[t] = 1;
  std::vector<std::size_t> deg(n, 0);
  for (auto [a, b] : tree) {
    ++deg[a];
    ++deg[b];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = tree.begin(); it != tree.end();) {
      auto [a, b] = *it;
      if ((deg[a] == 1 && !is_term[a]) || (deg[b] == 1 && !is_term[b])) {
        --deg[a];
        --deg[b];
        it = tree.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  return EdgeList(tree.begin(), tree.end());
}

/// Edge indices of an edge list.
inline std::vector<std::size_t> tree_edge_ids(const Adjacency& adj, const EdgeList& edges) {
  std::vector<std::size_t> ids;
  for (auto [a, b] : edges) ids.push_back(hop_edges(adj, {a, b}).front());
  return ids;
}

inline bool is_full_grid(const QuotientGraph& q) {
  if (!q.grid) return false;
  std::size_t r = q.grid->rows, c = q.grid->cols;
  if (r * c != q.node_count || q.edges.size() != r * (c - 1) + c * (r - 1)) return false;
  for (const auto& e : q.edges) {
    std::size_t ra = e.u / c, ca = e.u % c, rb = e.v / c, cb = e.v % c;
    bool horiz = ra == rb && cb == ca + 1;
    bool vert = ca == cb && rb == ra + 1;
    if (!horiz && !vert) return false;
  }
  return true;
}

/// Dreyfus-Wagner over the metric closure restricted to `nodes` (which must
/// contain every terminal and, for exactness, the nodes of some optimal tree).
inline EdgeList dreyfus_wagner(const QuotientGraph& q, const std::vector<ProcId>& terminals,
                               std::vector<ProcId> nodes) {
  std::size_t k = terminals.size();
  if (k <= 1) return {};
  Adjacency adj = q.adjacency();
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::size_t nn = nodes.size();
  std::map<ProcId, std::size_t> index;
  for (std::size_t i = 0; i < nn; ++i) index[nodes[i]] = i;
  std::vector<std::vector<long>> parents(nn);
  std::vector<std::vector<std::size_t>> dist(nn, std::vector<std::size_t>(nn));
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;
  for (std::size_t i = 0; i < nn; ++i) {
    parents[i] = bfs_parents(adj, nodes[i]);
    auto d = QuotientGraph::bfs_from(adj, nodes[i]);
    for (std::size_t j = 0; j < nn; ++j) {
      dist[i][j] = d[nodes[j]] == static_cast<std::size_t>(-1) ? kInf : d[nodes[j]];
    }
  }
  std::size_t m = k - 1;  // terminals in the masks; the last one is the root
  std::size_t full = (std::size_t{1} << m) - 1;
  std::vector<std::vector<std::size_t>> dp(full + 1, std::vector<std::size_t>(nn, kInf));
  std::vector<std::vector<std::size_t>> split_val(full + 1, std::vector<std::size_t>(nn, kInf));
  std::vector<std::vector<std::size_t>> split_sub(full + 1, std::vector<std::size_t>(nn, 0));
  std::vector<std::vector<std::size_t>> from(full + 1, std::vector<std::size_t>(nn, 0));
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t t = index.at(terminals[i]);
    std::size_t mask = std::size_t{1} << i;
    for (std::size_t v = 0; v < nn; ++v) {
      dp[mask][v] = dist[t][v];
      from[mask][v] = t;
    }
  }
  for (std::size_t mask = 1; mask <= full; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;
    std::size_t low = mask & (~mask + 1);
    for (std::size_t u = 0; u < nn; ++u) {
      // Sub-masks containing the lowest bit enumerate each split once.
      for (std::size_t s = (mask - 1) & mask; s; s = (s - 1) & mask) {
        if (!(s & low)) continue;
        std::size_t val = dp[s][u] + dp[mask ^ s][u];
        if (val < split_val[mask][u]) {
          split_val[mask][u] = val;
          split_sub[mask][u] = s;
        }
      }
    }
    for (std::size_t v = 0; v < nn; ++v) {
      for (std::size_t u = 0; u < nn; ++u) {
        std::size_t val = split_val[mask][u] + dist[u][v];
        if (val < dp[mask][v]) {
          dp[mask][v] = val;
          from[mask][v] = u;
        }
      }
    }
  }
  std::size_t root = index.at(terminals[m]);
  if (dp[full][root] >= kInf) throw Error("Steiner terminals are disconnected");

  std::set<std::pair<ProcId, ProcId>> edges;
  auto add_path = [&](std::size_t u, std::size_t v) {
    if (u != v) add_parent_path(parents[u], nodes[v], edges);
  };
  std::vector<std::pair<std::size_t, std::size_t>> stack{{full, root}};
  while (!stack.empty()) {
    auto [mask, v] = stack.back();
    stack.pop_back();
    std::size_t u = from[mask][v];
    add_path(u, v);
    if ((mask & (mask - 1)) == 0) continue;
    std::size_t s = split_sub[mask][u];
    stack.push_back({s, u});
    stack.push_back({mask ^ s, u});
  }
  return tidy_tree(q.node_count, edges, terminals);
}

}  // namespace detail

/// Metric-closure MST heuristic: MST over terminal distances, expanded into
/// shortest paths, re-spanned and pruned. Weight at most 2(1 - 1/l) OPT.
inline EdgeList steiner_tree_approx(const SteinerInstance& inst) {
  const QuotientGraph& q = inst.graph;
  auto t = detail::checked_terminals(q, inst.terminals);
  if (t.size() <= 1) return {};
  auto adj = q.adjacency();
  std::size_t k = t.size();
  std::vector<std::vector<long>> parents(k);
  std::vector<std::vector<std::size_t>> dist(k);
  for (std::size_t i = 0; i < k; ++i) {
    parents[i] = detail::bfs_parents(adj, t[i]);
    dist[i] = QuotientGraph::bfs_from(adj, t[i]);
  }
  // Prim from terminal 0; ties go to the lowest index.
  std::vector<std::uint8_t> in(k, 0);
  std::vector<std::size_t> best(k, static_cast<std::size_t>(-1)), via(k, 0);
  in[0] = 1;
  for (std::size_t j = 1; j < k; ++j) best[j] = dist[0][t[j]], via[j] = 0;
  std::set<std::pair<ProcId, ProcId>> edges;
  for (std::size_t step = 1; step < k; ++step) {
    std::size_t pick = k;
    for (std::size_t j = 0; j < k; ++j) {
      if (!in[j] && (pick == k || best[j] < best[pick])) pick = j;
    }
    if (best[pick] == static_cast<std::size_t>(-1)) throw Error("Steiner terminals are disconnected");
    in[pick] = 1;
    detail::add_parent_path(parents[via[pick]], t[pick], edges);
    for (std::size_t j = 0; j < k; ++j) {
      if (!in[j] && dist[pick][t[j]] < best[j]) {
        best[j] = dist[pick][t[j]];
        via[j] = pick;
      }
    }
  }
  return detail::tidy_tree(q.node_count, edges, t);
}

inline constexpr std::size_t kMaxExactTerminals = 10;

/// Minimum Steiner tree by Dreyfus-Wagner. On full rectangular lattices the
/// candidate Steiner points are restricted to the Hanan grid of the terminals.
inline EdgeList steiner_tree_exact(const SteinerInstance& inst) {
  const QuotientGraph& q = inst.graph;
  auto t = detail::checked_terminals(q, inst.terminals);
  if (t.size() > kMaxExactTerminals) {
    throw Error("exact Steiner solver is limited to " + std::to_string(kMaxExactTerminals) +
                " terminals");
  }
  if (t.size() <= 1) return {};
  std::vector<ProcId> nodes;
  if (detail::is_full_grid(q)) {
    std::size_t c = q.grid->cols;
    std::set<std::size_t> rows, cols;
    for (ProcId p : t) {
      rows.insert(p / c);
      cols.insert(p % c);
    }
    for (std::size_t r : rows) {
      for (std::size_t col : cols) nodes.push_back(static_cast<ProcId>(r * c + col));
    }
  } else {
    for (std::size_t p = 0; p < q.node_count; ++p) nodes.push_back(static_cast<ProcId>(p));
  }
  return detail::dreyfus_wagner(q, t, nodes);
}

enum class SteinerMode { kAuto, kApprox, kExact };

/// kAuto: exact on full rectangular lattices (up to the terminal limit), the
/// approximation elsewhere.
inline EdgeList steiner_tree(const QuotientGraph& q, const std::vector<ProcId>& terminals,
                             SteinerMode mode) {
  SteinerInstance inst{q, terminals};
  bool exact = mode == SteinerMode::kExact ||
               (mode == SteinerMode::kAuto && detail::is_full_grid(q) &&
                detail::checked_terminals(q, terminals).size() <= kMaxExactTerminals);
  return exact ? steiner_tree_exact(inst) : steiner_tree_approx(inst);
}

/// Layers of fan-in gates on pairwise disjoint qubits.
struct FanInLayering {
  std::vector<std::vector<Gate>> layers;
  Circuit to_circuit(std::size_t num_qubits) const { return Circuit{num_qubits, layers}; }
};

/// Rewrites a CZ-only circuit as dense CZ fan-ins. Qubits are visited in order
/// of decreasing CZ incidence; each visit takes one copy of every uncovered CZ
/// to a distinct partner as one fan-in, and passes repeat until every CZ is
/// covered. Fan-ins are then packed first-fit into disjoint layers. With
/// `cancel_pairs`, repeated pairs cancel modulo 2 first.
inline FanInLayering cz_to_dense_fanin(const Circuit& c, bool cancel_pairs = false) {
  std::map<std::pair<QubitId, QubitId>, std::size_t> mult;
  for (const auto& layer : c.layers) {
    for (const Gate& g : layer) {
      check_gate(g, c.num_qubits);
      if (g.kind != GateKind::kCZ && g.kind != GateKind::kFanInCZ) {
        throw Error("cz_to_dense_fanin got a " + std::string(kind_name(g.kind)) + " gate");
      }
      for (std::size_t i = 1; i < g.q.size(); ++i) {
        ++mult[{std::min(g.q[0], g.q[i]), std::max(g.q[0], g.q[i])}];
      }
    }
  }
  if (cancel_pairs) {
    for (auto it = mult.begin(); it != mult.end();) {
      it->second %= 2;
      it = it->second ? std::next(it) : mult.erase(it);
    }
  }
  std::size_t n = c.num_qubits;
  // Remaining copies per qubit and partner.
  std::vector<std::map<QubitId, std::size_t>> left(n);
  std::vector<std::size_t> count(n, 0);
  for (auto [pair, m] : mult) {
    left[pair.first][pair.second] += m;
    left[pair.second][pair.first] += m;
    count[pair.first] += m;
    count[pair.second] += m;
  }
  std::vector<QubitId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<QubitId>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](QubitId a, QubitId b) { return count[a] > count[b]; });
  std::vector<Gate> gates;
  bool any = true;
  while (any) {
    any = false;
    for (QubitId u : order) {
      std::vector<QubitId> partners;
      for (auto& [v, m] : left[u]) {
        if (m == 0) continue;
        partners.push_back(v);
        --m;
        --left[v][u];
      }
      if (partners.empty()) continue;
      any = true;
      gates.push_back(Gate::fanin_cz(u, partners));
    }
  }
  FanInLayering out;
  std::vector<std::vector<std::uint8_t>> used;
  for (Gate& g : gates) {
    std::size_t l = 0;
    for (; l < out.layers.size(); ++l) {
      bool free = std::none_of(g.q.begin(), g.q.end(), [&](QubitId q) { return used[l][q]; });
      if (free) break;
    }
    if (l == out.layers.size()) {
      out.layers.emplace_back();
      used.emplace_back(n, 0);
    }
    for (QubitId q : g.q) used[l][q] = 1;
    out.layers[l].push_back(std::move(g));
  }
  return out;
}

struct SteinerOptions {
  SteinerMode mode = SteinerMode::kAuto;
  bool emit = true;
  BitLabeling labeling = BitLabeling::kFigure;
};

/// A compiled circuit: the extended circuit (empty unless emitted), one
/// schedule entry per remote gate with its tree, and the metrics.
struct CompiledCircuit {
  ExtendedCircuit circuit;
  FlowSchedule schedule;
  ScheduleMetrics metrics;
};

/// Compiles layers of entangling gates with one entanglement tree per remote
/// gate. Each layer takes one E-round; when trees of one layer overflow an
/// edge capacity the layer is split first-fit into further rounds. Fan-outs
/// run as fan-ins conjugated by Hadamards (Y^{1/2} after Z).
inline CompiledCircuit compile_fanin_circuit(const Circuit& c, const Placement& p,
                                             const QuotientGraph& q,
                                             const SteinerOptions& opt = {}) {
  p.check(c.num_qubits, q.node_count);
  auto adj = q.adjacency();
  CompiledCircuit out;
  ExtendedBuilder b(c.num_qubits);
  b.labeling = opt.labeling;
  std::size_t rounds = 0, commodity = 0;
  auto hadamard_all = [&](const Gate& g) {
    for (QubitId x : g.q) {
      b.append(Gate::pauli(Basis::kZ, x));
      b.append(Gate::yhalf(x));
    }
  };
  for (const auto& layer : c.layers) {
    struct Remote {
      std::size_t gate;
      EdgeList tree;
      std::size_t round;
    };
    std::vector<Remote> remote;
    std::vector<std::vector<std::uint32_t>> residual;
    std::map<std::size_t, std::size_t> remote_of;
    for (std::size_t gi : layer_order(layer)) {
      const Gate& g = layer[gi];
      check_gate(g, c.num_qubits);
      auto groups = remote_groups(g, p);
      if (groups.empty()) continue;
      std::vector<ProcId> terms{p[g.q[0]]};
      for (auto& [proc, qs] : groups) terms.push_back(proc);
      EdgeList tree = steiner_tree(q, terms, opt.mode);
      auto ids = detail::tree_edge_ids(adj, tree);
      std::size_t r = 0;
      for (; r < residual.size(); ++r) {
        bool fits = std::all_of(ids.begin(), ids.end(), [&](std::size_t e) { return residual[r][e] > 0; });
        if (fits) break;
      }
      if (r == residual.size()) {
        residual.emplace_back(q.edges.size());
        for (std::size_t e = 0; e < q.edges.size(); ++e) residual.back()[e] = q.edges[e].cap;
      }
      for (std::size_t e : ids) {
        if (residual[r][e] == 0) throw Error("gate tree exceeds an edge capacity on its own");
        --residual[r][e];
      }
      remote_of[gi] = remote.size();
      remote.push_back({gi, tree, rounds + r + 1});
    }
    for (const auto& rm : remote) {
      out.schedule.assignments.push_back({commodity++, rm.round, rm.tree});
      out.metrics.e_count += rm.tree.size();
    }
    rounds += residual.size();
    if (!opt.emit) continue;
    for (std::size_t gi : layer_order(layer)) {
      const Gate& g = layer[gi];
      auto it = remote_of.find(gi);
      if (it == remote_of.end()) {
        b.append(g);
        continue;
      }
      const Remote& rm = remote[it->second];
      ProcId home = p[g.q[0]];
      std::vector<QubitId> local;
      TreeTelegate t;
      t.root = g.q[0];
      t.root_proc = home;
      t.tree = rm.tree;
      t.round = static_cast<int>(rm.round);
      for (std::size_t i = 1; i < g.q.size(); ++i) {
        if (p[g.q[i]] == home) {
          local.push_back(g.q[i]);
        } else {
          t.targets[p[g.q[i]]].push_back(g.q[i]);
        }
      }
      bool diag = g.kind == GateKind::kCZ || g.kind == GateKind::kFanInCZ;
      t.action = diag ? TargetAction::kCZ : TargetAction::kCX;
      if (g.kind == GateKind::kFanOutCX) hadamard_all(g);
      if (!local.empty()) {
        b.append(diag ? Gate::fanin_cz(g.q[0], local) : Gate::fanin_cx(g.q[0], local));
      }
      b.telegate(t);
      if (g.kind == GateKind::kFanOutCX) hadamard_all(g);
    }
  }
  out.schedule.d = rounds;
  out.metrics.e_depth = rounds;
  if (opt.emit) out.circuit = b.finish();
  return out;
}

}  // namespace distqc

#endif  // DISTQC_STEINER_HPP
