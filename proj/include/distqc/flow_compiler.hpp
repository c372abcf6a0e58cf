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

#ifndef DISTQC_FLOW_COMPILER_HPP
#define DISTQC_FLOW_COMPILER_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "distqc/commodity.hpp"
#include "distqc/common.hpp"
#include "distqc/netmodel.hpp"

namespace distqc {

using EdgeList = std::vector<std::pair<ProcId, ProcId>>;

/// Commodity i runs at step tau (1-based) along `path`. For flow schedules the
/// path is an ordered edge sequence from source to target; the Steiner backend
/// stores a tree's edges here instead.
struct Assignment {
  std::size_t i = 0;
  std::size_t tau = 1;
  EdgeList path;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct FlowSchedule {
  std::size_t d = 0;
  std::vector<Assignment> assignments;  // sorted by commodity index
  friend bool operator==(const FlowSchedule&, const FlowSchedule&) = default;
};

struct ScheduleMetrics {
  std::size_t e_depth = 0;
  std::size_t e_count = 0;
  friend bool operator==(const ScheduleMetrics&, const ScheduleMetrics&) = default;
};

inline ScheduleMetrics metrics(const FlowSchedule& s) {
  ScheduleMetrics m;
  for (const auto& a : s.assignments) {
    m.e_depth = std::max(m.e_depth, a.tau);
    m.e_count += a.path.size();
  }
  return m;
}

struct FlowViolation {
  std::string constraint;  // "c1", "c2", "c3", "c5" or "c6"
  std::size_t commodity = 0;
  std::optional<std::size_t> edge;
  std::size_t step = 0;
  std::string message;
};

/// Node sequence of a path given as edges; empty if the edges do not chain.
inline std::vector<ProcId> path_nodes(ProcId from, const EdgeList& path) {
  std::vector<ProcId> nodes{from};
  for (auto [a, b] : path) {
    if (a == nodes.back()) {
      nodes.push_back(b);
    } else if (b == nodes.back()) {
      nodes.push_back(a);
    } else {
      return {};
    }
  }
  return nodes;
}

inline EdgeList edges_of(const std::vector<ProcId>& nodes) {
  EdgeList out;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) out.push_back({nodes[i], nodes[i + 1]});
  return out;
}

/// Verifies demand (c1), path shape (c2), capacity (c3) and precedence (c5, c6),
/// reporting the first violation found in that order.
inline std::optional<FlowViolation> check_feasible(const FlowSchedule& s, const QuotientGraph& q,
                                                   const CommoditySet& cs) {
  std::size_t k = cs.size();
  std::vector<const Assignment*> by(k, nullptr);
  for (const auto& a : s.assignments) {
    if (a.i >= k) return FlowViolation{"c1", a.i, {}, a.tau, "unknown commodity"};
    if (by[a.i]) return FlowViolation{"c1", a.i, {}, a.tau, "commodity assigned twice"};
    if (a.tau < 1 || a.tau > s.d) {
      return FlowViolation{"c1", a.i, {}, a.tau, "step outside the horizon"};
    }
    by[a.i] = &a;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!by[i]) return FlowViolation{"c1", i, {}, 0, "commodity not served"};
  }
  for (std::size_t i = 0; i < k; ++i) {
    const auto& a = *by[i];
    auto nodes = path_nodes(cs[i].source, a.path);
    if (a.path.empty() || nodes.empty() || nodes.back() != cs[i].target) {
      return FlowViolation{"c2", i, {}, a.tau, "path does not join source to target"};
    }
    auto sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return FlowViolation{"c2", i, {}, a.tau, "path is not simple"};
    }
    for (auto [u, v] : a.path) {
      if (!q.edge_index(u, v)) return FlowViolation{"c2", i, {}, a.tau, "path uses a missing edge"};
    }
  }
  std::map<std::pair<std::size_t, std::size_t>, std::uint32_t> use;  // (tau, edge)
  for (std::size_t i = 0; i < k; ++i) {
    for (auto [u, v] : by[i]->path) {
      std::size_t e = *q.edge_index(u, v);
      if (++use[{by[i]->tau, e}] > q.edges[e].cap) {
        return FlowViolation{"c3", i, e, by[i]->tau, "edge capacity exceeded"};
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j : cs.preds(i)) {
      bool par = cs.quasi_parallel(i, j);
      if (par && by[j]->tau > by[i]->tau) {
        return FlowViolation{"c6", i, {}, by[i]->tau, "quasi-parallel predecessor runs later"};
      }
      if (!par && by[j]->tau >= by[i]->tau) {
        return FlowViolation{"c5", i, {}, by[i]->tau, "predecessor does not run strictly earlier"};
      }
    }
  }
  return std::nullopt;
}

namespace detail {

/// Longest chain of strict precedences starting at each commodity.
inline std::vector<std::size_t> strict_tails(const CommoditySet& cs) {
  std::size_t k = cs.size();
  std::vector<std::vector<std::size_t>> succ(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j : cs.preds(i)) succ[j].push_back(i);
  }
  std::vector<std::size_t> tail(k, 0);
  for (std::size_t i = k; i-- > 0;) {
    for (std::size_t s : succ[i]) {
      tail[i] = std::max(tail[i], tail[s] + (cs.quasi_parallel(i, s) ? 0 : 1));
    }
  }
  return tail;
}

/// Simple paths from `s` to `t` with exactly `len` edges, in lexicographic
/// order of their node sequences.
inline std::vector<std::vector<ProcId>> simple_paths_of_length(
    const std::vector<std::vector<std::pair<ProcId, std::size_t>>>& adj,
    const std::vector<std::size_t>& dist_to_t, ProcId s, ProcId t, std::size_t len) {
  std::vector<std::vector<ProcId>> out;
  std::vector<ProcId> cur{s};
  std::vector<std::uint8_t> on(adj.size(), 0);
  on[s] = 1;
  std::function<void()> rec = [&] {
    ProcId u = cur.back();
    std::size_t used = cur.size() - 1;
    if (u == t) {
      if (used == len) out.push_back(cur);
      return;
    }
    for (auto [v, e] : adj[u]) {
      if (on[v] || dist_to_t[v] == static_cast<std::size_t>(-1)) continue;
      if (used + 1 + dist_to_t[v] > len) continue;
      on[v] = 1;
      cur.push_back(v);
      rec();
      cur.pop_back();
      on[v] = 0;
    }
  };
  rec();
  return out;
}

}  // namespace detail

struct ExactLimits {
  std::size_t max_commodities = 10;
  std::size_t max_nodes = 25;
};

/// Branch and bound over (step, path) per commodity. Returns a schedule of
/// horizon d with minimum total path length, or nullopt if none exists.
/// Ties keep the first schedule found, exploring commodities in index order,
/// paths by (length, node sequence) and steps ascending.
inline std::optional<FlowSchedule> solve_mcf_exact(const QuotientGraph& q, const CommoditySet& cs,
                                                   std::size_t d, ExactLimits limits = {}) {
  std::size_t k = cs.size();
  if (k > limits.max_commodities || q.node_count > limits.max_nodes) {
    throw Error("instance too large for the exact solver (k=" + std::to_string(k) +
                ", |P|=" + std::to_string(q.node_count) + ")");
  }
  if (k == 0) return FlowSchedule{d, {}};
  if (d == 0) return std::nullopt;
  auto adj = q.adjacency();
  std::vector<std::vector<std::size_t>> dist_to(k);
  std::vector<std::size_t> sp(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (cs[i].source == cs[i].target) throw Error("commodity with equal endpoints");
    dist_to[i] = QuotientGraph::bfs_from(adj, cs[i].target);
    sp[i] = dist_to[i][cs[i].source];
    if (sp[i] == static_cast<std::size_t>(-1)) return std::nullopt;
  }
  std::vector<std::size_t> suffix(k + 1, 0);
  for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] + sp[i];
  auto tail = detail::strict_tails(cs);
  for (std::size_t i = 0; i < k; ++i) {
    if (tail[i] + 1 > d) return std::nullopt;
  }
  std::uint64_t total_cap = 0;
  for (const auto& e : q.edges) total_cap += e.cap;
  if (suffix[0] > total_cap * d) return std::nullopt;

  // paths[i][len - sp[i]] generated on demand.
  std::vector<std::vector<std::optional<std::vector<std::vector<ProcId>>>>> paths(k);
  auto paths_of = [&](std::size_t i, std::size_t len) -> const std::vector<std::vector<ProcId>>& {
    std::size_t slot = len - sp[i];
    if (paths[i].size() <= slot) paths[i].resize(slot + 1);
    if (!paths[i][slot]) {
      paths[i][slot] =
          detail::simple_paths_of_length(adj, dist_to[i], cs[i].source, cs[i].target, len);
    }
    return *paths[i][slot];
  };
  // Edge index of each consecutive node pair, cached per path.
  auto edge_ids = [&](const std::vector<ProcId>& nodes) {
    std::vector<std::size_t> ids;
    for (std::size_t a = 0; a + 1 < nodes.size(); ++a) {
      for (auto [v, e] : adj[nodes[a]]) {
        if (v == nodes[a + 1]) {
          ids.push_back(e);
          break;
        }
      }
    }
    return ids;
  };

  std::vector<std::vector<std::uint32_t>> used(d + 1, std::vector<std::uint32_t>(q.edges.size(), 0));
  std::vector<std::size_t> tau(k, 0);
  std::vector<const std::vector<ProcId>*> chosen(k, nullptr);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best_tau;
  std::vector<std::vector<ProcId>> best_paths;
  std::uint64_t free_slots = total_cap * d;
  bool no_prec = !cs.has_precedence();
  bool done = false;

  std::function<void(std::size_t, std::size_t, std::size_t)> dfs = [&](std::size_t i,
                                                                      std::size_t cost,
                                                                      std::size_t max_used) {
    if (done) return;
    if (i == k) {
      if (cost < best) {
        best = cost;
        best_tau = tau;
        best_paths.clear();
        for (auto* p : chosen) best_paths.push_back(*p);
        if (best == suffix[0]) done = true;
      }
      return;
    }
    if (cost + suffix[i] >= best || suffix[i] > free_slots) return;
    std::size_t tmin = 1;
    for (std::size_t j : cs.preds(i)) {
      tmin = std::max(tmin, tau[j] + (cs.quasi_parallel(i, j) ? 0 : 1));
    }
    std::size_t tmax = d - tail[i];
    if (no_prec) tmax = std::min(tmax, max_used + 1);
    if (tmin > tmax) return;
    std::size_t max_len = q.node_count - 1;
    for (std::size_t len = sp[i]; len <= max_len; ++len) {
      if (cost + len + suffix[i + 1] >= best || done) break;
      for (const auto& nodes : paths_of(i, len)) {
        auto ids = edge_ids(nodes);
        for (std::size_t t = tmin; t <= tmax; ++t) {
          bool fits = true;
          for (std::size_t e : ids) {
            if (used[t][e] >= q.edges[e].cap) {
              fits = false;
              break;
            }
          }
          if (!fits) continue;
          for (std::size_t e : ids) ++used[t][e];
          free_slots -= len;
          tau[i] = t;
          chosen[i] = &nodes;
          dfs(i + 1, cost + len, std::max(max_used, t));
          tau[i] = 0;
          chosen[i] = nullptr;
          free_slots += len;
          for (std::size_t e : ids) --used[t][e];
          if (done || cost + len + suffix[i + 1] >= best) break;
        }
        if (done || cost + len + suffix[i + 1] >= best) break;
      }
    }
  };
  dfs(0, 0, 0);
  if (best_tau.empty()) return std::nullopt;
  FlowSchedule s{d, {}};
  for (std::size_t i = 0; i < k; ++i) s.assignments.push_back({i, best_tau[i], edges_of(best_paths[i])});
  return s;
}

using McfSubSolver =
    std::function<std::optional<FlowSchedule>(const QuotientGraph&, const CommoditySet&, std::size_t)>;

struct QuickestResult {
  FlowSchedule schedule;
  std::vector<std::size_t> probes;  // horizons handed to the sub-solver, in call order
};

/// Binary search for the smallest horizon d in [1, k] accepted by `sub`.
inline QuickestResult quickest_flow(const QuotientGraph& q, const CommoditySet& cs,
                                    const McfSubSolver& sub) {
  if (cs.empty()) throw Error("quickest_flow needs at least one commodity");
  std::size_t lo = 1, hi = cs.size();
  QuickestResult r;
  std::optional<FlowSchedule> best;
  while (lo <= hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    r.probes.push_back(mid);
    auto s = sub(q, cs, mid);
    if (s) {
      best = std::move(s);
      hi = mid - 1;
    } else {
      lo = mid + 1;
    }
  }
  if (!best) throw Error("no feasible horizon up to k; the sub-solver failed");
  r.schedule = std::move(*best);
  return r;
}

inline QuickestResult quickest_flow(const QuotientGraph& q, const CommoditySet& cs) {
  return quickest_flow(q, cs, [](const QuotientGraph& g, const CommoditySet& c, std::size_t d) {
    return solve_mcf_exact(g, c, d);
  });
}

/// Shortest path from s to t using only edges with residual capacity; ties go
/// to the lowest-numbered neighbors. Empty when none exists.
inline std::vector<ProcId> residual_shortest_path(
    const std::vector<std::vector<std::pair<ProcId, std::size_t>>>& adj,
    const std::vector<std::uint32_t>& residual, ProcId s, ProcId t) {
  std::vector<long> parent(adj.size(), -2);
  std::queue<ProcId> queue;
  parent[s] = -1;
  queue.push(s);
  while (!queue.empty() && parent[t] == -2) {
    ProcId u = queue.front();
    queue.pop();
    for (auto [v, e] : adj[u]) {
      if (parent[v] != -2 || residual[e] == 0) continue;
      parent[v] = static_cast<long>(u);
      queue.push(v);
    }
  }
  if (parent[t] == -2) return {};
  std::vector<ProcId> nodes;
  for (long v = t; v != -1; v = parent[v]) nodes.push_back(static_cast<ProcId>(v));
  std::reverse(nodes.begin(), nodes.end());
  return nodes;
}

/// Edge index of every hop of a node path.
inline std::vector<std::size_t> hop_edges(
    const std::vector<std::vector<std::pair<ProcId, std::size_t>>>& adj,
    const std::vector<ProcId>& nodes) {
  std::vector<std::size_t> ids;
  for (std::size_t a = 0; a + 1 < nodes.size(); ++a) {
    auto it = std::lower_bound(adj[nodes[a]].begin(), adj[nodes[a]].end(),
                               std::pair<ProcId, std::size_t>{nodes[a + 1], 0});
    if (it == adj[nodes[a]].end() || it->first != nodes[a + 1]) throw Error("path hop has no edge");
    ids.push_back(it->second);
  }
  return ids;
}

/// Iterative greedy: at each step admit ready commodities in order of
/// (shortest path length, index) along shortest residual paths, repeating
/// until nothing more fits, then advance the step.
inline FlowSchedule iterative_greedy(const QuotientGraph& q, const CommoditySet& cs) {
  std::size_t k = cs.size();
  auto adj = q.adjacency();
  std::vector<std::size_t> sp(k);
  for (std::size_t i = 0; i < k; ++i) {
    sp[i] = QuotientGraph::bfs_from(adj, cs[i].source)[cs[i].target];
    if (sp[i] == static_cast<std::size_t>(-1)) throw Error("commodity endpoints are disconnected");
  }
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sp[a] < sp[b]; });

  std::vector<std::size_t> tau(k, 0);
  std::vector<EdgeList> path(k);
  std::size_t remaining = k, step = 0;
  while (remaining > 0) {
    ++step;
    std::vector<std::uint32_t> residual(q.edges.size());
    for (std::size_t e = 0; e < q.edges.size(); ++e) residual[e] = q.edges[e].cap;
    bool admitted = true;
    while (admitted) {
      admitted = false;
      for (std::size_t i : order) {
        if (tau[i]) continue;
        bool ready = true;
        for (std::size_t j : cs.preds(i)) {
          bool par = cs.quasi_parallel(i, j);
          if (!tau[j] || (par ? tau[j] > step : tau[j] >= step)) {
            ready = false;
            break;
          }
        }
        if (!ready) continue;
        auto nodes = residual_shortest_path(adj, residual, cs[i].source, cs[i].target);
        if (nodes.empty()) continue;
        for (std::size_t e : hop_edges(adj, nodes)) --residual[e];
        tau[i] = step;
        path[i] = edges_of(nodes);
        --remaining;
        admitted = true;
      }
    }
  }
  FlowSchedule s{step, {}};
  for (std::size_t i = 0; i < k; ++i) s.assignments.push_back({i, tau[i], path[i]});
  return s;
}

}  // namespace distqc

#endif  // DISTQC_FLOW_COMPILER_HPP
