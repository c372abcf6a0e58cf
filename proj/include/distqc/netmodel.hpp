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

#ifndef DISTQC_NETMODEL_HPP
#define DISTQC_NETMODEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "distqc/common.hpp"

namespace distqc {

struct Processor {
  ProcId id = 0;
  std::vector<QubitId> comp;
  std::vector<QubitId> comm;
};

/// Qubit-level architecture: processors, local couplings, and entanglement
/// links between communication qubits of different processors.
struct Network {
  std::vector<Processor> processors;
  std::vector<std::pair<QubitId, QubitId>> local_couplings;
  std::vector<std::pair<QubitId, QubitId>> links;
};

struct QuotientEdge {
  ProcId u = 0;
  ProcId v = 0;
  std::uint32_t cap = 1;
  friend bool operator==(const QuotientEdge&, const QuotientEdge&) = default;
};

struct GridShape {
  std::size_t rows = 0;
  std::size_t cols = 0;
  friend bool operator==(const GridShape&, const GridShape&) = default;
};

/// Processor-level graph; parallel links are merged into one capacitated edge.
/// Edges are stored with u < v. Lattices generated as full grids remember
/// their shape (node id = row * cols + col).
struct QuotientGraph {
  std::size_t node_count = 0;
  std::vector<QuotientEdge> edges;
  std::optional<GridShape> grid;

  /// adjacency()[u] lists (neighbor, edge index), sorted by neighbor.
  std::vector<std::vector<std::pair<ProcId, std::size_t>>> adjacency() const {
    std::vector<std::vector<std::pair<ProcId, std::size_t>>> adj(node_count);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      adj[edges[e].u].push_back({edges[e].v, e});
      adj[edges[e].v].push_back({edges[e].u, e});
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
  }

  std::optional<std::size_t> edge_index(ProcId a, ProcId b) const {
    if (a > b) std::swap(a, b);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].u == a && edges[e].v == b) return e;
    }
    return std::nullopt;
  }

  std::size_t degree(ProcId u) const {
    return static_cast<std::size_t>(std::count_if(
        edges.begin(), edges.end(), [&](const QuotientEdge& e) { return e.u == u || e.v == u; }));
  }

  bool is_connected() const {
    if (node_count <= 1) return true;
    auto adj = adjacency();
    std::vector<std::uint8_t> seen(node_count, 0);
    std::vector<ProcId> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      ProcId u = stack.back();
      stack.pop_back();
      for (auto [v, e] : adj[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
      }
    }
    return count == node_count;
  }

  /// Throws unless edges are in range, loop-free, unique, and capacities positive.
  void check() const {
    std::vector<std::pair<ProcId, ProcId>> seen;
    for (const auto& e : edges) {
      if (e.u >= node_count || e.v >= node_count) throw Error("quotient edge out of range");
      if (e.u >= e.v) throw Error("quotient edges must satisfy u < v");
      if (e.cap == 0) throw Error("quotient edge capacity must be positive");
      seen.push_back({e.u, e.v});
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      throw Error("duplicate quotient edge");
    }
  }

  /// Hop distances from `src` (unreachable nodes get SIZE_MAX).
  std::vector<std::size_t> bfs_distances(ProcId src) const {
    return bfs_from(adjacency(), src);
  }

  static std::vector<std::size_t> bfs_from(
      const std::vector<std::vector<std::pair<ProcId, std::size_t>>>& adj, ProcId src) {
    std::vector<std::size_t> dist(adj.size(), static_cast<std::size_t>(-1));
    std::queue<ProcId> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
      ProcId u = q.front();
      q.pop();
      for (auto [v, e] : adj[u]) {
        if (dist[v] == static_cast<std::size_t>(-1)) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
      }
    }
    return dist;
  }

  friend bool operator==(const QuotientGraph&, const QuotientGraph&) = default;
};

/// Builds a quotient graph from an edge list; repeated pairs add capacity.
inline QuotientGraph quotient_from_edges(std::size_t n,
                                         const std::vector<std::pair<ProcId, ProcId>>& pairs) {
  std::map<std::pair<ProcId, ProcId>, std::uint32_t> cap;
  for (auto [a, b] : pairs) {
    if (a == b) throw Error("self-loop in edge list");
    if (a >= n || b >= n) throw Error("edge endpoint out of range");
    ++cap[{std::min(a, b), std::max(a, b)}];
  }
  QuotientGraph q;
  q.node_count = n;
  for (auto& [k, c] : cap) q.edges.push_back({k.first, k.second, c});
  return q;
}

/// Collapses a network to its processor-level graph. Processor ids must be
/// exactly 0..|P|-1 (in any order).
inline QuotientGraph quotient(const Network& net) {
  std::size_t np = net.processors.size();
  std::vector<std::uint8_t> id_seen(np, 0);
  std::map<QubitId, ProcId> owner;
  std::map<QubitId, bool> is_comm;
  for (const auto& p : net.processors) {
    if (p.id >= np || id_seen[p.id]) {
      throw Error("processor ids must be unique and in 0.." + std::to_string(np ? np - 1 : 0));
    }
    id_seen[p.id] = 1;
    for (int pass = 0; pass < 2; ++pass) {
      for (QubitId q : pass == 0 ? p.comp : p.comm) {
        if (!owner.emplace(q, p.id).second) {
          throw Error("qubit " + std::to_string(q) + " belongs to two roles or processors");
        }
        is_comm[q] = pass == 1;
      }
    }
  }
  auto find = [&](QubitId q) {
    auto it = owner.find(q);
    if (it == owner.end()) throw Error("qubit " + std::to_string(q) + " is not in any processor");
    return it->second;
  };
  for (auto [a, b] : net.local_couplings) {
    if (find(a) != find(b)) throw Error("local coupling crosses processors");
  }
  std::vector<std::pair<ProcId, ProcId>> pairs;
  for (auto [a, b] : net.links) {
    ProcId pa = find(a), pb = find(b);
    if (!is_comm[a] || !is_comm[b]) throw Error("entanglement link on a computation qubit");
    if (pa == pb) throw Error("entanglement link inside one processor");
    pairs.push_back({pa, pb});
  }
  QuotientGraph q = quotient_from_edges(np, pairs);
  if (!q.is_connected()) throw Error("processor graph is disconnected");
  return q;
}

/// Builds a network realizing `q`: one computation qubit per processor and one
/// communication qubit per link endpoint.
inline Network network_from_quotient(const QuotientGraph& q) {
  Network net;
  QubitId next = 0;
  for (std::size_t p = 0; p < q.node_count; ++p) {
    net.processors.push_back({static_cast<ProcId>(p), {next++}, {}});
  }
  for (const auto& e : q.edges) {
    for (std::uint32_t c = 0; c < e.cap; ++c) {
      QubitId a = next++, b = next++;
      net.processors[e.u].comm.push_back(a);
      net.processors[e.v].comm.push_back(b);
      net.links.push_back({a, b});
    }
  }
  return net;
}

/// rows x cols grid, unit capacities, row-major ids.
inline QuotientGraph gen_grid(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw Error("grid needs positive dimensions");
  QuotientGraph q;
  q.node_count = rows * cols;
  q.grid = GridShape{rows, cols};
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      auto id = static_cast<ProcId>(r * cols + c);
      if (c + 1 < cols) q.edges.push_back({id, id + 1, 1});
      if (r + 1 < rows) q.edges.push_back({id, static_cast<ProcId>(id + cols), 1});
    }
  }
  std::sort(q.edges.begin(), q.edges.end(),
            [](const QuotientEdge& a, const QuotientEdge& b) {
              return std::pair(a.u, a.v) < std::pair(b.u, b.v);
            });
  return q;
}

/// Smaller rectangular lattice: a ceil(g/2+1) x ceil(g/2+1) grid, so
/// |P| = g^2/4 + 3g/2 + O(1). g = 11 gives 7x7 (49 nodes, 84 edges).
inline QuotientGraph gen_rect_low(std::size_t g) {
  if (g == 0) throw Error("generator factor must be >= 1");
  std::size_t s = (g + 3) / 2;
  return gen_grid(s, s);
}

/// Larger rectangular lattice: a (g+1) x (g+1) grid. The stated size law
/// |P| = 2g^2 + 2g is really the edge count of this grid (264 at g = 11);
/// the node count is (g+1)^2 = 144, matching the reported pair (144, 264).
inline QuotientGraph gen_rect_high(std::size_t g) {
  if (g == 0) throw Error("generator factor must be >= 1");
  return gen_grid(g + 1, g + 1);
}

/// Honeycomb of ceil(g/2) x ceil(g/2) hexagons, in the brick layout used by
/// networkx.hexagonal_lattice_graph. g = 11 gives 96 nodes and 131 edges.
inline QuotientGraph gen_hex(std::size_t g) {
  if (g == 0) throw Error("generator factor must be >= 1");
  std::size_t m = (g + 1) / 2, n = m;
  std::size_t rows = 2 * m + 2, cols = n + 1;
  // Brick coordinates (i = column, j = row); two corners are dropped.
  auto dropped = [&](std::size_t i, std::size_t j) {
    return (i == 0 && j == rows - 1) || (i == n && j == (rows - 1) * (n % 2));
  };
  std::vector<std::vector<long>> id(cols, std::vector<long>(rows, -1));
  ProcId next = 0;
  for (std::size_t j = 0; j < rows; ++j) {
    for (std::size_t i = 0; i < cols; ++i) {
      if (!dropped(i, j)) id[i][j] = next++;
    }
  }
  std::vector<std::pair<ProcId, ProcId>> pairs;
  auto link = [&](std::size_t i1, std::size_t j1, std::size_t i2, std::size_t j2) {
    if (id[i1][j1] >= 0 && id[i2][j2] >= 0) {
      pairs.push_back({static_cast<ProcId>(id[i1][j1]), static_cast<ProcId>(id[i2][j2])});
    }
  };
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j + 1 < rows; ++j) link(i, j, i, j + 1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < rows; ++j) {
      if (i % 2 == j % 2) link(i, j, i + 1, j);
    }
  }
  return quotient_from_edges(next, pairs);
}

/// Path P_0 - P_1 - ... - P_{n-1}.
inline QuotientGraph gen_path(std::size_t n) {
  if (n == 0) throw Error("path needs at least one node");
  std::vector<std::pair<ProcId, ProcId>> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    pairs.push_back({static_cast<ProcId>(i), static_cast<ProcId>(i + 1)});
  }
  return quotient_from_edges(n, pairs);
}

/// Star with `leaves` leaves; the center is the last node.
inline QuotientGraph gen_star(std::size_t leaves) {
  std::vector<std::pair<ProcId, ProcId>> pairs;
  for (std::size_t i = 0; i < leaves; ++i) {
    pairs.push_back({static_cast<ProcId>(i), static_cast<ProcId>(leaves)});
  }
  return quotient_from_edges(leaves + 1, pairs);
}

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// |E| / |P| in lowest terms.
inline Rational edge_node_ratio(const QuotientGraph& q) {
  if (q.node_count == 0) throw Error("edge_node_ratio of an empty graph");
  std::uint64_t e = q.edges.size(), p = q.node_count;
  std::uint64_t g = std::gcd(e, p);
  return e == 0 ? Rational{0, 1} : Rational{e / g, p / g};
}

/// Arc capacity: a positive integer or unbounded.
class Capacity {
 public:
  static Capacity finite(std::uint32_t c) { return Capacity(c); }
  static Capacity unbounded() { return Capacity(); }
  bool is_unbounded() const { return !value_.has_value(); }
  std::uint32_t value() const {
    if (!value_) throw Error("unbounded capacity has no value");
    return *value_;
  }
  friend bool operator==(const Capacity&, const Capacity&) = default;

 private:
  Capacity() = default;
  explicit Capacity(std::uint32_t c) : value_(c) {}
  std::optional<std::uint32_t> value_;
};

struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  Capacity cap = Capacity::unbounded();
};

/// Directed graph: the quotient nodes followed by two gadget nodes per edge
/// (edge e gets ids |P| + 2e and |P| + 2e + 1).
struct DirectedFlowGraph {
  std::size_t node_count = 0;
  std::size_t original_nodes = 0;
  std::vector<Arc> arcs;
};

/// Replaces every undirected edge {i, j, c} by i, j -> i' -> j' -> i, j where
/// only the middle arc is capacitated.
inline DirectedFlowGraph to_directed(const QuotientGraph& q) {
  DirectedFlowGraph d;
  d.original_nodes = q.node_count;
  d.node_count = q.node_count + 2 * q.edges.size();
  for (std::size_t e = 0; e < q.edges.size(); ++e) {
    std::size_t i = q.edges[e].u, j = q.edges[e].v;
    std::size_t ip = q.node_count + 2 * e, jp = ip + 1;
    d.arcs.push_back({i, ip, Capacity::unbounded()});
    d.arcs.push_back({j, ip, Capacity::unbounded()});
    d.arcs.push_back({ip, jp, Capacity::finite(q.edges[e].cap)});
    d.arcs.push_back({jp, i, Capacity::unbounded()});
    d.arcs.push_back({jp, j, Capacity::unbounded()});
  }
  return d;
}

}  // namespace distqc

#endif  // DISTQC_NETMODEL_HPP
