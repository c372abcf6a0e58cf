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

#ifndef DISTQC_COMMODITY_HPP
#define DISTQC_COMMODITY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "distqc/circuit.hpp"
#include "distqc/common.hpp"

namespace distqc {

/// One remote interaction: the telegate from `source` (holding `root`) to the
/// `qubits` living on `target`.
struct Commodity {
  ProcId source = 0;
  ProcId target = 0;
  std::size_t layer = 0;
  std::size_t gate = 0;  // index into the circuit layer
  QubitId root = 0;
  std::vector<QubitId> qubits;
  friend bool operator==(const Commodity&, const Commodity&) = default;
};

/// Commodities with the order relation (j precedes i) and the symmetric
/// quasi-parallel relation.
class CommoditySet {
 public:
  CommoditySet() = default;
  explicit CommoditySet(std::vector<Commodity> items)
      : items_(std::move(items)), preds_(items_.size()) {}

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const Commodity& operator[](std::size_t i) const { return items_.at(i); }
  const std::vector<Commodity>& items() const { return items_; }

  /// Commodities j with j preceding i, ascending.
  const std::vector<std::size_t>& preds(std::size_t i) const { return preds_.at(i); }

  bool precedes(std::size_t j, std::size_t i) const {
    const auto& p = preds_.at(i);
    return std::binary_search(p.begin(), p.end(), j);
  }
  bool quasi_parallel(std::size_t i, std::size_t j) const {
    return qpar_.count({std::min(i, j), std::max(i, j)}) > 0;
  }
  const std::set<std::pair<std::size_t, std::size_t>>& qpar_pairs() const { return qpar_; }
  bool has_precedence() const {
    return std::any_of(preds_.begin(), preds_.end(), [](const auto& p) { return !p.empty(); });
  }

  /// Records j preceding i. Throws when the relation would become cyclic under
  /// the index order (j must be smaller than i).
  void add_precedence(std::size_t j, std::size_t i) {
    if (j >= i || i >= items_.size()) {
      throw Error("precedence must point from a lower to a higher commodity index");
    }
    auto& p = preds_[i];
    auto it = std::lower_bound(p.begin(), p.end(), j);
    if (it == p.end() || *it != j) p.insert(it, j);
  }
  void add_quasi_parallel(std::size_t i, std::size_t j) {
    if (i == j || std::max(i, j) >= items_.size()) throw Error("bad quasi-parallel pair");
    qpar_.insert({std::min(i, j), std::max(i, j)});
  }

 private:
  std::vector<Commodity> items_;
  std::vector<std::vector<std::size_t>> preds_;
  std::set<std::pair<std::size_t, std::size_t>> qpar_;
};

/// Splits an entangling gate into (root qubit, {processor -> qubits}) for its
/// operands living away from the root's processor. Fan-outs are rooted at
/// their target.
inline std::map<ProcId, std::vector<QubitId>> remote_groups(const Gate& g, const Placement& p) {
  std::map<ProcId, std::vector<QubitId>> groups;
  if (!is_entangling(g.kind)) return groups;
  ProcId home = p[g.q[0]];
  for (std::size_t i = 1; i < g.q.size(); ++i) {
    ProcId pr = p[g.q[i]];
    if (pr != home) groups[pr].push_back(g.q[i]);
  }
  return groups;
}

/// Order of gates inside a layer used for commodity numbering.
inline std::vector<std::size_t> layer_order(const std::vector<Gate>& layer) {
  std::vector<std::size_t> idx(layer.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto key = [&](std::size_t i) {
    const auto& q = layer[i].q;
    return q.empty() ? QubitId(-1) : *std::min_element(q.begin(), q.end());
  };
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return key(a) < key(b);
  });
  return idx;
}

/// Enumerates remote interactions and derives their order relations.
///
/// Commodity order: layer, then smallest operand qubit, then target processor.
/// Precedence is the transitive dependency order of the gates on shared wires,
/// where consecutive gates acting on a wire with the same Z or X role commute.
/// Quasi-parallel pairs are direct single-wire dependencies where the wire is
/// the target of the earlier gate and a control of the later one, or both
/// gates are diagonal. Fan-outs are never quasi-parallel.
inline CommoditySet extract_commodities(const Circuit& c, const Placement& p) {
  if (p.map.size() != c.num_qubits) {
    throw Error("placement covers " + std::to_string(p.map.size()) + " qubits, circuit has " +
                std::to_string(c.num_qubits));
  }
  struct Node {
    const Gate* gate;
    std::size_t layer, index;
    std::vector<std::size_t> commodities;
  };
  std::vector<Node> nodes;
  std::vector<Commodity> items;
  for (std::size_t li = 0; li < c.layers.size(); ++li) {
    for (std::size_t gi : layer_order(c.layers[li])) {
      const Gate& g = c.layers[li][gi];
      Node node{&g, li, gi, {}};
      for (auto& [proc, qs] : remote_groups(g, p)) {
        node.commodities.push_back(items.size());
        items.push_back({p[g.q[0]], proc, li, gi, g.q[0], qs});
      }
      nodes.push_back(std::move(node));
    }
  }
  CommoditySet cs(items);

  // Wire dependencies: for each qubit, the current block of mutually commuting
  // gates (same role) and the block before it.
  struct Wire {
    WireRole role = WireRole::kOther;
    std::vector<std::size_t> last, prev;
  };
  std::vector<Wire> wires(c.num_qubits);
  std::vector<std::vector<std::pair<std::size_t, QubitId>>> deps(nodes.size());
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    for (QubitId q : nodes[n].gate->q) {
      Wire& w = wires.at(q);
      WireRole r = wire_role(*nodes[n].gate, q);
      if (r != WireRole::kOther && r == w.role && !w.last.empty()) {
        for (std::size_t d : w.prev) deps[n].push_back({d, q});
        w.last.push_back(n);
      } else {
        for (std::size_t d : w.last) deps[n].push_back({d, q});
        w.prev = std::move(w.last);
        w.last = {n};
        w.role = r;
      }
    }
  }

  // Ancestor sets restricted to gates carrying commodities.
  std::vector<std::size_t> slot(nodes.size(), static_cast<std::size_t>(-1));
  std::size_t heavy = 0;
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    if (!nodes[n].commodities.empty()) slot[n] = heavy++;
  }
  std::size_t words = (heavy + 63) / 64;
  std::vector<std::vector<std::uint64_t>> anc(nodes.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    for (auto [d, q] : deps[n]) {
      for (std::size_t w = 0; w < words; ++w) anc[n][w] |= anc[d][w];
      if (slot[d] != static_cast<std::size_t>(-1)) anc[n][slot[d] / 64] |= 1ull << (slot[d] % 64);
    }
  }
  std::vector<std::size_t> heavy_node;
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    if (slot[n] != static_cast<std::size_t>(-1)) heavy_node.push_back(n);
  }
  auto is_anc = [&](std::size_t of, std::size_t n) {
    return slot[n] != static_cast<std::size_t>(-1) && ((anc[of][slot[n] / 64] >> (slot[n] % 64)) & 1);
  };
  auto diagonal = [](const Gate& g) {
    return g.kind == GateKind::kCZ || g.kind == GateKind::kFanInCZ;
  };
  auto shared = [](const Gate& a, const Gate& b) {
    std::vector<QubitId> out;
    for (QubitId q : a.q) {
      if (std::find(b.q.begin(), b.q.end(), q) != b.q.end()) out.push_back(q);
    }
    return out;
  };

  for (std::size_t n : heavy_node) {
    for (std::size_t h = 0; h < heavy; ++h) {
      if (!((anc[n][h / 64] >> (h % 64)) & 1)) continue;
      std::size_t m = heavy_node[h];
      for (std::size_t j : nodes[m].commodities) {
        for (std::size_t i : nodes[n].commodities) cs.add_precedence(j, i);
      }
    }
    // Quasi-parallel candidates among direct predecessors.
    for (auto [d, q] : deps[n]) {
      if (slot[d] == static_cast<std::size_t>(-1)) continue;
      const Gate& gi = *nodes[d].gate;
      const Gate& gj = *nodes[n].gate;
      if (gi.kind == GateKind::kFanOutCX || gj.kind == GateKind::kFanOutCX) continue;
      auto common = shared(gi, gj);
      if (common.size() != 1) continue;
      std::size_t via_q = 0;
      bool through_other = false;
      for (auto [d2, q2] : deps[n]) {
        if (q2 == q) ++via_q;
        if (d2 != d && is_anc(d2, d)) through_other = true;
      }
      if (via_q != 1 || through_other) continue;
      bool pattern = (wire_role(gi, q) == WireRole::kX && wire_role(gj, q) == WireRole::kZ) ||
                     (diagonal(gi) && diagonal(gj));
      if (!pattern) continue;
      for (std::size_t j : nodes[d].commodities) {
        for (std::size_t i : nodes[n].commodities) cs.add_quasi_parallel(i, j);
      }
    }
  }
  return cs;
}

}  // namespace distqc

#endif  // DISTQC_COMMODITY_HPP
