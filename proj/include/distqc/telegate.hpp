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

#ifndef DISTQC_TELEGATE_HPP
#define DISTQC_TELEGATE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "distqc/circuit.hpp"
#include "distqc/common.hpp"
#include "distqc/flow_compiler.hpp"
#include "distqc/netmodel.hpp"
#include "distqc/pauli.hpp"
#include "distqc/pauli_pushing.hpp"

namespace distqc {

/// Derives the Pauli corrections of a measurement-based fragment.
///
/// `gates` must consist of Bell preparations (all Phi+), unitaries, and final
/// measurements. For every measurement m a stabilizer T_m of the
/// pre-measurement state is found that anticommutes with m alone; outcome 1 of
/// m then equals outcome 0 up to T_m, so the survivors receive T_m's restriction
/// raised to the power b_m. Returns one (x, z) entry per qubit of the fragment.
inline std::vector<PauliFrame::Entry> derive_corrections(std::size_t n,
                                                         const std::vector<Gate>& gates,
                                                         const std::vector<QubitId>& survivors) {
  std::vector<PauliString> gens;
  struct M {
    QubitId q;
    Basis basis;
    BitId bit;
  };
  std::vector<M> meas;
  std::vector<std::uint8_t> measured(n, 0);
  for (const Gate& g : gates) {
    check_gate(g, n);
    if (g.kind == GateKind::kBell) {
      if (g.variant != BellVariant::kPhiPlus) throw Error("derive_corrections expects Phi+ pairs");
      PauliString xx(n), zz(n);
      xx.set_x(g.q[0], true);
      xx.set_x(g.q[1], true);
      zz.set_z(g.q[0], true);
      zz.set_z(g.q[1], true);
      gens.push_back(std::move(xx));
      gens.push_back(std::move(zz));
    } else if (g.kind == GateKind::kMeas) {
      measured[g.q[0]] = 1;
      meas.push_back({g.q[0], g.basis, g.bit});
    } else if (is_unitary(g.kind)) {
      for (QubitId q : g.q) {
        if (measured[q]) throw Error("fragment acts on a measured qubit");
      }
      for (auto& s : gens) s.conjugate(g);
    } else {
      throw Error("unsupported gate in fragment: " + std::string(kind_name(g.kind)));
    }
  }
  std::size_t ng = gens.size(), nm = meas.size();
  // Row g: anticommutation pattern with the measurements, and its combination.
  std::vector<std::vector<std::uint8_t>> anti(ng, std::vector<std::uint8_t>(nm, 0));
  std::vector<std::vector<std::uint8_t>> comb(ng, std::vector<std::uint8_t>(ng, 0));
  for (std::size_t g = 0; g < ng; ++g) {
    comb[g][g] = 1;
    for (std::size_t m = 0; m < nm; ++m) {
      anti[g][m] = meas[m].basis == Basis::kZ ? gens[g].x(meas[m].q) : gens[g].z(meas[m].q);
    }
  }
  std::vector<std::size_t> pivot_row(nm, ng);
  std::size_t row = 0;
  for (std::size_t m = 0; m < nm; ++m) {
    std::size_t p = row;
    while (p < ng && !anti[p][m]) ++p;
    if (p == ng) throw Error("fragment measurement cannot be corrected by a Pauli");
    std::swap(anti[row], anti[p]);
    std::swap(comb[row], comb[p]);
    for (std::size_t r = 0; r < ng; ++r) {
      if (r != row && anti[r][m]) {
        for (std::size_t c = 0; c < nm; ++c) anti[r][c] ^= anti[row][c];
        for (std::size_t c = 0; c < ng; ++c) comb[r][c] ^= comb[row][c];
      }
    }
    pivot_row[m] = row++;
  }
  std::vector<PauliFrame::Entry> out(n);
  for (std::size_t m = 0; m < nm; ++m) {
    PauliString t(n);
    for (std::size_t g = 0; g < ng; ++g) {
      if (comb[pivot_row[m]][g]) t.left_multiply(gens[g]);
    }
    for (QubitId s : survivors) {
      if (t.x(s)) out[s].x ^= XorExpr::bit(meas[m].bit);
      if (t.z(s)) out[s].z ^= XorExpr::bit(meas[m].bit);
    }
  }
  return out;
}

/// How measurement bits of an entanglement path or tree are numbered. Links
/// are numbered 1..m in preorder from the root; link k owns bits 2k-1, 2k.
///
/// kFigure: bit 2k-1 is the Z measurement on the parent side and 2k the X
/// measurement on the child side (control gets Z^{even}, targets X^{odd}).
/// kTheorem: the opposite parity (control gets Z^{odd}, targets X^{even}).
enum class BitLabeling { kFigure, kTheorem };

/// Interaction performed at the leaves of a fan-in tree.
enum class TargetAction { kCX, kCZ };

/// A fan-in telegate: `root` (on `root_proc`) acts on the remote `targets`
/// through Bell pairs laid along the edges of `tree`.
struct TreeTelegate {
  QubitId root = 0;
  ProcId root_proc = 0;
  std::map<ProcId, std::vector<QubitId>> targets;
  EdgeList tree;
  TargetAction action = TargetAction::kCX;
  int round = -1;
};

/// Assembles an extended circuit gate by gate while pushing every correction
/// into the terminal frame. Measurement flips are folded into later
/// expressions, so recorded bits are raw outcomes.
class ExtendedBuilder {
 public:
  explicit ExtendedBuilder(std::size_t num_data, BitId first_bit = 1)
      : num_qubits_(num_data), num_data_(num_data), tracker_(num_data), next_bit_(first_bit) {
    for (std::size_t i = 0; i < num_data; ++i) outputs_.push_back(static_cast<QubitId>(i));
  }

  BitLabeling labeling = BitLabeling::kFigure;

  std::size_t num_qubits() const { return num_qubits_; }
  std::vector<QubitId>& outputs() { return outputs_; }

  QubitId fresh_qubit() {
    QubitId q = static_cast<QubitId>(num_qubits_++);
    tracker_.resize(num_qubits_);
    return q;
  }
  BitId fresh_bit() { return next_bit_++; }
  void reserve_bits(BitId upto) { next_bit_ = std::max(next_bit_, upto + 1); }

  /// Rewrites an expression over flipped bits into raw outcomes.
  XorExpr to_raw(const XorExpr& e) const {
    XorExpr out = e;
    for (BitId b : e.bits()) {
      auto it = flips_.find(b);
      if (it != flips_.end()) out ^= it->second;
    }
    return out;
  }

  /// Appends a gate; a Pauli is absorbed into the frame instead.
  void append(Gate g) {
    if (g.kind == GateKind::kPauli) {
      g.cond = to_raw(g.cond);
      tracker_.advance(g);
      return;
    }
    if (g.kind == GateKind::kMeas) {
      XorExpr flip = tracker_.advance(g) ^ to_raw(g.cond);
      if (!flip.empty()) flips_[g.bit] = flip;
      g.cond = {};
      reserve_bits(g.bit);
    } else {
      tracker_.advance(g);
    }
    gates_.push_back(std::move(g));
  }

  /// Adds X^x Z^z on `q`, with x and z over flipped bits.
  void correct(QubitId q, const XorExpr& x, const XorExpr& z) {
    tracker_.add(q, to_raw(x), to_raw(z));
  }

  /// Communication qubits of link (u, v) at `slot`, as (u side, v side).
  std::pair<QubitId, QubitId> link_qubits(ProcId u, ProcId v, std::size_t slot) {
    auto key = std::make_tuple(std::min(u, v), std::max(u, v), slot);
    auto it = comm_.find(key);
    if (it == comm_.end()) {
      QubitId a = fresh_qubit(), b = fresh_qubit();
      it = comm_.emplace(key, std::make_pair(a, b)).first;
    }
    return u < v ? it->second : std::make_pair(it->second.second, it->second.first);
  }

  /// Next free slot on link (u, v) in `round`; round -1 always opens a new slot.
  std::size_t take_slot(ProcId u, ProcId v, int round) {
    auto key = std::make_tuple(round, std::min(u, v), std::max(u, v));
    if (round < 0) return fresh_slot_[{std::min(u, v), std::max(u, v)}]++;
    return slot_count_[key]++;
  }

  /// Emits a fan-in telegate and records its corrections. `variants`, if
  /// given, holds one Bell variant per tree edge in preorder.
  void telegate(const TreeTelegate& t, const std::vector<BellVariant>* variants = nullptr) {
    // Orient the tree from the root; children in ascending processor order.
    std::map<ProcId, std::vector<ProcId>> nbr;
    for (auto [a, b] : t.tree) {
      if (a == b) throw Error("tree edge is a self-loop");
      nbr[a].push_back(b);
      nbr[b].push_back(a);
    }
    for (auto& [k, v] : nbr) std::sort(v.begin(), v.end());
    struct Link {
      ProcId parent, child;
      QubitId a, b;  // parent side, child side
      BitId z_bit, x_bit;
    };
    std::vector<Link> links;
    std::map<ProcId, std::size_t> incoming;  // node -> link index
    std::map<ProcId, std::vector<std::size_t>> outgoing;
    std::vector<ProcId> stack{t.root_proc};
    std::map<ProcId, bool> seen{{t.root_proc, true}};
    std::vector<ProcId> order;
    while (!stack.empty()) {
      ProcId u = stack.back();
      stack.pop_back();
      order.push_back(u);
      const auto& ns = nbr[u];
      std::vector<ProcId> kids;
      for (ProcId v : ns) {
        if (seen.count(v)) continue;
        seen[v] = true;
        kids.push_back(v);
      }
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    if (seen.size() != t.tree.size() + 1) throw Error("telegate edges do not form a tree");
    for (auto& [p, qs] : t.targets) {
      if (p == t.root_proc) throw Error("telegate target on the root processor");
      if (!seen.count(p)) throw Error("telegate tree does not reach processor " + std::to_string(p));
    }
    // Preorder numbering of links: re-walk with the same child order.
    std::map<ProcId, ProcId> parent_of;
    {
      std::vector<ProcId> st{t.root_proc};
      std::map<ProcId, bool> vis{{t.root_proc, true}};
      while (!st.empty()) {
        ProcId u = st.back();
        st.pop_back();
        if (u != t.root_proc) {
          ProcId p = parent_of[u];
          std::size_t slot = take_slot(p, u, t.round);
          auto [a, b] = link_qubits(p, u, slot);
          incoming[u] = links.size();
          outgoing[p].push_back(links.size());
          links.push_back({p, u, a, b, 0, 0});
        }
        std::vector<ProcId> kids;
        for (ProcId v : nbr[u]) {
          if (!vis.count(v)) {
            vis[v] = true;
            parent_of[v] = u;
            kids.push_back(v);
          }
        }
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) st.push_back(*it);
      }
    }
    if (variants && variants->size() != links.size()) {
      throw Error("one Bell variant per tree edge is required");
    }
    BitId base = next_bit_;
    next_bit_ += static_cast<BitId>(2 * links.size());
    for (std::size_t k = 0; k < links.size(); ++k) {
      BitId odd = base + static_cast<BitId>(2 * k), even = odd + 1;
      if (labeling == BitLabeling::kFigure) {
        links[k].z_bit = odd;
        links[k].x_bit = even;
      } else {
        links[k].x_bit = odd;
        links[k].z_bit = even;
      }
    }

    // Local fragment: root, targets, then link qubits.
    std::vector<QubitId> local_to_global{t.root};
    for (auto& [p, qs] : t.targets) local_to_global.insert(local_to_global.end(), qs.begin(), qs.end());
    std::size_t data = local_to_global.size();
    std::map<QubitId, QubitId> to_local;
    for (std::size_t i = 0; i < local_to_global.size(); ++i) {
      to_local[local_to_global[i]] = static_cast<QubitId>(i);
    }
    for (const auto& l : links) {
      for (QubitId g : {l.a, l.b}) {
        to_local[g] = static_cast<QubitId>(local_to_global.size());
        local_to_global.push_back(g);
      }
    }
    std::vector<Gate> frag;
    for (std::size_t k = 0; k < links.size(); ++k) {
      BellVariant v = variants ? (*variants)[k] : BellVariant::kPhiPlus;
      frag.push_back(Gate::bell(links[k].a, links[k].b, v, t.round));
    }
    auto fan = [&](QubitId c, const std::vector<QubitId>& ts, bool cz) {
      if (ts.empty()) return;
      if (ts.size() == 1) {
        frag.push_back(cz ? Gate::cz(c, ts[0]) : Gate::cx(c, ts[0]));
      } else {
        frag.push_back(cz ? Gate::fanin_cz(c, ts) : Gate::fanin_cx(c, ts));
      }
    };
    for (ProcId u : order) {
      QubitId src = u == t.root_proc ? t.root : links[incoming[u]].b;
      std::vector<QubitId> xs;
      for (std::size_t k : outgoing[u]) xs.push_back(links[k].a);
      auto tg = t.targets.find(u);
      bool has_targets = tg != t.targets.end();
      // CZ targets next to outgoing links join the X fan-in through
      // H = Y^{1/2} Z = X Y^{1/2}; the Paulis land in the frame.
      bool merge_cz = has_targets && t.action == TargetAction::kCZ && !xs.empty();
      if (merge_cz) {
        for (QubitId q : tg->second) {
          frag.push_back(Gate::pauli(Basis::kZ, q));
          frag.push_back(Gate::yhalf(q));
        }
      }
      if (has_targets && (t.action == TargetAction::kCX || merge_cz)) {
        xs.insert(xs.end(), tg->second.begin(), tg->second.end());
      }
      fan(src, xs, false);
      if (has_targets && t.action == TargetAction::kCZ && !merge_cz) fan(src, tg->second, true);
      if (merge_cz) {
        for (QubitId q : tg->second) {
          frag.push_back(Gate::yhalf(q));
          frag.push_back(Gate::pauli(Basis::kX, q));
        }
      }
    }
    for (const auto& l : links) {
      frag.push_back(Gate::meas(l.a, Basis::kZ, l.z_bit));
      frag.push_back(Gate::meas(l.b, Basis::kX, l.x_bit));
    }

    std::vector<Gate> local;
    for (Gate g : frag) {
      if (g.kind == GateKind::kPauli) continue;  // signs only
      for (QubitId& q : g.q) q = to_local.at(q);
      g.variant = BellVariant::kPhiPlus;
      local.push_back(std::move(g));
    }
    std::vector<QubitId> survivors;
    for (std::size_t i = 0; i < data; ++i) survivors.push_back(static_cast<QubitId>(i));
    auto corr = derive_corrections(local_to_global.size(), local, survivors);

    for (Gate& g : frag) append(std::move(g));
    for (std::size_t i = 0; i < data; ++i) correct(local_to_global[i], corr[i].x, corr[i].z);
  }

  /// Moves logical qubit `q` (physically on `src_q`) across link (src, dst).
  /// Returns the physical qubit now holding it.
  QubitId teleport(QubitId src_q, ProcId src, ProcId dst, int round = -1) {
    std::size_t slot = take_slot(src, dst, round);
    auto [a, b] = link_qubits(src, dst, slot);
    BitId b1 = fresh_bit(), b2 = fresh_bit();
    std::vector<Gate> frag{Gate::bell(a, b, BellVariant::kPhiPlus, round), Gate::cx(src_q, a),
                           Gate::meas(src_q, Basis::kX, b1), Gate::meas(a, Basis::kZ, b2)};
    std::vector<Gate> local = frag;
    std::map<QubitId, QubitId> to_local{{src_q, 0}, {a, 1}, {b, 2}};
    for (Gate& g : local) {
      for (QubitId& q : g.q) q = to_local.at(q);
    }
    auto corr = derive_corrections(3, local, {2});
    for (Gate& g : frag) append(std::move(g));
    correct(b, corr[2].x, corr[2].z);
    return b;
  }

  ExtendedCircuit finish() const {
    ExtendedCircuit ec;
    ec.num_qubits = num_qubits_;
    ec.num_data = num_data_;
    ec.gates = gates_;
    ec.frame = tracker_.frame();
    ec.frame.resize(num_qubits_);
    ec.outputs = outputs_;
    ec.next_bit = next_bit_;
    return ec;
  }

 private:
  std::size_t num_qubits_;
  std::size_t num_data_;
  FrameTracker tracker_;
  BitId next_bit_;
  std::vector<Gate> gates_;
  std::vector<QubitId> outputs_;
  std::map<BitId, XorExpr> flips_;
  std::map<std::tuple<ProcId, ProcId, std::size_t>, std::pair<QubitId, QubitId>> comm_;
  std::map<std::tuple<int, ProcId, ProcId>, std::size_t> slot_count_;
  std::map<std::pair<ProcId, ProcId>, std::size_t> fresh_slot_;
};

namespace detail {

inline void check_path(const std::vector<ProcId>& path, ProcId from, ProcId to,
                       const QuotientGraph* q) {
  if (path.size() < 2) throw Error("path needs at least one link");
  if (path.front() != from || path.back() != to) throw Error("path endpoints do not match");
  auto sorted = path;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error("path revisits a processor");
  }
  if (q) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (!q->edge_index(path[i], path[i + 1])) {
        throw Error("processors " + std::to_string(path[i]) + " and " +
                    std::to_string(path[i + 1]) + " are not adjacent");
      }
    }
  }
}

inline ExtendedCircuit path_telegate(ProcId control_proc, ProcId target_proc,
                                     const std::vector<ProcId>& path, const QuotientGraph* q,
                                     TargetAction action, BitLabeling labeling) {
  check_path(path, control_proc, target_proc, q);
  ExtendedBuilder b(2);
  b.labeling = labeling;
  TreeTelegate t;
  t.root = 0;
  t.root_proc = control_proc;
  t.targets[target_proc] = {1};
  t.tree = edges_of(path);
  t.action = action;
  b.telegate(t);
  return b.finish();
}

}  // namespace detail

/// Remote CX from data qubit 0 (on control_proc) to data qubit 1 (on
/// target_proc) along `path`. Communication qubits follow the data qubits.
inline ExtendedCircuit expand_telegate_cx(ProcId control_proc, ProcId target_proc,
                                          const std::vector<ProcId>& path,
                                          const QuotientGraph* q = nullptr,
                                          BitLabeling labeling = BitLabeling::kFigure) {
  return detail::path_telegate(control_proc, target_proc, path, q, TargetAction::kCX, labeling);
}

/// Remote CZ between data qubits 0 and 1, as expand_telegate_cx.
inline ExtendedCircuit expand_telegate_cz(ProcId control_proc, ProcId target_proc,
                                          const std::vector<ProcId>& path,
                                          const QuotientGraph* q = nullptr,
                                          BitLabeling labeling = BitLabeling::kFigure) {
  return detail::path_telegate(control_proc, target_proc, path, q, TargetAction::kCZ, labeling);
}

/// Remote fan-in from data qubit 0 on control_proc to one target per entry of
/// target_procs (data qubits 1.. in ascending processor order).
inline ExtendedCircuit expand_fanin_tree(ProcId control_proc, std::vector<ProcId> target_procs,
                                         const EdgeList& tree, const QuotientGraph* q = nullptr,
                                         TargetAction action = TargetAction::kCX,
                                         BitLabeling labeling = BitLabeling::kFigure) {
  std::sort(target_procs.begin(), target_procs.end());
  if (std::adjacent_find(target_procs.begin(), target_procs.end()) != target_procs.end()) {
    throw Error("duplicate target processor");
  }
  if (q) {
    for (auto [u, v] : tree) {
      if (!q->edge_index(u, v)) throw Error("tree edge is not in the quotient graph");
    }
  }
  ExtendedBuilder b(1 + target_procs.size());
  b.labeling = labeling;
  TreeTelegate t;
  t.root = 0;
  t.root_proc = control_proc;
  for (std::size_t i = 0; i < target_procs.size(); ++i) {
    t.targets[target_procs[i]] = {static_cast<QubitId>(i + 1)};
  }
  t.tree = tree;
  t.action = action;
  b.telegate(t);
  return b.finish();
}

/// Re-prepares the Bell pairs of `fragment` as the given variants (one per
/// Bell preparation, in order) and folds the difference into the corrections.
/// No quantum gate is added.
inline ExtendedCircuit expand_with_bell_variant(const ExtendedCircuit& fragment,
                                                const std::vector<BellVariant>& variants) {
  if (variants.size() != fragment.bell_count()) {
    throw Error("expected " + std::to_string(fragment.bell_count()) + " Bell variants");
  }
  auto paulis = [](BellVariant v) {
    // (Z on the first qubit, X on the second) relative to Phi+.
    return std::pair<bool, bool>{v == BellVariant::kPhiMinus || v == BellVariant::kPsiMinus,
                                 v == BellVariant::kPsiPlus || v == BellVariant::kPsiMinus};
  };
  ExtendedCircuit out = fragment;
  FrameTracker t(fragment.num_qubits);
  std::map<BitId, bool> flip;
  std::size_t k = 0;
  for (Gate& g : out.gates) {
    if (g.kind == GateKind::kBell) {
      auto [oz, ox] = paulis(g.variant);
      auto [nz, nx] = paulis(variants[k]);
      g.variant = variants[k++];
      t.advance(Gate::bell(g.q[0], g.q[1]));
      if (oz != nz) t.add(g.q[0], {}, XorExpr(true));
      if (ox != nx) t.add(g.q[1], XorExpr(true), {});
      continue;
    }
    XorExpr f = t.advance(g);
    if (g.kind == GateKind::kMeas && f.constant()) flip[g.bit] = true;
  }
  for (auto& e : out.frame.entries) {
    for (auto [b, v] : flip) {
      if (e.x.contains(b)) e.x.flip();
      if (e.z.contains(b)) e.z.flip();
    }
  }
  for (std::size_t q = 0; q < out.frame.size(); ++q) {
    out.frame[static_cast<QubitId>(q)].x ^= t.frame()[static_cast<QubitId>(q)].x;
    out.frame[static_cast<QubitId>(q)].z ^= t.frame()[static_cast<QubitId>(q)].z;
  }
  return out;
}

/// Teleports data qubit 0 from path.front() to path.back(), hop by hop. The
/// result's outputs[0] names the qubit that finally holds the state.
inline ExtendedCircuit expand_teleport(ProcId src_proc, ProcId dst_proc,
                                       std::vector<ProcId> path = {},
                                       const QuotientGraph* q = nullptr) {
  if (path.empty()) path = {src_proc, dst_proc};
  detail::check_path(path, src_proc, dst_proc, q);
  ExtendedBuilder b(1);
  QubitId cur = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) cur = b.teleport(cur, path[i], path[i + 1]);
  b.outputs()[0] = cur;
  return b.finish();
}

/// Entanglement swap through `mid_proc`: qubits 0 (left end), 1 and 2 (the two
/// halves at mid_proc), 3 (right end). Bits 1 (X on qubit 1) and 2 (Z on qubit
/// 2); corrections Z^{b1} on the left end and X^{b2} on the right end leave
/// qubits 0 and 3 in Phi+. outputs = {0, 3}.
inline ExtendedCircuit expand_entanglement_swap(ProcId left_proc, ProcId mid_proc,
                                                ProcId right_proc,
                                                const QuotientGraph* q = nullptr) {
  detail::check_path({left_proc, mid_proc, right_proc}, left_proc, right_proc, q);
  ExtendedCircuit ec;
  ec.num_qubits = 4;
  ec.num_data = 0;
  ec.gates = {Gate::bell(0, 1), Gate::bell(2, 3), Gate::cx(1, 2), Gate::meas(1, Basis::kX, 1),
              Gate::meas(2, Basis::kZ, 2)};
  ec.frame = PauliFrame(4);
  // After the CX the state is stabilized by X0 X1 X2, Z0 Z1, X2 X3, Z1 Z2 Z3,
  // so X0 X3 = (-1)^{b1} and Z0 Z3 = (-1)^{b2}.
  ec.frame[0].z = XorExpr::bit(1);
  ec.frame[3].x = XorExpr::bit(2);
  ec.outputs = {0, 3};
  ec.next_bit = 3;
  return ec;
}

}  // namespace distqc

#endif  // DISTQC_TELEGATE_HPP
