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

#ifndef DISTQC_CIRCUIT_HPP
#define DISTQC_CIRCUIT_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distqc/common.hpp"

namespace distqc {

enum class GateKind {
  kCZ,
  kCX,
  kFanInCX,   // q[0] controls X on every other operand
  kFanOutCX,  // q[0] is the target of X controlled by every other operand
  kFanInCZ,   // q[0] shares a CZ with every other operand
  kYHalf,
  kXHalf,
  kZHalf,
  kPauli,  // X or Z on q[0], conditioned on `cond`
  kPrep,
  kMeas,
  kBell,
};

enum class Basis { kX, kZ };

enum class BellVariant { kPhiPlus, kPhiMinus, kPsiPlus, kPsiMinus };

/// One operation of the layered IR.
///
/// `basis` is the Pauli type for kPauli and the basis for kPrep/kMeas.
/// `cond` is the firing condition of a kPauli and the outcome flip of a kMeas.
struct Gate {
  GateKind kind = GateKind::kCZ;
  std::vector<QubitId> q;
  Basis basis = Basis::kZ;
  XorExpr cond;
  BitId bit = 0;
  BellVariant variant = BellVariant::kPhiPlus;
  // Entanglement round that produced a Bell pair; -1 when untagged.
  int round = -1;

  static Gate cz(QubitId a, QubitId b) { return make(GateKind::kCZ, {a, b}); }
  static Gate cx(QubitId c, QubitId t) { return make(GateKind::kCX, {c, t}); }
  static Gate fanin_cx(QubitId c, std::vector<QubitId> targets) {
    return multi(GateKind::kFanInCX, c, std::move(targets));
  }
  static Gate fanout_cx(QubitId t, std::vector<QubitId> controls) {
    return multi(GateKind::kFanOutCX, t, std::move(controls));
  }
  static Gate fanin_cz(QubitId c, std::vector<QubitId> targets) {
    return multi(GateKind::kFanInCZ, c, std::move(targets));
  }
  static Gate yhalf(QubitId a) { return make(GateKind::kYHalf, {a}); }
  static Gate xhalf(QubitId a) { return make(GateKind::kXHalf, {a}); }
  static Gate zhalf(QubitId a) { return make(GateKind::kZHalf, {a}); }
  static Gate pauli(Basis p, QubitId a, XorExpr cond = XorExpr(true)) {
    Gate g = make(GateKind::kPauli, {a}, p);
    g.cond = std::move(cond);
    return g;
  }
  static Gate prep(QubitId a, Basis b = Basis::kZ) { return make(GateKind::kPrep, {a}, b); }
  static Gate meas(QubitId a, Basis b, BitId bit, XorExpr flip = {}) {
    Gate g = make(GateKind::kMeas, {a}, b);
    g.bit = bit;
    g.cond = std::move(flip);
    return g;
  }
  static Gate bell(QubitId a, QubitId b, BellVariant v = BellVariant::kPhiPlus, int round = -1) {
    Gate g = make(GateKind::kBell, {a, b});
    g.variant = v;
    g.round = round;
    return g;
  }

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  static Gate make(GateKind k, std::vector<QubitId> qs, Basis b = Basis::kZ) {
    Gate g;
    g.kind = k;
    g.q = std::move(qs);
    g.basis = b;
    return g;
  }
  static Gate multi(GateKind k, QubitId head, std::vector<QubitId> rest) {
    Gate g = make(k, {head});
    g.q.insert(g.q.end(), rest.begin(), rest.end());
    return g;
  }
};

inline bool is_entangling(GateKind k) {
  return k == GateKind::kCZ || k == GateKind::kCX || k == GateKind::kFanInCX ||
         k == GateKind::kFanOutCX || k == GateKind::kFanInCZ;
}

/// Whether `k` is one of the unitary Clifford kinds (no classical data involved).
inline bool is_unitary(GateKind k) {
  return is_entangling(k) || k == GateKind::kYHalf || k == GateKind::kXHalf ||
         k == GateKind::kZHalf;
}

/// How a gate acts on one of its wires. Two gates commute when they act on
/// every shared wire with the same non-kOther role.
enum class WireRole { kZ, kX, kOther };

inline WireRole wire_role(const Gate& g, QubitId qubit) {
  bool head = !g.q.empty() && g.q[0] == qubit;
  switch (g.kind) {
    case GateKind::kCZ:
    case GateKind::kFanInCZ:
    case GateKind::kZHalf:
      return WireRole::kZ;
    case GateKind::kCX:
    case GateKind::kFanInCX:
      return head ? WireRole::kZ : WireRole::kX;
    case GateKind::kFanOutCX:
      return head ? WireRole::kX : WireRole::kZ;
    case GateKind::kXHalf:
      return WireRole::kX;
    case GateKind::kPauli:
      return g.basis == Basis::kX ? WireRole::kX : WireRole::kZ;
    default:
      return WireRole::kOther;
  }
}

inline std::string_view kind_name(GateKind k) {
  switch (k) {
    case GateKind::kCZ: return "cz";
    case GateKind::kCX: return "cx";
    case GateKind::kFanInCX: return "fanin_cx";
    case GateKind::kFanOutCX: return "fanout_cx";
    case GateKind::kFanInCZ: return "fanin_cz";
    case GateKind::kYHalf: return "yhalf";
    case GateKind::kXHalf: return "xhalf";
    case GateKind::kZHalf: return "zhalf";
    case GateKind::kPauli: return "pauli";
    case GateKind::kPrep: return "prep";
    case GateKind::kMeas: return "meas";
    case GateKind::kBell: return "bell";
  }
  return "?";
}

inline GateKind kind_from_name(std::string_view s) {
  for (int k = 0; k <= static_cast<int>(GateKind::kBell); ++k) {
    if (kind_name(static_cast<GateKind>(k)) == s) return static_cast<GateKind>(k);
  }
  throw Error("unknown gate kind '" + std::string(s) + "'");
}

/// Checks operand counts and distinctness; throws on malformed gates.
inline void check_gate(const Gate& g, std::size_t num_qubits) {
  std::size_t want_min = 1, want_max = 1;
  switch (g.kind) {
    case GateKind::kCZ:
    case GateKind::kCX:
    case GateKind::kBell:
      want_min = want_max = 2;
      break;
    case GateKind::kFanInCX:
    case GateKind::kFanOutCX:
    case GateKind::kFanInCZ:
      want_min = 2;
      want_max = static_cast<std::size_t>(-1);
      break;
    default:
      break;
  }
  std::string name(kind_name(g.kind));
  if (g.q.size() < want_min || g.q.size() > want_max) {
    throw Error(name + " gate has " + std::to_string(g.q.size()) + " operands");
  }
  for (std::size_t i = 0; i < g.q.size(); ++i) {
    if (g.q[i] >= num_qubits) {
      throw Error(name + " operand " + std::to_string(g.q[i]) + " out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (g.q[i] == g.q[j]) throw Error(name + " gate repeats qubit " + std::to_string(g.q[i]));
    }
  }
}

/// A circuit as an ordered list of layers of gates on pairwise disjoint qubits.
struct Circuit {
  std::size_t num_qubits = 0;
  std::vector<std::vector<Gate>> layers;

  std::size_t gate_count() const {
    std::size_t n = 0;
    for (const auto& l : layers) n += l.size();
    return n;
  }
};

struct LayerViolation {
  std::size_t layer = 0;
  std::size_t gate_a = 0;
  std::size_t gate_b = 0;  // equal to gate_a for single-gate problems
  std::string reason;
};

/// Returns the first violation of per-layer disjointness, operand sanity, or
/// measurement bit uniqueness, scanning layers and gates in order.
inline std::optional<LayerViolation> validate_layers(const Circuit& c) {
  std::vector<std::pair<std::size_t, std::size_t>> bit_owner;  // (layer, gate) per bit
  std::vector<std::uint8_t> bit_seen;
  for (std::size_t li = 0; li < c.layers.size(); ++li) {
    const auto& layer = c.layers[li];
    std::vector<std::ptrdiff_t> owner(c.num_qubits, -1);
    for (std::size_t gi = 0; gi < layer.size(); ++gi) {
      const Gate& g = layer[gi];
      try {
        check_gate(g, c.num_qubits);
      } catch (const Error& e) {
        return LayerViolation{li, gi, gi, e.what()};
      }
      for (QubitId q : g.q) {
        if (owner[q] >= 0) {
          return LayerViolation{li, static_cast<std::size_t>(owner[q]), gi,
                                "qubit " + std::to_string(q) + " used twice in one layer"};
        }
        owner[q] = static_cast<std::ptrdiff_t>(gi);
      }
      if (g.kind == GateKind::kMeas) {
        if (g.bit >= bit_seen.size()) bit_seen.resize(g.bit + 1, 0);
        if (bit_seen[g.bit]) {
          return LayerViolation{li, gi, gi, "measurement bit " + std::to_string(g.bit) + " reused"};
        }
        bit_seen[g.bit] = 1;
      }
    }
  }
  return std::nullopt;
}

/// Maps each circuit qubit to a processor id.
struct Placement {
  std::vector<ProcId> map;

  ProcId operator[](QubitId q) const { return map.at(q); }

  static Placement identity(std::size_t n) {
    Placement p;
    for (std::size_t i = 0; i < n; ++i) p.map.push_back(static_cast<ProcId>(i));
    return p;
  }
  static Placement round_robin(std::size_t n, std::size_t procs) {
    if (procs == 0) throw Error("round-robin placement needs at least one processor");
    Placement p;
    for (std::size_t i = 0; i < n; ++i) p.map.push_back(static_cast<ProcId>(i % procs));
    return p;
  }

  void check(std::size_t num_qubits, std::size_t num_procs) const {
    if (map.size() != num_qubits) {
      throw Error("placement covers " + std::to_string(map.size()) + " qubits, circuit has " +
                  std::to_string(num_qubits));
    }
    for (ProcId p : map) {
      if (p >= num_procs) throw Error("placement uses unknown processor " + std::to_string(p));
    }
  }
};

/// Deferred corrections: the Pauli X^x Z^z applied on each qubit at the end.
struct PauliFrame {
  struct Entry {
    XorExpr x;
    XorExpr z;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;

  PauliFrame() = default;
  explicit PauliFrame(std::size_t n) : entries(n) {}
  std::size_t size() const { return entries.size(); }
  Entry& operator[](QubitId q) { return entries.at(q); }
  const Entry& operator[](QubitId q) const { return entries.at(q); }
  void resize(std::size_t n) { entries.resize(n); }
  bool empty() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const Entry& e) { return e.x.empty() && e.z.empty(); });
  }
  friend bool operator==(const PauliFrame&, const PauliFrame&) = default;
};

/// A circuit over data plus communication qubits, given as a gate sequence,
/// with measurement-dependent corrections kept in a terminal Pauli frame.
///
/// `outputs[l]` is the physical qubit holding logical qubit l at the end.
struct ExtendedCircuit {
  std::size_t num_qubits = 0;
  std::size_t num_data = 0;
  std::vector<Gate> gates;
  PauliFrame frame;
  std::vector<QubitId> outputs;
  BitId next_bit = 1;

  std::size_t bell_count() const {
    return static_cast<std::size_t>(std::count_if(
        gates.begin(), gates.end(), [](const Gate& g) { return g.kind == GateKind::kBell; }));
  }
  std::size_t pauli_gate_count() const {
    return static_cast<std::size_t>(std::count_if(
        gates.begin(), gates.end(), [](const Gate& g) { return g.kind == GateKind::kPauli; }));
  }
};

/// Time slices a gate occupies; a Bell preparation is an H followed by a CX.
inline std::size_t gate_duration(const Gate& g) { return g.kind == GateKind::kBell ? 2 : 1; }

/// ASAP start slice of every gate, honoring shared qubits and bit dependencies
/// (a gate whose condition reads bit b starts after the measurement producing b).
inline std::vector<std::size_t> asap_start(const std::vector<Gate>& gates, std::size_t num_qubits) {
  std::vector<std::size_t> free_at(num_qubits, 0);
  std::vector<std::size_t> bit_ready;
  std::vector<std::size_t> start(gates.size(), 0);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    std::size_t s = 0;
    for (QubitId q : g.q) s = std::max(s, free_at.at(q));
    for (BitId b : g.cond.bits()) {
      if (b < bit_ready.size()) s = std::max(s, bit_ready[b]);
    }
    start[i] = s;
    std::size_t end = s + gate_duration(g);
    for (QubitId q : g.q) free_at[q] = end;
    if (g.kind == GateKind::kMeas) {
      if (g.bit >= bit_ready.size()) bit_ready.resize(g.bit + 1, 0);
      bit_ready[g.bit] = end;
    }
  }
  return start;
}

/// Number of quantum time slices used by `gates`. Classically conditioned
/// Paulis are counted like any other gate.
inline std::size_t quantum_depth(const std::vector<Gate>& gates, std::size_t num_qubits) {
  auto start = asap_start(gates, num_qubits);
  std::size_t depth = 0;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    depth = std::max(depth, start[i] + gate_duration(gates[i]));
  }
  return depth;
}

/// Groups `gates` into layers by ASAP start slice, preserving relative order.
inline std::vector<std::vector<Gate>> asap_layers(const std::vector<Gate>& gates,
                                                  std::size_t num_qubits) {
  auto start = asap_start(gates, num_qubits);
  std::vector<std::vector<Gate>> layers;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (start[i] >= layers.size()) layers.resize(start[i] + 1);
    layers[start[i]].push_back(gates[i]);
  }
  layers.erase(std::remove_if(layers.begin(), layers.end(),
                              [](const std::vector<Gate>& l) { return l.empty(); }),
               layers.end());
  return layers;
}

/// Flattens a layered circuit into a gate sequence.
inline std::vector<Gate> flatten(const Circuit& c) {
  std::vector<Gate> out;
  for (const auto& l : c.layers) out.insert(out.end(), l.begin(), l.end());
  return out;
}

}  // namespace distqc

#endif  // DISTQC_CIRCUIT_HPP
