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

#ifndef DISTQC_PAULI_PUSHING_HPP
#define DISTQC_PAULI_PUSHING_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distqc/circuit.hpp"
#include "distqc/common.hpp"

namespace distqc {

/// Pushes pending conditioned Paulis forward through a gate stream.
///
/// The frame holds, per qubit, the X and Z exponents of corrections that are
/// logically due at the current position. Global phases are not tracked.
class FrameTracker {
 public:
  explicit FrameTracker(std::size_t n = 0) : frame_(n) {}

  const PauliFrame& frame() const { return frame_; }
  PauliFrame& frame() { return frame_; }
  void resize(std::size_t n) {
    if (n > frame_.size()) frame_.resize(n);
  }

  void add(QubitId q, const XorExpr& x, const XorExpr& z) {
    frame_[q].x ^= x;
    frame_[q].z ^= z;
  }

  /// Moves the frame past `g`. For a measurement, returns the flip that the
  /// pending Paulis induce on its outcome; otherwise returns an empty expression.
  XorExpr advance(const Gate& g) {
    auto& f = frame_.entries;
    switch (g.kind) {
      case GateKind::kCX:
        cx(g.q[0], g.q[1]);
        break;
      case GateKind::kCZ:
        cz(g.q[0], g.q[1]);
        break;
      case GateKind::kFanInCX:
        for (std::size_t i = 1; i < g.q.size(); ++i) cx(g.q[0], g.q[i]);
        break;
      case GateKind::kFanOutCX:
        for (std::size_t i = 1; i < g.q.size(); ++i) cx(g.q[i], g.q[0]);
        break;
      case GateKind::kFanInCZ:
        for (std::size_t i = 1; i < g.q.size(); ++i) cz(g.q[0], g.q[i]);
        break;
      case GateKind::kYHalf:
        std::swap(f.at(g.q[0]).x, f.at(g.q[0]).z);
        break;
      case GateKind::kXHalf:
        f.at(g.q[0]).x ^= f.at(g.q[0]).z;
        break;
      case GateKind::kZHalf:
        f.at(g.q[0]).z ^= f.at(g.q[0]).x;
        break;
      case GateKind::kPauli:
        if (g.basis == Basis::kX) {
          f.at(g.q[0]).x ^= g.cond;
        } else {
          f.at(g.q[0]).z ^= g.cond;
        }
        break;
      case GateKind::kPrep:
        f.at(g.q[0]) = {};
        break;
      case GateKind::kMeas: {
        auto& e = f.at(g.q[0]);
        // The anticommuting component flips the outcome; the commuting one
        // acts as a phase on the collapsed state and is dropped.
        XorExpr flip;
        if (g.basis == Basis::kZ) {
          flip = e.x;
          e.z = {};
        } else {
          flip = e.z;
          e.x = {};
        }
        return flip;
      }
      case GateKind::kBell: {
        auto& a = f.at(g.q[0]);
        auto& b = f.at(g.q[1]);
        a = {};
        b = {};
        if (g.variant == BellVariant::kPhiMinus || g.variant == BellVariant::kPsiMinus) {
          a.z = XorExpr(true);
        }
        if (g.variant == BellVariant::kPsiPlus || g.variant == BellVariant::kPsiMinus) {
          b.x = XorExpr(true);
        }
        break;
      }
    }
    return {};
  }

 private:
  void cx(QubitId c, QubitId t) {
    auto& f = frame_.entries;
    f.at(t).x ^= f.at(c).x;
    f.at(c).z ^= f.at(t).z;
  }
  void cz(QubitId a, QubitId b) {
    auto& f = frame_.entries;
    XorExpr xa = f.at(a).x;
    f.at(a).z ^= f.at(b).x;
    f.at(b).z ^= xa;
  }

  PauliFrame frame_;
};

/// A conditioned Pauli on one qubit, as produced by the push rules.
struct CondPauli {
  Basis pauli = Basis::kX;
  QubitId qubit = 0;
  XorExpr cond;
  friend bool operator==(const CondPauli&, const CondPauli&) = default;
};

/// Moves `p`, standing before `gate`, to after it. Supports CX, CZ and
/// Y^{1/2}; the Y^{1/2} rule holds up to a global phase.
inline std::vector<CondPauli> push_pauli(const Gate& gate, const CondPauli& p) {
  if (gate.kind != GateKind::kCX && gate.kind != GateKind::kCZ && gate.kind != GateKind::kYHalf) {
    throw Error("push_pauli does not support " + std::string(kind_name(gate.kind)) + " gates");
  }
  if (std::find(gate.q.begin(), gate.q.end(), p.qubit) == gate.q.end()) {
    throw Error("pushed Pauli does not act on the gate's qubits");
  }
  QubitId hi = 0;
  for (QubitId q : gate.q) hi = std::max(hi, q);
  FrameTracker t(static_cast<std::size_t>(std::max(hi, p.qubit)) + 1);
  t.advance(Gate::pauli(p.pauli, p.qubit, p.cond));
  t.advance(gate);
  std::vector<CondPauli> out;
  for (QubitId q : gate.q) {
    const auto& e = t.frame()[q];
    if (!e.x.empty()) out.push_back({Basis::kX, q, e.x});
    if (!e.z.empty()) out.push_back({Basis::kZ, q, e.z});
  }
  return out;
}

/// Folds `p`, standing right before `meas` on the same qubit, into the
/// measurement. Returns the rewritten measurement; an X before a Z-basis
/// measurement (or Z before X) negates the bit by `p.cond`, a commuting Pauli
/// is dropped.
inline Gate push_through_measurement(const CondPauli& p, const Gate& meas) {
  if (meas.kind != GateKind::kMeas) throw Error("push_through_measurement needs a measurement");
  if (meas.q[0] != p.qubit) throw Error("Pauli and measurement act on different qubits");
  Gate out = meas;
  if (p.pauli != meas.basis) out.cond ^= p.cond;
  return out;
}

/// Moves every conditioned Pauli of `ec` into its terminal frame and into
/// measurement flips. Quantum gates keep their order.
inline ExtendedCircuit normalize_frame(const ExtendedCircuit& ec) {
  FrameTracker t(ec.num_qubits);
  ExtendedCircuit out;
  out.num_qubits = ec.num_qubits;
  out.num_data = ec.num_data;
  out.outputs = ec.outputs;
  out.next_bit = ec.next_bit;
  for (const Gate& g : ec.gates) {
    check_gate(g, ec.num_qubits);
    XorExpr flip = t.advance(g);
    if (g.kind == GateKind::kPauli) continue;
    Gate copy = g;
    if (g.kind == GateKind::kMeas) copy.cond ^= flip;
    out.gates.push_back(std::move(copy));
  }
  out.frame = t.frame();
  for (std::size_t q = 0; q < ec.frame.size() && q < out.frame.size(); ++q) {
    out.frame[static_cast<QubitId>(q)].x ^= ec.frame[static_cast<QubitId>(q)].x;
    out.frame[static_cast<QubitId>(q)].z ^= ec.frame[static_cast<QubitId>(q)].z;
  }
  return out;
}

/// Clifford normal form: Pauli preparations, CZ block, CX block, a Y^{1/2}
/// layer, a second CZ block, Pauli measurements.
struct NormalFormCircuit {
  std::size_t num_qubits = 0;
  std::vector<Gate> prep;
  std::vector<Gate> cz1;
  std::vector<Gate> cx;
  std::vector<Gate> yhalf;
  std::vector<Gate> cz2;
  std::vector<Gate> meas;

  /// Rejects blocks holding gates of the wrong kind.
  void check() const {
    auto only = [&](const std::vector<Gate>& block, std::initializer_list<GateKind> kinds,
                    const char* name) {
      for (const Gate& g : block) {
        check_gate(g, num_qubits);
        if (std::find(kinds.begin(), kinds.end(), g.kind) == kinds.end()) {
          throw Error(std::string("normal form block ") + name + " holds a " +
                      std::string(kind_name(g.kind)) + " gate");
        }
      }
    };
    only(prep, {GateKind::kPrep}, "prep");
    only(cz1, {GateKind::kCZ, GateKind::kFanInCZ}, "cz1");
    only(cx, {GateKind::kCX, GateKind::kFanInCX, GateKind::kFanOutCX}, "cx");
    only(yhalf, {GateKind::kYHalf}, "yhalf");
    only(cz2, {GateKind::kCZ, GateKind::kFanInCZ}, "cz2");
    only(meas, {GateKind::kMeas}, "meas");
  }

  /// Concatenates the blocks into a layered circuit (disjoint-qubit packing).
  Circuit to_circuit() const {
    check();
    std::vector<Gate> seq;
    for (const auto* b : {&prep, &cz1, &cx, &yhalf, &cz2, &meas}) {
      seq.insert(seq.end(), b->begin(), b->end());
    }
    return Circuit{num_qubits, asap_layers(seq, num_qubits)};
  }
};

}  // namespace distqc

#endif  // DISTQC_PAULI_PUSHING_HPP
