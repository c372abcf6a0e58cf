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

#ifndef DISTQC_VERIFY_HPP
#define DISTQC_VERIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "distqc/circuit.hpp"
#include "distqc/common.hpp"
#include "distqc/stab_sim.hpp"

namespace distqc {

/// Random Clifford sequence of H, S and CX on qubits [0, n).
inline std::vector<Gate> random_clifford_prefix(std::size_t n, Rng& rng) {
  std::vector<Gate> out;
  if (n == 0) return out;
  std::size_t len = 4 * n * n + 8;
  for (std::size_t i = 0; i < len; ++i) {
    auto pick = rng() % 3;
    QubitId a = static_cast<QubitId>(rng() % n);
    if (pick == 0) {
      out.push_back(Gate::yhalf(a));
    } else if (pick == 1) {
      out.push_back(Gate::zhalf(a));
    } else if (n > 1) {
      QubitId b = static_cast<QubitId>(rng() % (n - 1));
      if (b >= a) ++b;
      out.push_back(Gate::cx(a, b));
    } else {
      out.push_back(Gate::xhalf(a));
    }
  }
  return out;
}

enum class EquivalenceStatus { kEquivalent, kMismatch, kEntangled };

struct EquivalenceReport {
  EquivalenceStatus status = EquivalenceStatus::kEquivalent;
  std::size_t trial = 0;
  std::size_t branch = 0;
  std::string detail;
  bool ok() const { return status == EquivalenceStatus::kEquivalent; }
};

/// Compares an extended circuit against a logical circuit as channels.
///
/// Every data qubit starts maximally entangled with a reference qubit, then a
/// random Clifford prefix acts on the data. The extended circuit runs with
/// sampled measurement outcomes and its frame applied; its output qubits plus
/// the references must then carry exactly the state the logical circuit yields.
inline EquivalenceReport check_channel(const ExtendedCircuit& ext, const Circuit& logical,
                                       std::size_t trials, std::size_t branches, Rng& rng) {
  std::size_t n = logical.num_qubits;
  if (ext.num_data != n || ext.outputs.size() != n) {
    throw Error("extended circuit has " + std::to_string(ext.num_data) +
                " data qubits, logical circuit has " + std::to_string(n));
  }
  std::vector<Gate> logical_gates = flatten(logical);
  for (const Gate& g : logical_gates) {
    if (g.kind == GateKind::kMeas) throw Error("logical circuit must not measure");
  }
  auto entangle_refs = [&](StabilizerState& s, std::size_t refs_at) {
    for (std::size_t i = 0; i < n; ++i) {
      QubitId r = static_cast<QubitId>(refs_at + i);
      s.h(r);
      s.cx(r, static_cast<QubitId>(i));
    }
  };
  EquivalenceReport rep;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Gate> prefix = random_clifford_prefix(n, rng);

    StabilizerState want(2 * n);
    entangle_refs(want, n);
    Branch none;
    run_gates(want, prefix, none, rng);
    run_gates(want, logical_gates, none, rng);
    std::vector<QubitId> keep_l;
    for (std::size_t i = 0; i < 2 * n; ++i) keep_l.push_back(static_cast<QubitId>(i));
    auto expect = want.reduced(keep_l);

    for (std::size_t b = 0; b < branches; ++b) {
      std::size_t m = ext.num_qubits;
      StabilizerState got(m + n);
      entangle_refs(got, m);
      Branch br;
      run_gates(got, prefix, br, rng);
      run_gates(got, ext.gates, br, rng);
      apply_frame(got, ext.frame, br.bits);
      std::vector<QubitId> keep(ext.outputs.begin(), ext.outputs.end());
      for (std::size_t i = 0; i < n; ++i) keep.push_back(static_cast<QubitId>(m + i));
      std::vector<PauliString> actual;
      try {
        actual = got.reduced(keep);
      } catch (const Error& e) {
        return {EquivalenceStatus::kEntangled, t, b, e.what()};
      }
      if (actual != expect) {
        return {EquivalenceStatus::kMismatch, t, b, "output state differs from the logical circuit"};
      }
    }
  }
  return rep;
}

/// True iff every trial and branch matches. Leftover entanglement between
/// communication and data qubits is a compilation bug and throws.
inline bool channel_equivalent(const ExtendedCircuit& ext, const Circuit& logical,
                               std::size_t trials, std::size_t branches, Rng& rng) {
  EquivalenceReport r = check_channel(ext, logical, trials, branches, rng);
  if (r.status == EquivalenceStatus::kEntangled) {
    throw Error("compilation bug: " + r.detail);
  }
  return r.ok();
}

/// Copy of `ext` with every frame correction removed.
inline ExtendedCircuit drop_corrections(const ExtendedCircuit& ext) {
  ExtendedCircuit out = ext;
  out.frame = PauliFrame(ext.num_qubits);
  return out;
}

}  // namespace distqc

#endif  // DISTQC_VERIFY_HPP
