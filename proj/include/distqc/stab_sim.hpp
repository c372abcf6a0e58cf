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

#ifndef DISTQC_STAB_SIM_HPP
#define DISTQC_STAB_SIM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "distqc/circuit.hpp"
#include "distqc/common.hpp"
#include "distqc/pauli.hpp"

namespace distqc {

using Rng = std::mt19937_64;

/// Aaronson-Gottesman tableau: rows [0, n) are destabilizers, [n, 2n) are
/// stabilizers. Starts in |0...0>.
class StabilizerState {
 public:
  explicit StabilizerState(std::size_t n) : n_(n) {
    rows_.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) rows_.push_back(PauliString::single(n, q(i), 'X'));
    for (std::size_t i = 0; i < n; ++i) rows_.push_back(PauliString::single(n, q(i), 'Z'));
  }

  std::size_t num_qubits() const { return n_; }

  void h(QubitId a) { each([&](PauliString& r) { r.h(a); }); }
  void s(QubitId a) { each([&](PauliString& r) { r.s(a); }); }
  void cx(QubitId c, QubitId t) { each([&](PauliString& r) { r.cx(c, t); }); }
  void cz(QubitId a, QubitId b) { each([&](PauliString& r) { r.cz(a, b); }); }
  void x(QubitId a) { each([&](PauliString& r) { r.apply_x(a); }); }
  void z(QubitId a) { each([&](PauliString& r) { r.apply_z(a); }); }
  void y(QubitId a) {
    x(a);
    z(a);
  }

  /// Applies a unitary IR gate.
  void apply(const Gate& g) {
    check_gate(g, n_);
    each([&](PauliString& r) { r.conjugate(g); });
  }

  /// True when the outcome of measuring `basis` on `a` is already fixed.
  bool is_deterministic(QubitId a, Basis basis) const {
    StabilizerState tmp = *this;
    if (basis == Basis::kX) tmp.h(a);
    return !tmp.random_pivot(a).has_value();
  }

  /// Measures `a`; random outcomes are drawn from `rng`.
  bool measure(QubitId a, Basis basis, Rng& rng) {
    std::bernoulli_distribution coin(0.5);
    return *measure_impl(a, basis, [&] { return coin(rng); }, std::nullopt);
  }

  /// Measures `a` and forces a random outcome to `outcome`. Returns nullopt when
  /// the outcome is deterministic and differs from `outcome`.
  std::optional<bool> measure_forced(QubitId a, Basis basis, bool outcome) {
    return measure_impl(a, basis, [&] { return outcome; }, outcome);
  }

  /// Puts `a` into |0> (Z basis) or |+> (X basis).
  void reset(QubitId a, Basis basis, Rng& rng) {
    if (measure(a, Basis::kZ, rng)) x(a);
    if (basis == Basis::kX) h(a);
  }

  std::vector<PauliString> stabilizers() const {
    return std::vector<PauliString>(rows_.begin() + static_cast<std::ptrdiff_t>(n_), rows_.end());
  }
  const std::vector<PauliString>& rows() const { return rows_; }

  /// Reduced row echelon form of the stabilizer group (X columns first).
  std::vector<PauliString> canonical_stabilizers() const { return canonicalize(stabilizers()); }

  /// Stabilizers of the state of `keep` (in that order). Throws if `keep` is
  /// entangled with the remaining qubits.
  std::vector<PauliString> reduced(const std::vector<QubitId>& keep) const {
    std::vector<int> pos(n_, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if (keep[i] >= n_ || pos[keep[i]] >= 0) throw Error("bad qubit list for reduction");
      pos[keep[i]] = static_cast<int>(i);
    }
    std::vector<QubitId> order;
    for (std::size_t i = 0; i < n_; ++i) {
      if (pos[i] < 0) order.push_back(q(i));
    }
    std::size_t discard = order.size();
    std::vector<PauliString> g = stabilizers();
    std::size_t rank = eliminate(g, order);
    if (g.size() - rank != keep.size()) {
      throw Error("kept qubits are entangled with discarded qubits");
    }
    (void)discard;
    std::vector<PauliString> out;
    for (std::size_t r = rank; r < g.size(); ++r) {
      PauliString p(keep.size());
      for (std::size_t i = 0; i < keep.size(); ++i) {
        p.set_x(q(i), g[r].x(keep[i]));
        p.set_z(q(i), g[r].z(keep[i]));
      }
      p.set_sign(g[r].sign());
      out.push_back(std::move(p));
    }
    return canonicalize(std::move(out));
  }

  /// Checks commutation structure of the tableau.
  bool invariants_hold() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (!rows_[n_ + i].commutes(rows_[n_ + j])) return false;
        if (!rows_[i].commutes(rows_[j])) return false;
        bool anti = !rows_[i].commutes(rows_[n_ + j]);
        if (anti != (i == j)) return false;
      }
    }
    return true;
  }

  static std::vector<PauliString> canonicalize(std::vector<PauliString> g) {
    if (g.empty()) return g;
    eliminate(g, {});
    return g;
  }

 private:
  static QubitId q(std::size_t i) { return static_cast<QubitId>(i); }

  template <typename F>
  void each(F&& f) {
    for (auto& r : rows_) f(r);
  }

  /// Row-reduces `g`, first on the X and Z columns of `first` (in order), then
  /// on all X columns and all Z columns. Returns the number of pivots found
  /// among the `first` columns.
  static std::size_t eliminate(std::vector<PauliString>& g, const std::vector<QubitId>& first) {
    std::size_t n = g[0].size();
    std::vector<std::pair<QubitId, bool>> cols;  // (qubit, is_z)
    for (QubitId a : first) {
      cols.push_back({a, false});
      cols.push_back({a, true});
    }
    std::size_t first_cols = cols.size();
    for (std::size_t a = 0; a < n; ++a) cols.push_back({q(a), false});
    for (std::size_t a = 0; a < n; ++a) cols.push_back({q(a), true});
    std::size_t row = 0, first_rank = 0;
    for (std::size_t ci = 0; ci < cols.size() && row < g.size(); ++ci) {
      auto [a, is_z] = cols[ci];
      auto bit = [&](const PauliString& p) { return is_z ? p.z(a) : p.x(a); };
      std::size_t piv = row;
      while (piv < g.size() && !bit(g[piv])) ++piv;
      if (piv == g.size()) continue;
      std::swap(g[row], g[piv]);
      for (std::size_t r = 0; r < g.size(); ++r) {
        if (r != row && bit(g[r])) g[r].left_multiply(g[row]);
      }
      ++row;
      if (ci < first_cols) first_rank = row;
    }
    return first_rank;
  }

  std::optional<std::size_t> random_pivot(QubitId a) const {
    for (std::size_t p = n_; p < 2 * n_; ++p) {
      if (rows_[p].x(a)) return p;
    }
    return std::nullopt;
  }

  template <typename Coin>
  std::optional<bool> measure_impl(QubitId a, Basis basis, Coin&& coin,
                                   std::optional<bool> forced) {
    if (a >= n_) throw Error("measured qubit out of range");
    if (basis == Basis::kX) h(a);
    std::optional<bool> result;
    if (auto p = random_pivot(a)) {
      bool outcome = coin();
      for (std::size_t i = 0; i < 2 * n_; ++i) {
        if (i != *p && rows_[i].x(a)) rows_[i].left_multiply(rows_[*p]);
      }
      rows_[*p - n_] = rows_[*p];
      rows_[*p] = PauliString::single(n_, a, 'Z');
      rows_[*p].set_sign(outcome);
      result = outcome;
    } else {
      PauliString acc(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        if (rows_[i].x(a)) acc.left_multiply(rows_[n_ + i]);
      }
      result = acc.sign();
      if (forced && *forced != *result) result.reset();
    }
    if (basis == Basis::kX) h(a);
    return result;
  }

  std::size_t n_;
  std::vector<PauliString> rows_;
};

/// Outcome of running an extended circuit on a simulator.
struct Branch {
  std::vector<std::uint8_t> bits;  // indexed by bit id; value includes measurement flips
};

/// Runs `gates` on `state`, sampling measurements from `rng`. Bits recorded in
/// `branch` are the flipped values (raw outcome xor the gate's flip).
inline void run_gates(StabilizerState& state, const std::vector<Gate>& gates, Branch& branch,
                      Rng& rng) {
  auto set_bit = [&](BitId b, bool v) {
    if (b >= branch.bits.size()) branch.bits.resize(b + 1, 0);
    branch.bits[b] = v;
  };
  for (const Gate& g : gates) {
    switch (g.kind) {
      case GateKind::kPauli:
        if (g.cond.eval(branch.bits)) {
          if (g.basis == Basis::kX) {
            state.x(g.q[0]);
          } else {
            state.z(g.q[0]);
          }
        }
        break;
      case GateKind::kPrep:
        state.reset(g.q[0], g.basis, rng);
        break;
      case GateKind::kMeas: {
        bool raw = state.measure(g.q[0], g.basis, rng);
        set_bit(g.bit, raw != g.cond.eval(branch.bits));
        break;
      }
      case GateKind::kBell: {
        QubitId a = g.q[0], b = g.q[1];
        state.reset(a, Basis::kZ, rng);
        state.reset(b, Basis::kZ, rng);
        state.h(a);
        state.cx(a, b);
        if (g.variant == BellVariant::kPhiMinus || g.variant == BellVariant::kPsiMinus) state.z(a);
        if (g.variant == BellVariant::kPsiPlus || g.variant == BellVariant::kPsiMinus) state.x(b);
        break;
      }
      default:
        state.apply(g);
    }
  }
}

/// Applies the frame corrections selected by `bits`.
inline void apply_frame(StabilizerState& state, const PauliFrame& frame,
                        const std::vector<std::uint8_t>& bits) {
  for (std::size_t q = 0; q < frame.size(); ++q) {
    QubitId a = static_cast<QubitId>(q);
    if (frame[a].x.eval(bits)) state.x(a);
    if (frame[a].z.eval(bits)) state.z(a);
  }
}

}  // namespace distqc

#endif  // DISTQC_STAB_SIM_HPP
