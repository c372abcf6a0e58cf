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

#ifndef DISTQC_PAULI_HPP
#define DISTQC_PAULI_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "distqc/circuit.hpp"
#include "distqc/common.hpp"

namespace distqc {

/// A Hermitian Pauli product (-1)^sign * prod_q X_q^{x_q} Z_q^{z_q} with the
/// usual convention that x=z=1 denotes Y.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n) : n_(n), x_(words(n), 0), z_(words(n), 0) {}

  static PauliString single(std::size_t n, QubitId q, char p) {
    PauliString s(n);
    if (p == 'X' || p == 'Y') s.set_x(q, true);
    if (p == 'Z' || p == 'Y') s.set_z(q, true);
    return s;
  }

  /// Parses "+XZ_Y" style strings ('_' or 'I' for identity).
  static PauliString parse(const std::string& text) {
    std::size_t i = 0;
    bool neg = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
      neg = text[0] == '-';
      i = 1;
    }
    PauliString s(text.size() - i);
    s.sign_ = neg;
    for (std::size_t q = 0; i < text.size(); ++i, ++q) {
      char c = text[i];
      if (c == 'X' || c == 'Y') s.set_x(static_cast<QubitId>(q), true);
      if (c == 'Z' || c == 'Y') s.set_z(static_cast<QubitId>(q), true);
      if (c != 'X' && c != 'Y' && c != 'Z' && c != '_' && c != 'I') {
        throw Error(std::string("bad Pauli character '") + c + "'");
      }
    }
    return s;
  }

  std::size_t size() const { return n_; }
  bool x(QubitId q) const { return (x_[q >> 6] >> (q & 63)) & 1; }
  bool z(QubitId q) const { return (z_[q >> 6] >> (q & 63)) & 1; }
  bool sign() const { return sign_; }
  void set_x(QubitId q, bool v) { set(x_, q, v); }
  void set_z(QubitId q, bool v) { set(z_, q, v); }
  void set_sign(bool v) { sign_ = v; }
  void flip_sign() { sign_ = !sign_; }
  const std::vector<std::uint64_t>& xs() const { return x_; }
  const std::vector<std::uint64_t>& zs() const { return z_; }

  bool is_identity() const {
    for (std::size_t w = 0; w < x_.size(); ++w) {
      if (x_[w] | z_[w]) return false;
    }
    return true;
  }
  std::size_t weight() const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < x_.size(); ++w) c += std::popcount(x_[w] | z_[w]);
    return c;
  }

  bool commutes(const PauliString& o) const {
    unsigned parity = 0;
    for (std::size_t w = 0; w < x_.size(); ++w) {
      parity ^= std::popcount((x_[w] & o.z_[w]) ^ (z_[w] & o.x_[w])) & 1u;
    }
    return parity == 0;
  }

  /// Replaces *this by o * (*this), tracking the sign. The product must be
  /// Hermitian up to sign (the operands commute); for anticommuting operands
  /// the imaginary part is dropped, which tableau code never relies on.
  void left_multiply(const PauliString& o) {
    // Exponent of i accumulated qubit by qubit, as in Aaronson-Gottesman rowsum.
    int e = 2 * (sign_ + o.sign_);
    for (std::size_t w = 0; w < x_.size(); ++w) {
      std::uint64_t live = (o.x_[w] | o.z_[w]) & (x_[w] | z_[w]);
      while (live) {
        unsigned b = static_cast<unsigned>(std::countr_zero(live));
        live &= live - 1;
        int x1 = (o.x_[w] >> b) & 1, z1 = (o.z_[w] >> b) & 1;
        int x2 = (x_[w] >> b) & 1, z2 = (z_[w] >> b) & 1;
        if (x1 && z1) {
          e += z2 - x2;
        } else if (x1) {
          e += z2 * (2 * x2 - 1);
        } else {
          e += x2 * (1 - 2 * z2);
        }
      }
      x_[w] ^= o.x_[w];
      z_[w] ^= o.z_[w];
    }
    sign_ = ((e % 4) + 4) % 4 >= 2;
  }

  /// Conjugation P -> U P U^dagger for the elementary Cliffords.
  void h(QubitId q) {
    bool a = x(q), b = z(q);
    sign_ ^= a && b;
    set_x(q, b);
    set_z(q, a);
  }
  void s(QubitId q) {
    bool a = x(q), b = z(q);
    sign_ ^= a && b;
    set_z(q, a != b);
  }
  void yhalf(QubitId q) {
    bool a = x(q), b = z(q);
    sign_ ^= a && !b;
    set_x(q, b);
    set_z(q, a);
  }
  void xhalf(QubitId q) {
    bool a = x(q), b = z(q);
    sign_ ^= b && !a;
    set_x(q, a != b);
  }
  void cx(QubitId c, QubitId t) {
    bool xc = x(c), zc = z(c), xt = x(t), zt = z(t);
    sign_ ^= xc && zt && (xt == zc);
    set_x(t, xt != xc);
    set_z(c, zc != zt);
  }
  void cz(QubitId a, QubitId b) {
    bool xa = x(a), za = z(a), xb = x(b), zb = z(b);
    sign_ ^= xa && xb && (za != zb);
    set_z(a, za != xb);
    set_z(b, zb != xa);
  }
  void apply_x(QubitId q) { sign_ ^= z(q); }
  void apply_z(QubitId q) { sign_ ^= x(q); }

  /// Conjugates by a unitary gate of the IR. Conditioned Paulis must be
  /// resolved by the caller; preparations and measurements are rejected.
  void conjugate(const Gate& g) {
    switch (g.kind) {
      case GateKind::kCZ:
        cz(g.q[0], g.q[1]);
        break;
      case GateKind::kCX:
        cx(g.q[0], g.q[1]);
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
        yhalf(g.q[0]);
        break;
      case GateKind::kXHalf:
        xhalf(g.q[0]);
        break;
      case GateKind::kZHalf:
        s(g.q[0]);
        break;
      default:
        throw Error("cannot conjugate a Pauli by a " + std::string(kind_name(g.kind)) + " gate");
    }
  }

  std::string str() const {
    std::string out(1, sign_ ? '-' : '+');
    for (std::size_t q = 0; q < n_; ++q) {
      bool a = x(static_cast<QubitId>(q)), b = z(static_cast<QubitId>(q));
      out += a ? (b ? 'Y' : 'X') : (b ? 'Z' : '_');
    }
    return out;
  }

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  static std::size_t words(std::size_t n) { return (n + 63) / 64; }
  static void set(std::vector<std::uint64_t>& v, QubitId q, bool b) {
    std::uint64_t m = std::uint64_t{1} << (q & 63);
    if (b) {
      v[q >> 6] |= m;
    } else {
      v[q >> 6] &= ~m;
    }
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
  bool sign_ = false;
};

}  // namespace distqc

#endif  // DISTQC_PAULI_HPP
