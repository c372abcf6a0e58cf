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

#ifndef DISTQC_COMMON_HPP
#define DISTQC_COMMON_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace distqc {

using QubitId = std::uint32_t;
using ProcId = std::uint32_t;
using BitId = std::uint32_t;

/// Raised for malformed inputs and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An affine GF(2) form over classical bits: b_i1 ^ b_i2 ^ ... ^ c.
///
/// Bits are kept sorted and unique so equal expressions compare equal.
class XorExpr {
 public:
  XorExpr() = default;
  explicit XorExpr(bool constant) : constant_(constant) {}

  static XorExpr bit(BitId b) {
    XorExpr e;
    e.bits_.push_back(b);
    return e;
  }
  static XorExpr of(std::initializer_list<BitId> bits, bool constant = false) {
    XorExpr e(constant);
    for (BitId b : bits) e ^= bit(b);
    return e;
  }

  const std::vector<BitId>& bits() const { return bits_; }
  bool constant() const { return constant_; }
  bool empty() const { return bits_.empty() && !constant_; }
  bool contains(BitId b) const { return std::binary_search(bits_.begin(), bits_.end(), b); }

  XorExpr& operator^=(const XorExpr& o) {
    std::vector<BitId> out;
    out.reserve(bits_.size() + o.bits_.size());
    std::set_symmetric_difference(bits_.begin(), bits_.end(), o.bits_.begin(), o.bits_.end(),
                                  std::back_inserter(out));
    bits_ = std::move(out);
    constant_ ^= o.constant_;
    return *this;
  }
  friend XorExpr operator^(XorExpr a, const XorExpr& b) { return a ^= b; }
  XorExpr& flip() {
    constant_ = !constant_;
    return *this;
  }

  /// Substitutes bit `b` by `replacement` (b must not appear in replacement).
  XorExpr substitute(BitId b, const XorExpr& replacement) const {
    if (!contains(b)) return *this;
    XorExpr out = *this ^ bit(b);
    out ^= replacement;
    return out;
  }

  /// `values[b]` is the value of bit b; bits past the end read as 0.
  bool eval(const std::vector<std::uint8_t>& values) const {
    bool v = constant_;
    for (BitId b : bits_) v ^= (b < values.size() && values[b]);
    return v;
  }

  /// Renders as "b1^b3^1", or "0" when empty.
  std::string to_string() const {
    std::string s;
    for (BitId b : bits_) {
      if (!s.empty()) s += '^';
      s += 'b' + std::to_string(b);
    }
    if (constant_) s += s.empty() ? "1" : "^1";
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const XorExpr&, const XorExpr&) = default;

 private:
  std::vector<BitId> bits_;
  bool constant_ = false;
};

}  // namespace distqc

#endif  // DISTQC_COMMON_HPP
