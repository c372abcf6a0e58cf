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

#ifndef DISTQC_JSON_IO_HPP
#define DISTQC_JSON_IO_HPP

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "distqc/circuit.hpp"
#include "distqc/common.hpp"
#include "distqc/flow_compiler.hpp"
#include "distqc/netmodel.hpp"
#include "json.hpp"

namespace distqc {

using Json = nlohmann::json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad JSON field '") + key + "': " + e.what());
  }
}

inline std::string basis_name(Basis b) { return b == Basis::kX ? "X" : "Z"; }

inline Basis basis_from(const std::string& s) {
  if (s == "X") return Basis::kX;
  if (s == "Z") return Basis::kZ;
  throw Error("unknown basis '" + s + "'");
}

inline const char* variant_name(BellVariant v) {
  switch (v) {
    case BellVariant::kPhiPlus: return "phi+";
    case BellVariant::kPhiMinus: return "phi-";
    case BellVariant::kPsiPlus: return "psi+";
    case BellVariant::kPsiMinus: return "psi-";
  }
  return "?";
}

inline BellVariant variant_from(const std::string& s) {
  for (BellVariant v : {BellVariant::kPhiPlus, BellVariant::kPhiMinus, BellVariant::kPsiPlus,
                        BellVariant::kPsiMinus}) {
    if (s == variant_name(v)) return v;
  }
  throw Error("unknown Bell variant '" + s + "'");
}

}  // namespace detail

/// XOR expression as a list of terms: "b<id>" per bit and "1" for the constant.
inline Json to_json(const XorExpr& e) {
  Json out = Json::array();
  for (BitId b : e.bits()) out.push_back("b" + std::to_string(b));
  if (e.constant()) out.push_back("1");
  return out;
}

inline XorExpr xor_from_json(const Json& j) {
  if (!j.is_array()) throw Error("XOR expression must be an array of terms");
  XorExpr e;
  for (const auto& t : j) {
    if (!t.is_string()) throw Error("XOR term must be a string");
    std::string s = t.get<std::string>();
    if (s == "1") {
      e.flip();
    } else if (s.size() > 1 && s[0] == 'b' && s.find_first_not_of("0123456789", 1) == std::string::npos) {
      e ^= XorExpr::bit(static_cast<BitId>(std::stoul(s.substr(1))));
    } else {
      throw Error("bad XOR term '" + s + "'");
    }
  }
  return e;
}

inline Json to_json(const Gate& g) {
  Json j{{"kind", std::string(kind_name(g.kind))}, {"q", g.q}};
  switch (g.kind) {
    case GateKind::kPauli:
      j["basis"] = detail::basis_name(g.basis);
      j["cond"] = to_json(g.cond);
      break;
    case GateKind::kPrep:
      j["basis"] = detail::basis_name(g.basis);
      break;
    case GateKind::kMeas:
      j["basis"] = detail::basis_name(g.basis);
      j["bit"] = g.bit;
      if (!g.cond.empty()) j["flip"] = to_json(g.cond);
      break;
    case GateKind::kBell:
      j["variant"] = detail::variant_name(g.variant);
      if (g.round >= 0) j["round"] = g.round;
      break;
    default:
      break;
  }
  return j;
}

inline Gate gate_from_json(const Json& j) {
  Gate g;
  g.kind = kind_from_name(detail::get<std::string>(j, "kind"));
  g.q = detail::get<std::vector<QubitId>>(j, "q");
  switch (g.kind) {
    case GateKind::kPauli:
      g.basis = detail::basis_from(detail::get<std::string>(j, "basis"));
      g.cond = j.contains("cond") ? xor_from_json(j.at("cond")) : XorExpr(true);
      break;
    case GateKind::kPrep:
      g.basis = detail::basis_from(detail::get<std::string>(j, "basis"));
      break;
    case GateKind::kMeas:
      g.basis = detail::basis_from(detail::get<std::string>(j, "basis"));
      g.bit = detail::get<BitId>(j, "bit");
      if (j.contains("flip")) g.cond = xor_from_json(j.at("flip"));
      break;
    case GateKind::kBell:
      g.variant = j.contains("variant") ? detail::variant_from(j.at("variant").get<std::string>())
                                        : BellVariant::kPhiPlus;
      if (j.contains("round")) g.round = j.at("round").get<int>();
      break;
    default:
      break;
  }
  return g;
}

inline Json to_json(const Circuit& c) {
  Json layers = Json::array();
  for (const auto& layer : c.layers) {
    Json l = Json::array();
    for (const Gate& g : layer) l.push_back(to_json(g));
    layers.push_back(std::move(l));
  }
  return Json{{"qubits", c.num_qubits}, {"layers", std::move(layers)}};
}

inline Circuit circuit_from_json(const Json& j) {
  Circuit c;
  c.num_qubits = detail::get<std::size_t>(j, "qubits");
  for (const auto& l : detail::field(j, "layers")) {
    std::vector<Gate> layer;
    for (const auto& g : l) layer.push_back(gate_from_json(g));
    c.layers.push_back(std::move(layer));
  }
  if (auto v = validate_layers(c)) {
    throw Error("invalid circuit, layer " + std::to_string(v->layer) + ": " + v->reason);
  }
  return c;
}

inline Json to_json(const Placement& p) { return Json{{"map", p.map}}; }

inline Placement placement_from_json(const Json& j) {
  return Placement{detail::get<std::vector<ProcId>>(j, "map")};
}

inline Json to_json(const PauliFrame& f) {
  Json out = Json::object();
  for (std::size_t q = 0; q < f.size(); ++q) {
    const auto& e = f[static_cast<QubitId>(q)];
    if (e.x.empty() && e.z.empty()) continue;
    out["q" + std::to_string(q)] = Json{{"x", to_json(e.x)}, {"z", to_json(e.z)}};
  }
  return out;
}

inline PauliFrame frame_from_json(const Json& j, std::size_t n) {
  if (!j.is_object()) throw Error("frame must be an object");
  PauliFrame f(n);
  for (const auto& [key, val] : j.items()) {
    if (key.size() < 2 || key[0] != 'q' ||
        key.find_first_not_of("0123456789", 1) != std::string::npos) {
      throw Error("bad frame key '" + key + "'");
    }
    std::size_t q = std::stoul(key.substr(1));
    if (q >= n) throw Error("frame names qubit " + std::to_string(q) + " out of range");
    f[static_cast<QubitId>(q)].x = xor_from_json(detail::field(val, "x"));
    f[static_cast<QubitId>(q)].z = xor_from_json(detail::field(val, "z"));
  }
  return f;
}

/// Extended circuits use the circuit layout (ASAP layers) plus the data qubit
/// count, the frame and the output map.
inline Json to_json(const ExtendedCircuit& ec) {
  Json j = to_json(Circuit{ec.num_qubits, asap_layers(ec.gates, ec.num_qubits)});
  j["data_qubits"] = ec.num_data;
  j["outputs"] = ec.outputs;
  j["frame"] = to_json(ec.frame);
  return j;
}

inline ExtendedCircuit extended_from_json(const Json& j) {
  ExtendedCircuit ec;
  ec.num_qubits = detail::get<std::size_t>(j, "qubits");
  for (const auto& l : detail::field(j, "layers")) {
    for (const auto& g : l) {
      Gate gate = gate_from_json(g);
      check_gate(gate, ec.num_qubits);
      if (gate.kind == GateKind::kMeas) ec.next_bit = std::max(ec.next_bit, gate.bit + 1);
      ec.gates.push_back(std::move(gate));
    }
  }
  ec.num_data = j.contains("data_qubits") ? j.at("data_qubits").get<std::size_t>() : ec.num_qubits;
  if (ec.num_data > ec.num_qubits) throw Error("more data qubits than qubits");
  if (j.contains("outputs")) {
    ec.outputs = j.at("outputs").get<std::vector<QubitId>>();
  } else {
    for (std::size_t i = 0; i < ec.num_data; ++i) ec.outputs.push_back(static_cast<QubitId>(i));
  }
  if (ec.outputs.size() != ec.num_data) throw Error("outputs must name one qubit per data qubit");
  for (QubitId q : ec.outputs) {
    if (q >= ec.num_qubits) throw Error("output qubit out of range");
  }
  ec.frame = j.contains("frame") ? frame_from_json(j.at("frame"), ec.num_qubits)
                                 : PauliFrame(ec.num_qubits);
  return ec;
}

inline Json to_json(const QuotientGraph& q) {
  Json edges = Json::array();
  for (const auto& e : q.edges) edges.push_back({e.u, e.v, e.cap});
  Json j{{"nodes", q.node_count}, {"edges", std::move(edges)}};
  if (q.grid) j["grid"] = Json{{"rows", q.grid->rows}, {"cols", q.grid->cols}};
  return j;
}

inline QuotientGraph quotient_from_json(const Json& j) {
  QuotientGraph q;
  q.node_count = detail::get<std::size_t>(j, "nodes");
  for (const auto& e : detail::field(j, "edges")) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3) throw Error("edge must be [u, v] or [u, v, cap]");
    ProcId u = e[0].get<ProcId>(), v = e[1].get<ProcId>();
    std::uint32_t cap = e.size() == 3 ? e[2].get<std::uint32_t>() : 1;
    q.edges.push_back({std::min(u, v), std::max(u, v), cap});
  }
  if (j.contains("grid")) {
    q.grid = GridShape{detail::get<std::size_t>(j.at("grid"), "rows"),
                       detail::get<std::size_t>(j.at("grid"), "cols")};
  }
  q.check();
  return q;
}

inline Json to_json(const Network& n) {
  Json procs = Json::array();
  for (const auto& p : n.processors) {
    procs.push_back({{"id", p.id}, {"comp", p.comp}, {"comm", p.comm}});
  }
  Json links = Json::array(), local = Json::array();
  for (auto [a, b] : n.links) links.push_back({a, b});
  for (auto [a, b] : n.local_couplings) local.push_back({a, b});
  return Json{{"processors", std::move(procs)}, {"local_couplings", std::move(local)},
              {"links", std::move(links)}};
}

inline Network network_from_json(const Json& j) {
  Network n;
  for (const auto& p : detail::field(j, "processors")) {
    n.processors.push_back({detail::get<ProcId>(p, "id"),
                            p.contains("comp") ? p.at("comp").get<std::vector<QubitId>>()
                                               : std::vector<QubitId>{},
                            p.contains("comm") ? p.at("comm").get<std::vector<QubitId>>()
                                               : std::vector<QubitId>{}});
  }
  auto pairs = [](const Json& arr) {
    std::vector<std::pair<QubitId, QubitId>> out;
    for (const auto& e : arr) {
      if (!e.is_array() || e.size() != 2) throw Error("link must be a pair of qubits");
      out.push_back({e[0].get<QubitId>(), e[1].get<QubitId>()});
    }
    return out;
  };
  n.links = pairs(detail::field(j, "links"));
  if (j.contains("local_couplings")) n.local_couplings = pairs(j.at("local_couplings"));
  return n;
}

/// Reads either a quotient graph document or a network document.
inline QuotientGraph topology_from_json(const Json& j) {
  if (j.contains("processors")) return quotient(network_from_json(j));
  return quotient_from_json(j);
}

inline Json to_json(const FlowSchedule& s) {
  Json as = Json::array();
  for (const auto& a : s.assignments) {
    Json path = Json::array();
    for (auto [u, v] : a.path) path.push_back({u, v});
    as.push_back({{"i", a.i}, {"tau", a.tau}, {"path", std::move(path)}});
  }
  return Json{{"d", s.d}, {"assignments", std::move(as)}};
}

inline FlowSchedule schedule_from_json(const Json& j) {
  FlowSchedule s;
  s.d = detail::get<std::size_t>(j, "d");
  for (const auto& a : detail::field(j, "assignments")) {
    Assignment as;
    as.i = detail::get<std::size_t>(a, "i");
    as.tau = detail::get<std::size_t>(a, "tau");
    for (const auto& e : detail::field(a, "path")) {
      as.path.push_back({e.at(0).get<ProcId>(), e.at(1).get<ProcId>()});
    }
    s.assignments.push_back(std::move(as));
  }
  return s;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace distqc

#endif  // DISTQC_JSON_IO_HPP
