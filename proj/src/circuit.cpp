// Copyright 2026 The magicomm authors
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

#include "magicomm/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace magicomm {

namespace {
constexpr double kUnitaryTol = 1e-10;
}

bool kind_is_clifford(GateKind k) {
  switch (k) {
    case GateKind::H:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::SWAP:
      return true;
    default:
      return false;
  }
}

bool kind_is_magic(GateKind k) {
  return k == GateKind::T || k == GateKind::Tdg || k == GateKind::Magic ||
         k == GateKind::ToffoliN;
}

const char *kind_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::CNOT: return "cnot";
    case GateKind::CZ: return "cz";
    case GateKind::SWAP: return "swap";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::Magic: return "magic";
    case GateKind::ToffoliN: return "toffoli";
    case GateKind::Measure: return "measure";
    case GateKind::PostSelect: return "postselect";
  }
  return "?";
}

Gate Gate::simple(GateKind k, std::vector<int> qubits) {
  Gate g;
  g.kind = k;
  g.qubits = std::move(qubits);
  return g;
}

Gate Gate::magic(std::string name, std::vector<int> qubits, std::vector<cplx> matrix) {
  Gate g;
  g.kind = GateKind::Magic;
  g.qubits = std::move(qubits);
  g.magic_name = std::move(name);
  g.magic_matrix = std::move(matrix);
  return g;
}

Gate Gate::toffoli(std::vector<int> controls, int target) {
  Gate g;
  g.kind = GateKind::ToffoliN;
  g.qubits = std::move(controls);
  g.qubits.push_back(target);
  return g;
}

Gate Gate::measure(std::vector<int> qubits) {
  Gate g;
  g.kind = GateKind::Measure;
  g.qubits = std::move(qubits);
  return g;
}

Gate Gate::postselect(std::vector<int> qubits, std::vector<int> values) {
  Gate g;
  g.kind = GateKind::PostSelect;
  g.qubits = std::move(qubits);
  g.postselect_values = std::move(values);
  return g;
}

bool Gate::is_diagonal_magic() const {
  if (kind == GateKind::T || kind == GateKind::Tdg) return true;
  if (kind != GateKind::Magic) return false;
  size_t dim = size_t{1} << qubits.size();
  for (size_t r = 0; r < dim; r++) {
    for (size_t c = 0; c < dim; c++) {
      if (r != c && std::abs(magic_matrix[r * dim + c]) > 1e-12) return false;
    }
  }
  return true;
}

CliffordTableau gate_tableau(const Gate &g, int n) {
  switch (g.kind) {
    case GateKind::H: return CliffordTableau::h(n, g.qubits[0]);
    case GateKind::S: return CliffordTableau::s(n, g.qubits[0]);
    case GateKind::Sdg: return CliffordTableau::sdg(n, g.qubits[0]);
    case GateKind::X: return CliffordTableau::x(n, g.qubits[0]);
    case GateKind::Y: return CliffordTableau::y(n, g.qubits[0]);
    case GateKind::Z: return CliffordTableau::z(n, g.qubits[0]);
    case GateKind::CNOT: return CliffordTableau::cnot(n, g.qubits[0], g.qubits[1]);
    case GateKind::CZ: return CliffordTableau::cz(n, g.qubits[0], g.qubits[1]);
    case GateKind::SWAP: return CliffordTableau::swap(n, g.qubits[0], g.qubits[1]);
    default:
      throw Error(std::string("gate_tableau: not a Clifford gate: ") + kind_name(g.kind));
  }
}

namespace {

void check_unitary(const std::vector<cplx> &m, size_t dim, const std::string &what) {
  require(m.size() == dim * dim, what + ": matrix size mismatch");
  for (size_t r = 0; r < dim; r++) {
    for (size_t c = 0; c < dim; c++) {
      cplx acc{0, 0};
      for (size_t k = 0; k < dim; k++) {
        acc += m[r * dim + k] * std::conj(m[c * dim + k]);
      }
      cplx want = r == c ? cplx{1, 0} : cplx{0, 0};
      require(std::abs(acc - want) <= kUnitaryTol, what + ": matrix is not unitary");
    }
  }
}

void validate_gate(const Gate &g, int n) {
  require(!g.qubits.empty(), std::string(kind_name(g.kind)) + ": no qubits");
  std::set<int> seen;
  for (int q : g.qubits) {
    require(q >= 0 && q < n,
            std::string(kind_name(g.kind)) + ": qubit " + std::to_string(q) + " out of range");
    require(seen.insert(q).second, std::string(kind_name(g.kind)) + ": repeated qubit");
  }
  switch (g.kind) {
    case GateKind::H:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::T:
    case GateKind::Tdg:
      require(g.qubits.size() == 1, std::string(kind_name(g.kind)) + ": expects one qubit");
      break;
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::SWAP:
      require(g.qubits.size() == 2, std::string(kind_name(g.kind)) + ": expects two qubits");
      break;
    case GateKind::ToffoliN:
      require(g.qubits.size() >= 2, "toffoli: expects at least one control and a target");
      break;
    case GateKind::Magic:
      check_unitary(g.magic_matrix, size_t{1} << g.qubits.size(), "magic " + g.magic_name);
      break;
    case GateKind::Measure:
      break;
    case GateKind::PostSelect:
      require(g.postselect_values.size() == g.qubits.size(), "postselect: value per qubit");
      for (int v : g.postselect_values) {
        require(v == 0 || v == 1, "postselect: values must be bits");
      }
      break;
  }
}

}  // namespace

void LayeredCircuit::validate() const {
  require(n_input >= 0 && n_advice >= 0, "circuit: negative register size");
  require(total_qubits() >= 1, "circuit: empty register");
  require(output_qubit >= 0 && output_qubit < total_qubits(), "circuit: output qubit out of range");
  if (!advice_state.empty()) {
    require(advice_state.size() == (size_t{1} << n_advice), "circuit: advice state size mismatch");
    double norm = 0;
    for (const cplx &a : advice_state) norm += std::norm(a);
    require(std::abs(norm - 1.0) <= kUnitaryTol, "circuit: advice state is not normalized");
  }
  for (const Gate &g : gates) {
    validate_gate(g, total_qubits());
  }
}

int LayeredCircuit::magic_count() const {
  int k = 0;
  for (const Gate &g : gates) k += g.is_magic() ? 1 : 0;
  return k;
}

int LayeredCircuit::max_magic_weight() const {
  int w = 0;
  for (const Gate &g : gates) {
    if (g.is_magic()) w = std::max(w, g.weight());
  }
  return w;
}

int LayeredCircuit::event_count() const {
  int k = 0;
  for (const Gate &g : gates) {
    if (!g.is_clifford()) k++;
  }
  return k;
}

int LayeredCircuit::t_depth() const {
  std::vector<int> depth(total_qubits(), 0);
  int best = 0;
  for (const Gate &g : gates) {
    if (g.kind == GateKind::T || g.kind == GateKind::Tdg) {
      depth[g.qubits[0]]++;
      best = std::max(best, depth[g.qubits[0]]);
    } else {
      int d = 0;
      for (int q : g.qubits) d = std::max(d, depth[q]);
      for (int q : g.qubits) depth[q] = d;
    }
  }
  return best;
}

LayerView normalized_layers(const LayeredCircuit &c) {
  LayerView view;
  view.cliffords.emplace_back();
  for (const Gate &g : c.gates) {
    if (g.is_clifford()) {
      view.cliffords.back().push_back(g);
    } else {
      view.events.push_back(g);
      view.cliffords.emplace_back();
    }
  }
  return view;
}

namespace {

using nlohmann::json;

std::vector<cplx> matrix_from_json(const json &j, size_t dim, const std::string &what) {
  require(j.is_array() && j.size() == dim * dim, what + ": expected " + std::to_string(dim * dim) +
                                                     " [re, im] entries");
  std::vector<cplx> m;
  m.reserve(j.size());
  for (const auto &e : j) {
    require(e.is_array() && e.size() == 2, what + ": entries must be [re, im] pairs");
    m.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return m;
}

json matrix_to_json(const std::vector<cplx> &m) {
  json j = json::array();
  for (const cplx &e : m) {
    j.push_back({e.real(), e.imag()});
  }
  return j;
}

struct PendingMagic {
  size_t gate_index;
  std::string name;
  int line;
};

int parse_qubit(const std::string &tok, int line) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (...) {
    throw Error("line " + std::to_string(line) + ": expected a qubit index, got '" + tok + "'");
  }
}

}  // namespace

LayeredCircuit parse_circuit(const std::string &text) {
  LayeredCircuit c;
  c.n_input = -1;
  std::vector<PendingMagic> pending;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_output = false;
  std::string matrices_json;
  bool in_matrices = false;

  while (std::getline(in, line)) {
    lineno++;
    if (in_matrices) {
      matrices_json += line;
      matrices_json += '\n';
      continue;
    }
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;
    std::vector<std::string> args;
    std::string tok;
    while (ls >> tok) args.push_back(tok);
    auto fail = [&](const std::string &msg) -> void {
      throw Error("line " + std::to_string(lineno) + ": " + op + ": " + msg);
    };

    if (op == "%matrices") {
      in_matrices = true;
    } else if (op == "inputs") {
      if (args.size() != 1) fail("expected a count");
      c.n_input = parse_qubit(args[0], lineno);
    } else if (op == "advice") {
      if (args.size() != 1) fail("expected a count");
      c.n_advice = parse_qubit(args[0], lineno);
    } else if (op == "output") {
      if (args.size() != 1) fail("expected a qubit");
      c.output_qubit = parse_qubit(args[0], lineno);
      saw_output = true;
    } else if (op == "advice_state") {
      std::string blob;
      for (const auto &a : args) blob += a;
      json j = json::parse(blob, nullptr, false);
      if (j.is_discarded() || !j.is_array()) fail("bad amplitude JSON");
      c.advice_state.clear();
      for (const auto &e : j) {
        if (!e.is_array() || e.size() != 2) fail("amplitudes must be [re, im] pairs");
        c.advice_state.emplace_back(e[0].get<double>(), e[1].get<double>());
      }
    } else if (op == "h" || op == "s" || op == "sdg" || op == "x" || op == "y" || op == "z" ||
               op == "t" || op == "tdg") {
      if (args.size() != 1) fail("expected one qubit");
      GateKind k = op == "h"     ? GateKind::H
                   : op == "s"   ? GateKind::S
                   : op == "sdg" ? GateKind::Sdg
                   : op == "x"   ? GateKind::X
                   : op == "y"   ? GateKind::Y
                   : op == "z"   ? GateKind::Z
                   : op == "t"   ? GateKind::T
                                 : GateKind::Tdg;
      c.gates.push_back(Gate::simple(k, {parse_qubit(args[0], lineno)}));
    } else if (op == "cnot") {
      if (args.size() < 2) fail("missing target qubit");
      if (args.size() > 2) fail("expected control and target only");
      c.gates.push_back(
          Gate::simple(GateKind::CNOT, {parse_qubit(args[0], lineno), parse_qubit(args[1], lineno)}));
    } else if (op == "cz" || op == "swap") {
      if (args.size() != 2) fail("expected two qubits");
      c.gates.push_back(Gate::simple(op == "cz" ? GateKind::CZ : GateKind::SWAP,
                                     {parse_qubit(args[0], lineno), parse_qubit(args[1], lineno)}));
    } else if (op == "toffoli") {
      if (args.size() < 2) fail("expected controls and a target");
      std::vector<int> qs;
      for (const auto &a : args) qs.push_back(parse_qubit(a, lineno));
      int target = qs.back();
      qs.pop_back();
      c.gates.push_back(Gate::toffoli(qs, target));
    } else if (op == "magic") {
      if (args.size() < 2) fail("expected a name and qubits");
      std::vector<int> qs;
      for (size_t i = 1; i < args.size(); i++) qs.push_back(parse_qubit(args[i], lineno));
      Gate g;
      g.kind = GateKind::Magic;
      g.magic_name = args[0];
      g.qubits = qs;
      pending.push_back({c.gates.size(), args[0], lineno});
      c.gates.push_back(std::move(g));
    } else if (op == "measure") {
      if (args.empty()) fail("expected qubits");
      std::vector<int> qs;
      for (const auto &a : args) qs.push_back(parse_qubit(a, lineno));
      c.gates.push_back(Gate::measure(qs));
    } else if (op == "postselect") {
      if (args.empty()) fail("expected q=v entries");
      std::vector<int> qs, vs;
      for (const auto &a : args) {
        size_t eq = a.find('=');
        if (eq == std::string::npos) fail("expected q=v, got '" + a + "'");
        qs.push_back(parse_qubit(a.substr(0, eq), lineno));
        vs.push_back(parse_qubit(a.substr(eq + 1), lineno));
      }
      c.gates.push_back(Gate::postselect(qs, vs));
    } else {
      throw Error("line " + std::to_string(lineno) + ": unknown directive '" + op + "'");
    }
  }

  require(c.n_input >= 0, "circuit: missing 'inputs' header");
  if (!pending.empty()) {
    require(!matrices_json.empty(), "circuit: magic gates used but no %matrices block");
    json all = json::parse(matrices_json, nullptr, false);
    require(!all.is_discarded() && all.is_object(), "circuit: bad %matrices JSON");
    for (const PendingMagic &p : pending) {
      require(all.contains(p.name),
              "line " + std::to_string(p.line) + ": magic: no matrix named '" + p.name + "'");
      size_t dim = size_t{1} << c.gates[p.gate_index].qubits.size();
      c.gates[p.gate_index].magic_matrix = matrix_from_json(all[p.name], dim, "magic " + p.name);
    }
  }
  if (!saw_output) c.output_qubit = 0;
  c.validate();
  return c;
}

std::string serialize_circuit(const LayeredCircuit &c) {
  std::ostringstream out;
  out << "inputs " << c.n_input << "\n";
  out << "advice " << c.n_advice << "\n";
  out << "output " << c.output_qubit << "\n";
  if (!c.advice_state.empty()) {
    out << "advice_state " << matrix_to_json(c.advice_state).dump() << "\n";
  }
  std::map<std::string, const std::vector<cplx> *> matrices;
  for (const Gate &g : c.gates) {
    switch (g.kind) {
      case GateKind::Magic: {
        out << "magic " << g.magic_name;
        for (int q : g.qubits) out << " " << q;
        out << "\n";
        auto [it, fresh] = matrices.emplace(g.magic_name, &g.magic_matrix);
        require(fresh || *it->second == g.magic_matrix,
                "serialize: magic name '" + g.magic_name + "' bound to two matrices");
        break;
      }
      case GateKind::PostSelect:
        out << "postselect";
        for (size_t i = 0; i < g.qubits.size(); i++) {
          out << " " << g.qubits[i] << "=" << g.postselect_values[i];
        }
        out << "\n";
        break;
      default:
        out << kind_name(g.kind);
        for (int q : g.qubits) out << " " << q;
        out << "\n";
    }
  }
  if (!matrices.empty()) {
    json all = json::object();
    for (const auto &[name, m] : matrices) all[name] = matrix_to_json(*m);
    out << "%matrices\n" << all.dump() << "\n";
  }
  return out.str();
}

int AdaptiveCircuit::worst_case_cost() const {
  struct Rec {
    static int cost(const AdaptiveNode &node) {
      int own = 0;
      for (const Gate &g : node.gates) {
        if (g.is_magic() || g.kind == GateKind::Measure) own++;
      }
      if (node.is_leaf()) return own;
      int worst = 0;
      for (const auto &[_, child] : node.children) {
        worst = std::max(worst, cost(*child));
      }
      return own + worst;
    }
  };
  return Rec::cost(root);
}

int AdaptiveCircuit::max_magic_weight() const {
  struct Rec {
    static int weight(const AdaptiveNode &node) {
      int w = 0;
      for (const Gate &g : node.gates) {
        if (g.is_magic() || g.kind == GateKind::Measure) w = std::max(w, g.weight());
      }
      for (const auto &[_, child] : node.children) {
        w = std::max(w, weight(*child));
      }
      return w;
    }
  };
  return Rec::weight(root);
}

void AdaptiveCircuit::validate() const {
  struct Rec {
    int n;
    void walk(const AdaptiveNode &node) const {
      for (const Gate &g : node.gates) validate_gate(g, n);
      if (!node.is_leaf()) {
        require(!node.gates.empty() && node.gates.back().kind == GateKind::Measure,
                "adaptive: branching node must end with a measurement");
        size_t k = node.gates.back().qubits.size();
        for (const auto &[key, child] : node.children) {
          require(key.size() == k, "adaptive: branch key length mismatch");
          walk(*child);
        }
      }
    }
  };
  require(total_qubits() >= 1, "adaptive: empty register");
  Rec{total_qubits()}.walk(root);
}

int MixedCircuit::magic_count() const {
  int k = 0;
  for (const auto &[p, c] : branches) k = std::max(k, c.magic_count());
  return k;
}

int MixedCircuit::max_magic_weight() const {
  int w = 0;
  for (const auto &[p, c] : branches) w = std::max(w, c.max_magic_weight());
  return w;
}

void MixedCircuit::validate() const {
  require(!branches.empty(), "mixed: no branches");
  double total = 0;
  for (const auto &[p, c] : branches) {
    require(p >= 0, "mixed: negative probability");
    total += p;
    c.validate();
  }
  require(std::abs(total - 1.0) <= 1e-10, "mixed: probabilities must sum to 1");
}

LayeredCircuit build_equality_circuit(int n) {
  require(n >= 1, "equality: n must be positive");
  LayeredCircuit c;
  c.n_input = 2 * n;
  c.n_advice = 1;
  c.output_qubit = 2 * n;
  for (int i = 0; i < n; i++) {
    c.gates.push_back(Gate::simple(GateKind::CNOT, {i, n + i}));
    c.gates.push_back(Gate::simple(GateKind::X, {n + i}));
  }
  std::vector<int> controls;
  for (int i = 0; i < n; i++) controls.push_back(n + i);
  c.gates.push_back(Gate::toffoli(controls, 2 * n));
  c.validate();
  return c;
}

std::vector<Gate> build_cswap_from_toffoli(int q0, int q1, int q2) {
  return {
      Gate::simple(GateKind::CNOT, {q2, q1}),
      Gate::toffoli({q0, q1}, q2),
      Gate::simple(GateKind::CNOT, {q2, q1}),
  };
}

MultiplexerCircuit build_controlled_multiplexer(int k) {
  require(k >= 1, "multiplexer: k must be positive");
  MultiplexerCircuit mx;
  mx.k = k;
  int n_array = 1 << k;
  mx.control = 0;
  for (int i = 0; i < k; i++) mx.index.push_back(1 + i);
  for (int i = 0; i < n_array; i++) mx.array.push_back(1 + k + i);
  mx.target = 1 + k + n_array;
  int anc_base = mx.target + 1;
  int anc_count = 2 * (k - 1);

  LayeredCircuit &c = mx.circuit;
  c.n_input = 2 + k + n_array;  // control, index, array, target
  c.n_advice = anc_count;
  c.output_qubit = mx.target;

  auto emit_cswap = [&](int ctrl, int u, int v) {
    for (Gate &g : build_cswap_from_toffoli(ctrl, u, v)) c.gates.push_back(std::move(g));
    mx.magic_gates++;
  };

  // Recursive construction: two Toffolis route the control into per-half
  // ancillas, the halves recurse, and the ancillas are uncomputed.
  auto emit = [&](auto &&self, int ctrl, std::vector<int> index, std::vector<int> array,
                  int depth) -> void {
    if (index.size() == 1) {
      emit_cswap(index[0], array[0], array[1]);
      emit_cswap(ctrl, array[0], mx.target);
      emit_cswap(index[0], array[0], array[1]);
      return;
    }
    int a1 = anc_base + 2 * depth;
    int a2 = anc_base + 2 * depth + 1;
    int msb = index[0];
    std::vector<int> rest(index.begin() + 1, index.end());
    std::vector<int> lo(array.begin(), array.begin() + array.size() / 2);
    std::vector<int> hi(array.begin() + array.size() / 2, array.end());
    c.gates.push_back(Gate::simple(GateKind::X, {msb}));
    c.gates.push_back(Gate::toffoli({ctrl, msb}, a1));
    mx.magic_gates++;
    c.gates.push_back(Gate::simple(GateKind::X, {msb}));
    c.gates.push_back(Gate::toffoli({ctrl, msb}, a2));
    mx.magic_gates++;
    self(self, a1, rest, lo, depth + 1);
    self(self, a2, rest, hi, depth + 1);
    c.gates.push_back(Gate::toffoli({ctrl, msb}, a2));
    mx.magic_gates++;
    c.gates.push_back(Gate::simple(GateKind::X, {msb}));
    c.gates.push_back(Gate::toffoli({ctrl, msb}, a1));
    mx.magic_gates++;
    c.gates.push_back(Gate::simple(GateKind::X, {msb}));
  };
  emit(emit, mx.control, mx.index, mx.array, 0);
  c.validate();
  return mx;
}

std::vector<Gate> toffoli_tdepth1(int a, int b, int target, const std::vector<int> &anc) {
  require(anc.size() == 4, "toffoli_tdepth1: needs four ancillas");
  std::vector<Gate> gates;
  auto cnot = [&](int c, int t) { gates.push_back(Gate::simple(GateKind::CNOT, {c, t})); };
  gates.push_back(Gate::simple(GateKind::H, {target}));
  // Parities a^b, b^t, a^t, a^b^t on the ancillas.
  cnot(a, anc[0]);
  cnot(b, anc[0]);
  cnot(b, anc[1]);
  cnot(target, anc[1]);
  cnot(a, anc[2]);
  cnot(target, anc[2]);
  cnot(a, anc[3]);
  cnot(b, anc[3]);
  cnot(target, anc[3]);
  // One parallel T layer implementing the CCZ phase polynomial.
  gates.push_back(Gate::simple(GateKind::T, {a}));
  gates.push_back(Gate::simple(GateKind::T, {b}));
  gates.push_back(Gate::simple(GateKind::T, {target}));
  gates.push_back(Gate::simple(GateKind::Tdg, {anc[0]}));
  gates.push_back(Gate::simple(GateKind::Tdg, {anc[1]}));
  gates.push_back(Gate::simple(GateKind::Tdg, {anc[2]}));
  gates.push_back(Gate::simple(GateKind::T, {anc[3]}));
  cnot(target, anc[3]);
  cnot(b, anc[3]);
  cnot(a, anc[3]);
  cnot(target, anc[2]);
  cnot(a, anc[2]);
  cnot(target, anc[1]);
  cnot(b, anc[1]);
  cnot(b, anc[0]);
  cnot(a, anc[0]);
  gates.push_back(Gate::simple(GateKind::H, {target}));
  return gates;
}

AbcdRefereeCircuit build_abcd_referee(int n, bool expand_toffoli) {
  require(n >= 2 && is_power_of_two(static_cast<uint64_t>(n)), "abcd: n must be a power of 2");
  int logn = int_log2(static_cast<uint64_t>(n));
  AbcdRefereeCircuit ref;
  ref.n = n;
  int a0 = 0;
  std::vector<int> adata, bdata;
  for (int j = 0; j < logn; j++) adata.push_back(1 + j);
  int b0 = 1 + logn;
  for (int j = 0; j < logn; j++) bdata.push_back(2 + logn + j);
  ref.message_qubits = 2 * (logn + 1);
  ref.measured_qubit = a0;

  LayeredCircuit &c = ref.circuit;
  c.n_input = ref.message_qubits;
  c.output_qubit = a0;
  int next_anc = ref.message_qubits;
  std::vector<int> copies;
  for (int j = 0; j < logn; j++) copies.push_back(next_anc++);

  c.gates.push_back(Gate::simple(GateKind::CNOT, {a0, b0}));
  for (int j = 0; j < logn; j++) c.gates.push_back(Gate::simple(GateKind::CNOT, {a0, copies[j]}));
  for (int j = 0; j < logn; j++) {
    int u = adata[j], v = bdata[j];
    c.gates.push_back(Gate::simple(GateKind::CNOT, {v, u}));
    if (expand_toffoli) {
      std::vector<int> anc = {next_anc, next_anc + 1, next_anc + 2, next_anc + 3};
      next_anc += 4;
      for (Gate &g : toffoli_tdepth1(copies[j], u, v, anc)) c.gates.push_back(std::move(g));
    } else {
      c.gates.push_back(Gate::toffoli({copies[j], u}, v));
    }
    c.gates.push_back(Gate::simple(GateKind::CNOT, {v, u}));
  }
  for (int j = 0; j < logn; j++) c.gates.push_back(Gate::simple(GateKind::CNOT, {a0, copies[j]}));
  c.gates.push_back(Gate::simple(GateKind::H, {a0}));
  c.gates.push_back(Gate::measure({a0}));
  c.n_advice = next_anc - ref.message_qubits;
  c.validate();
  return ref;
}

}  // namespace magicomm
