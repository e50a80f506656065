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

#ifndef MAGICOMM_CIRCUIT_HPP
#define MAGICOMM_CIRCUIT_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "magicomm/common.hpp"
#include "magicomm/pauli.hpp"

namespace magicomm {

enum class GateKind {
  H,
  S,
  Sdg,
  X,
  Y,
  Z,
  CNOT,
  CZ,
  SWAP,
  T,
  Tdg,
  Magic,     // arbitrary unitary, weight <= declared c_M
  ToffoliN,  // n controls, one target; a weight-(n+1) magic gate
  Measure,   // computational basis; one event no matter how many qubits
  PostSelect
};

bool kind_is_clifford(GateKind k);
bool kind_is_magic(GateKind k);
const char *kind_name(GateKind k);

struct Gate {
  GateKind kind;
  std::vector<int> qubits;  // ToffoliN: controls then target last

  std::string magic_name;
  std::vector<cplx> magic_matrix;  // row-major, dim 2^w; qubits[0] = most significant

  std::vector<int> postselect_values;  // parallel to qubits

  static Gate simple(GateKind k, std::vector<int> qubits);
  static Gate magic(std::string name, std::vector<int> qubits, std::vector<cplx> matrix);
  static Gate toffoli(std::vector<int> controls, int target);
  static Gate measure(std::vector<int> qubits);
  static Gate postselect(std::vector<int> qubits, std::vector<int> values);

  int weight() const { return static_cast<int>(qubits.size()); }
  bool is_clifford() const { return kind_is_clifford(kind); }
  bool is_magic() const { return kind_is_magic(kind); }
  // Diagonal magic gates commute with Z, like T; the compiler exploits this.
  bool is_diagonal_magic() const;
  bool operator==(const Gate &other) const = default;
};

// Tableau of a Clifford gate embedded in an n-qubit register.
CliffordTableau gate_tableau(const Gate &g, int n);

// Clifford layers alternating with magic / measurement / post-selection
// events. Qubit space: inputs [0, n_input), then advice [n_input, n_input +
// n_advice). Ancillas are advice qubits left in the default |0..0> state.
struct LayeredCircuit {
  int n_input = 0;
  int n_advice = 0;
  int output_qubit = 0;
  std::vector<cplx> advice_state;  // size 2^n_advice, or empty for |0..0>
  std::vector<Gate> gates;

  int total_qubits() const { return n_input + n_advice; }
  void validate() const;

  int magic_count() const;
  int max_magic_weight() const;  // c_M; 0 for Clifford-only circuits
  int event_count() const;       // magic + measurements + post-selections
  int t_depth() const;           // length of the longest T-gate chain

  bool operator==(const LayeredCircuit &other) const = default;
};

// Normalized layer view: cliffords[0], events[0], cliffords[1], ...,
// events[k-1], cliffords[k]. Merging adjacent Clifford gates is idempotent.
struct LayerView {
  std::vector<std::vector<Gate>> cliffords;
  std::vector<Gate> events;
};
LayerView normalized_layers(const LayeredCircuit &c);

LayeredCircuit parse_circuit(const std::string &text);
std::string serialize_circuit(const LayeredCircuit &c);

// Decision tree of circuit segments. A non-leaf node's segment ends with the
// mid-circuit Measure event whose outcome selects the child; the worst-case
// cost is max over root-to-leaf paths of (#magic + #mid-circuit measurements).
struct AdaptiveNode {
  std::vector<Gate> gates;  // non-leaf: last gate is a Measure
  std::map<std::string, std::unique_ptr<AdaptiveNode>> children;

  bool is_leaf() const { return children.empty(); }
};

struct AdaptiveCircuit {
  int n_input = 0;
  int n_advice = 0;
  int output_qubit = 0;
  std::vector<cplx> advice_state;
  AdaptiveNode root;

  int total_qubits() const { return n_input + n_advice; }
  int worst_case_cost() const;
  int max_magic_weight() const;
  void validate() const;
};

struct MixedCircuit {
  std::vector<std::pair<double, LayeredCircuit>> branches;

  int magic_count() const;  // worst case over branches
  int max_magic_weight() const;
  void validate() const;
};

// Builders for the named constructions.

// Computes [x == y] on input |x, y, 0>: bitwise CNOT+X onto the y register,
// then an n-control Toffoli into the last qubit.
LayeredCircuit build_equality_circuit(int n);

// CSWAP(q0; q1, q2) as CNOT / Toffoli / CNOT.
std::vector<Gate> build_cswap_from_toffoli(int q0, int q1, int q2);

struct MultiplexerCircuit {
  LayeredCircuit circuit;
  int k = 0;             // array size 2^k
  int magic_gates = 0;   // counted Toffolis, the recursion's g(k)
  int control = 0;       // qubit roles
  std::vector<int> index;
  std::vector<int> array;
  int target = 0;
};

// Controlled multiplexer on 2^k array bits: controlled on `control`, swaps
// array[i] with the target, where i is the index register value.
MultiplexerCircuit build_controlled_multiplexer(int k);

// Replaces a Toffoli by a T-depth-1 Clifford+T block using four ancillas
// holding the pairwise and triple parities of the acted qubits.
std::vector<Gate> toffoli_tdepth1(int a, int b, int target, const std::vector<int> &anc);

struct AbcdRefereeCircuit {
  LayeredCircuit circuit;  // register: Alice msg, Bob msg, then ancillas
  int n = 0;
  int message_qubits = 0;  // 2 (log n + 1)
  int measured_qubit = 0;  // measured in the Hadamard basis; raw outcome 0 = accept
};

// The swap-test style referee: CNOT on the two control qubits, fan-out of the
// control, parallel CSWAPs between the data registers, H + measure. With
// expand_toffoli the CSWAPs are lowered to Clifford+T with T-depth 1.
AbcdRefereeCircuit build_abcd_referee(int n, bool expand_toffoli);

}  // namespace magicomm

#endif
