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

#ifndef MAGICOMM_STATEVECTOR_HPP
#define MAGICOMM_STATEVECTOR_HPP

#include <map>
#include <string>
#include <vector>

#include "magicomm/circuit.hpp"
#include "magicomm/common.hpp"

namespace magicomm {

// Deliberately plain dense simulation; this is the trust anchor every other
// module is checked against.
class StateVector {
 public:
  static constexpr int kMaxQubits = 22;

  explicit StateVector(int n);
  static StateVector basis_state(int n, uint64_t index);

  int num_qubits() const { return n_; }
  const std::vector<cplx> &amps() const { return amps_; }
  std::vector<cplx> &amps() { return amps_; }

  void apply(const Gate &g);  // Measure gates are rejected here
  void apply_matrix1(int q, const cplx m[4]);
  void apply_matrix(const std::vector<int> &qubits, const std::vector<cplx> &m);

  // Projects onto |values> of `qubits`, renormalizes, and returns the
  // pre-renormalization probability. Throws on a zero-probability branch.
  double postselect(const std::vector<int> &qubits, const std::vector<int> &values);

  double norm() const;
  // Marginal distribution of the given qubits, keyed by outcome index.
  std::vector<double> marginal(const std::vector<int> &qubits) const;
  double fidelity_up_to_phase(const StateVector &other) const;

 private:
  int n_;
  std::vector<cplx> amps_;
};

struct OutputDistribution {
  std::vector<int> qubits;               // measured qubits, in order
  std::map<std::string, double> probs;   // outcome bitstring -> probability

  double prob_of(const std::string &outcome) const;
  bool close_to(const OutputDistribution &other, double tol) const;
  void validate(double tol = 1e-9) const;
};

// Exact output distribution of a layered circuit on a computational-basis
// input (bit i of `input` feeds qubit i). Measure gates must be final.
OutputDistribution run(const LayeredCircuit &circuit, uint64_t input);

// Prepares the initial state (input + advice) without running any gate.
StateVector initial_state(const LayeredCircuit &circuit, uint64_t input);

// Exact output distribution of an adaptive circuit: enumerates every
// mid-circuit outcome branch and mixes the leaf distributions.
OutputDistribution run_adaptive_exact(const AdaptiveCircuit &circuit, uint64_t input);

// Full unitary, column-major over basis inputs (index bit q = qubit q).
std::vector<cplx> unitary_of(const LayeredCircuit &circuit);

// Operator-norm distance minimized over a global phase; zero iff the inputs
// agree up to phase. Both matrices must be unitary.
double matrix_distance(const std::vector<cplx> &a, const std::vector<cplx> &b);

}  // namespace magicomm

#endif
