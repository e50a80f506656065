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

#ifndef MAGICOMM_PDT_HPP
#define MAGICOMM_PDT_HPP

#include <optional>
#include <string>
#include <vector>

#include "magicomm/circuit.hpp"
#include "magicomm/statevector.hpp"
#include "magicomm/vars.hpp"

namespace magicomm {

// Partition of the circuit's input bits: Alice holds bits [0, alice_bits),
// Bob holds bits [alice_bits, alice_bits + bob_bits).
struct InputSplit {
  int alice_bits = 0;
  int bob_bits = 0;

  static InputSplit half(int n_input) { return {n_input - n_input / 2, n_input / 2}; }
  int total() const { return alice_bits + bob_bits; }
};

struct ParityQuery {
  uint64_t alice_mask = 0;
  uint64_t bob_mask = 0;
  bool constant = false;

  bool eval(uint64_t x, uint64_t y) const;
  bool is_zero() const { return alice_mask == 0 && bob_mask == 0 && !constant; }
};

struct CorrectionSlot {
  int qubit;
  int axis;  // 0 = X, 1 = Z
  int query;
};

// A compiled non-adaptive parity decision tree plus its referee evaluator:
// the all-zeroes circuit with Pauli corrections scheduled before each event.
struct CompiledPDT {
  InputSplit split;
  int c_M = 0;
  int magic_count = 0;
  std::vector<ParityQuery> queries;
  LayeredCircuit sim_circuit;  // original with Pauli gates folded into the frame
  std::vector<std::vector<CorrectionSlot>> event_corrections;  // one list per event
  int final_query = -1;  // X correction before the output measurement; -1 if dropped

  int depth() const { return static_cast<int>(queries.size()); }
  int depth_bound() const;  // 2 c_M k + 1 generally, k + 1 for diagonal-only magic
  int smp_cost_bits() const { return 2 * depth(); }
  int smp_bound() const { return 4 * c_M * magic_count + 2; }

  std::vector<bool> answers(uint64_t x, uint64_t y) const;
  OutputDistribution evaluate_from_answers(const std::vector<bool> &ans) const;
  OutputDistribution evaluate(uint64_t x, uint64_t y) const;
  // Determinized referee output; throws on an exact tie (epsilon >= 1/2).
  int referee_output(uint64_t x, uint64_t y) const;

  // The PDT's g as an explicit table over answer vectors (depth <= 16 only).
  std::vector<uint8_t> materialize_table() const;
};

// The simultaneous-message view of a CompiledPDT: each query costs one bit
// from each player; the query constant is folded into Bob's bit.
struct SmpProtocol {
  const CompiledPDT *pdt;

  int cost_bits() const { return pdt->smp_cost_bits(); }
  int bound() const { return pdt->smp_bound(); }
  std::vector<bool> alice_message(uint64_t x) const;
  std::vector<bool> bob_message(uint64_t y) const;
  int referee_output(const std::vector<bool> &alice, const std::vector<bool> &bob) const;
};

struct CompileOptions {
  bool minimize = false;  // drop identically-zero queries
};

// Theorem 3.1 path: unitary Clifford+Magic circuits, no mid-circuit
// measurements. Diagonal magic gates (T, Tdg, any diagonal unitary) query
// only the X parity per wire; Z corrections stay in the frame.
CompiledPDT compile_unitary(const LayeredCircuit &circuit, InputSplit split,
                            CompileOptions options = {});

// Remark 3.2 path: additionally allows post-selection events, adding an X and
// a Z query per post-selected qubit.
CompiledPDT compile_with_postselection(const LayeredCircuit &circuit, InputSplit split,
                                       CompileOptions options = {});

// Theorem 3.3 path: branch-wise compilation of a mixed circuit; public
// randomness picks the branch and the referee samples its PDT once.
struct RandomizedPDT {
  std::vector<std::pair<double, CompiledPDT>> branches;
  int c_M = 0;
  int magic_count = 0;  // worst case over branches

  int worst_cost_bits() const;
  int cost_bound() const { return 4 * c_M * magic_count + 2; }
  // Probability that the sampled branch output equals `expected`.
  double success_probability(uint64_t x, uint64_t y, int expected) const;
};

RandomizedPDT compile_mixed(const MixedCircuit &mixed, InputSplit split,
                            CompileOptions options = {});

// Theorem 3.4 path: the interactive protocol transcript for one run of an
// adaptive circuit. Alice holds x and the advice, Bob holds y.
struct TranscriptMessage {
  char sender;  // 'A' or 'B'
  std::string bits;
  std::string label;
};

struct TwoWayTranscript {
  std::vector<TranscriptMessage> messages;
  int cost_bits() const;
};

struct AdaptiveRunResult {
  TwoWayTranscript transcript;
  int output = 0;
};

AdaptiveRunResult compile_adaptive(const AdaptiveCircuit &circuit, InputSplit split, uint64_t x,
                                   uint64_t y, uint64_t seed);

}  // namespace magicomm

#endif
