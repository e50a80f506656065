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

#include "magicomm/pdt.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "magicomm/rng.hpp"

namespace magicomm {

bool ParityQuery::eval(uint64_t x, uint64_t y) const {
  int bits = std::popcount(alice_mask & x) + std::popcount(bob_mask & y) + (constant ? 1 : 0);
  return (bits & 1) != 0;
}

int CompiledPDT::depth_bound() const {
  bool all_diagonal = true;
  for (const Gate &g : sim_circuit.gates) {
    if (g.is_magic() && !g.is_diagonal_magic()) all_diagonal = false;
  }
  return all_diagonal ? magic_count + 1 : 2 * c_M * magic_count + 1;
}

std::vector<bool> CompiledPDT::answers(uint64_t x, uint64_t y) const {
  require(x < (uint64_t{1} << split.alice_bits) && y < (uint64_t{1} << split.bob_bits),
          "pdt: input out of range");
  std::vector<bool> ans;
  ans.reserve(queries.size());
  for (const ParityQuery &q : queries) ans.push_back(q.eval(x, y));
  return ans;
}

OutputDistribution CompiledPDT::evaluate_from_answers(const std::vector<bool> &ans) const {
  require(ans.size() == queries.size(), "pdt: answer count mismatch");
  StateVector s = initial_state(sim_circuit, 0);
  size_t event = 0;
  for (const Gate &g : sim_circuit.gates) {
    if (!g.is_clifford()) {
      for (const CorrectionSlot &slot : event_corrections[event]) {
        if (!ans[slot.query]) continue;
        Gate fix = Gate::simple(slot.axis == 0 ? GateKind::X : GateKind::Z, {slot.qubit});
        s.apply(fix);
      }
      event++;
    }
    s.apply(g);
  }
  if (final_query >= 0 && ans[final_query]) {
    s.apply(Gate::simple(GateKind::X, {sim_circuit.output_qubit}));
  }
  OutputDistribution dist;
  dist.qubits = {sim_circuit.output_qubit};
  std::vector<double> probs = s.marginal(dist.qubits);
  if (probs[0] > 0) dist.probs["0"] = probs[0];
  if (probs[1] > 0) dist.probs["1"] = probs[1];
  return dist;
}

OutputDistribution CompiledPDT::evaluate(uint64_t x, uint64_t y) const {
  return evaluate_from_answers(answers(x, y));
}

int CompiledPDT::referee_output(uint64_t x, uint64_t y) const {
  OutputDistribution dist = evaluate(x, y);
  double p0 = dist.prob_of("0");
  require(std::abs(p0 - 0.5) > 1e-12, "pdt: output probability is exactly 1/2");
  return p0 > 0.5 ? 0 : 1;
}

std::vector<uint8_t> CompiledPDT::materialize_table() const {
  require(depth() <= 16, "pdt: table materialization capped at depth 16");
  std::vector<uint8_t> table(size_t{1} << depth());
  for (size_t idx = 0; idx < table.size(); idx++) {
    std::vector<bool> ans(queries.size());
    for (size_t j = 0; j < ans.size(); j++) ans[j] = (idx >> j) & 1;
    OutputDistribution dist = evaluate_from_answers(ans);
    double p0 = dist.prob_of("0");
    require(std::abs(p0 - 0.5) > 1e-12, "pdt: output probability is exactly 1/2");
    table[idx] = p0 > 0.5 ? 0 : 1;
  }
  return table;
}

std::vector<bool> SmpProtocol::alice_message(uint64_t x) const {
  std::vector<bool> out;
  for (const ParityQuery &q : pdt->queries) {
    out.push_back((std::popcount(q.alice_mask & x) & 1) != 0);
  }
  return out;
}

std::vector<bool> SmpProtocol::bob_message(uint64_t y) const {
  std::vector<bool> out;
  for (const ParityQuery &q : pdt->queries) {
    out.push_back(((std::popcount(q.bob_mask & y) + (q.constant ? 1 : 0)) & 1) != 0);
  }
  return out;
}

int SmpProtocol::referee_output(const std::vector<bool> &alice, const std::vector<bool> &bob) const {
  require(alice.size() == bob.size() && alice.size() == pdt->queries.size(),
          "smp: message length mismatch");
  std::vector<bool> ans(alice.size());
  for (size_t i = 0; i < ans.size(); i++) ans[i] = alice[i] != bob[i];
  OutputDistribution dist = pdt->evaluate_from_answers(ans);
  double p0 = dist.prob_of("0");
  require(std::abs(p0 - 0.5) > 1e-12, "smp: output probability is exactly 1/2");
  return p0 > 0.5 ? 0 : 1;
}

namespace {

// Frame variable for input qubit i under the given split.
FrameForm input_var(InputSplit split, int i) {
  if (i < split.alice_bits) {
    return FrameForm::variable(make_var(VarKind::AliceInput, i));
  }
  return FrameForm::variable(make_var(VarKind::BobInput, i - split.alice_bits));
}

ParityQuery query_of(const AffineForm &form) {
  ParityQuery q;
  q.constant = form.constant();
  for (VarId v : form.mask()) {
    switch (var_kind(v)) {
      case VarKind::AliceInput:
        q.alice_mask |= uint64_t{1} << var_index(v);
        break;
      case VarKind::BobInput:
        q.bob_mask |= uint64_t{1} << var_index(v);
        break;
      default:
        throw Error("pdt: outcome variable in a parity query");
    }
  }
  return q;
}

CompiledPDT compile_impl(const LayeredCircuit &circuit, InputSplit split, CompileOptions options,
                         bool allow_postselect) {
  circuit.validate();
  require(split.total() == circuit.n_input, "pdt: split does not cover the inputs");
  require(split.alice_bits <= 64 && split.bob_bits <= 64, "pdt: too many input bits");
  int n = circuit.total_qubits();

  CompiledPDT out;
  out.split = split;
  out.c_M = circuit.max_magic_weight();
  out.magic_count = circuit.magic_count();
  out.sim_circuit.n_input = circuit.n_input;
  out.sim_circuit.n_advice = circuit.n_advice;
  out.sim_circuit.output_qubit = circuit.output_qubit;
  out.sim_circuit.advice_state = circuit.advice_state;

  SymbolicPauliFrame frame(n);
  for (int i = 0; i < circuit.n_input; i++) {
    frame.x_form(i) = input_var(split, i);
  }

  auto add_query = [&out](const FrameForm &form) -> int {
    require(form.is_affine(), "pdt: frame left the affine regime (internal bug)");
    out.queries.push_back(query_of(form.affine()));
    return static_cast<int>(out.queries.size()) - 1;
  };

  for (size_t gi = 0; gi < circuit.gates.size(); gi++) {
    const Gate &g = circuit.gates[gi];
    switch (g.kind) {
      case GateKind::X:
        frame.x_form(g.qubits[0]) = frame.x_form(g.qubits[0]) ^ true;
        break;
      case GateKind::Y:
        frame.x_form(g.qubits[0]) = frame.x_form(g.qubits[0]) ^ true;
        frame.z_form(g.qubits[0]) = frame.z_form(g.qubits[0]) ^ true;
        break;
      case GateKind::Z:
        frame.z_form(g.qubits[0]) = frame.z_form(g.qubits[0]) ^ true;
        break;
      case GateKind::H:
      case GateKind::S:
      case GateKind::Sdg:
      case GateKind::CNOT:
      case GateKind::CZ:
      case GateKind::SWAP:
        frame = conjugate_frame(gate_tableau(g, n), frame);
        out.sim_circuit.gates.push_back(g);
        break;
      case GateKind::Measure:
        require(gi + 1 == circuit.gates.size() &&
                    g.qubits == std::vector<int>{circuit.output_qubit},
                "pdt: mid-circuit measurement present; route to compile_adaptive");
        break;  // implied by output_qubit
      case GateKind::PostSelect: {
        require(allow_postselect,
                "pdt: post-selection present; route to compile_with_postselection");
        std::vector<CorrectionSlot> slots;
        for (int w : g.qubits) {
          slots.push_back({w, 0, add_query(frame.x_form(w))});
          slots.push_back({w, 1, add_query(frame.z_form(w))});
          frame.x_form(w) = FrameForm::zero();
          frame.z_form(w) = FrameForm::zero();
        }
        out.event_corrections.push_back(std::move(slots));
        out.sim_circuit.gates.push_back(g);
        break;
      }
      default: {
        // Magic gate. Diagonal gates commute with Z, so only the X parity is
        // queried and the Z frame rides through.
        std::vector<CorrectionSlot> slots;
        bool diagonal = g.is_diagonal_magic();
        for (int w : g.qubits) {
          slots.push_back({w, 0, add_query(frame.x_form(w))});
          frame.x_form(w) = FrameForm::zero();
          if (!diagonal) {
            slots.push_back({w, 1, add_query(frame.z_form(w))});
            frame.z_form(w) = FrameForm::zero();
          }
        }
        out.event_corrections.push_back(std::move(slots));
        out.sim_circuit.gates.push_back(g);
        break;
      }
    }
  }
  out.final_query = add_query(frame.x_form(circuit.output_qubit));

  if (options.minimize) {
    std::vector<int> remap(out.queries.size(), -1);
    std::vector<ParityQuery> kept;
    for (size_t i = 0; i < out.queries.size(); i++) {
      if (!out.queries[i].is_zero()) {
        remap[i] = static_cast<int>(kept.size());
        kept.push_back(out.queries[i]);
      }
    }
    for (auto &slots : out.event_corrections) {
      std::vector<CorrectionSlot> next;
      for (CorrectionSlot &slot : slots) {
        if (remap[slot.query] >= 0) {
          slot.query = remap[slot.query];
          next.push_back(slot);
        }
      }
      slots = std::move(next);
    }
    out.final_query = out.final_query >= 0 ? remap[out.final_query] : -1;
    out.queries = std::move(kept);
  }
  return out;
}

}  // namespace

CompiledPDT compile_unitary(const LayeredCircuit &circuit, InputSplit split,
                            CompileOptions options) {
  return compile_impl(circuit, split, options, false);
}

CompiledPDT compile_with_postselection(const LayeredCircuit &circuit, InputSplit split,
                                       CompileOptions options) {
  return compile_impl(circuit, split, options, true);
}

int RandomizedPDT::worst_cost_bits() const {
  int worst = 0;
  for (const auto &[p, pdt] : branches) worst = std::max(worst, pdt.smp_cost_bits());
  return worst;
}

double RandomizedPDT::success_probability(uint64_t x, uint64_t y, int expected) const {
  double total = 0;
  for (const auto &[p, pdt] : branches) {
    OutputDistribution dist = pdt.evaluate(x, y);
    total += p * dist.prob_of(expected ? "1" : "0");
  }
  return total;
}

RandomizedPDT compile_mixed(const MixedCircuit &mixed, InputSplit split, CompileOptions options) {
  mixed.validate();
  RandomizedPDT out;
  out.c_M = mixed.max_magic_weight();
  out.magic_count = mixed.magic_count();
  for (const auto &[p, c] : mixed.branches) {
    out.branches.emplace_back(p, compile_with_postselection(c, split, options));
  }
  return out;
}

int TwoWayTranscript::cost_bits() const {
  int total = 0;
  for (const TranscriptMessage &m : messages) total += static_cast<int>(m.bits.size());
  return total;
}

namespace {

std::string bits_string(const std::vector<bool> &bits) {
  std::string s;
  for (bool b : bits) s += b ? '1' : '0';
  return s;
}

uint64_t sample_from(const std::vector<double> &probs, SplitRng &rng) {
  double r = rng.uniform();
  double acc = 0;
  for (size_t v = 0; v < probs.size(); v++) {
    acc += probs[v];
    if (r < acc) return v;
  }
  return probs.size() - 1;
}

}  // namespace

AdaptiveRunResult compile_adaptive(const AdaptiveCircuit &circuit, InputSplit split, uint64_t x,
                                   uint64_t y, uint64_t seed) {
  circuit.validate();
  require(split.total() == circuit.n_input, "adaptive: split does not cover the inputs");
  require(x < (uint64_t{1} << split.alice_bits) && y < (uint64_t{1} << split.bob_bits),
          "adaptive: input out of range");
  int n = circuit.total_qubits();
  SplitRng rng(seed);

  // Alice loads her own input and the advice; Bob's wires start at zero and
  // are accounted for by the frame X^y.
  LayeredCircuit shell;
  shell.n_input = circuit.n_input;
  shell.n_advice = circuit.n_advice;
  shell.advice_state = circuit.advice_state;
  shell.output_qubit = circuit.output_qubit;
  StateVector state = initial_state(shell, x);

  SymbolicPauliFrame frame(n);
  Assignment y_bits;
  for (int i = 0; i < split.bob_bits; i++) {
    VarId v = make_var(VarKind::BobInput, i);
    frame.x_form(split.alice_bits + i) = FrameForm::variable(v);
    y_bits[v] = ((y >> i) & 1) != 0;
  }

  AdaptiveRunResult result;
  const AdaptiveNode *node = &circuit.root;
  while (true) {
    bool branched = false;
    for (size_t gi = 0; gi < node->gates.size(); gi++) {
      const Gate &g = node->gates[gi];
      if (g.is_clifford()) {
        state.apply(g);
        frame = conjugate_frame(gate_tableau(g, n), frame);
      } else if (g.is_magic()) {
        std::vector<bool> bits;
        for (int w : g.qubits) {
          bool bx = frame.x_form(w).eval(y_bits);
          bool bz = frame.z_form(w).eval(y_bits);
          bits.push_back(bx);
          bits.push_back(bz);
          if (bx) state.apply(Gate::simple(GateKind::X, {w}));
          if (bz) state.apply(Gate::simple(GateKind::Z, {w}));
          frame.x_form(w) = FrameForm::zero();
          frame.z_form(w) = FrameForm::zero();
        }
        result.transcript.messages.push_back({'B', bits_string(bits), "pauli corrections"});
        state.apply(g);
      } else if (g.kind == GateKind::Measure) {
        require(gi + 1 == node->gates.size() && !node->is_leaf(),
                "adaptive: measurement must end a branching node");
        std::vector<bool> xfix;
        for (int w : g.qubits) {
          bool bx = frame.x_form(w).eval(y_bits);
          xfix.push_back(bx);
          if (bx) state.apply(Gate::simple(GateKind::X, {w}));
          frame.x_form(w) = FrameForm::zero();
          frame.z_form(w) = FrameForm::zero();  // absorbed by the collapse
        }
        result.transcript.messages.push_back({'B', bits_string(xfix), "x corrections"});
        uint64_t outcome = sample_from(state.marginal(g.qubits), rng);
        std::vector<int> values;
        std::string key;
        for (size_t j = 0; j < g.qubits.size(); j++) {
          values.push_back((outcome >> j) & 1);
          key += values.back() ? '1' : '0';
        }
        state.postselect(g.qubits, values);
        result.transcript.messages.push_back({'A', key, "measurement outcomes"});
        auto it = node->children.find(key);
        require(it != node->children.end(), "adaptive: no branch for outcome " + key);
        node = it->second.get();
        branched = true;
        break;
      } else {
        throw Error("adaptive: post-selection is not part of the interactive protocol");
      }
    }
    if (!branched) break;
  }

  bool final_fix = frame.x_form(circuit.output_qubit).eval(y_bits);
  result.transcript.messages.push_back({'B', final_fix ? "1" : "0", "final x correction"});
  if (final_fix) state.apply(Gate::simple(GateKind::X, {circuit.output_qubit}));
  result.output = static_cast<int>(sample_from(state.marginal({circuit.output_qubit}), rng));
  return result;
}

}  // namespace magicomm
