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

#include "magicomm/statevector.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace magicomm {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const cplx kTPhase = std::polar(1.0, M_PI / 4);
}  // namespace

StateVector::StateVector(int n) : n_(n) {
  require(n >= 0 && n <= kMaxQubits, "statevector: size cap exceeded");
  amps_.assign(size_t{1} << n, cplx{0, 0});
  amps_[0] = cplx{1, 0};
}

StateVector StateVector::basis_state(int n, uint64_t index) {
  StateVector s(n);
  s.amps_[0] = cplx{0, 0};
  s.amps_[index] = cplx{1, 0};
  return s;
}

void StateVector::apply_matrix1(int q, const cplx m[4]) {
  uint64_t bit = uint64_t{1} << q;
  for (uint64_t i = 0; i < amps_.size(); i++) {
    if (i & bit) continue;
    cplx a = amps_[i], b = amps_[i | bit];
    amps_[i] = m[0] * a + m[1] * b;
    amps_[i | bit] = m[2] * a + m[3] * b;
  }
}

void StateVector::apply_matrix(const std::vector<int> &qubits, const std::vector<cplx> &m) {
  int w = static_cast<int>(qubits.size());
  size_t dim = size_t{1} << w;
  require(m.size() == dim * dim, "apply_matrix: size mismatch");
  uint64_t mask = 0;
  for (int q : qubits) mask |= uint64_t{1} << q;
  std::vector<uint64_t> offsets(dim);
  // Matrix row/col index: qubits[0] is the most significant bit.
  for (size_t v = 0; v < dim; v++) {
    uint64_t off = 0;
    for (int j = 0; j < w; j++) {
      if ((v >> (w - 1 - j)) & 1) off |= uint64_t{1} << qubits[j];
    }
    offsets[v] = off;
  }
  std::vector<cplx> scratch(dim);
  for (uint64_t base = 0; base < amps_.size(); base++) {
    if (base & mask) continue;
    for (size_t v = 0; v < dim; v++) scratch[v] = amps_[base | offsets[v]];
    for (size_t r = 0; r < dim; r++) {
      cplx acc{0, 0};
      for (size_t c2 = 0; c2 < dim; c2++) acc += m[r * dim + c2] * scratch[c2];
      amps_[base | offsets[r]] = acc;
    }
  }
}

void StateVector::apply(const Gate &g) {
  switch (g.kind) {
    case GateKind::H: {
      const cplx m[4] = {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
      apply_matrix1(g.qubits[0], m);
      return;
    }
    case GateKind::S: {
      const cplx m[4] = {1, 0, 0, {0, 1}};
      apply_matrix1(g.qubits[0], m);
      return;
    }
    case GateKind::Sdg: {
      const cplx m[4] = {1, 0, 0, {0, -1}};
      apply_matrix1(g.qubits[0], m);
      return;
    }
    case GateKind::T: {
      const cplx m[4] = {1, 0, 0, kTPhase};
      apply_matrix1(g.qubits[0], m);
      return;
    }
    case GateKind::Tdg: {
      const cplx m[4] = {1, 0, 0, std::conj(kTPhase)};
      apply_matrix1(g.qubits[0], m);
      return;
    }
    case GateKind::X: {
      uint64_t bit = uint64_t{1} << g.qubits[0];
      for (uint64_t i = 0; i < amps_.size(); i++) {
        if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
      }
      return;
    }
    case GateKind::Y: {
      const cplx m[4] = {0, {0, -1}, {0, 1}, 0};
      apply_matrix1(g.qubits[0], m);
      return;
    }
    case GateKind::Z: {
      uint64_t bit = uint64_t{1} << g.qubits[0];
      for (uint64_t i = 0; i < amps_.size(); i++) {
        if (i & bit) amps_[i] = -amps_[i];
      }
      return;
    }
    case GateKind::CNOT: {
      uint64_t cb = uint64_t{1} << g.qubits[0];
      uint64_t tb = uint64_t{1} << g.qubits[1];
      for (uint64_t i = 0; i < amps_.size(); i++) {
        if ((i & cb) && !(i & tb)) std::swap(amps_[i], amps_[i | tb]);
      }
      return;
    }
    case GateKind::CZ: {
      uint64_t ab = uint64_t{1} << g.qubits[0];
      uint64_t bb = uint64_t{1} << g.qubits[1];
      for (uint64_t i = 0; i < amps_.size(); i++) {
        if ((i & ab) && (i & bb)) amps_[i] = -amps_[i];
      }
      return;
    }
    case GateKind::SWAP: {
      uint64_t ab = uint64_t{1} << g.qubits[0];
      uint64_t bb = uint64_t{1} << g.qubits[1];
      for (uint64_t i = 0; i < amps_.size(); i++) {
        if ((i & ab) && !(i & bb)) std::swap(amps_[i], amps_[(i ^ ab) | bb]);
      }
      return;
    }
    case GateKind::ToffoliN: {
      uint64_t cmask = 0;
      for (size_t j = 0; j + 1 < g.qubits.size(); j++) cmask |= uint64_t{1} << g.qubits[j];
      uint64_t tb = uint64_t{1} << g.qubits.back();
      for (uint64_t i = 0; i < amps_.size(); i++) {
        if ((i & cmask) == cmask && !(i & tb)) std::swap(amps_[i], amps_[i | tb]);
      }
      return;
    }
    case GateKind::Magic:
      apply_matrix(g.qubits, g.magic_matrix);
      return;
    case GateKind::PostSelect:
      postselect(g.qubits, g.postselect_values);
      return;
    case GateKind::Measure:
      throw Error("statevector: measurement must be handled by the caller");
  }
}

double StateVector::postselect(const std::vector<int> &qubits, const std::vector<int> &values) {
  uint64_t mask = 0, want = 0;
  for (size_t j = 0; j < qubits.size(); j++) {
    mask |= uint64_t{1} << qubits[j];
    if (values[j]) want |= uint64_t{1} << qubits[j];
  }
  double p = 0;
  for (uint64_t i = 0; i < amps_.size(); i++) {
    if ((i & mask) == want) p += std::norm(amps_[i]);
  }
  if (p <= 1e-15) {
    throw UnsupportedInput("postselect: zero-probability branch");
  }
  double scale = 1.0 / std::sqrt(p);
  for (uint64_t i = 0; i < amps_.size(); i++) {
    amps_[i] = (i & mask) == want ? amps_[i] * scale : cplx{0, 0};
  }
  return p;
}

double StateVector::norm() const {
  double s = 0;
  for (const cplx &a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

std::vector<double> StateVector::marginal(const std::vector<int> &qubits) const {
  std::vector<double> probs(size_t{1} << qubits.size(), 0.0);
  for (uint64_t i = 0; i < amps_.size(); i++) {
    double p = std::norm(amps_[i]);
    if (p == 0) continue;
    uint64_t out = 0;
    for (size_t j = 0; j < qubits.size(); j++) {
      if ((i >> qubits[j]) & 1) out |= uint64_t{1} << j;
    }
    probs[out] += p;
  }
  return probs;
}

double StateVector::fidelity_up_to_phase(const StateVector &other) const {
  require(n_ == other.n_, "fidelity: dimension mismatch");
  cplx overlap{0, 0};
  for (size_t i = 0; i < amps_.size(); i++) {
    overlap += std::conj(amps_[i]) * other.amps_[i];
  }
  return std::abs(overlap);
}

double OutputDistribution::prob_of(const std::string &outcome) const {
  auto it = probs.find(outcome);
  return it == probs.end() ? 0.0 : it->second;
}

bool OutputDistribution::close_to(const OutputDistribution &other, double tol) const {
  std::map<std::string, double> merged = probs;
  for (const auto &[k, v] : other.probs) merged.emplace(k, 0.0);
  for (const auto &[k, _] : merged) {
    if (std::abs(prob_of(k) - other.prob_of(k)) > tol) return false;
  }
  return true;
}

void OutputDistribution::validate(double tol) const {
  double total = 0;
  for (const auto &[k, v] : probs) {
    require(v >= -tol, "distribution: negative probability");
    total += v;
  }
  require(std::abs(total - 1.0) <= tol, "distribution: probabilities must sum to 1");
}

StateVector initial_state(const LayeredCircuit &circuit, uint64_t input) {
  circuit.validate();
  int n = circuit.total_qubits();
  require(n <= StateVector::kMaxQubits, "run: size cap exceeded");
  require(input < (uint64_t{1} << circuit.n_input), "run: input out of range");
  StateVector s(n);
  auto &amps = s.amps();
  std::fill(amps.begin(), amps.end(), cplx{0, 0});
  if (circuit.advice_state.empty()) {
    amps[input] = cplx{1, 0};
  } else {
    for (size_t a = 0; a < circuit.advice_state.size(); a++) {
      amps[input | (a << circuit.n_input)] = circuit.advice_state[a];
    }
  }
  return s;
}

namespace {

std::string outcome_key(uint64_t value, size_t bits) {
  std::string key(bits, '0');
  for (size_t j = 0; j < bits; j++) {
    if ((value >> j) & 1) key[j] = '1';
  }
  return key;
}

}  // namespace

OutputDistribution run(const LayeredCircuit &circuit, uint64_t input) {
  StateVector s = initial_state(circuit, input);
  std::vector<int> measured;
  bool seen_measure = false;
  for (const Gate &g : circuit.gates) {
    if (g.kind == GateKind::Measure) {
      seen_measure = true;
      for (int q : g.qubits) measured.push_back(q);
      continue;
    }
    require(!seen_measure, "run: mid-circuit measurement; use the adaptive runner");
    s.apply(g);
  }
  if (measured.empty()) measured.push_back(circuit.output_qubit);
  OutputDistribution dist;
  dist.qubits = measured;
  std::vector<double> probs = s.marginal(measured);
  for (size_t v = 0; v < probs.size(); v++) {
    if (probs[v] > 0) dist.probs[outcome_key(v, measured.size())] = probs[v];
  }
  dist.validate();
  return dist;
}

namespace {

void adaptive_walk(const AdaptiveNode &node, StateVector s, double weight, int output_qubit,
                   std::map<std::string, double> *out) {
  for (size_t gi = 0; gi < node.gates.size(); gi++) {
    const Gate &g = node.gates[gi];
    if (g.kind == GateKind::Measure) {
      require(gi + 1 == node.gates.size() && !node.is_leaf(),
              "adaptive: measurement must end a branching node");
      std::vector<double> probs = s.marginal(g.qubits);
      for (size_t v = 0; v < probs.size(); v++) {
        if (probs[v] <= 1e-15) continue;
        std::string key = outcome_key(v, g.qubits.size());
        auto it = node.children.find(key);
        require(it != node.children.end(), "adaptive: no branch for outcome " + key);
        StateVector branch = s;
        std::vector<int> values;
        for (size_t j = 0; j < g.qubits.size(); j++) values.push_back((v >> j) & 1);
        branch.postselect(g.qubits, values);
        adaptive_walk(*it->second, std::move(branch), weight * probs[v], output_qubit, out);
      }
      return;
    }
    s.apply(g);
  }
  require(node.is_leaf(), "adaptive: branching node missing its measurement");
  std::vector<double> probs = s.marginal({output_qubit});
  for (size_t v = 0; v < probs.size(); v++) {
    if (probs[v] > 0) (*out)[outcome_key(v, 1)] += weight * probs[v];
  }
}

}  // namespace

OutputDistribution run_adaptive_exact(const AdaptiveCircuit &circuit, uint64_t input) {
  circuit.validate();
  LayeredCircuit shell;
  shell.n_input = circuit.n_input;
  shell.n_advice = circuit.n_advice;
  shell.advice_state = circuit.advice_state;
  shell.output_qubit = circuit.output_qubit;
  StateVector s = initial_state(shell, input);
  OutputDistribution dist;
  dist.qubits = {circuit.output_qubit};
  adaptive_walk(circuit.root, std::move(s), 1.0, circuit.output_qubit, &dist.probs);
  dist.validate();
  return dist;
}

std::vector<cplx> unitary_of(const LayeredCircuit &circuit) {
  circuit.validate();
  int n = circuit.total_qubits();
  require(n <= 11, "unitary_of: size cap exceeded");
  size_t dim = size_t{1} << n;
  std::vector<cplx> u(dim * dim);
  for (uint64_t col = 0; col < dim; col++) {
    StateVector s = StateVector::basis_state(n, col);
    for (const Gate &g : circuit.gates) {
      require(g.kind != GateKind::Measure && g.kind != GateKind::PostSelect,
              "unitary_of: circuit must be unitary");
      s.apply(g);
    }
    for (uint64_t row = 0; row < dim; row++) {
      u[row * dim + col] = s.amps()[row];
    }
  }
  return u;
}

double matrix_distance(const std::vector<cplx> &a, const std::vector<cplx> &b) {
  require(a.size() == b.size() && !a.empty(), "matrix_distance: size mismatch");
  size_t dim = static_cast<size_t>(std::llround(std::sqrt(static_cast<double>(a.size()))));
  require(dim * dim == a.size(), "matrix_distance: not square");
  Eigen::MatrixXcd ma(dim, dim), mb(dim, dim);
  for (size_t r = 0; r < dim; r++) {
    for (size_t c = 0; c < dim; c++) {
      ma(r, c) = a[r * dim + c];
      mb(r, c) = b[r * dim + c];
    }
  }
  // Align the global phase by the trace of B^dagger A, then take the operator
  // norm of the difference. Exactly zero iff A = e^{i phi} B.
  cplx tr = (mb.adjoint() * ma).trace();
  double theta = std::abs(tr) > 1e-12 ? std::arg(tr) : 0.0;
  Eigen::MatrixXcd diff = ma - std::polar(1.0, theta) * mb;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(diff.adjoint() * diff);
  double lmax = solver.eigenvalues().maxCoeff();
  return std::sqrt(std::max(0.0, lmax));
}

}  // namespace magicomm
