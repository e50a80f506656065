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

#ifndef MAGICOMM_PAULI_HPP
#define MAGICOMM_PAULI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "magicomm/common.hpp"
#include "magicomm/vars.hpp"

namespace magicomm {

// n-qubit Pauli operator in the normal form i^phase * prod_j X_j^x Z_j^z,
// with sites in ascending order. Under this convention Y = i X Z.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n) : n_(n) {}
  PauliString(int n, uint64_t x_bits, uint64_t z_bits, int phase = 0);

  static PauliString single_x(int n, int q) { return PauliString(n, uint64_t{1} << q, 0); }
  static PauliString single_z(int n, int q) { return PauliString(n, 0, uint64_t{1} << q); }
  static PauliString parse(const std::string &text);

  int num_qubits() const { return n_; }
  uint64_t x_bits() const { return x_; }
  uint64_t z_bits() const { return z_; }
  int phase() const { return phase_; }  // exponent of i, in {0,1,2,3}
  bool x_bit(int q) const { return (x_ >> q) & 1; }
  bool z_bit(int q) const { return (z_ >> q) & 1; }
  bool is_identity() const { return x_ == 0 && z_ == 0 && phase_ == 0; }

  PauliString operator*(const PauliString &other) const;
  bool operator==(const PauliString &other) const = default;
  bool commutes_with(const PauliString &other) const;

  PauliString with_phase(int phase) const;
  std::string str() const;

  // Dense 2^n x 2^n matrix, row-major.
  std::vector<cplx> matrix() const;

 private:
  int n_ = 0;
  uint64_t x_ = 0;
  uint64_t z_ = 0;
  int phase_ = 0;
};

// Clifford operation represented by the conjugation images of the X_i and Z_i
// generators. Signs are tracked exactly.
class CliffordTableau {
 public:
  CliffordTableau() = default;
  static CliffordTableau identity(int n);
  // Named single/two-qubit generators on an n-qubit register.
  static CliffordTableau h(int n, int q);
  static CliffordTableau s(int n, int q);
  static CliffordTableau sdg(int n, int q);
  static CliffordTableau x(int n, int q);
  static CliffordTableau y(int n, int q);
  static CliffordTableau z(int n, int q);
  static CliffordTableau cnot(int n, int c, int t);
  static CliffordTableau cz(int n, int a, int b);
  static CliffordTableau swap(int n, int a, int b);

  int num_qubits() const { return n_; }
  const PauliString &x_image(int q) const { return x_images_[q]; }
  const PauliString &z_image(int q) const { return z_images_[q]; }

  bool is_symplectic() const;
  bool operator==(const CliffordTableau &other) const = default;

 private:
  int n_ = 0;
  std::vector<PauliString> x_images_;
  std::vector<PauliString> z_images_;

  friend PauliString conjugate_pauli(const CliffordTableau &, const PauliString &);
  friend CliffordTableau compose_tableaus(const CliffordTableau &, const CliffordTableau &);
};

// t * p * t^-1, with exact phase.
PauliString conjugate_pauli(const CliffordTableau &t, const PauliString &p);

// Tableau of "apply b, then a": conjugate(compose(a,b), p) =
// conjugate(a, conjugate(b, p)).
CliffordTableau compose_tableaus(const CliffordTableau &a, const CliffordTableau &b);

// Per-qubit symbolic X/Z correction exponents. Frames are applied as physical
// corrections, where a global phase is unobservable, so no phase is tracked.
class SymbolicPauliFrame {
 public:
  SymbolicPauliFrame() = default;
  explicit SymbolicPauliFrame(int n) : forms_(n) {}

  int num_qubits() const { return static_cast<int>(forms_.size()); }
  FrameForm &x_form(int q) { return forms_[q].first; }
  FrameForm &z_form(int q) { return forms_[q].second; }
  const FrameForm &x_form(int q) const { return forms_[q].first; }
  const FrameForm &z_form(int q) const { return forms_[q].second; }

  bool all_affine() const;
  PauliString eval(const Assignment &a) const;

 private:
  std::vector<std::pair<FrameForm, FrameForm>> forms_;
};

SymbolicPauliFrame conjugate_frame(const CliffordTableau &t, const SymbolicPauliFrame &f);

}  // namespace magicomm

#endif
