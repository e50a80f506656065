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

#include "magicomm/pauli.hpp"

#include <bit>

namespace magicomm {

PauliString::PauliString(int n, uint64_t x_bits, uint64_t z_bits, int phase)
    : n_(n), x_(x_bits), z_(z_bits), phase_(((phase % 4) + 4) % 4) {
  require(n >= 0 && n <= 64, "PauliString: qubit count out of range");
  uint64_t live = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  require((x_bits & ~live) == 0 && (z_bits & ~live) == 0, "PauliString: bits beyond register");
}

PauliString PauliString::operator*(const PauliString &other) const {
  require(n_ == other.n_, "PauliString: dimension mismatch");
  // (X^a Z^b)(X^c Z^d) = (-1)^{|b&c|} X^{a^c} Z^{b^d}
  int swaps = std::popcount(z_ & other.x_);
  int phase = phase_ + other.phase_ + 2 * swaps;
  return PauliString(n_, x_ ^ other.x_, z_ ^ other.z_, phase);
}

bool PauliString::commutes_with(const PauliString &other) const {
  require(n_ == other.n_, "PauliString: dimension mismatch");
  int anti = std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_);
  return (anti & 1) == 0;
}

PauliString PauliString::with_phase(int phase) const {
  return PauliString(n_, x_, z_, phase);
}

PauliString PauliString::parse(const std::string &text) {
  size_t pos = 0;
  int phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase = 2;
    pos++;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase += 1;
    pos++;
  }
  uint64_t x = 0, z = 0;
  int n = 0;
  for (; pos < text.size(); pos++, n++) {
    require(n < 64, "PauliString::parse: too many qubits");
    switch (text[pos]) {
      case 'I':
        break;
      case 'X':
        x |= uint64_t{1} << n;
        break;
      case 'Z':
        z |= uint64_t{1} << n;
        break;
      case 'Y':
        x |= uint64_t{1} << n;
        z |= uint64_t{1} << n;
        phase += 1;  // Y = i X Z
        break;
      default:
        throw Error("PauliString::parse: bad character '" + std::string(1, text[pos]) + "'");
    }
  }
  require(n > 0, "PauliString::parse: empty operator");
  return PauliString(n, x, z, phase);
}

std::string PauliString::str() const {
  int ys = std::popcount(x_ & z_);
  int display = ((phase_ - ys) % 4 + 4) % 4;
  static const char *prefix[] = {"+", "+i", "-", "-i"};
  std::string out = prefix[display];
  for (int q = 0; q < n_; q++) {
    bool xb = x_bit(q), zb = z_bit(q);
    out += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  return out;
}

std::vector<cplx> PauliString::matrix() const {
  size_t dim = size_t{1} << n_;
  std::vector<cplx> m(dim * dim, cplx{0, 0});
  static const cplx iphase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (size_t col = 0; col < dim; col++) {
    size_t row = col ^ x_;
    // <row| X^x Z^z |col> = (-1)^{z.col}
    int sign = std::popcount(z_ & col) & 1;
    m[row * dim + col] = iphase[(phase_ + 2 * sign) % 4];
  }
  return m;
}

CliffordTableau CliffordTableau::identity(int n) {
  CliffordTableau t;
  t.n_ = n;
  for (int q = 0; q < n; q++) {
    t.x_images_.push_back(PauliString::single_x(n, q));
    t.z_images_.push_back(PauliString::single_z(n, q));
  }
  return t;
}

CliffordTableau CliffordTableau::h(int n, int q) {
  CliffordTableau t = identity(n);
  std::swap(t.x_images_[q], t.z_images_[q]);
  return t;
}

CliffordTableau CliffordTableau::s(int n, int q) {
  CliffordTableau t = identity(n);
  // S X S^-1 = Y = i X Z
  t.x_images_[q] = PauliString(n, uint64_t{1} << q, uint64_t{1} << q, 1);
  return t;
}

CliffordTableau CliffordTableau::sdg(int n, int q) {
  CliffordTableau t = identity(n);
  // Sdg X S = -Y
  t.x_images_[q] = PauliString(n, uint64_t{1} << q, uint64_t{1} << q, 3);
  return t;
}

CliffordTableau CliffordTableau::x(int n, int q) {
  CliffordTableau t = identity(n);
  t.z_images_[q] = t.z_images_[q].with_phase(2);
  return t;
}

CliffordTableau CliffordTableau::y(int n, int q) {
  CliffordTableau t = identity(n);
  t.x_images_[q] = t.x_images_[q].with_phase(2);
  t.z_images_[q] = t.z_images_[q].with_phase(2);
  return t;
}

CliffordTableau CliffordTableau::z(int n, int q) {
  CliffordTableau t = identity(n);
  t.x_images_[q] = t.x_images_[q].with_phase(2);
  return t;
}

CliffordTableau CliffordTableau::cnot(int n, int c, int t_) {
  CliffordTableau t = identity(n);
  t.x_images_[c] = PauliString(n, (uint64_t{1} << c) | (uint64_t{1} << t_), 0);
  t.z_images_[t_] = PauliString(n, 0, (uint64_t{1} << c) | (uint64_t{1} << t_));
  return t;
}

CliffordTableau CliffordTableau::cz(int n, int a, int b) {
  CliffordTableau t = identity(n);
  t.x_images_[a] = PauliString(n, uint64_t{1} << a, uint64_t{1} << b);
  t.x_images_[b] = PauliString(n, uint64_t{1} << b, uint64_t{1} << a);
  return t;
}

CliffordTableau CliffordTableau::swap(int n, int a, int b) {
  CliffordTableau t = identity(n);
  std::swap(t.x_images_[a], t.x_images_[b]);
  std::swap(t.z_images_[a], t.z_images_[b]);
  return t;
}

bool CliffordTableau::is_symplectic() const {
  for (int i = 0; i < n_; i++) {
    for (int j = 0; j < n_; j++) {
      bool anti_xz = !x_images_[i].commutes_with(z_images_[j]);
      bool anti_xx = !x_images_[i].commutes_with(x_images_[j]);
      bool anti_zz = !z_images_[i].commutes_with(z_images_[j]);
      if (anti_xx || anti_zz || anti_xz != (i == j)) {
        return false;
      }
    }
  }
  return true;
}

PauliString conjugate_pauli(const CliffordTableau &t, const PauliString &p) {
  require(t.num_qubits() == p.num_qubits(), "conjugate_pauli: dimension mismatch");
  PauliString out(t.num_qubits());
  out = out.with_phase(p.phase());
  for (int q = 0; q < t.num_qubits(); q++) {
    if (p.x_bit(q)) out = out * t.x_images_[q];
    if (p.z_bit(q)) out = out * t.z_images_[q];
  }
  return out;
}

CliffordTableau compose_tableaus(const CliffordTableau &a, const CliffordTableau &b) {
  require(a.num_qubits() == b.num_qubits(), "compose_tableaus: dimension mismatch");
  CliffordTableau out;
  out.n_ = a.num_qubits();
  for (int q = 0; q < out.n_; q++) {
    out.x_images_.push_back(conjugate_pauli(a, b.x_image(q)));
    out.z_images_.push_back(conjugate_pauli(a, b.z_image(q)));
  }
  return out;
}

bool SymbolicPauliFrame::all_affine() const {
  for (const auto &[xf, zf] : forms_) {
    if (!xf.is_affine() || !zf.is_affine()) return false;
  }
  return true;
}

PauliString SymbolicPauliFrame::eval(const Assignment &a) const {
  uint64_t x = 0, z = 0;
  for (int q = 0; q < num_qubits(); q++) {
    if (forms_[q].first.eval(a)) x |= uint64_t{1} << q;
    if (forms_[q].second.eval(a)) z |= uint64_t{1} << q;
  }
  return PauliString(num_qubits(), x, z, 0);
}

SymbolicPauliFrame conjugate_frame(const CliffordTableau &t, const SymbolicPauliFrame &f) {
  require(t.num_qubits() == f.num_qubits(), "conjugate_frame: dimension mismatch");
  int n = t.num_qubits();
  SymbolicPauliFrame out(n);
  for (int w = 0; w < n; w++) {
    const PauliString &ix = t.x_image(w);
    const PauliString &iz = t.z_image(w);
    if (!f.x_form(w).is_zero()) {
      for (int v = 0; v < n; v++) {
        if (ix.x_bit(v)) out.x_form(v) ^= f.x_form(w);
        if (ix.z_bit(v)) out.z_form(v) ^= f.x_form(w);
      }
    }
    if (!f.z_form(w).is_zero()) {
      for (int v = 0; v < n; v++) {
        if (iz.x_bit(v)) out.x_form(v) ^= f.z_form(w);
        if (iz.z_bit(v)) out.z_form(v) ^= f.z_form(w);
      }
    }
  }
  return out;
}

}  // namespace magicomm
