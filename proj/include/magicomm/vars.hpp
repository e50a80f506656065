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

#ifndef MAGICOMM_VARS_HPP
#define MAGICOMM_VARS_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "magicomm/common.hpp"

namespace magicomm {

// Namespaced Boolean variables. Alice/Bob input bits and Alice/Bob-held
// measurement outcome bits live in disjoint id ranges so they never collide.
enum class VarKind : uint32_t { AliceInput = 0, BobInput = 1, AliceOutcome = 2, BobOutcome = 3 };

using VarId = uint32_t;

inline VarId make_var(VarKind kind, uint32_t index) {
  return (static_cast<uint32_t>(kind) << 28) | index;
}
inline VarKind var_kind(VarId v) { return static_cast<VarKind>(v >> 28); }
inline uint32_t var_index(VarId v) { return v & 0x0FFFFFFFu; }
inline bool var_is_input(VarId v) {
  VarKind k = var_kind(v);
  return k == VarKind::AliceInput || k == VarKind::BobInput;
}
inline bool var_held_by_alice(VarId v) {
  VarKind k = var_kind(v);
  return k == VarKind::AliceInput || k == VarKind::AliceOutcome;
}
std::string var_name(VarId v);

using Assignment = std::unordered_map<VarId, bool>;

// GF(2)-affine Boolean function: XOR of a variable subset plus a constant.
class AffineForm {
 public:
  AffineForm() = default;
  explicit AffineForm(bool constant) : constant_(constant) {}
  static AffineForm variable(VarId v);

  bool constant() const { return constant_; }
  const std::vector<VarId> &mask() const { return mask_; }
  bool is_zero() const { return mask_.empty() && !constant_; }
  bool is_constant() const { return mask_.empty(); }
  bool depends_on(VarId v) const;

  void flip_constant() { constant_ = !constant_; }
  void toggle(VarId v);

  AffineForm operator^(const AffineForm &other) const;
  AffineForm &operator^=(const AffineForm &other);
  bool operator==(const AffineForm &other) const = default;

  bool eval(const Assignment &a) const;
  std::string str() const;

 private:
  std::vector<VarId> mask_;  // sorted, duplicate-free
  bool constant_ = false;
};

// General Boolean function over up to kMaxVars named variables, stored as an
// explicit truth table. Index bit i of the table corresponds to vars()[i].
class BoolFun {
 public:
  static constexpr int kMaxVars = 20;

  BoolFun() : table_(1, 0) {}
  explicit BoolFun(bool constant) : table_(1, constant ? 1 : 0) {}
  static BoolFun variable(VarId v);
  static BoolFun from_affine(const AffineForm &f);
  static BoolFun from_table(std::vector<VarId> vars, std::vector<uint8_t> table);

  const std::vector<VarId> &vars() const { return vars_; }
  const std::vector<uint8_t> &table() const { return table_; }
  bool is_constant() const;
  bool is_zero() const { return is_constant() && table_[0] == 0; }

  bool eval(const Assignment &a) const;
  bool eval_packed(uint32_t packed_bits) const { return table_[packed_bits] != 0; }

  BoolFun operator^(const BoolFun &other) const;
  BoolFun operator&(const BoolFun &other) const;
  BoolFun operator^(bool c) const;
  bool operator==(const BoolFun &other) const;

  // Exact affine reconstruction; throws if the function is not affine.
  AffineForm to_affine() const;
  bool is_affine() const;

  // f is XOR-separable over the (Alice-held, Bob-held) variable split iff
  // f(a, b) = g(a) xor h(b). On success returns {g, h} with the constant
  // folded into g.
  bool xor_separate(BoolFun *alice_part, BoolFun *bob_part) const;

  // Restricts to the given variable order (superset of vars()) for
  // truth-table comparisons.
  BoolFun aligned_to(const std::vector<VarId> &vars) const;

  std::string str() const;

 private:
  std::vector<VarId> vars_;     // sorted
  std::vector<uint8_t> table_;  // size 1 << vars_.size()

  void drop_dummy_vars();
};

BoolFun merge_apply(const BoolFun &a, const BoolFun &b, bool (*op)(bool, bool));

// A frame component: affine while the circuit stays in the parity-compilable
// regime, general BoolFun once teleportation gadgets enter.
class FrameForm {
 public:
  FrameForm() : value_(AffineForm()) {}
  FrameForm(AffineForm f) : value_(std::move(f)) {}
  FrameForm(BoolFun f) : value_(std::move(f)) {}
  static FrameForm zero() { return FrameForm(); }
  static FrameForm constant(bool c) { return FrameForm(AffineForm(c)); }
  static FrameForm variable(VarId v) { return FrameForm(AffineForm::variable(v)); }

  bool is_affine() const { return std::holds_alternative<AffineForm>(value_); }
  bool is_zero() const;
  const AffineForm &affine() const;
  BoolFun as_boolfun() const;

  FrameForm operator^(const FrameForm &other) const;
  FrameForm &operator^=(const FrameForm &other);
  FrameForm operator&(const FrameForm &other) const;
  FrameForm operator^(bool c) const;

  bool eval(const Assignment &a) const;
  std::string str() const;

 private:
  std::variant<AffineForm, BoolFun> value_;
};

}  // namespace magicomm

#endif
