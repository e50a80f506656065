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

#include "magicomm/vars.hpp"

#include <algorithm>

namespace magicomm {

std::string var_name(VarId v) {
  static const char *prefix[] = {"x", "y", "ra", "rb"};
  return std::string(prefix[static_cast<uint32_t>(var_kind(v))]) + std::to_string(var_index(v));
}

AffineForm AffineForm::variable(VarId v) {
  AffineForm f;
  f.mask_.push_back(v);
  return f;
}

bool AffineForm::depends_on(VarId v) const {
  return std::binary_search(mask_.begin(), mask_.end(), v);
}

void AffineForm::toggle(VarId v) {
  auto it = std::lower_bound(mask_.begin(), mask_.end(), v);
  if (it != mask_.end() && *it == v) {
    mask_.erase(it);
  } else {
    mask_.insert(it, v);
  }
}

AffineForm AffineForm::operator^(const AffineForm &other) const {
  AffineForm out;
  out.constant_ = constant_ != other.constant_;
  // symmetric difference of sorted masks
  std::set_symmetric_difference(mask_.begin(), mask_.end(), other.mask_.begin(),
                                other.mask_.end(), std::back_inserter(out.mask_));
  return out;
}

AffineForm &AffineForm::operator^=(const AffineForm &other) {
  *this = *this ^ other;
  return *this;
}

bool AffineForm::eval(const Assignment &a) const {
  bool v = constant_;
  for (VarId m : mask_) {
    auto it = a.find(m);
    require(it != a.end(), "AffineForm::eval: unassigned variable " + var_name(m));
    v = v != it->second;
  }
  return v;
}

std::string AffineForm::str() const {
  if (mask_.empty()) {
    return constant_ ? "1" : "0";
  }
  std::string out;
  for (size_t i = 0; i < mask_.size(); i++) {
    if (i) out += "+";
    out += var_name(mask_[i]);
  }
  if (constant_) out += "+1";
  return out;
}

BoolFun BoolFun::variable(VarId v) {
  BoolFun f;
  f.vars_ = {v};
  f.table_ = {0, 1};
  return f;
}

BoolFun BoolFun::from_affine(const AffineForm &f) {
  BoolFun out;
  out.vars_ = f.mask();
  require(out.vars_.size() <= kMaxVars, "BoolFun: too many variables");
  out.table_.assign(size_t{1} << out.vars_.size(), 0);
  for (size_t idx = 0; idx < out.table_.size(); idx++) {
    bool v = f.constant();
    for (size_t i = 0; i < out.vars_.size(); i++) {
      if ((idx >> i) & 1) v = !v;
    }
    out.table_[idx] = v ? 1 : 0;
  }
  return out;
}

BoolFun BoolFun::from_table(std::vector<VarId> vars, std::vector<uint8_t> table) {
  require(vars.size() <= kMaxVars, "BoolFun: too many variables");
  require(table.size() == (size_t{1} << vars.size()), "BoolFun: table size mismatch");
  require(std::is_sorted(vars.begin(), vars.end()), "BoolFun: variables must be sorted");
  BoolFun out;
  out.vars_ = std::move(vars);
  out.table_ = std::move(table);
  out.drop_dummy_vars();
  return out;
}

bool BoolFun::is_constant() const { return vars_.empty(); }

bool BoolFun::eval(const Assignment &a) const {
  uint32_t idx = 0;
  for (size_t i = 0; i < vars_.size(); i++) {
    auto it = a.find(vars_[i]);
    require(it != a.end(), "BoolFun::eval: unassigned variable " + var_name(vars_[i]));
    if (it->second) idx |= uint32_t{1} << i;
  }
  return table_[idx] != 0;
}

void BoolFun::drop_dummy_vars() {
  for (size_t i = vars_.size(); i-- > 0;) {
    size_t bit = size_t{1} << i;
    bool dummy = true;
    for (size_t idx = 0; idx < table_.size(); idx++) {
      if ((idx & bit) == 0 && table_[idx] != table_[idx | bit]) {
        dummy = false;
        break;
      }
    }
    if (!dummy) continue;
    std::vector<uint8_t> next(table_.size() / 2);
    for (size_t idx = 0; idx < next.size(); idx++) {
      size_t lo = idx & (bit - 1);
      size_t hi = (idx & ~(bit - 1)) << 1;
      next[idx] = table_[hi | lo];
    }
    table_ = std::move(next);
    vars_.erase(vars_.begin() + i);
  }
}

BoolFun merge_apply(const BoolFun &a, const BoolFun &b, bool (*op)(bool, bool)) {
  std::vector<VarId> vars;
  std::set_union(a.vars().begin(), a.vars().end(), b.vars().begin(), b.vars().end(),
                 std::back_inserter(vars));
  require(vars.size() <= BoolFun::kMaxVars, "BoolFun: merged function exceeds variable cap");
  // Positions of each side's variables in the merged order.
  auto positions = [&vars](const std::vector<VarId> &sub) {
    std::vector<int> pos;
    for (VarId v : sub) {
      pos.push_back(static_cast<int>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin()));
    }
    return pos;
  };
  std::vector<int> pa = positions(a.vars());
  std::vector<int> pb = positions(b.vars());
  std::vector<uint8_t> table(size_t{1} << vars.size());
  for (size_t idx = 0; idx < table.size(); idx++) {
    uint32_t ia = 0, ib = 0;
    for (size_t i = 0; i < pa.size(); i++) {
      if ((idx >> pa[i]) & 1) ia |= uint32_t{1} << i;
    }
    for (size_t i = 0; i < pb.size(); i++) {
      if ((idx >> pb[i]) & 1) ib |= uint32_t{1} << i;
    }
    table[idx] = op(a.table()[ia] != 0, b.table()[ib] != 0) ? 1 : 0;
  }
  return BoolFun::from_table(std::move(vars), std::move(table));
}

BoolFun BoolFun::operator^(const BoolFun &other) const {
  return merge_apply(*this, other, [](bool x, bool y) { return x != y; });
}

BoolFun BoolFun::operator&(const BoolFun &other) const {
  return merge_apply(*this, other, [](bool x, bool y) { return x && y; });
}

BoolFun BoolFun::operator^(bool c) const {
  if (!c) return *this;
  BoolFun out = *this;
  for (auto &v : out.table_) v ^= 1;
  return out;
}

bool BoolFun::operator==(const BoolFun &other) const {
  return vars_ == other.vars_ && table_ == other.table_;
}

bool BoolFun::is_affine() const {
  // Affine iff f(x) xor f(x^ei) is constant in x for every i; equivalently
  // f(x) = c xor sum of coordinate masks. Check by reconstruction.
  AffineForm cand(table_[0] != 0);
  for (size_t i = 0; i < vars_.size(); i++) {
    if (table_[size_t{1} << i] != table_[0]) {
      cand.toggle(vars_[i]);
    }
  }
  BoolFun rebuilt = from_affine(cand);
  return rebuilt.aligned_to(vars_).table() == table_;
}

AffineForm BoolFun::to_affine() const {
  AffineForm cand(table_[0] != 0);
  for (size_t i = 0; i < vars_.size(); i++) {
    if (table_[size_t{1} << i] != table_[0]) {
      cand.toggle(vars_[i]);
    }
  }
  require(from_affine(cand).aligned_to(vars_).table() == table_,
          "BoolFun::to_affine: function is not affine");
  return cand;
}

BoolFun BoolFun::aligned_to(const std::vector<VarId> &vars) const {
  std::vector<int> pos;
  for (VarId v : vars_) {
    auto it = std::lower_bound(vars.begin(), vars.end(), v);
    require(it != vars.end() && *it == v, "BoolFun::aligned_to: missing variable");
    pos.push_back(static_cast<int>(it - vars.begin()));
  }
  BoolFun out;
  out.vars_ = vars;
  out.table_.assign(size_t{1} << vars.size(), 0);
  for (size_t idx = 0; idx < out.table_.size(); idx++) {
    uint32_t sub = 0;
    for (size_t i = 0; i < pos.size(); i++) {
      if ((idx >> pos[i]) & 1) sub |= uint32_t{1} << i;
    }
    out.table_[idx] = table_[sub];
  }
  return out;
}

bool BoolFun::xor_separate(BoolFun *alice_part, BoolFun *bob_part) const {
  std::vector<VarId> av, bv;
  for (VarId v : vars_) {
    (var_held_by_alice(v) ? av : bv).push_back(v);
  }
  // Candidate parts from slices through the all-zeros assignment.
  auto slice = [this](const std::vector<VarId> &keep) {
    std::vector<int> pos;
    for (VarId v : keep) {
      pos.push_back(static_cast<int>(std::lower_bound(vars_.begin(), vars_.end(), v) - vars_.begin()));
    }
    std::vector<uint8_t> table(size_t{1} << keep.size());
    for (size_t idx = 0; idx < table.size(); idx++) {
      uint32_t full = 0;
      for (size_t i = 0; i < pos.size(); i++) {
        if ((idx >> i) & 1) full |= uint32_t{1} << pos[i];
      }
      table[idx] = table_[full];
    }
    return BoolFun::from_table(keep, std::move(table));
  };
  BoolFun ga = slice(av);                    // f(a, 0)
  BoolFun gb = slice(bv) ^ (table_[0] != 0); // f(0, b) xor f(0, 0)
  BoolFun rebuilt = ga ^ gb;
  if (!(rebuilt.aligned_to(vars_).table() == table_)) {
    return false;
  }
  if (alice_part) *alice_part = ga;
  if (bob_part) *bob_part = gb;
  return true;
}

std::string BoolFun::str() const {
  std::string out = "f(";
  for (size_t i = 0; i < vars_.size(); i++) {
    if (i) out += ",";
    out += var_name(vars_[i]);
  }
  out += ")=";
  for (uint8_t b : table_) out += b ? '1' : '0';
  return out;
}

bool FrameForm::is_zero() const {
  if (is_affine()) return std::get<AffineForm>(value_).is_zero();
  return std::get<BoolFun>(value_).is_zero();
}

const AffineForm &FrameForm::affine() const {
  require(is_affine(), "FrameForm: expected an affine form");
  return std::get<AffineForm>(value_);
}

BoolFun FrameForm::as_boolfun() const {
  if (is_affine()) return BoolFun::from_affine(std::get<AffineForm>(value_));
  return std::get<BoolFun>(value_);
}

FrameForm FrameForm::operator^(const FrameForm &other) const {
  if (is_affine() && other.is_affine()) {
    return FrameForm(std::get<AffineForm>(value_) ^ std::get<AffineForm>(other.value_));
  }
  return FrameForm(as_boolfun() ^ other.as_boolfun());
}

FrameForm &FrameForm::operator^=(const FrameForm &other) {
  *this = *this ^ other;
  return *this;
}

FrameForm FrameForm::operator&(const FrameForm &other) const {
  if (is_zero() || other.is_zero()) return FrameForm();
  return FrameForm(as_boolfun() & other.as_boolfun());
}

FrameForm FrameForm::operator^(bool c) const {
  if (!c) return *this;
  if (is_affine()) {
    AffineForm f = std::get<AffineForm>(value_);
    f.flip_constant();
    return FrameForm(f);
  }
  return FrameForm(std::get<BoolFun>(value_) ^ true);
}

bool FrameForm::eval(const Assignment &a) const {
  if (is_affine()) return std::get<AffineForm>(value_).eval(a);
  return std::get<BoolFun>(value_).eval(a);
}

std::string FrameForm::str() const {
  if (is_affine()) return std::get<AffineForm>(value_).str();
  return std::get<BoolFun>(value_).str();
}

}  // namespace magicomm
