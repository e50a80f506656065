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

#ifndef MAGICOMM_COMMON_HPP
#define MAGICOMM_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace magicomm {

using cplx = std::complex<double>;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Thrown when an input lies outside a partial function's support, e.g. a
// post-selection branch with probability zero.
class UnsupportedInput : public Error {
 public:
  explicit UnsupportedInput(const std::string &msg) : Error(msg) {}
};

inline void require(bool cond, const std::string &msg) {
  if (!cond) {
    throw Error(msg);
  }
}

inline bool is_power_of_two(uint64_t v) {
  return v != 0 && (v & (v - 1)) == 0;
}

inline int int_log2(uint64_t v) {
  int k = 0;
  while ((uint64_t{1} << k) < v) {
    k++;
  }
  return k;
}

}  // namespace magicomm

#endif
