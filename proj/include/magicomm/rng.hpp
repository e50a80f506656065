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

#ifndef MAGICOMM_RNG_HPP
#define MAGICOMM_RNG_HPP

#include <cstdint>

namespace magicomm {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Counter-based generator. Streams derived by index are independent of the
// order in which they are consumed, so parallel sweeps stay reproducible.
class SplitRng {
 public:
  explicit SplitRng(uint64_t seed) : key_(splitmix64(seed ^ 0xA02BDBF7BB3C0A7ULL)) {}

  SplitRng derive(uint64_t stream) const {
    SplitRng child(0);
    child.key_ = splitmix64(key_ ^ splitmix64(stream * 0x9E3779B97F4A7C15ULL + 1));
    child.counter_ = 0;
    return child;
  }

  uint64_t next() { return splitmix64(key_ + 0xD1B54A32D192ED03ULL * ++counter_); }

  bool bit() { return (next() & 1) != 0; }

  // Uniform in [0, n).
  uint64_t below(uint64_t n) { return next() % n; }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace magicomm

#endif
