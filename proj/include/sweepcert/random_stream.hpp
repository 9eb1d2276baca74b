// Copyright 2026 The sweepcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace sweepcert {

// Counter-based splittable random stream (SplitMix64 core).
//
// The sequence is a pure function of (seed, stream_index): the same pair gives
// the same draws on every platform and at every worker count.  Distinct
// stream indices give statistically independent streams, and substream()
// derives child streams by hashing, so per-trajectory streams never depend on
// how work was partitioned across threads.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_index = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  std::uint64_t next_u64();

  // Uniform on [0, 1), 53-bit resolution.
  double uniform();

  // Uniform on (0, 1]; safe to feed into logs and negative powers.
  double uniform_pos();

  // Standard normal via the polar method; one spare value is cached.
  double normal();

  // Child stream derived from (seed, stream_index, child); independent of the
  // parent's consumption state.
  RandomStream substream(std::uint64_t child) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_index_;
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace sweepcert
