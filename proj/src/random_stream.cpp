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

#include "sweepcert/random_stream.hpp"

#include <cmath>

namespace sweepcert {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

// Stafford variant 13 finalizer, as used by SplitMix64.
std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_index_(stream_index) {
  // Decorrelate seed and stream index before they meet; a plain sum would make
  // (seed+1, stream) collide with (seed, stream+const).
  state_ = mix64(mix64(seed + kGamma) ^ mix64(stream_index * 0xda942042e4dd58b5ULL + kGamma));
}

std::uint64_t RandomStream::next_u64() {
  state_ += kGamma;
  return mix64(state_);
}

double RandomStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform_pos() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RandomStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

RandomStream RandomStream::substream(std::uint64_t child) const {
  return RandomStream(seed_, mix64(stream_index_ + kGamma * (child + 1)));
}

}  // namespace sweepcert
