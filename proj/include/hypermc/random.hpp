// Copyright 2026 The hypermc Authors.
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
#include <random>

namespace hypermc {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent substreams of one generated instance.
enum class Stream : std::uint64_t {
  kClusters = 1,
  kVectors = 2,
  kObserved = 3,
  kDegrade = 4,
  kSolver = 5,
  kLayerBase = 100,  // layer d uses kLayerBase + d
};

// (master, trial) fully determines every random artifact of a trial.
struct GenSeed {
  std::uint64_t master = 0;
  std::uint64_t trial = 0;

  std::uint64_t derive(std::uint64_t tag) const {
    return splitmix64(splitmix64(master) ^ splitmix64(trial * 0x632be59bd9b4e019ULL + 1) ^
                      splitmix64(tag + 0x2545f4914f6cdd1dULL));
  }
  std::uint64_t derive(Stream s) const { return derive(static_cast<std::uint64_t>(s)); }
  std::uint64_t layer(int d) const {
    return derive(static_cast<std::uint64_t>(Stream::kLayerBase) + static_cast<std::uint64_t>(d));
  }
};

}  // namespace hypermc
