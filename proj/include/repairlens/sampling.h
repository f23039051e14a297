// Copyright 2026 The repairlens Authors.
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

// Deterministic seeded subset selection. Everything here is defined on top
// of std::mt19937_64, whose output sequence is fixed by the standard, plus
// hand-rolled bounded draws, so a sample depends only on its inputs and not
// on the standard library vendor.

#ifndef REPAIRLENS_SAMPLING_H_
#define REPAIRLENS_SAMPLING_H_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace repairlens {

// Independent streams for the same user seed.
enum class SampleStream : std::uint64_t {
  kValidation = 1,
  kCases = 2,
};

std::uint64_t SplitMix64(std::uint64_t x);

// Mixes (seed, stream, step) into one 64-bit generator key.
std::uint64_t DeriveSampleKey(std::uint64_t seed, SampleStream stream,
                              std::uint64_t step);

// min(k, n) distinct indices in [0, n), returned in ascending order.
// Partial Fisher-Yates driven by mt19937_64(key) with rejection-sampled
// bounded draws.
std::vector<std::size_t> SampleIndices(std::size_t n, std::size_t k,
                                       std::uint64_t key);

}  // namespace repairlens

#endif  // REPAIRLENS_SAMPLING_H_
