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

#include "repairlens/sampling.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

namespace repairlens {

namespace {

// Uniform integer in [0, bound) without modulo bias.
std::uint64_t BoundedDraw(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound);
  std::uint64_t r = gen();
  while (r >= limit) r = gen();
  return r % bound;
}

}  // namespace

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t DeriveSampleKey(std::uint64_t seed, SampleStream stream,
                              std::uint64_t step) {
  std::uint64_t key = SplitMix64(seed);
  key = SplitMix64(key ^ static_cast<std::uint64_t>(stream));
  return SplitMix64(key ^ step);
}

std::vector<std::size_t> SampleIndices(std::size_t n, std::size_t k,
                                       std::uint64_t key) {
  k = std::min(k, n);
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::mt19937_64 gen(key);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(BoundedDraw(gen, n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace repairlens
