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

// Levenshtein distance over arbitrary sequences.

#ifndef REPAIRLENS_EDIT_DISTANCE_H_
#define REPAIRLENS_EDIT_DISTANCE_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace repairlens {

namespace internal {

// Bit-parallel edit distance (Myers, Hyyro's global variant). `pattern`
// must hold 1..64 elements.
template <typename T>
std::size_t BitParallelDistance(std::span<const T> pattern,
                                std::span<const T> text) {
  const std::size_t m = pattern.size();
  std::unordered_map<T, std::uint64_t> peq;
  for (std::size_t i = 0; i < m; ++i) peq[pattern[i]] |= std::uint64_t{1} << i;

  const std::uint64_t last = std::uint64_t{1} << (m - 1);
  std::uint64_t pv = ~std::uint64_t{0};
  std::uint64_t mv = 0;
  std::size_t score = m;
  for (const T& c : text) {
    const auto it = peq.find(c);
    const std::uint64_t eq = it == peq.end() ? 0 : it->second;
    const std::uint64_t xv = eq | mv;
    const std::uint64_t xh = (((eq & pv) + pv) ^ pv) | eq;
    std::uint64_t ph = mv | ~(xh | pv);
    std::uint64_t mh = pv & xh;
    if (ph & last) ++score;
    if (mh & last) --score;
    ph = (ph << 1) | 1;
    mh <<= 1;
    pv = mh | ~(xv | ph);
    mv = ph & xv;
  }
  return score;
}

// Two-row dynamic programme; used when both sequences exceed 64 elements.
template <typename T>
std::size_t RowDistance(std::span<const T> a, std::span<const T> b) {
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> cur(b.size() + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace internal

// Minimum number of element insertions, deletions and substitutions
// turning `a` into `b`.
template <typename T>
std::size_t SequenceLevenshtein(std::span<const T> a, std::span<const T> b) {
  if (a.size() > b.size()) std::swap(a, b);
  if (a.empty()) return b.size();
  if (a.size() <= 64) return internal::BitParallelDistance(a, b);
  return internal::RowDistance(a, b);
}

// Character (code point) Levenshtein distance between UTF-8 texts.
std::size_t Levenshtein(std::string_view a, std::string_view b);

// Distance between the whitespace-token sequences of `a` and `b`.
std::size_t TokenLevenshtein(std::string_view a, std::string_view b);

}  // namespace repairlens

#endif  // REPAIRLENS_EDIT_DISTANCE_H_
