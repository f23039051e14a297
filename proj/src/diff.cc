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

#include "repairlens/diff.h"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "repairlens/io.h"
#include "repairlens/text.h"

namespace repairlens {

namespace {

enum class OpKind { kEqual, kDelete, kInsert };

struct Op {
  OpKind kind;
  std::size_t from;  // index into `a` (kEqual, kDelete)
  std::size_t to;    // index into `b` (kEqual, kInsert)
};

std::vector<std::string> Units(std::string_view text, DiffUnit unit) {
  std::vector<std::string> out;
  if (unit == DiffUnit::kLine) {
    out = SplitLines(text);
  } else {
    for (std::string_view token : WhitespaceTokens(text)) out.emplace_back(token);
  }
  return out;
}

// LCS edit script; deletions are emitted before insertions at each gap.
std::vector<Op> EditScript(const std::vector<std::string>& a,
                           const std::vector<std::string>& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  // lcs[i][j] = LCS length of a[i..] and b[j..].
  std::vector<std::uint32_t> lcs((n + 1) * (m + 1), 0);
  const auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& {
    return lcs[i * (m + 1) + j];
  };
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      at(i, j) = a[i] == b[j] ? at(i + 1, j + 1) + 1
                              : std::max(at(i + 1, j), at(i, j + 1));
    }
  }
  std::vector<Op> ops;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && a[i] == b[j]) {
      ops.push_back({OpKind::kEqual, i++, j++});
    } else if (i < n && (j == m || at(i + 1, j) >= at(i, j + 1))) {
      ops.push_back({OpKind::kDelete, i++, j});
    } else {
      ops.push_back({OpKind::kInsert, i, j++});
    }
  }
  return ops;
}

std::string Range(std::size_t start, std::size_t count) {
  // GNU convention: an empty range names the line before it.
  const std::size_t first = count == 0 ? start : start + 1;
  if (count == 1) return std::to_string(first);
  return std::to_string(first) + "," + std::to_string(count);
}

}  // namespace

std::string UnifiedDiff(std::string_view from, std::string_view to,
                        std::string_view from_label, std::string_view to_label,
                        const DiffOptions& options) {
  const std::vector<std::string> a = Units(from, options.unit);
  const std::vector<std::string> b = Units(to, options.unit);
  const std::vector<Op> ops = EditScript(a, b);

  std::vector<std::size_t> changes;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (ops[k].kind != OpKind::kEqual) changes.push_back(k);
  }
  if (changes.empty()) return "";

  std::string out;
  out += "--- " + std::string(from_label) + "\n";
  out += "+++ " + std::string(to_label) + "\n";

  const std::size_t ctx = options.context;
  std::size_t c = 0;
  while (c < changes.size()) {
    // Grow the hunk while the next change is within 2*ctx equal ops.
    std::size_t last = c;
    while (last + 1 < changes.size() && changes[last + 1] - changes[last] <= 2 * ctx + 1) {
      ++last;
    }
    const std::size_t begin = changes[c] >= ctx ? changes[c] - ctx : 0;
    const std::size_t end = std::min(ops.size(), changes[last] + ctx + 1);

    std::size_t from_count = 0;
    std::size_t to_count = 0;
    for (std::size_t k = begin; k < end; ++k) {
      if (ops[k].kind != OpKind::kInsert) ++from_count;
      if (ops[k].kind != OpKind::kDelete) ++to_count;
    }
    out += "@@ -" + Range(ops[begin].from, from_count) + " +" +
           Range(ops[begin].to, to_count) + " @@\n";
    for (std::size_t k = begin; k < end; ++k) {
      switch (ops[k].kind) {
        case OpKind::kEqual:
          out += " " + a[ops[k].from] + "\n";
          break;
        case OpKind::kDelete:
          out += "-" + a[ops[k].from] + "\n";
          break;
        case OpKind::kInsert:
          out += "+" + b[ops[k].to] + "\n";
          break;
      }
    }
    c = last + 1;
  }
  return out;
}

}  // namespace repairlens
