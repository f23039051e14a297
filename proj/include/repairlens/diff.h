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

// Unified diffs between two code texts.

#ifndef REPAIRLENS_DIFF_H_
#define REPAIRLENS_DIFF_H_

#include <string>
#include <string_view>

namespace repairlens {

enum class DiffUnit {
  kToken,  // one whitespace token per diff line
  kLine,
};

struct DiffOptions {
  DiffUnit unit = DiffUnit::kToken;
  std::size_t context = 3;
};

// Standard unified-diff text with `---`/`+++` headers and `@@` hunks.
// Identical inputs (in the chosen unit) give an empty string.
std::string UnifiedDiff(std::string_view from, std::string_view to,
                        std::string_view from_label, std::string_view to_label,
                        const DiffOptions& options = {});

}  // namespace repairlens

#endif  // REPAIRLENS_DIFF_H_
