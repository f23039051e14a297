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

// Grammatical validity of generated Java methods.
//
// A bare method is not a Java compilation unit, so snippets are embedded in
// a synthetic class shell before parsing. The shell on its own parses
// cleanly; any error node in the wrapped tree is the snippet's.

#ifndef REPAIRLENS_SYNTAX_H_
#define REPAIRLENS_SYNTAX_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "repairlens/parser.h"

namespace repairlens {

inline constexpr std::string_view kWrapperPrefix = "class __W { ";
inline constexpr std::string_view kWrapperSuffix = " }";

struct SyntaxVerdict {
  bool valid = false;
  std::size_t error_count = 0;
  std::vector<ByteSpan> error_spans;  // offsets into the checked snippet
  bool wrapped = false;
  bool empty_input = false;  // empty or whitespace-only snippet

  bool operator==(const SyntaxVerdict&) const = default;
};

std::string WrapMethod(std::string_view code);

struct SyntaxOptions {
  bool wrap = true;
};

// Counts ERROR and MISSING nodes. Empty or whitespace-only code is invalid
// with a single error spanning the input. A snippet whose braces close the
// wrapper early and open further top-level declarations is also charged
// one error. Parser failures propagate as EnvironmentError.
SyntaxVerdict CheckSyntax(std::string_view code, JavaParser& parser,
                          const SyntaxOptions& options = {});

// 100 * valid / total. Throws InputError on an empty list.
double SyntaxValidity(std::span<const SyntaxVerdict> verdicts);

}  // namespace repairlens

#endif  // REPAIRLENS_SYNTAX_H_
