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

#include "repairlens/syntax.h"

#include <algorithm>

#include "repairlens/errors.h"
#include "repairlens/text.h"

namespace repairlens {

namespace {

// True when the wrapped tree is a single class declaration covering the
// whole input, i.e. the snippet did not close the shell early.
bool WrapperIntact(const SyntaxTree& tree) {
  const SyntaxNode* decl = nullptr;
  for (const SyntaxNode& child : tree.root.children) {
    if (!child.named) continue;
    if (child.kind == "line_comment" || child.kind == "block_comment") continue;
    if (decl != nullptr) return false;
    decl = &child;
  }
  return decl != nullptr && decl->kind == "class_declaration" &&
         decl->span.begin == 0 && decl->span.end == tree.text.size();
}

}  // namespace

std::string WrapMethod(std::string_view code) {
  std::string out;
  out.reserve(kWrapperPrefix.size() + code.size() + kWrapperSuffix.size());
  out.append(kWrapperPrefix);
  out.append(code);
  out.append(kWrapperSuffix);
  return out;
}

SyntaxVerdict CheckSyntax(std::string_view code, JavaParser& parser,
                          const SyntaxOptions& options) {
  SyntaxVerdict verdict;
  verdict.wrapped = options.wrap;
  if (Trim(code).empty()) {
    verdict.empty_input = true;
    verdict.error_count = 1;
    verdict.error_spans.push_back({0, code.size()});
    return verdict;
  }

  const std::size_t offset = options.wrap ? kWrapperPrefix.size() : 0;
  const SyntaxTree tree = parser.Parse(options.wrap ? WrapMethod(code) : std::string(code));
  const auto to_snippet = [&](ByteSpan span) {
    const auto clamp = [&](std::size_t pos) {
      return std::min(pos >= offset ? pos - offset : 0, code.size());
    };
    return ByteSpan{clamp(span.begin), clamp(span.end)};
  };

  WalkTree(tree.root, [&](const SyntaxNode& node) {
    if (node.error || node.missing) {
      ++verdict.error_count;
      verdict.error_spans.push_back(to_snippet(node.span));
    }
    return true;
  });
  if (options.wrap && verdict.error_count == 0 && !WrapperIntact(tree)) {
    ++verdict.error_count;
    verdict.error_spans.push_back({0, code.size()});
  }
  verdict.valid = verdict.error_count == 0;
  return verdict;
}

double SyntaxValidity(std::span<const SyntaxVerdict> verdicts) {
  if (verdicts.empty()) throw InputError("syntax validity of an empty set is undefined");
  const auto valid = std::count_if(verdicts.begin(), verdicts.end(),
                                   [](const SyntaxVerdict& v) { return v.valid; });
  return 100.0 * static_cast<double>(valid) / static_cast<double>(verdicts.size());
}

}  // namespace repairlens
