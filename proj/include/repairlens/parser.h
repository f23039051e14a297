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

// Parser contract for Java source.
//
// A binding turns text into a fully materialized, language-neutral syntax
// tree. Parsing is total: every input, garbage included, yields a tree, with
// unparseable regions marked by error nodes and grammar-inserted recovery
// tokens marked as missing. Bindings must be deterministic. Instances are
// not required to be thread-safe; use one parser per worker.

#ifndef REPAIRLENS_PARSER_H_
#define REPAIRLENS_PARSER_H_

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace repairlens {

// Half-open byte range [begin, end).
struct ByteSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool operator==(const ByteSpan&) const = default;
};

struct SyntaxNode {
  std::string kind;   // grammar symbol, e.g. "method_declaration", "ERROR"
  std::string field;  // field name within the parent, empty if none
  ByteSpan span;
  bool named = false;
  bool error = false;    // an ERROR node wrapping unparseable input
  bool missing = false;  // a zero-width token inserted during recovery
  std::vector<SyntaxNode> children;

  bool operator==(const SyntaxNode&) const = default;
};

struct SyntaxTree {
  std::string text;  // the parsed input; spans index into it
  SyntaxNode root;

  std::string_view Slice(const SyntaxNode& node) const {
    return std::string_view(text).substr(node.span.begin, node.span.size());
  }
};

class JavaParser {
 public:
  virtual ~JavaParser() = default;

  virtual std::string_view binding_name() const = 0;
  virtual SyntaxTree Parse(std::string_view text) = 0;
};

using ParserFactory = std::function<std::unique_ptr<JavaParser>()>;

inline constexpr std::string_view kTreeSitterBinding = "tree-sitter-java";

// Bindings compiled into this build.
std::vector<std::string> AvailableBindings();

// Throws EnvironmentError when `binding` is not compiled in or its grammar
// cannot be loaded by the runtime.
std::unique_ptr<JavaParser> MakeParser(std::string_view binding = kTreeSitterBinding);

// A factory that creates fresh `binding` parsers. Validates eagerly.
ParserFactory MakeParserFactory(std::string_view binding = kTreeSitterBinding);

// Pre-order walk; `visit` returns false to skip a node's children.
void WalkTree(const SyntaxNode& root,
              const std::function<bool(const SyntaxNode&)>& visit);

}  // namespace repairlens

#endif  // REPAIRLENS_PARSER_H_
