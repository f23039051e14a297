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

// Reference binding: tree-sitter runtime with the tree-sitter-java grammar.

#include <tree_sitter/api.h>

#include <memory>
#include <string>
#include <utility>

#include "repairlens/errors.h"
#include "repairlens/parser.h"

extern "C" const TSLanguage* tree_sitter_java(void);

namespace repairlens {

namespace {

struct TsParserDeleter {
  void operator()(TSParser* p) const { ts_parser_delete(p); }
};
struct TsTreeDeleter {
  void operator()(TSTree* t) const { ts_tree_delete(t); }
};

class TreeSitterJavaParser final : public JavaParser {
 public:
  TreeSitterJavaParser() : parser_(ts_parser_new()) {
    if (!parser_) throw EnvironmentError("tree-sitter: cannot allocate parser");
    const TSLanguage* language = tree_sitter_java();
    if (language == nullptr || !ts_parser_set_language(parser_.get(), language)) {
      throw EnvironmentError(
          "tree-sitter: Java grammar ABI is incompatible with the runtime");
    }
  }

  std::string_view binding_name() const override { return kTreeSitterBinding; }

  SyntaxTree Parse(std::string_view text) override {
    SyntaxTree tree;
    tree.text = std::string(text);
    std::unique_ptr<TSTree, TsTreeDeleter> ts_tree(ts_parser_parse_string(
        parser_.get(), nullptr, tree.text.data(),
        static_cast<uint32_t>(tree.text.size())));
    if (!ts_tree) throw EnvironmentError("tree-sitter: parse aborted");
    TSTreeCursor cursor = ts_tree_cursor_new(ts_tree_root_node(ts_tree.get()));
    tree.root = Convert(&cursor);
    ts_tree_cursor_delete(&cursor);
    ts_parser_reset(parser_.get());
    return tree;
  }

 private:
  // Copies the subtree under the cursor. Iterative: error-recovery trees
  // over garbage input can nest deeply.
  static SyntaxNode Convert(TSTreeCursor* cursor) {
    SyntaxNode root = MakeNode(cursor);
    std::vector<SyntaxNode*> stack{&root};
    bool descend = true;
    while (!stack.empty()) {
      if (descend && ts_tree_cursor_goto_first_child(cursor)) {
        SyntaxNode* parent = stack.back();
        parent->children.push_back(MakeNode(cursor));
        stack.push_back(&parent->children.back());
        continue;
      }
      // Finished the current node; move to its next sibling or pop.
      stack.pop_back();
      if (stack.empty()) break;
      if (ts_tree_cursor_goto_next_sibling(cursor)) {
        SyntaxNode* parent = stack.back();
        parent->children.push_back(MakeNode(cursor));
        stack.push_back(&parent->children.back());
        descend = true;
      } else {
        ts_tree_cursor_goto_parent(cursor);
        descend = false;
      }
    }
    return root;
  }

  static SyntaxNode MakeNode(TSTreeCursor* cursor) {
    const TSNode node = ts_tree_cursor_current_node(cursor);
    SyntaxNode out;
    out.kind = ts_node_type(node);
    if (const char* field = ts_tree_cursor_current_field_name(cursor)) {
      out.field = field;
    }
    out.span = {ts_node_start_byte(node), ts_node_end_byte(node)};
    out.named = ts_node_is_named(node);
    out.error = ts_node_is_error(node);
    out.missing = ts_node_is_missing(node);
    return out;
  }

  std::unique_ptr<TSParser, TsParserDeleter> parser_;
};

}  // namespace

std::vector<std::string> AvailableBindings() {
  return {std::string(kTreeSitterBinding)};
}

std::unique_ptr<JavaParser> MakeParser(std::string_view binding) {
  if (binding == kTreeSitterBinding) {
    return std::make_unique<TreeSitterJavaParser>();
  }
  throw EnvironmentError("grammar binding '" + std::string(binding) +
                         "' is not available in this build");
}

ParserFactory MakeParserFactory(std::string_view binding) {
  MakeParser(binding);
  return [name = std::string(binding)] { return MakeParser(name); };
}

void WalkTree(const SyntaxNode& root,
              const std::function<bool(const SyntaxNode&)>& visit) {
  std::vector<const SyntaxNode*> stack{&root};
  while (!stack.empty()) {
    const SyntaxNode* node = stack.back();
    stack.pop_back();
    if (!visit(*node)) continue;
    for (auto it = node->children.rbegin(); it != node->children.rend(); ++it) {
      stack.push_back(&*it);
    }
  }
}

}  // namespace repairlens
