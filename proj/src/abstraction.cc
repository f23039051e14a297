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

#include "repairlens/abstraction.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <unordered_set>

#include "repairlens/text.h"

namespace repairlens {

namespace {

const std::unordered_set<std::string_view>& Keywords() {
  static const std::unordered_set<std::string_view> kWords = {
      "abstract", "assert",     "boolean",   "break",     "byte",
      "case",     "catch",      "char",      "class",     "const",
      "continue", "default",    "do",        "double",    "else",
      "enum",     "extends",    "final",     "finally",   "float",
      "for",      "goto",       "if",        "implements", "import",
      "instanceof", "int",      "interface", "long",      "native",
      "new",      "package",    "private",   "protected", "public",
      "return",   "short",      "static",    "strictfp",  "super",
      "switch",   "synchronized", "this",    "throw",     "throws",
      "transient", "try",       "void",      "volatile",  "while",
      "true",     "false",      "null",
      // Restricted identifiers and contextual keywords.
      "var",      "yield",      "record",    "sealed",    "permits",
      "_"};
  return kWords;
}

const std::unordered_set<std::string_view>& JavaLangNames() {
  static const std::unordered_set<std::string_view> kNames = {
      "Object", "String", "StringBuilder", "StringBuffer", "CharSequence",
      "Integer", "Long", "Short", "Byte", "Double", "Float", "Boolean",
      "Character", "Number", "Void", "Math", "StrictMath", "System",
      "Runtime", "Process", "Thread", "ThreadLocal", "ThreadGroup",
      "Runnable", "Class", "ClassLoader", "Enum", "Record", "Iterable",
      "Comparable", "AutoCloseable", "Cloneable", "Appendable", "Readable",
      "Package", "StackTraceElement",
      "Throwable", "Exception", "Error", "RuntimeException",
      "IllegalArgumentException", "IllegalStateException",
      "NullPointerException", "UnsupportedOperationException",
      "IndexOutOfBoundsException", "ArrayIndexOutOfBoundsException",
      "StringIndexOutOfBoundsException", "ClassCastException",
      "ArithmeticException", "NumberFormatException", "InterruptedException",
      "CloneNotSupportedException", "ClassNotFoundException",
      "SecurityException", "NegativeArraySizeException", "ArrayStoreException",
      "ReflectiveOperationException", "NoSuchFieldException",
      "NoSuchMethodException", "InstantiationException",
      "IllegalAccessException", "AssertionError", "OutOfMemoryError",
      "StackOverflowError", "LinkageError", "ExceptionInInitializerError",
      "NoClassDefFoundError", "VirtualMachineError", "InternalError",
      "Override", "Deprecated", "SuppressWarnings", "SafeVarargs",
      "FunctionalInterface"};
  return kNames;
}

bool IsUpperCamel(std::string_view name) {
  if (name.empty() || name[0] < 'A' || name[0] > 'Z') return false;
  return std::any_of(name.begin(), name.end(),
                     [](char c) { return c >= 'a' && c <= 'z'; });
}

bool IsDeclarationWithTypeName(std::string_view kind) {
  return kind == "class_declaration" || kind == "interface_declaration" ||
         kind == "enum_declaration" || kind == "record_declaration" ||
         kind == "annotation_type_declaration" ||
         kind == "constructor_declaration" ||
         kind == "compact_constructor_declaration";
}

// Category of an `identifier` node from its parent and field.
IdentifierCategory ClassifyIdentifier(const SyntaxNode& node,
                                      const SyntaxNode* parent,
                                      std::string_view name) {
  if (parent == nullptr) return IdentifierCategory::kVariable;
  const std::string_view kind = parent->kind;
  const std::string_view field = node.field;
  if ((kind == "method_declaration" || kind == "method_invocation") &&
      field == "name") {
    return IdentifierCategory::kMethod;
  }
  if (IsDeclarationWithTypeName(kind) && field == "name") {
    return IdentifierCategory::kType;
  }
  if ((kind == "marker_annotation" || kind == "annotation") && field == "name") {
    return IdentifierCategory::kType;
  }
  if (kind == "scoped_identifier") return IdentifierCategory::kType;
  if (kind == "method_reference") {
    // `Receiver::name`: the member comes after the `::` token.
    bool after_colons = false;
    for (const SyntaxNode& child : parent->children) {
      if (&child == &node) break;
      if (child.kind == "::") after_colons = true;
    }
    if (after_colons) return IdentifierCategory::kMethod;
    return IsUpperCamel(name) ? IdentifierCategory::kType
                              : IdentifierCategory::kVariable;
  }
  if ((kind == "method_invocation" || kind == "field_access") &&
      field == "object") {
    return IsUpperCamel(name) ? IdentifierCategory::kType
                              : IdentifierCategory::kVariable;
  }
  return IdentifierCategory::kVariable;
}

struct Occurrence {
  ByteSpan span;  // into the snippet
  IdentifierCategory category;
  std::string name;
};

std::vector<Occurrence> CollectIdentifiers(const SyntaxTree& tree,
                                           std::size_t offset,
                                           std::size_t snippet_size) {
  std::vector<Occurrence> found;
  struct Frame {
    const SyntaxNode* node;
    const SyntaxNode* parent;
  };
  std::vector<Frame> stack{{&tree.root, nullptr}};
  while (!stack.empty()) {
    const Frame frame = stack.back();
    stack.pop_back();
    const SyntaxNode& node = *frame.node;
    const bool is_identifier = node.kind == "identifier";
    const bool is_type = node.kind == "type_identifier";
    if ((is_identifier || is_type) && node.span.begin >= offset &&
        node.span.end <= offset + snippet_size) {
      const std::string name(tree.Slice(node));
      IdentifierCategory category =
          is_type ? IdentifierCategory::kType
                  : ClassifyIdentifier(node, frame.parent, name);
      bool keep_concrete = IsJavaKeyword(name);
      if (const auto placeholder = ParsePlaceholder(name)) {
        category = placeholder->category;
      } else if (category == IdentifierCategory::kType && IsJavaLangName(name)) {
        keep_concrete = true;
      }
      if (!keep_concrete) {
        found.push_back({{node.span.begin - offset, node.span.end - offset},
                         category,
                         name});
      }
    }
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
      stack.push_back({&*it, &node});
    }
  }
  std::sort(found.begin(), found.end(), [](const Occurrence& a, const Occurrence& b) {
    return a.span.begin < b.span.begin;
  });
  return found;
}

bool IsIdentStart(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == '$' || c >= 0x80;
}

bool IsIdentPart(unsigned char c) {
  return IsIdentStart(c) || (c >= '0' && c <= '9');
}

struct LexedIdentifier {
  ByteSpan span;
  std::string_view text;
};

// Identifiers of `code`, skipping comments, string/char literals and numbers.
std::vector<LexedIdentifier> LexIdentifiers(std::string_view code) {
  std::vector<LexedIdentifier> out;
  std::size_t i = 0;
  const std::size_t n = code.size();
  const auto at = [&](std::size_t k) -> unsigned char {
    return k < n ? static_cast<unsigned char>(code[k]) : 0;
  };
  while (i < n) {
    const unsigned char c = at(i);
    if (c == '/' && at(i + 1) == '/') {
      while (i < n && code[i] != '\n') ++i;
    } else if (c == '/' && at(i + 1) == '*') {
      const std::size_t end = code.find("*/", i + 2);
      i = end == std::string_view::npos ? n : end + 2;
    } else if (c == '"' && at(i + 1) == '"' && at(i + 2) == '"') {
      const std::size_t end = code.find("\"\"\"", i + 3);
      i = end == std::string_view::npos ? n : end + 3;
    } else if (c == '"' || c == '\'') {
      ++i;
      while (i < n && static_cast<unsigned char>(code[i]) != c && code[i] != '\n') {
        i += code[i] == '\\' ? 2 : 1;
      }
      ++i;
    } else if ((c >= '0' && c <= '9') ||
               (c == '.' && at(i + 1) >= '0' && at(i + 1) <= '9')) {
      ++i;
      while (i < n) {
        const unsigned char d = at(i);
        if (IsIdentPart(d) || d == '.') {
          ++i;
        } else if ((d == '+' || d == '-') &&
                   (at(i - 1) == 'e' || at(i - 1) == 'E' || at(i - 1) == 'p' ||
                    at(i - 1) == 'P')) {
          ++i;
        } else {
          break;
        }
      }
    } else if (IsIdentStart(c)) {
      const std::size_t start = i;
      while (i < n && IsIdentPart(at(i))) ++i;
      out.push_back({{start, i}, code.substr(start, i - start)});
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace

std::string_view PlaceholderPrefix(IdentifierCategory category) {
  switch (category) {
    case IdentifierCategory::kVariable:
      return "VAR";
    case IdentifierCategory::kMethod:
      return "METHOD";
    case IdentifierCategory::kType:
      return "TYPE";
  }
  return "VAR";
}

std::string_view CategoryName(IdentifierCategory category) {
  switch (category) {
    case IdentifierCategory::kVariable:
      return "variable";
    case IdentifierCategory::kMethod:
      return "method";
    case IdentifierCategory::kType:
      return "type";
  }
  return "variable";
}

std::optional<Placeholder> ParsePlaceholder(std::string_view identifier) {
  for (IdentifierCategory category : kAllCategories) {
    const std::string_view prefix = PlaceholderPrefix(category);
    if (identifier.size() <= prefix.size() + 1 ||
        identifier.substr(0, prefix.size()) != prefix ||
        identifier[prefix.size()] != '_') {
      continue;
    }
    const std::string_view digits = identifier.substr(prefix.size() + 1);
    if (digits[0] < '1' || digits[0] > '9') return std::nullopt;
    std::size_t index = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      return std::nullopt;
    }
    return Placeholder{category, index};
  }
  return std::nullopt;
}

bool IsJavaKeyword(std::string_view word) { return Keywords().contains(word); }
bool IsJavaLangName(std::string_view word) { return JavaLangNames().contains(word); }

const std::string* AbstractionMapping::Find(IdentifierCategory category,
                                            std::string_view original) const {
  for (const Entry& entry : entries_[static_cast<std::size_t>(category)]) {
    if (entry.first == original) return &entry.second;
  }
  return nullptr;
}

const std::string& AbstractionMapping::Assign(IdentifierCategory category,
                                              std::string_view original) {
  if (const std::string* existing = Find(category, original)) return *existing;
  auto& list = entries_[static_cast<std::size_t>(category)];
  list.emplace_back(std::string(original), std::string(PlaceholderPrefix(category)) +
                                               "_" + std::to_string(list.size() + 1));
  return list.back().second;
}

UnparseableCodeError::UnparseableCodeError(SyntaxVerdict verdict)
    : InputError(verdict.empty_input
                     ? "cannot abstract empty code"
                     : "cannot abstract code with " +
                           std::to_string(verdict.error_count) + " syntax error(s)"),
      verdict_(std::move(verdict)) {}

std::string AbstractIdentifiers(std::string_view code, JavaParser& parser,
                                AbstractionMapping& mapping) {
  SyntaxVerdict verdict = CheckSyntax(code, parser);
  if (!verdict.valid) throw UnparseableCodeError(std::move(verdict));
  const SyntaxTree tree = parser.Parse(WrapMethod(code));
  const std::vector<Occurrence> occurrences =
      CollectIdentifiers(tree, kWrapperPrefix.size(), code.size());

  std::string out;
  out.reserve(code.size());
  std::size_t cursor = 0;
  for (const Occurrence& occ : occurrences) {
    out.append(code.substr(cursor, occ.span.begin - cursor));
    out.append(mapping.Assign(occ.category, occ.name));
    cursor = occ.span.end;
  }
  out.append(code.substr(cursor));
  return out;
}

AbstractionResult AbstractIdentifiers(std::string_view code, JavaParser& parser) {
  AbstractionResult result;
  result.text = AbstractIdentifiers(code, parser, result.mapping);
  return result;
}

AbstractionReport CheckConformance(std::string_view code,
                                   const ConformanceOptions& options) {
  AbstractionReport report;
  // First span seen for each (category, index), for gap reporting.
  std::array<std::map<std::size_t, ByteSpan>, 3> seen;
  for (const LexedIdentifier& ident : LexIdentifiers(code)) {
    if (IsJavaKeyword(ident.text) || IsJavaLangName(ident.text)) continue;
    if (const auto placeholder = ParsePlaceholder(ident.text)) {
      seen[static_cast<std::size_t>(placeholder->category)].emplace(
          placeholder->index, ident.span);
      continue;
    }
    bool malformed = false;
    for (IdentifierCategory category : kAllCategories) {
      const std::string prefix = std::string(PlaceholderPrefix(category)) + "_";
      if (ident.text.starts_with(prefix) && ident.text.size() > prefix.size() &&
          std::all_of(ident.text.begin() + static_cast<std::ptrdiff_t>(prefix.size()),
                      ident.text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        malformed = true;
      }
    }
    report.violations.push_back(
        {ident.span, malformed ? "placeholder '" + std::string(ident.text) +
                                     "' must use an index starting at 1 without leading zeros"
                               : "concrete identifier '" + std::string(ident.text) + "'"});
  }
  if (options.check_gaps) {
    for (IdentifierCategory category : kAllCategories) {
      const auto& indices = seen[static_cast<std::size_t>(category)];
      std::size_t expected = 1;
      for (const auto& [index, span] : indices) {
        if (index != expected) {
          report.violations.push_back(
              {span, std::string(PlaceholderPrefix(category)) + " indices skip from " +
                         std::to_string(expected - 1) + " to " + std::to_string(index)});
        }
        expected = index + 1;
      }
    }
  }
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const AbstractionViolation& a, const AbstractionViolation& b) {
                     return a.span.begin < b.span.begin;
                   });
  report.conformant = report.violations.empty();
  return report;
}

}  // namespace repairlens
