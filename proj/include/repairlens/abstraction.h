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

// CodeXGLUE-style identifier abstraction: user-defined variable, method and
// type names become VAR_n, METHOD_n and TYPE_n, numbered per category in
// order of first occurrence.
//
// Categories come from syntactic position in the tree-sitter-java node
// vocabulary; there is no type resolution. Receivers of calls and field
// accesses are types when spelled in UpperCamelCase and variables
// otherwise. Anything else in expression position is a variable. Keywords,
// primitive types, literals and java.lang names stay concrete.

#ifndef REPAIRLENS_ABSTRACTION_H_
#define REPAIRLENS_ABSTRACTION_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "repairlens/errors.h"
#include "repairlens/parser.h"
#include "repairlens/syntax.h"

namespace repairlens {

enum class IdentifierCategory { kVariable = 0, kMethod = 1, kType = 2 };

inline constexpr std::array<IdentifierCategory, 3> kAllCategories = {
    IdentifierCategory::kVariable, IdentifierCategory::kMethod,
    IdentifierCategory::kType};

// "VAR", "METHOD", "TYPE".
std::string_view PlaceholderPrefix(IdentifierCategory category);
// "variable", "method", "type".
std::string_view CategoryName(IdentifierCategory category);

struct Placeholder {
  IdentifierCategory category;
  std::size_t index;  // >= 1
};

// Matches (VAR|METHOD|TYPE)_k with k >= 1 and no leading zeros.
std::optional<Placeholder> ParsePlaceholder(std::string_view identifier);

bool IsJavaKeyword(std::string_view word);
bool IsJavaLangName(std::string_view word);

// Per-category (original -> placeholder) pairs in assignment order. Within a
// category originals and placeholders are distinct and indices run 1..n.
class AbstractionMapping {
 public:
  using Entry = std::pair<std::string, std::string>;

  std::span<const Entry> entries(IdentifierCategory category) const {
    return entries_[static_cast<std::size_t>(category)];
  }
  const std::string* Find(IdentifierCategory category,
                          std::string_view original) const;
  // Returns the existing placeholder or assigns the next index.
  const std::string& Assign(IdentifierCategory category, std::string_view original);

  bool operator==(const AbstractionMapping&) const = default;

 private:
  std::array<std::vector<Entry>, 3> entries_;
};

struct AbstractionResult {
  std::string text;
  AbstractionMapping mapping;
};

// Thrown when the input to abstraction does not parse cleanly.
class UnparseableCodeError : public InputError {
 public:
  explicit UnparseableCodeError(SyntaxVerdict verdict);
  const SyntaxVerdict& verdict() const { return verdict_; }

 private:
  SyntaxVerdict verdict_;
};

AbstractionResult AbstractIdentifiers(std::string_view code, JavaParser& parser);

// Abstracts `code` continuing an existing mapping, so a buggy/fixed pair
// shares placeholders.
std::string AbstractIdentifiers(std::string_view code, JavaParser& parser,
                                AbstractionMapping& mapping);

struct AbstractionViolation {
  ByteSpan span;
  std::string description;

  bool operator==(const AbstractionViolation&) const = default;
};

struct AbstractionReport {
  bool conformant = true;
  std::vector<AbstractionViolation> violations;
};

struct ConformanceOptions {
  // Require indices 1..n without gaps in every category.
  bool check_gaps = false;
};

// Lexical check: every identifier must be a keyword, a java.lang name or a
// well-formed placeholder.
AbstractionReport CheckConformance(std::string_view code,
                                   const ConformanceOptions& options = {});

}  // namespace repairlens

#endif  // REPAIRLENS_ABSTRACTION_H_
