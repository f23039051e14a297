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

#include <doctest.h>

#include <nlohmann/json.hpp>

#include "repairlens/abstraction.h"
#include "repairlens/io.h"
#include "repairlens/syntax.h"
#include "test_support.h"

namespace repairlens {
namespace {

std::vector<std::string> LoadMethods() {
  std::vector<std::string> out;
  for (const auto& line : SplitLines(testing::Slurp(testing::Fixture("abstraction20.jsonl")))) {
    if (!line.empty()) out.push_back(nlohmann::json::parse(line).at("code"));
  }
  return out;
}

TEST_CASE("placeholders parse only in canonical form") {
  const auto p = ParsePlaceholder("METHOD_12");
  REQUIRE(p.has_value());
  CHECK(p->category == IdentifierCategory::kMethod);
  CHECK(p->index == 12);
  CHECK_FALSE(ParsePlaceholder("VAR_0").has_value());
  CHECK_FALSE(ParsePlaceholder("VAR_01").has_value());
  CHECK_FALSE(ParsePlaceholder("VAR_").has_value());
  CHECK_FALSE(ParsePlaceholder("var_1").has_value());
  CHECK(IsJavaKeyword("while"));
  CHECK_FALSE(IsJavaKeyword("While"));
  CHECK(IsJavaLangName("String"));
}

TEST_CASE("AbstractIdentifiers renames by first occurrence per category") {
  auto parser = MakeParser();
  const auto r = AbstractIdentifiers("int count = obj . get ( x ) ;", *parser);
  CHECK(r.text == "int VAR_1 = VAR_2 . METHOD_1 ( VAR_3 ) ;");
  const auto vars = r.mapping.entries(IdentifierCategory::kVariable);
  REQUIRE(vars.size() == 3);
  CHECK(vars[0] == AbstractionMapping::Entry{"count", "VAR_1"});
  CHECK(vars[1].first == "obj");
  CHECK(*r.mapping.Find(IdentifierCategory::kMethod, "get") == "METHOD_1");

  CHECK(AbstractIdentifiers("int VAR_5 = VAR_1 . METHOD_2 ( VAR_4 ) ;", *parser).text ==
        "int VAR_1 = VAR_2 . METHOD_1 ( VAR_3 ) ;");
}

TEST_CASE("types, methods and java.lang names") {
  auto parser = MakeParser();
  const auto r = AbstractIdentifiers(
      "public Node find ( String key ) { return Helper . lookup ( key , size ) ; }", *parser);
  CHECK(r.text ==
        "public TYPE_1 METHOD_1 ( String VAR_1 ) { return TYPE_2 . METHOD_2 ( VAR_1 , VAR_2 ) ; }");
}

TEST_CASE("a shared mapping carries across buggy and fixed") {
  auto parser = MakeParser();
  AbstractionMapping mapping;
  const auto buggy = AbstractIdentifiers("int r = a . f ( b ) ;", *parser, mapping);
  const auto fixed = AbstractIdentifiers("int r = b . f ( a ) ;", *parser, mapping);
  CHECK(buggy == "int VAR_1 = VAR_2 . METHOD_1 ( VAR_3 ) ;");
  CHECK(fixed == "int VAR_1 = VAR_3 . METHOD_1 ( VAR_2 ) ;");
}

TEST_CASE("unparseable and empty input is rejected") {
  auto parser = MakeParser();
  CHECK_THROWS_AS(AbstractIdentifiers("", *parser), UnparseableCodeError);
  CHECK_THROWS_AS(AbstractIdentifiers("int x = ( ;", *parser), UnparseableCodeError);
  try {
    AbstractIdentifiers("void f ( { }", *parser);
  } catch (const UnparseableCodeError& e) {
    CHECK_FALSE(e.verdict().valid);
  }
}

TEST_CASE("CheckConformance") {
  CHECK(CheckConformance("int VAR_5 = VAR_1 . METHOD_2 ( VAR_4 ) ;").conformant);

  const auto concrete = CheckConformance("int studentCount = 0 ;");
  CHECK_FALSE(concrete.conformant);
  REQUIRE(concrete.violations.size() == 1);
  CHECK(concrete.violations[0].span == ByteSpan{4, 16});

  const auto zero = CheckConformance("return VAR_0 ;");
  CHECK_FALSE(zero.conformant);
  REQUIRE(zero.violations.size() == 1);
  CHECK(zero.violations[0].span == ByteSpan{7, 12});

  // Keywords, literals, comments and java.lang names are not identifiers.
  CHECK(CheckConformance("if ( VAR_1 == null ) { return \"plain text\" ; } // note").conformant);
  CHECK(CheckConformance("String VAR_1 = 'c' + 1.5e3 ;").conformant);

  ConformanceOptions gaps;
  gaps.check_gaps = true;
  const std::string gapped = "int VAR_1 = VAR_3 ;";
  CHECK(CheckConformance(gapped).conformant);
  CHECK_FALSE(CheckConformance(gapped, gaps).conformant);
  CHECK(CheckConformance("int VAR_1 = VAR_2 ;", gaps).conformant);
}

// Renumbers placeholders per category in order of first appearance.
std::string Canonical(std::string_view text) {
  std::string out;
  std::array<std::map<std::size_t, std::size_t>, 3> seen;
  std::size_t i = 0;
  while (i < text.size()) {
    const bool start = std::isalpha(static_cast<unsigned char>(text[i])) &&
                       (i == 0 || !std::isalnum(static_cast<unsigned char>(text[i - 1])));
    if (!start) {
      out += text[i++];
      continue;
    }
    std::size_t j = i;
    while (j < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
      ++j;
    }
    const std::string_view word = text.substr(i, j - i);
    if (const auto p = ParsePlaceholder(word)) {
      auto& m = seen[static_cast<std::size_t>(p->category)];
      const auto [it, _] = m.emplace(p->index, m.size() + 1);
      out += std::string(PlaceholderPrefix(p->category)) + "_" + std::to_string(it->second);
    } else {
      out += word;
    }
    i = j;
  }
  return out;
}

TEST_CASE("abstraction is idempotent and preserves syntax on the fixture") {
  auto parser = MakeParser();
  const auto methods = LoadMethods();
  REQUIRE(methods.size() == 20);
  for (const auto& code : methods) {
    CAPTURE(code);
    const auto once = AbstractIdentifiers(code, *parser).text;
    const auto twice = AbstractIdentifiers(once, *parser).text;
    CHECK(Canonical(twice) == Canonical(once));
    CHECK(twice == once);
    CHECK(CheckSyntax(once, *parser).valid);
    ConformanceOptions gaps;
    gaps.check_gaps = true;
    const auto report = CheckConformance(once, gaps);
    CHECK(report.conformant);
  }
}

TEST_CASE("consistently renamed inputs abstract identically") {
  auto parser = MakeParser();
  CHECK(AbstractIdentifiers("int total = items . size ( ) ;", *parser).text ==
        AbstractIdentifiers("int n = xs . length ( ) ;", *parser).text);
}

}  // namespace
}  // namespace repairlens
