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

#include "repairlens/diff.h"

namespace repairlens {
namespace {

TEST_CASE("token diff of the single-identifier repair") {
  const std::string buggy = "int VAR_5 = VAR_1 . METHOD_2 ( VAR_4 ) ;";
  const std::string fixed = "int VAR_5 = VAR_2 . METHOD_2 ( VAR_4 ) ;";
  CHECK(UnifiedDiff(buggy, fixed, "buggy", "fixed") ==
        "--- buggy\n"
        "+++ fixed\n"
        "@@ -1,7 +1,7 @@\n"
        " int\n"
        " VAR_5\n"
        " =\n"
        "-VAR_1\n"
        "+VAR_2\n"
        " .\n"
        " METHOD_2\n"
        " (\n");
}

TEST_CASE("identical inputs give an empty diff") {
  CHECK(UnifiedDiff("a b c", "a b c", "x", "y").empty());
  CHECK(UnifiedDiff("a  b\nc", "a b c", "x", "y").empty());
  CHECK(UnifiedDiff("", "", "x", "y").empty());
}

TEST_CASE("separate hunks when changes are far apart") {
  const std::string a = "1 2 3 4 5 6 7 8 9 10 11 12";
  const std::string b = "X 2 3 4 5 6 7 8 9 10 11 Y";
  CHECK(UnifiedDiff(a, b, "a", "b") ==
        "--- a\n+++ b\n"
        "@@ -1,4 +1,4 @@\n-1\n+X\n 2\n 3\n 4\n"
        "@@ -9,4 +9,4 @@\n 9\n 10\n 11\n-12\n+Y\n");
}

TEST_CASE("empty sides use the zero-line range convention") {
  CHECK(UnifiedDiff("", "a b", "a", "b") == "--- a\n+++ b\n@@ -0,0 +1,2 @@\n+a\n+b\n");
  CHECK(UnifiedDiff("a", "", "a", "b") == "--- a\n+++ b\n@@ -1 +0,0 @@\n-a\n");
}

TEST_CASE("line mode") {
  DiffOptions lines;
  lines.unit = DiffUnit::kLine;
  lines.context = 1;
  CHECK(UnifiedDiff("a\nb\nc\nd\n", "a\nB\nc\nd\n", "old", "new", lines) ==
        "--- old\n+++ new\n@@ -1,3 +1,3 @@\n a\n-b\n+B\n c\n");
}

}  // namespace
}  // namespace repairlens
