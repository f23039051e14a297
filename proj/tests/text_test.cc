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

#include <set>

#include "repairlens/io.h"
#include "repairlens/sampling.h"
#include "repairlens/text.h"

namespace repairlens {
namespace {

TEST_CASE("FormatFixed6 rounds exact binary ties to even") {
  // 0.0078125 = 2^-7 and 0.0234375 = 3 * 2^-7 are exact ties at 6 decimals.
  CHECK(FormatFixed6(0.0078125) == "0.007812");
  CHECK(FormatFixed6(0.0234375) == "0.023438");
  CHECK(FormatFixed6(3.0 / 7.0) == "0.428571");
  CHECK(FormatFixed6(80.0) == "80.000000");
  CHECK(FormatFixed6(-0.0) == "0.000000");
  CHECK(FormatFixed6(-1e-9) == "0.000000");
  CHECK(RoundFixed6(2.0 / 3.0) == 0.666667);
}

TEST_CASE("DecodeUtf8 counts code points and keeps bad bytes distinct") {
  CHECK(CharLength("abc") == 3);
  CHECK(CharLength("caf\xC3\xA9") == 4);
  CHECK(CharLength("\xF0\x9F\x98\x80") == 1);
  const auto bad = DecodeUtf8("\xC3(");
  REQUIRE(bad.size() == 2);
  CHECK(bad[0] == 0xDC00 + 0xC3);
  CHECK(bad[1] == U'(');
  // Overlong encoding of '/'.
  CHECK(DecodeUtf8("\xC0\xAF").size() == 2);
}

TEST_CASE("whitespace helpers") {
  const auto tokens = WhitespaceTokens("  int x\t=\n 0 ;  ");
  REQUIRE(tokens.size() == 5);
  CHECK(tokens[0] == "int");
  CHECK(tokens[4] == ";");
  CHECK(WhitespaceTokens("   ").empty());
  CHECK(Trim("\n a b \t") == "a b");
  CHECK(CollapseWhitespace(" int  x ;\n") == "int x ;");
}

TEST_CASE("SplitLines handles CRLF and trailing newline") {
  const auto lines = SplitLines("a\r\nb\n\nc\n");
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "a");
  CHECK(lines[2].empty());
  CHECK(lines[3] == "c");
  CHECK(SplitLines("").empty());
}

TEST_CASE("Sha256Hex matches the FIPS 180-2 vector") {
  CHECK(Sha256Hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("SampleIndices draws distinct sorted indices deterministically") {
  for (std::uint64_t key : {0ULL, 1ULL, 42ULL, 0xFFFFFFFFFFFFFFFFULL}) {
    const auto a = SampleIndices(1000, 100, key);
    const auto b = SampleIndices(1000, 100, key);
    CHECK(a == b);
    REQUIRE(a.size() == 100);
    CHECK(std::is_sorted(a.begin(), a.end()));
    CHECK(std::set<std::size_t>(a.begin(), a.end()).size() == 100);
    CHECK(a.back() < 1000);
  }
  CHECK(SampleIndices(50, 100, 7).size() == 50);
  CHECK(SampleIndices(0, 10, 7).empty());
}

TEST_CASE("DeriveSampleKey separates streams and steps") {
  const auto base = DeriveSampleKey(7, SampleStream::kValidation, 500);
  CHECK(base == DeriveSampleKey(7, SampleStream::kValidation, 500));
  CHECK(base != DeriveSampleKey(7, SampleStream::kValidation, 1000));
  CHECK(base != DeriveSampleKey(7, SampleStream::kCases, 500));
  CHECK(base != DeriveSampleKey(8, SampleStream::kValidation, 500));
}

}  // namespace
}  // namespace repairlens
