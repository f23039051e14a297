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

// Small text helpers: UTF-8 decoding, whitespace tokenization and fixed
// precision number formatting.

#ifndef REPAIRLENS_TEXT_H_
#define REPAIRLENS_TEXT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace repairlens {

// Decodes UTF-8 into code points. Each byte of an invalid or truncated
// sequence decodes on its own to 0xDC00 + byte, so distinct malformed
// inputs stay distinct.
std::vector<char32_t> DecodeUtf8(std::string_view text);

// Number of characters (code points) in `text`.
std::size_t CharLength(std::string_view text);

bool IsAsciiSpace(char c);

// Splits on runs of ASCII whitespace; no empty tokens.
std::vector<std::string_view> WhitespaceTokens(std::string_view text);

std::string_view Trim(std::string_view text);

// Trims and collapses every whitespace run to a single space.
std::string CollapseWhitespace(std::string_view text);

// Fixed notation with six decimals. Rounding is to nearest on the exact
// binary value, ties to even; negative zero prints as "0.000000".
std::string FormatFixed6(double value);

// `value` rounded through FormatFixed6, for stable JSON output.
double RoundFixed6(double value);

}  // namespace repairlens

#endif  // REPAIRLENS_TEXT_H_
