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

// File plumbing: line reading, atomic writes and content digests.

#ifndef REPAIRLENS_IO_H_
#define REPAIRLENS_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace repairlens {

// Whole file as bytes. Missing or unreadable file -> InputError.
std::string ReadFile(const std::filesystem::path& path);

// Lines without their terminators ("\n" or "\r\n"). A trailing newline does
// not produce an empty final line.
std::vector<std::string> SplitLines(std::string_view content);

// Writes via a temporary sibling file and rename, so readers never observe a
// partial file. Failure -> EnvironmentError.
void WriteFileAtomic(const std::filesystem::path& path, std::string_view content);

// Creates `dir` (and parents) if needed. Failure -> EnvironmentError.
void EnsureDirectory(const std::filesystem::path& dir);

// Lowercase hex SHA-256.
std::string Sha256Hex(std::string_view bytes);

}  // namespace repairlens

#endif  // REPAIRLENS_IO_H_
