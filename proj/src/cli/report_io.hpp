// Copyright 2026 The sweepcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWEEPCERT_CLI_REPORT_IO_HPP
#define SWEEPCERT_CLI_REPORT_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

namespace sweepcert::cli {

// Shortest round-trip decimal representation of a double ("1.5", not
// "1.500000"), so that report files are stable across runs and platforms.
std::string format_double(double value);

// Writes `content` to `path` atomically: the bytes go to a temporary file in
// the same directory, which is then renamed over the target.  Readers never
// observe a half-written report.  Parent directories are created on demand.
void atomic_write(const std::filesystem::path& path, const std::string& content);

// Serializes with sorted keys and two-space indentation (a trailing newline is
// appended) and writes atomically.
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace sweepcert::cli

#endif  // SWEEPCERT_CLI_REPORT_IO_HPP
