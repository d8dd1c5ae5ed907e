// chanest: learned OFDM channel estimation and sample-complexity analysis
// Copyright (C) 2026 The chanest authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace chanest {

/// Parsed invocation. `overrides` holds the command-specific settings under
/// their config-file keys (snake_case), already type-checked.
struct RunConfig {
  std::string command;
  std::uint64_t seed = 1;
  std::optional<std::int64_t> trials;
  std::filesystem::path out_dir;
  unsigned workers = 1;
  bool plot = false;
  nlohmann::json overrides = nlohmann::json::object();
};

const std::vector<std::string>& command_names();

/// Flags take precedence over `file`, which takes precedence over defaults.
/// A `--config PATH` flag loads the file from disk instead.
RunConfig parse_config(const std::vector<std::string>& args,
                       const std::optional<nlohmann::json>& file = std::nullopt);

/// Runs the command and writes its artifacts. Returns 0 when every artifact
/// was written and every in-run check passed.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full entry point: parse, run, map errors to exit codes.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chanest
