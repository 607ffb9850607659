// Copyright 2026 The qentropy Authors
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

// The `qentropy` command line, callable in-process.

#ifndef QENTROPY_CLI_HPP
#define QENTROPY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qentropy/random.hpp"
#include "qentropy/serialize.hpp"

namespace qent::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailure = 1,
  kUsageError = 2,
  kCounterexample = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

struct RunManifest {
  std::vector<std::string> command_line;
  Json config;
  Seed seed = 0;
  std::string version;
  /// UTC, ISO 8601.
  std::string timestamp;
  Json counts;

  Json to_json() const;
  static RunManifest from_json(const Json& j);
  bool operator==(const RunManifest& other) const;
};

/// Fills version and timestamp.
RunManifest make_manifest(std::vector<std::string> command_line, Json config, Seed seed,
                          Json counts);

std::string library_version();

}  // namespace qent::cli

#endif  // QENTROPY_CLI_HPP
