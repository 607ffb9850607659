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

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

#include "qentropy/cli.hpp"

namespace qent::cli {

std::string library_version() { return QENTROPY_VERSION; }

Json RunManifest::to_json() const {
  Json j;
  j["command_line"] = command_line;
  j["config"] = config;
  j["seed"] = seed;
  j["version"] = version;
  j["timestamp"] = timestamp;
  j["counts"] = counts;
  return j;
}

RunManifest RunManifest::from_json(const Json& j) {
  RunManifest m;
  try {
    m.command_line = j.at("command_line").get<std::vector<std::string>>();
    m.config = j.at("config");
    m.seed = j.at("seed").get<Seed>();
    m.version = j.at("version").get<std::string>();
    m.timestamp = j.at("timestamp").get<std::string>();
    m.counts = j.at("counts");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("manifest: ") + e.what());
  }
  return m;
}

bool RunManifest::operator==(const RunManifest& o) const {
  return command_line == o.command_line && config == o.config && seed == o.seed &&
         version == o.version && timestamp == o.timestamp && counts == o.counts;
}

RunManifest make_manifest(std::vector<std::string> command_line, Json config, Seed seed,
                          Json counts) {
  RunManifest m;
  m.command_line = std::move(command_line);
  m.config = std::move(config);
  m.seed = seed;
  m.version = library_version();
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream ts;
  ts << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  m.timestamp = ts.str();
  m.counts = std::move(counts);
  return m;
}

}  // namespace qent::cli
