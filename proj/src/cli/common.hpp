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

// Shared plumbing for the subcommands. Not installed.

#ifndef QENTROPY_CLI_COMMON_HPP
#define QENTROPY_CLI_COMMON_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qentropy/cli.hpp"
#include "qentropy/entropy.hpp"

namespace qent::cli {

/// Raised for bad arguments detected after CLI11 parsing; maps to exit 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
  std::vector<std::string> args;
  int status = kSuccess;
};

void add_verify(CLI::App& app, Context& ctx);
void add_search(CLI::App& app, Context& ctx);
void add_channel(CLI::App& app, Context& ctx);
void add_haar(CLI::App& app, Context& ctx);

LogBase parse_base(const std::string& s);
/// "bits" or "nats".
std::string base_label(LogBase base);

/// Reads a JSON document from a path, or from ctx.in when path is "-" or empty.
Json load_json(Context& ctx, const std::string& path);
Channel load_channel(Context& ctx, const std::string& path);

/// Writes text to a path, or to ctx.out when path is "-" or empty.
void emit(Context& ctx, const std::string& path, const std::string& text);

std::string format_double(double x, int precision = 12);

}  // namespace qent::cli

#endif  // QENTROPY_CLI_COMMON_HPP
