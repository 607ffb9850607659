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

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "common.hpp"

namespace qent::cli {

LogBase parse_base(const std::string& s) {
  if (s == "2") return LogBase::two;
  if (s == "e") return LogBase::e;
  throw UsageError("--base must be 2 or e, got '" + s + "'");
}

std::string base_label(LogBase base) { return base == LogBase::two ? "bits" : "nats"; }

Json load_json(Context& ctx, const std::string& path) {
  if (path.empty() || path == "-") return read_json(ctx.in, "<stdin>");
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return read_json(file, path);
}

Channel load_channel(Context& ctx, const std::string& path) {
  const std::string source = path.empty() || path == "-" ? "<stdin>" : path;
  const Json j = load_json(ctx, path);
  try {
    return channel_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(source + ": " + e.what());
  }
}

void emit(Context& ctx, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    ctx.out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

std::string format_double(double x, int precision) {
  std::ostringstream s;
  s << std::setprecision(precision) << x;
  return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  Context ctx{out, err, in, args};
  CLI::App app{"Entropy identities, Haar oracles and conjecture search for quantum channels",
               "qentropy"};
  app.require_subcommand(1);
  app.set_version_flag("--version", library_version());
  add_verify(app, ctx);
  add_search(app, ctx);
  add_channel(app, ctx);
  add_haar(app, ctx);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return ctx.status;
}

}  // namespace qent::cli
