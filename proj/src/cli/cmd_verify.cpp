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
#include <memory>
#include <sstream>

#include "common.hpp"

namespace qent::cli {

namespace {

struct VerifyOptions {
  std::vector<std::string> suites{"all"};
  std::vector<Index> dims;
  Seed seed = 0;
  int jobs = 1;
  std::vector<std::string> tolerances;
  std::int64_t samples = 20000;
  int instances = 10;
  int restarts = 64;
  std::string out;
  std::string manifest;
  std::string base = "2";
  bool large = false;
};

std::map<std::string, double> parse_overrides(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  const auto& known = available_checks();
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--tolerance expects name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw UsageError("--tolerance: unknown check '" + name + "'");
    double value = 0;
    try {
      std::size_t used = 0;
      value = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw UsageError("--tolerance: bad value in '" + item + "'");
    }
    if (!(value >= 0)) throw UsageError("--tolerance: value must be >= 0");
    out[name] = value;
  }
  return out;
}

void execute(Context& ctx, const VerifyOptions& o) {
  SuiteConfig cfg;
  cfg.checks = o.suites;
  const auto& known = available_checks();
  for (const auto& name : cfg.checks)
    if (name != "all" && std::find(known.begin(), known.end(), name) == known.end()) {
      std::string list;
      for (const auto& k : known) list += (list.empty() ? "" : ", ") + k;
      throw UsageError("unknown check '" + name + "' (available: all, " + list + ")");
    }
  cfg.dims = o.dims.empty() ? std::vector<Index>{2, 3} : o.dims;
  if (o.large && std::find(cfg.dims.begin(), cfg.dims.end(), 4) == cfg.dims.end())
    cfg.dims.push_back(4);
  for (Index n : cfg.dims)
    if (n < 2 || (n > 3 && !o.large))
      throw UsageError("--n values must be 2 or 3 (use --large for n = 4), got " +
                       std::to_string(n));
  cfg.seed = o.seed;
  cfg.jobs = o.jobs;
  cfg.samples = o.samples;
  cfg.instances = o.instances;
  cfg.restarts = o.restarts;
  cfg.base = parse_base(o.base);
  cfg.tolerance_overrides = parse_overrides(o.tolerances);
  if (cfg.samples < 100) throw UsageError("--samples must be >= 100");
  if (cfg.instances < 1) throw UsageError("--instances must be >= 1");
  if (cfg.restarts < 1) throw UsageError("--restarts must be >= 1");

  const auto reports = run_suite(cfg);
  const auto summary = summarize(reports);

  ctx.out << "# entropies in " << base_label(cfg.base) << " where they appear; margins use the"
          << " units of each check\n";
  for (const auto& r : reports)
    if (!r.passed || o.out.empty())
      ctx.out << (r.passed ? "PASS " : "FAIL ") << r.check_name << " [" << r.inputs_digest
              << "] margin=" << format_double(r.margin, 6)
              << " tol=" << format_double(r.tolerance, 3)
              << (r.statistical ? " statistical" : "") << '\n';
  ctx.out << "summary: " << summary.passed << "/" << summary.total << " passed, "
          << summary.failed_exact << " exact failures, " << summary.failed_statistical
          << " statistical failures\n";

  Json config;
  config["suite"] = cfg.checks;
  config["n"] = cfg.dims;
  config["seed"] = cfg.seed;
  config["jobs"] = cfg.jobs;
  config["samples"] = cfg.samples;
  config["instances"] = cfg.instances;
  config["restarts"] = cfg.restarts;
  config["base"] = o.base;
  config["tolerance_overrides"] = cfg.tolerance_overrides;
  Json counts{{"total", summary.total},
              {"passed", summary.passed},
              {"failed_exact", summary.failed_exact},
              {"failed_statistical", summary.failed_statistical}};
  std::vector<std::string> command{"qentropy"};
  command.insert(command.end(), ctx.args.begin(), ctx.args.end());
  const RunManifest manifest = make_manifest(command, config, cfg.seed, counts);

  if (!o.out.empty()) emit(ctx, o.out, reports_to_json(reports).dump(2) + "\n");
  const std::string manifest_path =
      !o.manifest.empty() ? o.manifest : (o.out.empty() || o.out == "-" ? "" : o.out + ".manifest.json");
  if (!manifest_path.empty()) emit(ctx, manifest_path, manifest.to_json().dump(2) + "\n");

  ctx.status = summary.ok() ? kSuccess : kCheckFailure;
}

}  // namespace

void add_verify(CLI::App& app, Context& ctx) {
  auto opts = std::make_shared<VerifyOptions>();
  CLI::App* cmd = app.add_subcommand("verify", "Run identity and inequality checks");
  cmd->add_option("--suite", opts->suites, "Check names, comma separated, or 'all'")
      ->delimiter(',');
  cmd->add_option("--n", opts->dims, "Dimensions, comma separated (default 2,3)")->delimiter(',');
  cmd->add_option("--seed", opts->seed, "Master seed");
  cmd->add_option("--jobs", opts->jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--tolerance", opts->tolerances, "Override as name=value (repeatable)");
  cmd->add_option("--samples", opts->samples, "Monte Carlo samples per statistical check");
  cmd->add_option("--instances", opts->instances, "Random instances per check and dimension");
  cmd->add_option("--restarts", opts->restarts, "Restarts of the min-output-entropy estimator");
  cmd->add_option("--out", opts->out, "Write the CheckReport JSON array here");
  cmd->add_option("--manifest", opts->manifest, "Manifest path (default <out>.manifest.json)");
  cmd->add_option("--base", opts->base, "Logarithm base: 2 or e");
  cmd->add_flag("--large", opts->large, "Also run n = 4");
  cmd->callback([&ctx, opts] { execute(ctx, *opts); });
}

}  // namespace qent::cli
