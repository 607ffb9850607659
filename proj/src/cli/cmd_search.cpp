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
#include <optional>
#include <sstream>

#include "common.hpp"
#include "qentropy/parallel.hpp"

namespace qent::cli {

namespace {

struct SearchOptions {
  std::string config;
  std::optional<Index> n, k_phi, k_psi;
  std::optional<std::int64_t> trials;
  std::optional<std::string> optimizer;
  std::optional<int> max_iters;
  std::optional<double> slack_tolerance;
  std::optional<Seed> seed;
  std::optional<int> jobs;
  int minimize_from_worst = 0;
  std::string out;
  std::string summary;
  std::string manifest;
};

template <typename T>
void take(const Json& j, const char* key, T& target) {
  if (!j.contains(key)) return;
  try {
    target = j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("search config: field '") + key + "' has the wrong type");
  }
}

SearchConfig build_config(Context& ctx, const SearchOptions& o) {
  SearchConfig cfg;
  if (!o.config.empty()) {
    const Json j = load_json(ctx, o.config);
    if (!j.is_object()) throw ParseError(o.config + ": expected a JSON object");
    static const std::vector<std::string> keys{"n",          "k_phi",          "k_psi",
                                               "trials",     "optimizer",      "max_iters",
                                               "slack_tolerance", "master_seed", "seed", "jobs"};
    for (const auto& item : j.items())
      if (std::find(keys.begin(), keys.end(), item.key()) == keys.end())
        throw ParseError(o.config + ": unknown field '" + item.key() + "'");
    take(j, "n", cfg.n);
    take(j, "k_phi", cfg.k_phi);
    take(j, "k_psi", cfg.k_psi);
    take(j, "trials", cfg.trials);
    take(j, "max_iters", cfg.max_iters);
    take(j, "slack_tolerance", cfg.slack_tolerance);
    take(j, "master_seed", cfg.master_seed);
    take(j, "seed", cfg.master_seed);
    take(j, "jobs", cfg.jobs);
    if (j.contains("optimizer")) {
      std::string name;
      take(j, "optimizer", name);
      cfg.optimizer = parse_optimizer(name);
    }
  }
  if (o.n) cfg.n = *o.n;
  if (o.k_phi) cfg.k_phi = *o.k_phi;
  if (o.k_psi) cfg.k_psi = *o.k_psi;
  if (o.trials) cfg.trials = *o.trials;
  if (o.optimizer) cfg.optimizer = parse_optimizer(*o.optimizer);
  if (o.max_iters) cfg.max_iters = *o.max_iters;
  if (o.slack_tolerance) cfg.slack_tolerance = *o.slack_tolerance;
  if (o.seed) cfg.master_seed = *o.seed;
  if (o.jobs) cfg.jobs = *o.jobs;
  try {
    cfg.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (cfg.jobs < 1) throw UsageError("jobs must be >= 1");
  if (o.minimize_from_worst < 0) throw UsageError("--minimize-from-worst must be >= 0");
  return cfg;
}

Json config_json(const SearchConfig& cfg) {
  return {{"n", cfg.n},
          {"k_phi", cfg.k_phi},
          {"k_psi", cfg.k_psi},
          {"trials", cfg.trials},
          {"optimizer", to_string(cfg.optimizer)},
          {"max_iters", cfg.max_iters},
          {"slack_tolerance", cfg.slack_tolerance},
          {"master_seed", cfg.master_seed},
          {"jobs", cfg.jobs}};
}

void execute(Context& ctx, const SearchOptions& o) {
  const SearchConfig cfg = build_config(ctx, o);
  std::vector<SlackRecord> records = random_search(cfg);

  const std::size_t descents =
      std::min<std::size_t>(std::size_t(o.minimize_from_worst), records.size());
  std::vector<SlackRecord> descent(descents);
  parallel_for(descents, cfg.jobs,
               [&](std::size_t i) { descent[i] = minimize_slack(cfg, records[i]); });

  std::size_t candidates = 0, verified = 0;
  double min_slack = records.front().slack;
  Seed min_seed = records.front().seed;
  for (const auto* list : {&records, &descent})
    for (const auto& r : *list) {
      candidates += r.counterexample_candidate;
      verified += r.verified_counterexample;
      if (r.slack < min_slack) min_slack = r.slack, min_seed = r.seed;
    }
  std::vector<SlackRecord> all = records;
  all.insert(all.end(), descent.begin(), descent.end());
  const SaturationReport saturation = saturation_scan(all, cfg);

  Json summary;
  summary["limitation"] = kSearchLimitation;
  summary["config"] = config_json(cfg);
  summary["optimizer_used"] = to_string(cfg.resolved_optimizer());
  summary["unit"] = "bits";
  summary["trials"] = records.size();
  summary["min_slack_bits"] = min_slack;
  summary["min_slack_seed"] = min_seed;
  summary["counterexample_candidates"] = candidates;
  summary["verified_counterexamples"] = verified;
  Json runs = Json::array();
  for (std::size_t i = 0; i < descents; ++i)
    runs.push_back({{"seed", descent[i].seed},
                    {"start_slack_bits", records[i].slack},
                    {"end_slack_bits", descent[i].slack},
                    {"iterations", descent[i].iterations},
                    {"converged", descent[i].converged}});
  summary["descents"] = std::move(runs);
  summary["saturation"] = saturation_to_json(saturation);

  ctx.out << "# " << kSearchLimitation << '\n';
  ctx.out << "trials: " << records.size() << ", descents: " << descents << '\n';
  ctx.out << "min slack: " << format_double(min_slack) << " bits (seed " << min_seed << ")\n";
  ctx.out << "counterexample candidates: " << candidates << ", verified: " << verified << '\n';
  ctx.out << "near-zero slack records: " << saturation.near_zero << '\n';
  for (const auto& c : saturation.clusters)
    ctx.out << "  " << c.label << ": " << c.seeds.size() << '\n';
  if (verified > 0)
    ctx.out << "COUNTEREXAMPLE-CANDIDATE: slack " << format_double(min_slack)
            << " bits survived extended-precision recomputation\n";

  if (!o.out.empty()) {
    std::ostringstream lines;
    write_records(lines, records);
    write_records(lines, descent);
    emit(ctx, o.out, lines.str());
  }
  if (!o.summary.empty()) emit(ctx, o.summary, summary.dump(2) + "\n");
  std::string manifest_path = o.manifest;
  if (manifest_path.empty() && !o.out.empty() && o.out != "-") manifest_path = o.out + ".manifest.json";
  if (!manifest_path.empty()) {
    std::vector<std::string> command{"qentropy"};
    command.insert(command.end(), ctx.args.begin(), ctx.args.end());
    const Json counts{{"trials", records.size()},
                      {"descents", descents},
                      {"counterexample_candidates", candidates},
                      {"verified_counterexamples", verified},
                      {"near_zero", saturation.near_zero}};
    emit(ctx, manifest_path,
         make_manifest(command, config_json(cfg), cfg.master_seed, counts).to_json().dump(2) + "\n");
  }
  ctx.status = verified > 0 ? kCounterexample : kSuccess;
}

}  // namespace

void add_search(CLI::App& app, Context& ctx) {
  auto opts = std::make_shared<SearchOptions>();
  CLI::App* cmd = app.add_subcommand("search", "Random search and local descent on the slack");
  cmd->add_option("--config", opts->config, "SearchConfig JSON file; flags override it");
  cmd->add_option("--n", opts->n, "Dimension");
  cmd->add_option("--k-phi", opts->k_phi, "Unitary-mixture size for Phi");
  cmd->add_option("--k-psi", opts->k_psi, "Unitary-mixture size for Psi");
  cmd->add_option("--trials", opts->trials, "Random trials");
  cmd->add_option("--optimizer", opts->optimizer,
                  "random-only, finite-difference-gradient, simplex or auto");
  cmd->add_option("--max-iters", opts->max_iters, "Descent iterations");
  cmd->add_option("--slack-tolerance", opts->slack_tolerance, "Saturation threshold in bits");
  cmd->add_option("--seed", opts->seed, "Master seed");
  cmd->add_option("--jobs", opts->jobs, "Worker threads");
  cmd->add_option("--minimize-from-worst", opts->minimize_from_worst,
                  "Run a descent from each of the M lowest-slack records");
  cmd->add_option("--out", opts->out, "JSON-lines records");
  cmd->add_option("--summary", opts->summary, "Summary JSON");
  cmd->add_option("--manifest", opts->manifest, "Manifest path (default <out>.manifest.json)");
  cmd->callback([&ctx, opts] { execute(ctx, *opts); });
}

}  // namespace qent::cli
