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

#include <memory>

#include "common.hpp"

namespace qent::cli {

namespace {

struct ChannelOptions {
  std::string file;
  std::string out;
  Index n = 2;
  Index k = 1;
  double x = 0;
  double p = 2;
  Seed seed = 0;
  int restarts = 64;
  bool bistochastic = false;
  std::string base = "2";
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

void info(Context& ctx, const ChannelOptions& o) {
  const LogBase base = parse_base(o.base);
  const Channel c = load_channel(ctx, o.file);
  const std::string unit = base_label(base);
  ctx.out << "dim_in: " << c.dim_in() << "\n";
  ctx.out << "dim_out: " << c.dim_out() << "\n";
  ctx.out << "kraus operators: " << c.kraus().size() << "\n";
  ctx.out << "completely positive: " << yes_no(c.flags().cp) << "\n";
  ctx.out << "trace preserving: " << yes_no(c.is_trace_preserving()) << " (residual "
          << format_double(c.trace_preservation_residual(), 3) << ")\n";
  ctx.out << "unital: " << yes_no(c.is_unital()) << "\n";
  ctx.out << "bi-stochastic: " << yes_no(c.is_bistochastic()) << "\n";
  if (c.depolarizing_parameter())
    ctx.out << "family: depolarizing x=" << format_double(*c.depolarizing_parameter()) << "\n";
  if (c.is_trace_preserving()) {
    ctx.out << "S^map: " << format_double(map_entropy(c, 1.0, base).value) << " " << unit << "\n";
    ctx.out << "S_2^map: " << format_double(map_entropy(c, 2.0, base).value) << " " << unit
            << "\n";
  } else {
    ctx.out << "S^map: undefined for a map that is not trace preserving\n";
  }
}

void make_depolarizing(Context& ctx, const ChannelOptions& o) {
  if (o.n < 2) throw UsageError("--n must be >= 2");
  if (!(o.x >= 0 && o.x <= 1)) throw UsageError("--x must lie in [0, 1]");
  emit(ctx, o.out, channel_to_json(depolarizing(o.n, o.x)).dump(2) + "\n");
}

void random(Context& ctx, const ChannelOptions& o) {
  if (o.n < 2 || o.k < 1) throw UsageError("--n must be >= 2 and --k >= 1");
  if (!o.bistochastic && o.k > o.n * o.n) throw UsageError("--k must be at most n^2");
  const Channel c = o.bistochastic ? random_bistochastic(o.n, o.k, o.seed)
                                   : random_cptp(o.n, o.k, o.seed);
  emit(ctx, o.out, channel_to_json(c).dump(2) + "\n");
}

void entropy(Context& ctx, const ChannelOptions& o) {
  const LogBase base = parse_base(o.base);
  if (!(o.p >= 0)) throw UsageError("--p must be >= 0");
  if (o.restarts < 1) throw UsageError("--restarts must be >= 1");
  const Channel c = load_channel(ctx, o.file);
  const std::string unit = base_label(base);
  const std::string order = format_double(o.p);
  ctx.out << "S_" << order << "^map: " << format_double(map_entropy(c, o.p, base).value) << " "
          << unit << "\n";
  MinEntropyConfig cfg;
  cfg.restarts = o.restarts;
  cfg.seed = o.seed;
  const auto est = min_output_entropy_2(c, cfg, base);
  ctx.out << "S_2^min (estimate, " << o.restarts << " restarts): "
          << format_double(est.entropy.value) << " " << unit << "\n";
  ctx.out << "max output purity (estimate): " << format_double(est.purity) << "\n";
}

}  // namespace

void add_channel(CLI::App& app, Context& ctx) {
  auto opts = std::make_shared<ChannelOptions>();
  CLI::App* cmd = app.add_subcommand("channel", "Channel files: inspect, create, entropies");
  cmd->require_subcommand(1);

  CLI::App* c_info = cmd->add_subcommand("info", "Dimensions, flags and map entropies");
  c_info->add_option("file", opts->file, "Channel JSON (default: stdin)");
  c_info->add_option("--base", opts->base, "Logarithm base: 2 or e");
  c_info->callback([&ctx, opts] { info(ctx, *opts); });

  CLI::App* c_dep = cmd->add_subcommand("make-depolarizing", "Write a depolarizing channel");
  c_dep->add_option("--n", opts->n, "Dimension")->required();
  c_dep->add_option("--x", opts->x, "Depolarizing parameter in [0, 1]")->required();
  c_dep->add_option("--out", opts->out, "Output path (default: stdout)");
  c_dep->callback([&ctx, opts] { make_depolarizing(ctx, *opts); });

  CLI::App* c_rand = cmd->add_subcommand("random", "Write a random channel");
  c_rand->add_option("--n", opts->n, "Dimension")->required();
  c_rand->add_option("--k", opts->k, "Kraus rank, or mixture size with --bistochastic")
      ->required();
  c_rand->add_option("--seed", opts->seed, "Seed");
  c_rand->add_flag("--bistochastic", opts->bistochastic, "Mixture of Haar unitaries");
  c_rand->add_option("--out", opts->out, "Output path (default: stdout)");
  c_rand->callback([&ctx, opts] { random(ctx, *opts); });

  CLI::App* c_ent = cmd->add_subcommand("entropy", "Map entropy and estimated S_2^min");
  c_ent->add_option("file", opts->file, "Channel JSON (default: stdin)");
  c_ent->add_option("--p", opts->p, "Renyi order of the map entropy");
  c_ent->add_option("--restarts", opts->restarts, "Restarts of the S_2^min estimator");
  c_ent->add_option("--seed", opts->seed, "Seed of the S_2^min estimator");
  c_ent->add_option("--base", opts->base, "Logarithm base: 2 or e");
  c_ent->callback([&ctx, opts] { entropy(ctx, *opts); });
}

}  // namespace qent::cli
