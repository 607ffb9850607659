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

#include <cmath>
#include <memory>

#include "common.hpp"
#include "qentropy/haar.hpp"

namespace qent::cli {

namespace {

struct HaarOptions {
  std::string matrix;
  std::string builtin;
  Index n = 2;
  std::int64_t samples = 100000;
  Seed seed = 0;
};

// Builtins live on C^n for sphere-avg and on C^n (x) C^n for twirl.
CMat builtin_matrix(const std::string& name, Index dim, Index n) {
  if (name == "identity") return CMat::Identity(dim, dim);
  if (name == "projector0") {
    CMat p = CMat::Zero(dim, dim);
    p(0, 0) = 1;
    return p;
  }
  if (name == "swap") {
    if (dim != n * n) throw UsageError("builtin 'swap' is only defined for twirl");
    return swap_operator(n);
  }
  throw UsageError("unknown builtin '" + name + "' (identity, projector0, swap)");
}

CMat load_matrix(Context& ctx, const HaarOptions& o, bool twirl, Index& n) {
  if (o.matrix.empty() == o.builtin.empty())
    throw UsageError("give exactly one of --matrix or --builtin");
  if (!o.builtin.empty()) {
    if (o.n < 1 || (twirl && o.n < 2)) throw UsageError("--n is too small");
    n = o.n;
    return builtin_matrix(o.builtin, twirl ? o.n * o.n : o.n, o.n);
  }
  const std::string source = o.matrix == "-" ? "<stdin>" : o.matrix;
  const Json j = load_json(ctx, o.matrix);
  CMat m;
  try {
    m = matrix_from_json(j.is_object() && j.contains("matrix") ? j["matrix"] : j);
  } catch (const ParseError& e) {
    throw ParseError(source + ": " + e.what());
  }
  if (m.rows() != m.cols())
    throw UsageError(source + ": matrix is " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + ", expected square");
  n = m.rows();
  if (twirl) {
    n = Index(std::llround(std::sqrt(double(m.rows()))));
    if (n * n != m.rows() || n < 2)
      throw UsageError(source + ": twirl needs an n^2 x n^2 matrix with n >= 2");
  }
  return m;
}

void check_samples(const HaarOptions& o) {
  if (o.samples < 100) throw UsageError("--samples must be >= 100");
}

void sphere_avg(Context& ctx, const HaarOptions& o) {
  check_samples(o);
  Index n = 0;
  const CMat m = load_matrix(ctx, o, false, n);
  const double exact = sphere_average_closed_form(m);
  const auto est = sphere_average_monte_carlo(m, o.samples, o.seed);
  const bool agree = est.agrees_with(exact);
  ctx.out << "n: " << n << "\n";
  ctx.out << "closed form: " << format_double(exact) << "\n";
  ctx.out << "monte carlo: " << format_double(est.mean) << " (" << est.samples << " samples)\n";
  ctx.out << "std error: " << format_double(est.std_error, 4) << "\n";
  ctx.out << "z: " << format_double(est.z_score(exact), 4) << "\n";
  ctx.out << "verdict: " << (agree ? "agree" : "disagree") << " (band " << kMonteCarloSigmas
          << " SE)\n";
  ctx.status = agree ? kSuccess : kCheckFailure;
}

void twirl(Context& ctx, const HaarOptions& o) {
  check_samples(o);
  Index n = 0;
  const CMat a = load_matrix(ctx, o, true, n);
  const auto mc = twofold_twirl_monte_carlo(a, n, o.samples, o.seed);
  const auto verdict = compare_twirl_forms(a, n, mc);
  const auto corrected = twofold_twirl_coefficients(a, n, TwirlForm::corrected);
  const auto printed = twofold_twirl_coefficients(a, n, TwirlForm::printed);
  const bool fixed = max_abs(twofold_twirl_closed_form(a, n) - a) <= 1e-12;
  auto show = [](Complex z) {
    return format_double(z.real()) + (z.imag() < 0 ? " - " : " + ") +
           format_double(std::abs(z.imag())) + "i";
  };
  ctx.out << "n: " << n << "\n";
  ctx.out << "corrected coefficients: c_I = " << show(corrected.identity)
          << ", c_S = " << show(corrected.swap) << "\n";
  ctx.out << "printed coefficients: c_I = " << show(printed.identity)
          << ", c_S = " << show(printed.swap) << "\n";
  ctx.out << "monte carlo: " << mc.samples << " samples\n";
  ctx.out << "corrected max |z|: " << format_double(verdict.corrected_max_z, 4) << "\n";
  ctx.out << "printed max |z|: " << format_double(verdict.printed_max_z, 4) << "\n";
  if (fixed) ctx.out << "fixed point: A is invariant under the twirl\n";
  ctx.out << "supported form: " << verdict.supported << "\n";
  if (verdict.supported == "corrected") ctx.out << "corrected form supported\n";
  ctx.status = verdict.corrected_agrees ? kSuccess : kCheckFailure;
}

void add_matrix_options(CLI::App* cmd, HaarOptions& o) {
  cmd->add_option("--matrix", o.matrix, "Matrix JSON file ('-' for stdin)");
  cmd->add_option("--builtin", o.builtin, "identity, projector0 or swap");
  cmd->add_option("--n", o.n, "Dimension for --builtin");
  cmd->add_option("--samples", o.samples, "Monte Carlo samples");
  cmd->add_option("--seed", o.seed, "Seed");
}

}  // namespace

void add_haar(CLI::App& app, Context& ctx) {
  auto opts = std::make_shared<HaarOptions>();
  CLI::App* cmd = app.add_subcommand("haar", "Closed-form Haar averages against Monte Carlo");
  cmd->require_subcommand(1);
  CLI::App* avg = cmd->add_subcommand("sphere-avg", "Average of |<psi|M|psi>|^2");
  add_matrix_options(avg, *opts);
  avg->callback([&ctx, opts] { sphere_avg(ctx, *opts); });
  CLI::App* tw = cmd->add_subcommand("twirl", "Two-fold twirl of an n^2 x n^2 matrix");
  add_matrix_options(tw, *opts);
  tw->callback([&ctx, opts] { twirl(ctx, *opts); });
}

}  // namespace qent::cli
