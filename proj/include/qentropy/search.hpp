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

// Numerical exploration of the entropy inequality
//
//   S(rho) + S(Phi o Psi (rho)) <= S(Phi(rho)) + S(Psi(rho))
//
// for bi-stochastic Phi, Psi. The slack is the right side minus the left side,
// always in bits. Channels are parameterized as unitary mixtures, so the
// search does not cover every bi-stochastic map when n >= 3.

#ifndef QENTROPY_SEARCH_HPP
#define QENTROPY_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qentropy/channel.hpp"
#include "qentropy/random.hpp"

namespace qent {

/// Printed at the top of every search summary.
inline constexpr const char* kSearchLimitation =
    "channels are sampled as unitary mixtures plus the depolarizing family; for n >= 3 this "
    "does not exhaust the bi-stochastic maps";

/// Records below this slack are re-verified in extended precision.
inline constexpr double kCounterexampleThreshold = -1e-6;

enum class Optimizer { random_only, gradient, simplex, automatic };

const char* to_string(Optimizer o);
/// Accepts "random-only", "gradient", "finite-difference-gradient", "simplex", "auto".
Optimizer parse_optimizer(const std::string& name);

struct SearchConfig {
  Index n = 2;
  Index k_phi = 2;
  Index k_psi = 2;
  std::int64_t trials = 1000;
  Optimizer optimizer = Optimizer::automatic;
  int max_iters = 200;
  double slack_tolerance = 1e-8;
  Seed master_seed = 0;
  int jobs = 1;

  /// Throws DomainError on trials < 1, n < 2, k < 1, max_iters < 1 or
  /// slack_tolerance <= 0.
  void validate() const;
  /// simplex when both mixtures have at most three terms, gradient otherwise.
  Optimizer resolved_optimizer() const;
};

/// sum_i w_i Ad_{U_i}.
struct MixtureParams {
  std::vector<double> weights;
  std::vector<CMat> unitaries;
  /// Set when the mixture is the Weyl form of a depolarizing channel.
  std::optional<double> depolarizing_x;

  Channel channel() const;
  Index dim() const { return unitaries.front().rows(); }
};

MixtureParams identity_mixture(Index n);
MixtureParams depolarizing_mixture(Index n, double x);

struct SlackEntropies {
  double rho = 0;
  double phi_rho = 0;
  double psi_rho = 0;
  double composed = 0;
  double slack() const { return phi_rho + psi_rho - rho - composed; }
};

struct SlackRecord {
  Seed seed = 0;
  MixtureParams phi;
  MixtureParams psi;
  /// rho = L L^dagger / tr(L L^dagger).
  CMat state_factor;
  SlackEntropies entropies;
  double slack = 0;
  bool converged = false;
  /// "random" or "descent".
  std::string origin = "random";
  /// "pure", "maximally-mixed" or "hilbert-schmidt" for random draws.
  std::string state_kind;
  int iterations = 0;
  /// Best slack after each descent iteration; non-increasing.
  std::vector<double> trace;
  bool counterexample_candidate = false;
  /// Slack recomputed in extended precision; set for candidates only.
  std::optional<double> verified_slack;
  bool verified_counterexample = false;

  CMat state() const;
};

/// S(Phi rho) + S(Psi rho) - S(rho) - S(Phi o Psi rho) in bits. Both channels
/// must be bi-stochastic on the dimension of rho.
double conjecture_slack(const Channel& phi, const Channel& psi, const DensityMatrix& rho);
SlackEntropies conjecture_entropies(const Channel& phi, const Channel& psi,
                                    const DensityMatrix& rho);

/// Same quantity evaluated directly on mixture parameters.
SlackEntropies mixture_entropies(const MixtureParams& phi, const MixtureParams& psi,
                                 const CMat& rho);

/// Recomputes the entropies of a record from its parameters.
SlackEntropies recompute(const SlackRecord& r);

/// Builds a fully evaluated record.
SlackRecord make_record(Seed seed, MixtureParams phi, MixtureParams psi, CMat state_factor);

/// Slack recomputed in long double, with symmetrized inputs and no clamping of
/// small eigenvalues.
double extended_precision_slack(const SlackRecord& r);

/// Draws one trial. Deterministic in (cfg, trial).
SlackRecord random_trial(const SearchConfig& cfg, std::int64_t trial);

/// `trials` records sorted by (slack, seed). Candidates below
/// kCounterexampleThreshold are re-verified.
std::vector<SlackRecord> random_search(const SearchConfig& cfg);

/// Smooth coordinates around a starting record: softmax logits for each
/// mixture, U = U0 exp(i H(x)) for each unitary, and an additive perturbation
/// of the state factor. The origin reproduces the start.
class SlackObjective {
 public:
  explicit SlackObjective(SlackRecord start);

  std::size_t dimension() const { return dim_; }
  double operator()(const Eigen::VectorXd& x) const;
  SlackRecord record_at(const Eigen::VectorXd& x) const;

 private:
  MixtureParams mixture_at(const MixtureParams& base, const Eigen::VectorXd& x,
                           std::size_t& offset, const std::vector<double>& log_weights) const;
  CMat factor_at(const Eigen::VectorXd& x, std::size_t offset) const;

  SlackRecord start_;
  std::vector<double> log_phi_, log_psi_;
  std::size_t dim_ = 0;
};

/// Central finite-difference gradient with the given step.
Eigen::VectorXd finite_difference_gradient(const std::function<double(const Eigen::VectorXd&)>& f,
                                           const Eigen::VectorXd& x, double step);

inline constexpr double kGradientStep = 1e-6;

/// Local descent from `start`; the returned slack never exceeds start.slack.
SlackRecord minimize_slack(const SearchConfig& cfg, const SlackRecord& start);

struct SaturationFeatures {
  double rho_distance = 0;
  double phi_map_entropy = 0;
  double psi_map_entropy = 0;
  double commutation_residual = 0;
  double rho_purity = 0;
};

SaturationFeatures saturation_features(const SlackRecord& r);

struct SaturationCluster {
  std::string label;
  /// Seeds in ascending order.
  std::vector<Seed> seeds;
};

struct SaturationReport {
  std::string limitation = kSearchLimitation;
  std::size_t records = 0;
  std::size_t near_zero = 0;
  /// Fixed label order; empty clusters omitted.
  std::vector<SaturationCluster> clusters;
};

/// Labels, in priority order.
const std::vector<std::string>& saturation_labels();
std::string classify_saturation(const SaturationFeatures& f);

/// Clusters records with |slack| < cfg.slack_tolerance. The result does not
/// depend on the input order.
SaturationReport saturation_scan(const std::vector<SlackRecord>& records, const SearchConfig& cfg);

}  // namespace qent

#endif  // QENTROPY_SEARCH_HPP
