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

// Machine-checkable entropy identities and inequalities for quantum channels.
//
// Every check returns a CheckReport. A report aggregates one or more
// components; each component carries a signed margin (positive means
// satisfied, equalities report -|deviation|) and its own tolerance. The
// report's margin is normalized to the first component's tolerance so that
// `passed == (margin >= -tolerance)` holds for the aggregate.

#ifndef QENTROPY_VERIFY_HPP
#define QENTROPY_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qentropy/channel.hpp"
#include "qentropy/entropy.hpp"

namespace qent {

inline constexpr double kIdentityTolerance = 1e-11;
inline constexpr double kEntropyTolerance = 1e-9;
inline constexpr double kEstimatorTolerance = 1e-6;

struct CheckComponent {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  double margin = 0;
  double tolerance = 0;
  bool passed() const { return margin >= -tolerance; }
};

struct CheckReport {
  std::string check_name;
  /// Seed and dimensions of the instance, e.g. "seed=17 n=2".
  std::string inputs_digest;
  std::vector<double> lhs;
  std::vector<double> rhs;
  double margin = 0;
  double tolerance = 0;
  bool passed = false;
  /// True when the result depends on an estimator or Monte Carlo sampling.
  bool statistical = false;
  std::vector<CheckComponent> components;
  std::string note;

  /// Recomputes passed from margin and tolerance.
  void set_tolerance(double tol);
};

/// Folds components into the aggregate fields.
CheckReport make_report(std::string name, std::string digest, std::vector<CheckComponent> parts,
                        bool statistical, std::string note = {});

/// sum_ij tr(K_i K_i^dagger K_j K_j^dagger) >= n for trace-preserving square
/// Kraus sets, with equality exactly when the map is unital.
CheckReport check_tp_schwarz(const KrausSet& k, std::string digest = {});

/// Sphere average of the output purity against
/// [sum_ij tr(K_i K_i^dag K_j K_j^dag) + sum_ij |tr K_i^dag K_j|^2] / (n (n + 1)),
/// plus the exact identity sum_ij |tr K_i^dag K_j|^2 == n^2 tr rho(Phi)^2.
CheckReport check_average_purity_identity(const Channel& c, std::int64_t samples, Seed seed,
                                          std::string digest = {});

/// tr rho(Phi)^2 <= 1 - (1 + 1/n) eps with 1 - eps the maximal output purity.
/// Exact for depolarizing channels; otherwise uses the multi-start estimator
/// and is marked statistical.
CheckReport check_prop1_depolarizing_extremality(const Channel& c, const MinEntropyConfig& cfg,
                                                 std::string digest = {});

/// Over x = 0, 1/(grid-1), ..., 1: S_2^min(Lambda_{n,x}) computed directly
/// matches the closed-form function of S_2^map, the inverse relation round
/// trips, and both entropies are non-decreasing in x.
CheckReport check_corollary_monotone(Index n, int grid, LogBase base = LogBase::two);

/// Tensor and composition identities for Choi matrices.
CheckReport check_choi_identities(const Channel& phi, const Channel& psi,
                                  std::string digest = {});

/// J(Phi^T) == S J S, J(Phi^dag) == S J^T S, and S^map(Phi^T) == S^map(Phi)
/// when Phi is bi-stochastic.
CheckReport check_transpose_dual(const Channel& c, std::string digest = {});

/// S^map_p(Phi (x) Psi) == S^map_p(Phi) + S^map_p(Psi).
CheckReport check_additivity(const Channel& phi, const Channel& psi, double p,
                             std::string digest = {});

/// |S(sigma) - S(rho)| <= S(Lambda(rho)) <= S(sigma) + S(rho) with sigma the
/// entropy-exchange state.
CheckReport check_lindblad(const Channel& c, const DensityMatrix& rho, std::string digest = {});

/// The Lindblad instance with channel id (x) Psi acting on rho(Phi); also
/// confirms S(rho(Phi)) == S^map(Phi) and S(sigma) == S^map(Psi).
CheckReport check_lindblad_jamiolkowski(const Channel& phi, const Channel& psi,
                                        std::string digest = {});

/// max{S^map(Phi), S^map(Psi)} <= S^map(Phi o Psi) <= S^map(Phi) + S^map(Psi)
/// for bi-stochastic Phi, Psi.
CheckReport check_dynamical_subadditivity(const Channel& phi, const Channel& psi,
                                          std::string digest = {});

/// Bounds on S((Phi (x) Psi)(vec(U) vec(U)^dag / n)) and the reduction
/// S((Phi (x) Psi)(vec(I) vec(I)^dag / n)) == S^map(Phi o Psi^T). A Haar
/// unitary drawn from `seed` is used when `u` is empty.
CheckReport check_entangled_input(const Channel& phi, const Channel& psi,
                                  const std::optional<CMat>& u, Seed seed,
                                  std::string digest = {});

/// Lemma-style sphere average: closed form vs Monte Carlo for a given M.
CheckReport check_sphere_average(const CMat& m, std::int64_t samples, Seed seed,
                                 std::string digest = {});

/// Two-fold twirl: corrected closed form vs Monte Carlo.
CheckReport check_twirl(const CMat& a, Index n, std::int64_t samples, Seed seed,
                        std::string digest = {});

struct SuiteConfig {
  /// Check names, or {"all"}.
  std::vector<std::string> checks{"all"};
  std::vector<Index> dims{2, 3};
  Seed seed = 0;
  int instances = 10;
  std::int64_t samples = 20000;
  int restarts = 64;
  LogBase base = LogBase::two;
  int jobs = 1;
  /// Replaces the report tolerance for the named check.
  std::map<std::string, double> tolerance_overrides;
};

/// Names accepted in SuiteConfig::checks.
const std::vector<std::string>& available_checks();

/// Throws DomainError for unknown check names. Reports are ordered by check
/// name, then dimension, then instance index, independent of `jobs`.
std::vector<CheckReport> run_suite(const SuiteConfig& cfg);

struct SuiteSummary {
  int total = 0;
  int passed = 0;
  int failed_exact = 0;
  int failed_statistical = 0;
  bool ok() const { return failed_exact == 0 && failed_statistical == 0; }
};

SuiteSummary summarize(const std::vector<CheckReport>& reports);

}  // namespace qent

#endif  // QENTROPY_VERIFY_HPP
