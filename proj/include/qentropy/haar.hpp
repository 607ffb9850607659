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

// Haar-measure sampling, closed-form unitary/sphere averages, and the Monte
// Carlo estimators that cross-check them.
//
// Monte Carlo loops are cut into fixed blocks of kMonteCarloBlock samples, each
// with its own derived seed, and merged in block order. The estimate is
// therefore independent of how blocks are distributed over threads.

#ifndef QENTROPY_HAAR_HPP
#define QENTROPY_HAAR_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qentropy/matrixcore.hpp"
#include "qentropy/random.hpp"

namespace qent {

inline constexpr std::int64_t kMonteCarloBlock = 4096;
/// Width of the acceptance band, in standard errors.
inline constexpr double kMonteCarloSigmas = 4.0;

/// QR of a complex Gaussian matrix with the phases of diag(R) divided out.
CMat haar_unitary(Index n, Rng& rng);
CMat haar_unitary(Index n, Seed seed);

/// Uniform on the unit sphere of C^n.
Vec random_pure_state(Index n, Rng& rng);
Vec random_pure_state(Index n, Seed seed);

/// Density matrix G G^dagger / tr(G G^dagger) with G an n x rank complex
/// Gaussian matrix; rank == n gives the Hilbert-Schmidt measure.
CMat random_density_matrix(Index n, Index rank, Rng& rng);
CMat random_density_matrix(Index n, Seed seed);

/// Running mean / second central moment (Welford), mergeable (Chan et al.).
struct StreamingMoments {
  std::int64_t count = 0;
  double mean = 0;
  double m2 = 0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / double(count);
    m2 += delta * (x - mean);
  }
  void merge(const StreamingMoments& other);
  double sample_variance() const { return count > 1 ? m2 / double(count - 1) : 0.0; }
  double standard_error() const {
    return count > 0 ? std::sqrt(sample_variance() / double(count)) : 0.0;
  }
};

struct ScalarEstimate {
  double mean = 0;
  double std_error = 0;
  std::int64_t samples = 0;
  Seed seed = 0;

  /// |mean - value| <= sigmas * std_error + floor. The floor absorbs roundoff
  /// when the integrand is constant and std_error is exactly zero.
  bool agrees_with(double value, double sigmas = kMonteCarloSigmas, double floor = 1e-12) const {
    return std::abs(mean - value) <= sigmas * std_error + floor;
  }
  /// Deviation in units of standard error (0 when both are zero).
  double z_score(double value) const;
};

struct MatrixEstimate {
  CMat mean;
  Eigen::MatrixXd std_error_re;
  Eigen::MatrixXd std_error_im;
  std::int64_t samples = 0;
  Seed seed = 0;

  /// Entrywise agreement of real and imaginary parts within sigmas * SE + floor.
  bool agrees_with(const CMat& value, double sigmas = kMonteCarloSigmas,
                   double floor = 1e-12) const;
  /// Largest entrywise |deviation| / SE over real and imaginary parts
  /// (entries with zero SE contribute only if they deviate beyond floor).
  double max_z_score(const CMat& value, double floor = 1e-12) const;
};

/// Block-parallel Monte Carlo over uniformly random pure states in C^n.
/// `f(psi)` returns the integrand value.
template <typename F>
ScalarEstimate sphere_monte_carlo(Index n, std::int64_t samples, Seed seed, F&& f) {
  const std::int64_t blocks = (samples + kMonteCarloBlock - 1) / kMonteCarloBlock;
  StreamingMoments total;
  for (std::int64_t b = 0; b < blocks; ++b) {
    Rng rng = make_rng(derive_seed(seed, {std::uint64_t(b)}));
    const std::int64_t count = std::min(kMonteCarloBlock, samples - b * kMonteCarloBlock);
    StreamingMoments block;
    for (std::int64_t s = 0; s < count; ++s) block.add(f(random_pure_state(n, rng)));
    total.merge(block);
  }
  return {total.mean, total.standard_error(), total.count, seed};
}

/// Integral of |<psi|M|psi>|^2 over the unit sphere:
/// [tr(M M^dagger) + |tr M|^2] / (n (n + 1)).
double sphere_average_closed_form(const CMat& m);

/// Requires samples >= 100.
ScalarEstimate sphere_average_monte_carlo(const CMat& m, std::int64_t samples, Seed seed);

enum class TwirlForm {
  /// c_I I + c_S S with c_I = (tr A - tr(AS)/n)/(n^2-1), c_S = (tr(AS) - tr A/n)/(n^2-1).
  corrected,
  /// The variant with squared coefficients and a minus sign on S; kept only so
  /// that it can be compared against the Monte Carlo oracle.
  printed,
};

const char* to_string(TwirlForm form);

struct TwirlCoefficients {
  Complex identity;
  Complex swap;
};

TwirlCoefficients twofold_twirl_coefficients(const CMat& a, Index n,
                                             TwirlForm form = TwirlForm::corrected);

/// Closed form of the Haar integral of (U (x) U) A (U (x) U)^dagger.
CMat twofold_twirl_closed_form(const CMat& a, Index n, TwirlForm form = TwirlForm::corrected);

/// Entrywise Monte Carlo estimate of the same integral. Requires samples >= 100.
MatrixEstimate twofold_twirl_monte_carlo(const CMat& a, Index n, std::int64_t samples, Seed seed);

/// Outcome of comparing both twirl forms with one Monte Carlo estimate.
struct TwirlFormVerdict {
  bool corrected_agrees = false;
  bool printed_agrees = false;
  double corrected_max_z = 0;
  double printed_max_z = 0;
  /// "corrected", "printed", "both" or "neither".
  std::string supported;
};

TwirlFormVerdict compare_twirl_forms(const CMat& a, Index n, const MatrixEstimate& mc);

/// Exact sanity checks every correct twirl formula passes: I and S are fixed
/// points, and the map is linear (checked on 2I).
struct TwirlSanity {
  double identity_error = 0;
  double swap_error = 0;
  double linearity_error = 0;
  bool identity_fixed() const { return identity_error <= 1e-12; }
  bool swap_fixed() const { return swap_error <= 1e-12; }
  bool linear() const { return linearity_error <= 1e-12; }
};

TwirlSanity twirl_sanity(Index n, TwirlForm form);

}  // namespace qent

#endif  // QENTROPY_HAAR_HPP
