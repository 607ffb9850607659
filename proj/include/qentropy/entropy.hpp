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

#ifndef QENTROPY_ENTROPY_HPP
#define QENTROPY_ENTROPY_HPP

#include <cmath>

#include "qentropy/channel.hpp"
#include "qentropy/matrixcore.hpp"
#include "qentropy/random.hpp"

namespace qent {

enum class LogBase { two, e };

/// "bits" or "nats".
const char* unit_name(LogBase base);

template <typename Real>
Real log_in(Real x, LogBase base) {
  return base == LogBase::two ? std::log2(x) : std::log(x);
}

template <typename Real>
Real exp_in(Real x, LogBase base) {
  return base == LogBase::two ? std::exp2(x) : std::exp(x);
}

struct EntropyValue {
  double value = 0;
  /// Renyi order; 1 is von Neumann.
  double order = 1;
  LogBase base = LogBase::two;
};

/// Renyi-p entropy of a probability vector; p == 1 gives the Shannon entropy
/// with 0 log 0 = 0, p == 0 the log of the support size.
template <typename Real>
Real spectrum_entropy(const Vector<Real>& spectrum, double p, LogBase base) {
  if (!(p >= 0)) throw DomainError("entropy order must be >= 0");
  if (p == 1.0) {
    Real s = 0;
    for (Index i = 0; i < spectrum.size(); ++i)
      if (spectrum(i) > 0) s -= spectrum(i) * log_in(spectrum(i), base);
    return s;
  }
  Real power_sum = 0;
  for (Index i = 0; i < spectrum.size(); ++i)
    if (spectrum(i) > 0) power_sum += p == 0.0 ? Real(1) : std::pow(spectrum(i), Real(p));
  return log_in(power_sum, base) / Real(1 - p);
}

EntropyValue von_neumann_entropy(const DensityMatrix& rho, LogBase base = LogBase::two);

/// (1/(1-p)) log tr rho^p; p == 1 is routed to von_neumann_entropy.
EntropyValue renyi_entropy(const DensityMatrix& rho, double p, LogBase base = LogBase::two);

/// tr rho^2.
double purity(const CMat& rho);

/// Renyi-p entropy of the Jamiolkowski state rho(Phi). Throws
/// NotTracePreserving for non-TP maps.
EntropyValue map_entropy(const Channel& c, double p = 1.0, LogBase base = LogBase::two);

/// tr rho(Phi)^2.
double map_purity(const Channel& c);

/// tr [Phi(|phi><phi|)]^2 via the output state.
double output_purity(const Channel& c, const Vec& phi);

/// sum_ij |<phi| K_i^dagger K_j |phi>|^2, the same quantity via Kraus operators.
double output_purity_kraus_form(const Channel& c, const Vec& phi);

struct MinEntropyConfig {
  int restarts = 64;
  int max_iterations = 5000;
  /// Stop a restart once one accepted step improves purity by less than this.
  double tolerance = 1e-12;
  Seed seed = 0;
};

struct MinOutputEntropy {
  EntropyValue entropy;
  /// Best output purity found; a lower bound on the true maximum.
  double purity = 0;
  Vec witness;
  int best_restart = 0;
};

/// Estimates S_2^min = -log max_phi tr[Phi(|phi><phi|)]^2 by multi-start
/// projected gradient ascent on the unit sphere. The estimate never exceeds
/// the true maximum purity, so the returned entropy is an upper bound.
MinOutputEntropy min_output_entropy_2(const Channel& c, const MinEntropyConfig& cfg = {},
                                      LogBase base = LogBase::two);

/// sigma_ij = tr(K_i rho K_j^dagger) for the channel's Kraus set as given.
DensityMatrix entropy_exchange_state(const Channel& c, const DensityMatrix& rho);

/// Closed forms for Lambda_{n,x}.
double depolarizing_output_purity(Index n, double x);
double depolarizing_map_purity(Index n, double x);

/// S_2^min(Lambda_n) = -log((1 + n b^{-S_2^map}) / (n + 1)), b the log base.
/// Requires s_map_2 in [0, 2 log n].
double depolarizing_min_from_map(Index n, double s_map_2, LogBase base = LogBase::two);

/// Inverse relation: S_2^map = -log[1 - (1 + 1/n) eps] with eps = 1 - b^{-S_2^min}.
double depolarizing_map_from_min(Index n, double s_min_2, LogBase base = LogBase::two);

}  // namespace qent

#endif  // QENTROPY_ENTROPY_HPP
